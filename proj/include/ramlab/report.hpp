/*
   Copyright 2026 The ramlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// JSON and text serialization of reports. JSON objects use sorted keys, so
// output is byte-stable for equal reports.

#pragma once

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramlab/abhyankar.hpp"

namespace ramlab {

using Json = nlohmann::json;

namespace detail {

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> json_opt(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

inline Json int_vec_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

}  // namespace detail

inline Json to_json(const StructureReport& s) {
  return Json{{"order_G0", s.order_G0},
              {"order_G1", s.order_G1},
              {"e_matches_G0", s.e_matches_G0},
              {"G1_normal", s.G1_normal},
              {"G1_is_p_group", s.G1_is_p_group},
              {"quotient_cyclic", s.quotient_cyclic},
              {"quotient_order_coprime_p", s.quotient_order_coprime_p},
              {"homomorphism_multiplicative", s.homomorphism_multiplicative},
              {"homomorphism_kernel_is_G1", s.homomorphism_kernel_is_G1}};
}

inline StructureReport structure_from_json(const Json& j) {
  StructureReport s;
  s.order_G0 = j.at("order_G0");
  s.order_G1 = j.at("order_G1");
  s.e_matches_G0 = j.at("e_matches_G0");
  s.G1_normal = j.at("G1_normal");
  s.G1_is_p_group = j.at("G1_is_p_group");
  s.quotient_cyclic = j.at("quotient_cyclic");
  s.quotient_order_coprime_p = j.at("quotient_order_coprime_p");
  s.homomorphism_multiplicative = j.at("homomorphism_multiplicative");
  s.homomorphism_kernel_is_G1 = j.at("homomorphism_kernel_is_G1");
  return s;
}

inline Json to_json(const GroupData& g) {
  using detail::opt_json;
  return Json{{"conjugator", g.conjugator},
              {"e_q", g.e_q},
              {"e1", g.e1},
              {"e2", g.e2},
              {"order_G0", g.order_G0},
              {"order_G1", g.order_G1},
              {"order_G0_cap_Gamma", g.G0_gamma},
              {"order_G0_cap_Gamma1", g.G0_gamma1},
              {"order_G0_cap_Gamma2", g.G0_gamma2},
              {"order_G1_cap_Gamma", g.G1_gamma},
              {"order_G1_cap_Gamma1", g.G1_gamma1},
              {"order_G1_cap_Gamma2", g.G1_gamma2},
              {"d", g.d},
              {"gamma_is_intersection", g.gamma_is_intersection},
              {"md_identity", g.md_identity},
              {"G1_in_tame_gamma", opt_json(g.G1_in_tame_gamma)},
              {"gcd_identity_G1", opt_json(g.eq4a)},
              {"gcd_identity_quotient", opt_json(g.eq5a)},
              {"image_intersection", opt_json(g.image_intersection)},
              {"d_equals_G0_cap_Gamma", opt_json(g.d_equals_G0_gamma)}};
}

inline GroupData group_data_from_json(const Json& j) {
  using detail::json_opt;
  GroupData g;
  g.conjugator = j.at("conjugator");
  g.e_q = j.at("e_q");
  g.e1 = j.at("e1");
  g.e2 = j.at("e2");
  g.order_G0 = j.at("order_G0");
  g.order_G1 = j.at("order_G1");
  g.G0_gamma = j.at("order_G0_cap_Gamma");
  g.G0_gamma1 = j.at("order_G0_cap_Gamma1");
  g.G0_gamma2 = j.at("order_G0_cap_Gamma2");
  g.G1_gamma = j.at("order_G1_cap_Gamma");
  g.G1_gamma1 = j.at("order_G1_cap_Gamma1");
  g.G1_gamma2 = j.at("order_G1_cap_Gamma2");
  g.d = j.at("d");
  g.gamma_is_intersection = j.at("gamma_is_intersection");
  g.md_identity = j.at("md_identity");
  g.G1_in_tame_gamma = json_opt<bool>(j.at("G1_in_tame_gamma"));
  g.eq4a = json_opt<bool>(j.at("gcd_identity_G1"));
  g.eq5a = json_opt<bool>(j.at("gcd_identity_quotient"));
  g.image_intersection = json_opt<bool>(j.at("image_intersection"));
  g.d_equals_G0_gamma = json_opt<bool>(j.at("d_equals_G0_cap_Gamma"));
  return g;
}

inline Json to_json(const PrimeReport& q) {
  using detail::opt_json;
  return Json{{"e_q", q.e_q},
              {"f_q", q.f_q},
              {"e1", q.e1},
              {"f_p1", q.f1},
              {"e2", q.e2},
              {"f_p2", q.f2},
              {"tame1", q.tame1},
              {"tame2", q.tame2},
              {"lcm", q.lcm},
              {"gcd", q.gcd},
              {"product", q.product},
              {"divides_product", q.divides_product},
              {"e_over_p1", q.e_over_p1},
              {"e_over_p2", q.e_over_p2},
              {"multiplicativity", q.multiplicativity},
              {"d", opt_json(q.d)},
              {"verdict_eq1", q.verdict_eq1},
              {"verdict_theorem", q.verdict_theorem},
              {"verdict_eq2", q.verdict_eq2},
              {"verdict_corollary", q.verdict_corollary},
              {"verdict_narkiewicz", q.verdict_narkiewicz},
              {"pathway_agreement", opt_json(q.pathway_agreement)},
              {"galois", q.galois ? to_json(*q.galois) : Json(nullptr)}};
}

inline PrimeReport prime_report_from_json(const Json& j) {
  using detail::json_opt;
  PrimeReport q;
  q.e_q = j.at("e_q");
  q.f_q = j.at("f_q");
  q.e1 = j.at("e1");
  q.f1 = j.at("f_p1");
  q.e2 = j.at("e2");
  q.f2 = j.at("f_p2");
  q.tame1 = j.at("tame1");
  q.tame2 = j.at("tame2");
  q.lcm = j.at("lcm");
  q.gcd = j.at("gcd");
  q.product = j.at("product");
  q.divides_product = j.at("divides_product");
  q.e_over_p1 = j.at("e_over_p1");
  q.e_over_p2 = j.at("e_over_p2");
  q.multiplicativity = j.at("multiplicativity");
  q.d = json_opt<int>(j.at("d"));
  q.verdict_eq1 = j.at("verdict_eq1");
  q.verdict_theorem = j.at("verdict_theorem");
  q.verdict_eq2 = j.at("verdict_eq2");
  q.verdict_corollary = j.at("verdict_corollary");
  q.verdict_narkiewicz = j.at("verdict_narkiewicz");
  q.pathway_agreement = json_opt<bool>(j.at("pathway_agreement"));
  if (!j.at("galois").is_null()) q.galois = group_data_from_json(j.at("galois"));
  return q;
}

inline Json to_json(const RamificationReport& r) {
  using detail::opt_json;
  Json primes = Json::array();
  for (const auto& q : r.primes) primes.push_back(to_json(q));
  const PathwayReport& pw = r.pathways;
  return Json{
      {"instance",
       {{"f1", r.f1},
        {"f2", r.f2},
        {"p", r.p},
        {"compositum",
         {{"index", r.compositum_index},
          {"count", r.compositum_count},
          {"defining_poly", r.compositum_poly},
          {"degree", r.compositum_degree},
          {"shift", r.compositum_shift}}}}},
      {"primes", primes},
      {"pathways",
       {{"A", {{"degree_L", pw.degree_L}, {"primes_in_L", pw.primes_in_L}, {"sum_ef", pw.sum_ef}}},
        {"B",
         {{"status", pw.galois_status},
          {"skip_reason", pw.skip_reason},
          {"closure_degree", opt_json(pw.closure_degree)},
          {"K1_normal", opt_json(pw.K1_normal)},
          {"K2_normal", opt_json(pw.K2_normal)},
          {"structure", pw.structure ? to_json(*pw.structure) : Json(nullptr)}}},
        {"agreement", opt_json(pw.agreement)}}},
      {"ok", r.ok()}};
}

inline RamificationReport report_from_json(const Json& j) {
  using detail::json_opt;
  RamificationReport r;
  const Json& in = j.at("instance");
  r.f1 = in.at("f1");
  r.f2 = in.at("f2");
  r.p = in.at("p");
  const Json& c = in.at("compositum");
  r.compositum_index = c.at("index");
  r.compositum_count = c.at("count");
  r.compositum_poly = c.at("defining_poly");
  r.compositum_degree = c.at("degree");
  r.compositum_shift = c.at("shift");
  for (const auto& q : j.at("primes")) r.primes.push_back(prime_report_from_json(q));
  const Json& a = j.at("pathways").at("A");
  const Json& b = j.at("pathways").at("B");
  r.pathways.degree_L = a.at("degree_L");
  r.pathways.primes_in_L = a.at("primes_in_L");
  r.pathways.sum_ef = a.at("sum_ef");
  r.pathways.galois_status = b.at("status");
  r.pathways.skip_reason = b.at("skip_reason");
  r.pathways.closure_degree = json_opt<int>(b.at("closure_degree"));
  r.pathways.K1_normal = json_opt<bool>(b.at("K1_normal"));
  r.pathways.K2_normal = json_opt<bool>(b.at("K2_normal"));
  if (!b.at("structure").is_null()) r.pathways.structure = structure_from_json(b.at("structure"));
  r.pathways.agreement = json_opt<bool>(j.at("pathways").at("agreement"));
  return r;
}

inline Json to_json(const PrimeIdeal& P) {
  return Json{{"e", P.e},
              {"f", P.f},
              {"second_gen", detail::int_vec_json(P.second_gen)},
              {"uniformizer", detail::int_vec_json(P.uniformizer)}};
}

inline Json order_json(const Order& o) {
  Json rows = Json::array();
  for (const auto& row : o.basis()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  return rows;
}

/// Serialized report: sorted keys, two-space indent, trailing newline.
inline std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

inline std::string emit_text(const std::vector<RamificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "K1 = Q[x]/(" << r.f1 << ")  K2 = Q[x]/(" << r.f2 << ")  p = " << r.p << "\n";
    os << "compositum " << r.compositum_index + 1 << "/" << r.compositum_count << ": " << r.compositum_poly
       << " (degree " << r.compositum_degree << ")\n";
    os << "pathway B: " << r.pathways.galois_status;
    if (r.pathways.closure_degree) os << " (closure degree " << *r.pathways.closure_degree << ")";
    if (!r.pathways.skip_reason.empty()) os << " - " << r.pathways.skip_reason;
    os << "\n";
    os << std::setw(5) << "e_q" << std::setw(5) << "e1" << std::setw(5) << "e2" << std::setw(6) << "tame"
       << std::setw(5) << "lcm" << std::setw(7) << "eq1" << std::setw(16) << "theorem" << std::setw(16) << "eq2"
       << std::setw(16) << "corollary" << std::setw(16) << "narkiewicz" << std::setw(8) << "A=B" << "\n";
    for (const auto& q : r.primes) {
      std::string tame = std::string(q.tame1 ? "1" : "-") + (q.tame2 ? "2" : "-");
      std::string agree = q.pathway_agreement ? (*q.pathway_agreement ? "yes" : "NO") : "skip";
      os << std::setw(5) << q.e_q << std::setw(5) << q.e1 << std::setw(5) << q.e2 << std::setw(6) << tame
         << std::setw(5) << q.lcm << std::setw(7) << (q.verdict_eq1 ? "yes" : "NO") << std::setw(16)
         << q.verdict_theorem << std::setw(16) << q.verdict_eq2 << std::setw(16) << q.verdict_corollary
         << std::setw(16) << q.verdict_narkiewicz << std::setw(8) << agree << "\n";
      if (!q.divides_product) os << "      note: e_q = " << q.e_q << " does not divide e1*e2 = " << q.product << "\n";
    }
    os << (r.ok() ? "all verdicts hold" : "VERDICT FAILURE") << "\n\n";
  }
  return os.str();
}

}  // namespace ramlab
