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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ramlab/cli.hpp"
#include "ramlab/ramlab.hpp"

using namespace ramlab;

namespace {

constexpr double kCubeRootSeconds = 10.0;
constexpr double kCuratedSeconds = 120.0;
constexpr double kFuzzSeconds = 600.0;
constexpr int kMinCurated = 20;
constexpr int kFuzzCases = 100;
constexpr std::uint64_t kFuzzSeed = 7;
constexpr int kMinNarkiewiczCases = 5;
constexpr int kMaxAgreementClosure = 24;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Instance inst(const std::string& f1, const std::string& f2, std::uint64_t p) {
  return Instance{parse_poly(f1), parse_poly(f2), p, std::nullopt};
}

struct Verdict {
  bool pass = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (pass) why = what;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, const Verdict& v, const std::string& detail) {
  if (!v.pass) ++failures;
  std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " | " << detail;
  if (!v.pass) std::cout << " | " << v.why;
  std::cout << std::endl;
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s << " s";
  return os.str();
}

// Pooled reports for the cross-cutting criteria.
std::vector<RamificationReport> pool;

void criterion_remark() {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    NumberField k0(parse_poly("x^2+x+1")), k1(parse_poly("x^3-3"));
    auto p0 = decompose_prime(k0, 3), p1 = decompose_prime(k1, 3);
    v.require(p0.size() == 1 && p0[0].e == 2, "e(p0/3) != 2");
    v.require(p1.size() == 1 && p1[0].e == 3, "e(p1/3) != 3");

    auto tame = check_instance(inst("x^2+x+1", "x^3-3", 3));
    v.require(tame.size() == 1 && tame[0].compositum_degree == 6, "(K0,K1) compositum is not of degree 6");
    if (tame.size() == 1) {
      v.require(tame[0].primes.size() == 1, "(K0,K1): not a single prime above 3");
      for (const auto& q : tame[0].primes) {
        v.require(q.e_q == 6 && q.e1 == 2 && q.e2 == 3, "(K0,K1): wrong ramification indices");
        v.require(q.lcm == 6 && q.verdict_theorem == "holds", "(K0,K1): e(q/3) != lcm(2,3)");
      }
    }
    pool.insert(pool.end(), tame.begin(), tame.end());

    // K2 is the conjugate cubic field; it is the degree-6 compositum of x^3-3 with itself
    auto wild = check_instance(inst("x^3-3", "x^3-3", 3));
    bool seen = false;
    for (const auto& r : wild) {
      if (r.compositum_degree != 6) continue;
      seen = true;
      v.require(r.primes.size() == 1, "(K1,K2): not a single prime above 3");
      for (const auto& q : r.primes) {
        v.require(q.e1 == 3 && q.e2 == 3, "(K1,K2): e(p1/3), e(p2/3) != 3");
        v.require(q.e_q == 6, "(K1,K2): e(q/3) != 6");
        v.require(!q.divides_product && q.product == 9, "(K1,K2): 6 | 9 reported");
        v.require(q.verdict_theorem == "not-applicable", "(K1,K2): theorem should not apply");
      }
    }
    v.require(seen, "(K1,K2): no degree-6 compositum");
    pool.insert(pool.end(), wild.begin(), wild.end());
  } catch (const std::exception& e) {
    v.require(false, e.what());
  }
  const double t = seconds_since(t0);
  v.require(t < kCubeRootSeconds, "over time budget");
  report(1, "cube-root-of-3 example", v, fmt_seconds(t) + " (limit " + fmt_seconds(kCubeRootSeconds) + ")");
}

const std::vector<Instance>& curated() {
  static const std::vector<Instance> list = {
      inst("x^2+x+1", "x^3-3", 3),  inst("x^2+1", "x^2+3", 3),     inst("x^2-3", "x^2+3", 3),
      inst("x^2-2", "x^3-2", 3),    inst("x^2+1", "x^3-2", 2),     inst("x^3-2", "x^3-3", 2),
      inst("x^3-5", "x^3-10", 5),   inst("x^2-5", "x^3-5", 5),     inst("x^2-7", "x^4-7", 7),
      inst("x^2+x+1", "x^3-2", 2),  inst("x^4+x^3+x^2+x+1", "x^2-5", 5), inst("x^4+x^3+x^2+x+1", "x^2+1", 5),
      inst("x^4+1", "x^2-3", 3),    inst("x^2-2", "x^2-3", 3),     inst("x^3-3*x+1", "x^2+3", 3),
      inst("x^3-x-1", "x^2+23", 23), inst("x^5-5", "x^2-5", 5),     inst("x^4-2", "x^2+1", 3),
      inst("x^4-3", "x^2-3", 3),    inst("x^2+3", "x^4-3", 3),     inst("x^3-7", "x^2+7", 7),
      inst("x^3-11", "x^3-22", 11), inst("x^2-11", "x^3-11", 11),  inst("x^4-5", "x^2+1", 5),
  };
  return list;
}

void criterion_curated() {
  Verdict v;
  int checked = 0, primes = 0;
  const auto t0 = Clock::now();
  for (const auto& in : curated()) {
    const std::string name = to_string(in.f1) + " , " + to_string(in.f2) + " at " + std::to_string(in.p);
    try {
      auto reps = check_instance(in);
      ++checked;
      for (const auto& r : reps)
        for (const auto& q : r.primes) {
          ++primes;
          v.require(q.tame1 || q.tame2, name + ": no tame side");
          v.require(q.verdict_theorem == "holds", name + ": theorem " + q.verdict_theorem);
        }
      pool.insert(pool.end(), reps.begin(), reps.end());
    } catch (const std::exception& e) {
      v.require(false, name + ": " + e.what());
    }
  }
  const double t = seconds_since(t0);
  v.require(checked >= kMinCurated, "fewer than " + std::to_string(kMinCurated) + " instances checked");
  v.require(t < kCuratedSeconds, "over time budget");
  report(2, "tame instances", v,
         std::to_string(checked) + " instances, " + std::to_string(primes) + " primes, " + fmt_seconds(t) +
             " (limit " + fmt_seconds(kCuratedSeconds) + ")");
}

Json fuzz_once(bool& ok) {
  RunConfig cfg;
  cfg.seed = kFuzzSeed;
  cfg.cases = kFuzzCases;
  std::ostringstream sink;
  return run_fuzz(cfg, ok, sink);
}

std::string first_fuzz_dump;

void criterion_fuzz() {
  Verdict v;
  const auto t0 = Clock::now();
  bool ok = false;
  Json j = fuzz_once(ok);
  const double t = seconds_since(t0);
  first_fuzz_dump = j.dump(2);
  const Json& s = j.at("summary");
  const int eq1_true = s.at("eq1_true"), eq1_false = s.at("eq1_false"), wild = s.at("wild_primes");
  for (const auto& c : j.at("instances"))
    if (c.contains("reports"))
      for (const auto& r : c.at("reports")) pool.push_back(report_from_json(r));
  v.require(s.at("instances") == kFuzzCases, "wrong number of instances");
  v.require(eq1_false == 0 && eq1_true > 0, "eq1 false on some prime");
  v.require(wild > 0, "no wild prime drawn");
  v.require(t < kFuzzSeconds, "over time budget");
  report(3, "seeded fuzz divisibility", v,
         std::to_string(kFuzzCases) + " instances (seed " + std::to_string(kFuzzSeed) + "), eq1 " +
             std::to_string(eq1_true) + "/" + std::to_string(eq1_true + eq1_false) + ", " + std::to_string(wild) +
             " wild primes, " + std::to_string(s.at("cap_exceeded").get<int>()) + " capped, " + fmt_seconds(t) +
             " (limit " + fmt_seconds(kFuzzSeconds) + ")");
}

void criterion_agreement() {
  Verdict v;
  int validated = 0, skipped = 0, primes = 0;
  for (const auto& r : pool) {
    const auto& pw = r.pathways;
    const std::string name = r.f1 + " , " + r.f2 + " at " + std::to_string(r.p);
    if (pw.galois_status != "validated") {
      ++skipped;
      v.require(!pw.closure_degree || *pw.closure_degree > kMaxAgreementClosure,
                name + ": skipped at closure degree " + std::to_string(pw.closure_degree.value_or(0)));
      continue;
    }
    ++validated;
    v.require(pw.agreement.value_or(false), name + ": pathways disagree");
    for (const auto& q : r.primes) {
      ++primes;
      v.require(q.pathway_agreement.value_or(false), name + ": prime without agreement");
    }
  }
  v.require(validated > 0, "nothing validated");
  report(4, "pathway agreement", v,
         std::to_string(validated) + " composita validated (" + std::to_string(primes) + " primes), " +
             std::to_string(skipped) + " above closure degree " + std::to_string(kMaxAgreementClosure));
}

void criterion_structure() {
  Verdict v;
  int structures = 0, groups = 0, gcd_ids = 0;
  for (const auto& r : pool) {
    const std::string name = r.f1 + " , " + r.f2 + " at " + std::to_string(r.p);
    if (const auto& s = r.pathways.structure) {
      ++structures;
      v.require(s->e_matches_G0, name + ": |G0| != e");
      v.require(s->G1_normal, name + ": G1 not normal in G0");
      v.require(s->G1_is_p_group, name + ": G1 not a p-group");
      v.require(s->quotient_cyclic, name + ": G0/G1 not cyclic");
      v.require(s->quotient_order_coprime_p, name + ": |G0/G1| not prime to p");
      v.require(s->homomorphism_multiplicative, name + ": s -> s(pi)/pi not multiplicative");
      v.require(s->homomorphism_kernel_is_G1, name + ": kernel is not G1");
    }
    for (const auto& q : r.primes) {
      if (!q.galois) continue;
      ++groups;
      const GroupData& g = *q.galois;
      v.require(g.md_identity, name + ": m*d != |G0|");
      v.require(g.gamma_is_intersection, name + ": Gamma is not Gamma1 cap Gamma2");
      if (g.eq4a || g.eq5a) ++gcd_ids;
      v.require(g.eq4a.value_or(true), name + ": G1 gcd identity fails");
      v.require(g.eq5a.value_or(true), name + ": quotient gcd identity fails");
      v.require(g.ok(), name + ": group data check fails");
    }
  }
  v.require(structures > 0 && gcd_ids > 0, "no structure data");
  report(5, "inertia group structure", v,
         std::to_string(structures) + " inertia chains, " + std::to_string(groups) + " primes with group data, " +
             std::to_string(gcd_ids) + " tame gcd identities");
}

void criterion_decomposition() {
  Verdict v;
  int fields = 0, composita = 0;
  try {
    NumberField k(parse_poly("x^3-x^2-2*x-8"));
    const long before = decomposition_counter().load();
    auto ps = decompose_prime(k, 2);
    v.require(decomposition_counter().load() > before, "Dedekind field decomposed without the maximal order");
    v.require(ps.size() == 3, "Dedekind field: " + std::to_string(ps.size()) + " primes above 2");
    for (const auto& P : ps) v.require(P.e == 1 && P.f == 1, "Dedekind field: e or f != 1");

    for (const auto& in : curated())
      for (const RatPoly* f : {&in.f1, &in.f2}) {
        if (f->degree() < 1) continue;
        NumberField kf(*f);
        int sum = 0;
        for (const auto& P : decompose_prime(kf, in.p)) sum += P.e * P.f;
        ++fields;
        v.require(sum == kf.degree(), to_string(*f) + " at " + std::to_string(in.p) + ": sum e*f != n");
      }
  } catch (const std::exception& e) {
    v.require(false, e.what());
  }
  for (const auto& r : pool) {
    ++composita;
    int sum = 0;
    for (const auto& q : r.primes) sum += q.e_q * q.f_q;
    v.require(sum == r.compositum_degree && r.pathways.sum_ef == r.pathways.degree_L,
              r.compositum_poly + " at " + std::to_string(r.p) + ": sum e*f != n");
  }
  report(6, "prime decomposition", v,
         "x^3-x^2-2x-8 at 2 splits completely; sum e*f = n on " + std::to_string(fields) + " base fields and " +
             std::to_string(composita) + " composita");
}

void criterion_proposition() {
  Verdict v;
  const std::vector<Instance> cases = {
      inst("x^2+3", "x^4-3", 3), inst("x^3-5", "x^3-10", 5), inst("x^2-7", "x^4-7", 7),
      inst("x^2+1", "x^2+5", 5), inst("x^2+x+1", "x^3-2", 2), inst("x", "x^3-3", 3),
  };
  int applicable = 0, primes = 0;
  for (const auto& in : cases) {
    const std::string name = to_string(in.f1) + " , " + to_string(in.f2) + " at " + std::to_string(in.p);
    try {
      auto reps = check_instance(in);
      const std::string verdict = check_narkiewicz(reps);
      v.require(verdict == "holds", name + ": " + verdict);
      if (verdict != "not-applicable") ++applicable;
      for (const auto& r : reps)
        for (const auto& q : r.primes) {
          if (q.verdict_narkiewicz == "not-applicable") continue;
          ++primes;
          const bool tame_side1 = q.tame1 && q.e2 % q.e1 == 0;
          v.require((tame_side1 ? q.e_over_p2 : q.e_over_p1) == 1, name + ": e(q/p2) != 1");
        }
    } catch (const std::exception& e) {
      v.require(false, name + ": " + e.what());
    }
  }
  v.require(applicable >= kMinNarkiewiczCases, "fewer than " + std::to_string(kMinNarkiewiczCases) + " instances");
  report(7, "unramified top extension", v,
         std::to_string(applicable) + " instances, " + std::to_string(primes) + " primes with e(q/p2) = 1");
}

void criterion_determinism() {
  Verdict v;
  bool ok = false;
  const std::string second = fuzz_once(ok).dump(2);
  v.require(!first_fuzz_dump.empty(), "first fuzz run missing");
  v.require(second == first_fuzz_dump, "fuzz JSON differs between runs");
  report(8, "fuzz reproducibility", v, std::to_string(second.size()) + " bytes, seed " + std::to_string(kFuzzSeed));
}

}  // namespace

int main() {
  criterion_remark();
  criterion_curated();
  criterion_fuzz();
  criterion_agreement();
  criterion_structure();
  criterion_decomposition();
  criterion_proposition();
  criterion_determinism();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
