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

// Command-line front end. JSON reports go to the output stream, diagnostics
// to the error stream.
//
// Exit status: 0 all verdicts hold, 1 a verdict failed, 2 usage or input
// error, 3 a degree or prime cap was exceeded, 4 internal fault.

#pragma once

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramlab/report.hpp"

namespace ramlab {

enum ExitCode : int { kExitOk = 0, kExitVerdict = 1, kExitUsage = 2, kExitCap = 3, kExitInternal = 4 };

/// Applies RAMLAB_MAX_DEGREE to the closure cap.
inline void apply_environment(RunConfig& cfg) {
  if (const char* v = std::getenv("RAMLAB_MAX_DEGREE")) {
    try {
      int d = std::stoi(v);
      if (d > 0) cfg.max_closure_degree = d;
    } catch (const std::exception&) {
    }
  }
}

namespace detail {

inline Json fuzz_summary(const std::vector<Json>& cases) {
  std::map<std::string, long> c;
  for (const auto& k : {"instances", "cap_exceeded", "composita", "primes", "eq1_true", "eq1_false",
                        "theorem_holds", "theorem_fails", "theorem_not_applicable", "eq2_holds", "eq2_fails",
                        "eq2_not_applicable", "corollary_holds", "corollary_fails", "corollary_not_applicable",
                        "narkiewicz_holds", "narkiewicz_fails", "narkiewicz_not_applicable", "agreement_true",
                        "agreement_false", "galois_validated", "galois_skipped", "wild_primes", "reports_ok",
                        "reports_failed"})
    c[k] = 0;
  auto tally = [&](const std::string& prefix, const std::string& v) {
    c[prefix + "_" + (v == "not-applicable" ? std::string("not_applicable") : v)]++;
  };
  for (const auto& cs : cases) {
    c["instances"]++;
    if (cs.at("status") == "cap-exceeded") {
      c["cap_exceeded"]++;
      continue;
    }
    for (const auto& r : cs.at("reports")) {
      c["composita"]++;
      c[r.at("ok").get<bool>() ? "reports_ok" : "reports_failed"]++;
      c[r.at("pathways").at("B").at("status") == "validated" ? "galois_validated" : "galois_skipped"]++;
      for (const auto& q : r.at("primes")) {
        c["primes"]++;
        c[q.at("verdict_eq1").get<bool>() ? "eq1_true" : "eq1_false"]++;
        if (!q.at("tame1").get<bool>() && !q.at("tame2").get<bool>()) c["wild_primes"]++;
        tally("theorem", q.at("verdict_theorem"));
        tally("eq2", q.at("verdict_eq2"));
        tally("corollary", q.at("verdict_corollary"));
        tally("narkiewicz", q.at("verdict_narkiewicz"));
        if (!q.at("pathway_agreement").is_null())
          c[q.at("pathway_agreement").get<bool>() ? "agreement_true" : "agreement_false"]++;
      }
    }
  }
  Json j;
  for (const auto& [k, v] : c) j[k] = v;
  return j;
}

inline Json decompose_json(const NumberField& k, std::uint64_t p, const Caps& caps) {
  check_caps(k.degree(), p, caps);
  DedekindResult dk = dedekind_criterion(k.defining_poly(), p);
  Order o = p_maximal_order(k, p);
  std::vector<PrimeIdeal> primes = decompose_prime(o, p);
  Json pj = Json::array();
  int sum = 0;
  for (const auto& P : primes) {
    pj.push_back(to_json(P));
    sum += P.e * P.f;
  }
  Json shape = Json::array();
  for (const auto& [e, f] : dk.shape) shape.push_back(Json{{"e", e}, {"f", f}});
  return Json{{"field", to_string(k.defining_poly())},
              {"p", p},
              {"degree", k.degree()},
              {"dedekind", {{"p_maximal", dk.p_maximal}, {"shape", dk.p_maximal ? shape : Json(nullptr)}}},
              {"order_basis", order_json(o)},
              {"order_index", o.index_over_equation_order().get_str()},
              {"primes", pj},
              {"sum_ef", sum}};
}

inline Json compositum_json(const NumberField& k1, const NumberField& k2) {
  Json list = Json::array();
  auto comps = compositum(k1, k2);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    list.push_back(Json{{"index", i},
                        {"defining_poly", to_string(c.field.defining_poly())},
                        {"degree", c.field.degree()},
                        {"shift", c.shift},
                        {"iota1", to_string(c.iota1.image_of_generator().as_poly())},
                        {"iota2", to_string(c.iota2.image_of_generator().as_poly())}});
  }
  return Json{{"f1", to_string(k1.defining_poly())}, {"f2", to_string(k2.defining_poly())}, {"composita", list}};
}

inline Json check_json(const std::vector<RamificationReport>& reps, bool& ok) {
  Json rj = Json::array();
  ok = true;
  for (const auto& r : reps) {
    rj.push_back(to_json(r));
    ok = ok && r.ok();
  }
  CrossValidation cv = cross_validate(reps);
  std::string nark = check_narkiewicz(reps);
  ok = ok && nark != "fails" && cv.agree;
  return Json{{"reports", rj},
              {"narkiewicz", nark},
              {"cross_validation", {{"agree", cv.agree}, {"skipped", cv.skipped}, {"details", cv.details}}},
              {"ok", ok}};
}

}  // namespace detail

/// Runs one fuzz campaign; the JSON is a pure function of (seed, cases, caps).
inline Json run_fuzz(const RunConfig& cfg, bool& ok, std::ostream& err) {
  std::mt19937_64 master(cfg.seed);
  std::vector<Json> cases;
  ok = true;
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t case_seed = master();
    GeneratedInstance g = random_instance(case_seed, cfg);
    Json cj{{"case", i},
            {"family", g.family},
            {"f1", to_string(g.instance.f1)},
            {"f2", to_string(g.instance.f2)},
            {"p", g.instance.p}};
    try {
      auto reps = check_instance(g.instance, cfg);
      bool case_ok = true;
      Json body = detail::check_json(reps, case_ok);
      cj["reports"] = body["reports"];
      cj["narkiewicz"] = body["narkiewicz"];
      cj["status"] = case_ok ? "ok" : "fail";
      ok = ok && case_ok;
    } catch (const CapExceeded& e) {
      cj["status"] = "cap-exceeded";
      cj["reason"] = e.what();
    }
    err << "case " << i << " [" << g.family << "] " << cj["f1"].get<std::string>() << " , "
        << cj["f2"].get<std::string>() << " p=" << g.instance.p << ": " << cj["status"].get<std::string>() << "\n";
    cases.push_back(std::move(cj));
  }
  return Json{{"seed", cfg.seed}, {"cases", cfg.cases}, {"instances", cases}, {"summary", detail::fuzz_summary(cases)}};
}

inline int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  RunConfig cfg;
  apply_environment(cfg);
  CLI::App app{"ramlab: prime decomposition, inertia groups and Abhyankar's lemma on composita"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.output_format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-closure-degree", cfg.max_closure_degree, "normal closure degree cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-field-degree", cfg.max_field_degree, "field and compositum degree cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--prime-bound", cfg.prime_bound, "primes must be below this bound")->check(CLI::PositiveNumber);

  std::string field, f1, f2;
  std::uint64_t prime = 0;
  int comp_index = -1;
  auto* dec = app.add_subcommand("decompose", "decompose a prime in a number field");
  dec->add_option("--field", field, "defining polynomial")->required();
  dec->add_option("--prime", prime, "rational prime")->required();
  auto* com = app.add_subcommand("compositum", "list the composita of two fields");
  com->add_option("--f1", f1, "first defining polynomial")->required();
  com->add_option("--f2", f2, "second defining polynomial")->required();
  auto* chk = app.add_subcommand("check", "verify the lcm equality and its companions on one instance");
  chk->add_option("--f1", f1, "first defining polynomial")->required();
  chk->add_option("--f2", f2, "second defining polynomial")->required();
  chk->add_option("--prime", prime, "rational prime")->required();
  chk->add_option("--compositum", comp_index, "check only this compositum (0-based)");
  auto* fz = app.add_subcommand("fuzz", "seeded random campaign");
  fz->add_option("--seed", cfg.seed, "master seed")->required();
  fz->add_option("--cases", cfg.cases, "number of instances")->check(CLI::PositiveNumber);

  for (auto* sub : {dec, com, chk, fz}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    int rc = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    if (rc == 0) return kExitOk;
    err << app.help();
    return kExitUsage;
  }

  const bool text = cfg.output_format == "text";
  try {
    if (*dec) {
      NumberField k(parse_poly(field));
      const Caps caps{std::max(cfg.max_closure_degree, cfg.max_field_degree), cfg.prime_bound};
      Json j = detail::decompose_json(k, prime, caps);
      if (text) {
        out << "Q[x]/(" << j["field"].get<std::string>() << ") at p = " << prime << ":\n";
        for (const auto& P : j["primes"]) out << "  e = " << P["e"] << ", f = " << P["f"] << "\n";
        out << "  sum e*f = " << j["sum_ef"] << "\n";
      } else {
        out << emit_json(j);
      }
      return kExitOk;
    }
    if (*com) {
      Json j = detail::compositum_json(NumberField(parse_poly(f1)), NumberField(parse_poly(f2)));
      if (text) {
        for (const auto& c : j["composita"])
          out << c["index"] << ": " << c["defining_poly"].get<std::string>() << " (degree " << c["degree"] << ")\n";
      } else {
        out << emit_json(j);
      }
      return kExitOk;
    }
    if (*chk) {
      Instance inst{parse_poly(f1), parse_poly(f2), prime, std::nullopt};
      if (comp_index >= 0) inst.compositum_index = comp_index;
      auto reps = check_instance(inst, cfg);
      bool ok = true;
      Json j = detail::check_json(reps, ok);
      if (text)
        out << emit_text(reps) << "narkiewicz: " << j["narkiewicz"].get<std::string>() << "\n";
      else
        out << emit_json(j);
      return ok ? kExitOk : kExitVerdict;
    }
    if (*fz) {
      bool ok = true;
      Json j = run_fuzz(cfg, ok, err);
      if (text)
        for (const auto& [k, v] : j["summary"].items()) out << k << ": " << v << "\n";
      else
        out << emit_json(j);
      return ok ? kExitOk : kExitVerdict;
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const InternalFault& e) {
    err << "internal fault: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ramlab
