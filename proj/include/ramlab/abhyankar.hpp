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

// Per-prime verification of Abhyankar's lemma on composita, with the ideal
// decomposition (pathway A) cross-checked against inertia groups in the
// normal closure (pathway B).

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ramlab/galois.hpp"

namespace ramlab {

struct RunConfig {
  int max_closure_degree = 24;
  int max_field_degree = 12;
  std::uint64_t prime_bound = 1000;
  std::uint64_t seed = 1;
  int cases = 100;
  std::string output_format = "json";
};

struct Instance {
  RatPoly f1;
  RatPoly f2;
  std::uint64_t p = 0;
  std::optional<int> compositum_index;
};

/// Group-theoretic data for one prime q of L, read in the frame of a
/// conjugate s(q') lying over q.
struct GroupData {
  int conjugator = 0;
  int e_q = 0;
  int e1 = 0;
  int e2 = 0;
  int order_G0 = 0;
  int order_G1 = 0;
  int G0_gamma = 0;
  int G0_gamma1 = 0;
  int G0_gamma2 = 0;
  int G1_gamma = 0;
  int G1_gamma1 = 0;
  int G1_gamma2 = 0;
  int d = 0;
  bool gamma_is_intersection = false;
  bool md_identity = false;
  std::optional<bool> G1_in_tame_gamma;
  std::optional<bool> eq4a;
  std::optional<bool> eq5a;
  std::optional<bool> image_intersection;
  std::optional<bool> d_equals_G0_gamma;

  bool ok() const {
    auto good = [](const std::optional<bool>& b) { return !b || *b; };
    return gamma_is_intersection && md_identity && good(G1_in_tame_gamma) && good(eq4a) && good(eq5a) &&
           good(image_intersection) && good(d_equals_G0_gamma);
  }

  bool operator==(const GroupData&) const = default;
};

struct PrimeReport {
  int e_q = 0;
  int f_q = 0;
  int e1 = 0;
  int f1 = 0;
  int e2 = 0;
  int f2 = 0;
  bool tame1 = false;
  bool tame2 = false;
  int lcm = 0;
  int gcd = 0;
  int product = 0;
  bool divides_product = false;
  int e_over_p1 = 0;
  int e_over_p2 = 0;
  bool multiplicativity = false;
  std::optional<int> d;
  bool verdict_eq1 = false;
  std::string verdict_theorem;
  std::string verdict_eq2;
  std::string verdict_corollary;
  std::string verdict_narkiewicz;
  std::optional<bool> pathway_agreement;
  std::optional<GroupData> galois;

  bool ok() const {
    return verdict_eq1 && multiplicativity && verdict_theorem != "fails" && verdict_eq2 != "fails" &&
           verdict_corollary != "fails" && verdict_narkiewicz != "fails" && pathway_agreement.value_or(true) &&
           (!galois || galois->ok());
  }

  bool operator==(const PrimeReport&) const = default;
};

struct PathwayReport {
  int degree_L = 0;
  int primes_in_L = 0;
  int sum_ef = 0;
  std::string galois_status;  ///< "validated" or "skipped"
  std::string skip_reason;
  std::optional<int> closure_degree;
  std::optional<bool> K1_normal;
  std::optional<bool> K2_normal;
  std::optional<StructureReport> structure;
  std::optional<bool> agreement;

  bool ok() const { return sum_ef == degree_L && agreement.value_or(true) && (!structure || structure->all()); }

  bool operator==(const PathwayReport&) const = default;
};

struct RamificationReport {
  std::string f1;
  std::string f2;
  std::uint64_t p = 0;
  int compositum_index = 0;
  int compositum_count = 0;
  std::string compositum_poly;
  int compositum_degree = 0;
  long compositum_shift = 0;
  std::vector<PrimeReport> primes;
  PathwayReport pathways;

  bool ok() const {
    if (!pathways.ok()) return false;
    for (const auto& q : primes)
      if (!q.ok()) return false;
    return true;
  }

  bool operator==(const RamificationReport&) const = default;
};

namespace detail {

inline std::string tri(bool applicable, bool holds) {
  if (!applicable) return "not-applicable";
  return holds ? "holds" : "fails";
}

/// Shared per-instance Galois data: closure, group, inertia chain.
struct ClosureData {
  SplittingField lp;
  std::shared_ptr<const GaloisGroup> group;
  InertiaChain chain;
  StructureReport structure;
};

inline RatPoly closure_poly(const RatPoly& f1, const RatPoly& f2) {
  if (f1 == f2) return f1;
  return squarefree_part(f1 * f2);
}

inline int coset_key(const SubgroupHandle& g1, int x) {
  // smallest index in x*G1
  const GaloisGroup& g = g1.group();
  int best = -1;
  for (int h : g1.elements()) {
    int y = g.compose(x, h);
    if (best < 0 || y < best) best = y;
  }
  return best;
}

inline std::vector<int> image_mod_g1(const SubgroupHandle& x, const SubgroupHandle& g1) {
  std::vector<int> out;
  for (int s : x.elements()) out.push_back(coset_key(g1, s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline GroupData group_data(const ClosureData& cd, int sigma, const SubgroupHandle& gamma,
                            const SubgroupHandle& gamma1, const SubgroupHandle& gamma2, std::uint64_t p) {
  const SubgroupHandle& G0 = cd.chain.G0;
  const SubgroupHandle& G1 = cd.chain.G1;
  SubgroupHandle h = gamma.conjugate(sigma, "Gamma");
  SubgroupHandle h1 = gamma1.conjugate(sigma, "Gamma1");
  SubgroupHandle h2 = gamma2.conjugate(sigma, "Gamma2");
  GroupData g;
  g.conjugator = sigma;
  g.order_G0 = G0.order();
  g.order_G1 = G1.order();
  SubgroupHandle g0h = G0.intersect(h), g0h1 = G0.intersect(h1), g0h2 = G0.intersect(h2);
  g.G0_gamma = g0h.order();
  g.G0_gamma1 = g0h1.order();
  g.G0_gamma2 = g0h2.order();
  g.G1_gamma = G1.intersect(h).order();
  g.G1_gamma1 = G1.intersect(h1).order();
  g.G1_gamma2 = G1.intersect(h2).order();
  g.e_q = e_via_groups(G0, h);
  g.e1 = e_via_groups(G0, h1);
  g.e2 = e_via_groups(G0, h2);
  g.d = std::gcd(g.G0_gamma1, g.G0_gamma2);
  g.gamma_is_intersection = h == h1.intersect(h2);
  g.md_identity = std::lcm(g.e1, g.e2) * g.d == g.order_G0;
  const int pi = static_cast<int>(p);
  const bool t1 = g.e1 % pi != 0, t2 = g.e2 % pi != 0;
  if (t1 || t2) {
    const SubgroupHandle& tame_gamma = t1 ? h1 : h2;
    g.G1_in_tame_gamma = G1.is_subset_of(tame_gamma);
    g.eq4a = g.G1_gamma == std::gcd(g.G1_gamma1, g.G1_gamma2);
    auto img = image_mod_g1(g0h, G1), img1 = image_mod_g1(g0h1, G1), img2 = image_mod_g1(g0h2, G1);
    std::vector<int> both;
    std::set_intersection(img1.begin(), img1.end(), img2.begin(), img2.end(), std::back_inserter(both));
    g.image_intersection = img == both;
    g.eq5a = static_cast<int>(img.size()) == std::gcd(static_cast<int>(img1.size()), static_cast<int>(img2.size()));
    g.d_equals_G0_gamma = g.d == g.G0_gamma;
  }
  return g;
}

}  // namespace detail

/// Checks every compositum (or the selected one) of the instance.
inline std::vector<RamificationReport> check_instance(const Instance& inst, const RunConfig& cfg = {}) {
  check_caps(1, inst.p, Caps{cfg.max_field_degree, cfg.prime_bound});
  NumberField k1(inst.f1), k2(inst.f2);
  if (k1.degree() > cfg.max_field_degree || k2.degree() > cfg.max_field_degree)
    throw CapExceeded("field degree exceeds the cap " + std::to_string(cfg.max_field_degree));
  std::vector<Compositum> comps = compositum(k1, k2);
  if (inst.compositum_index && (*inst.compositum_index < 0 || *inst.compositum_index >= static_cast<int>(comps.size())))
    throw std::invalid_argument("compositum index out of range (" + std::to_string(comps.size()) + " composita)");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (inst.compositum_index && static_cast<int>(i) != *inst.compositum_index) continue;
    if (comps[i].field.degree() > cfg.max_field_degree)
      throw CapExceeded("compositum degree " + std::to_string(comps[i].field.degree()) + " exceeds the cap " +
                        std::to_string(cfg.max_field_degree));
  }
  const std::uint64_t p = inst.p;
  const Caps caps{std::max(cfg.max_closure_degree, cfg.max_field_degree), cfg.prime_bound};
  const std::vector<PrimeIdeal> primes1 = decompose_prime(k1, p, caps), primes2 = decompose_prime(k2, p, caps);

  std::optional<detail::ClosureData> cd;
  std::string skip_reason;
  try {
    SplittingField lp = splitting_field(detail::closure_poly(k1.defining_poly(), k2.defining_poly()),
                                        cfg.max_closure_degree);
    auto g = automorphism_group(lp);
    InertiaChain chain = inertia_chain(g, p, caps);
    StructureReport sr = structure_report(chain.G0, chain.G1, chain.q, p);
    cd = detail::ClosureData{std::move(lp), g, std::move(chain), sr};
  } catch (const CapExceeded& e) {
    skip_reason = e.what();
  }

  std::vector<RamificationReport> out;
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    if (inst.compositum_index && static_cast<int>(ci) != *inst.compositum_index) continue;
    const Compositum& c = comps[ci];
    RamificationReport rep;
    rep.f1 = to_string(inst.f1);
    rep.f2 = to_string(inst.f2);
    rep.p = p;
    rep.compositum_index = static_cast<int>(ci);
    rep.compositum_count = static_cast<int>(comps.size());
    rep.compositum_poly = to_string(c.field.defining_poly());
    rep.compositum_degree = c.field.degree();
    rep.compositum_shift = c.shift;
    std::vector<PrimeIdeal> primes_l = decompose_prime(c.field, p, caps);
    rep.pathways.degree_L = c.field.degree();
    rep.pathways.primes_in_L = static_cast<int>(primes_l.size());
    for (const auto& q : primes_l) rep.pathways.sum_ef += q.e * q.f;

    // pathway B: which prime of L lies under s(q') for each s
    std::vector<int> conj_for(primes_l.size(), -1);
    std::optional<SubgroupHandle> gam, gam1, gam2;
    if (cd) {
      const auto& g = cd->group;
      EmbeddingMap tau = embed_compositum(cd->lp, c.field, c.iota1, c.iota2, c.shift);
      gam = fixed_subgroup(g, tau, "Gamma");
      gam1 = fixed_subgroup(g, c.iota1.then(tau), "Gamma1");
      gam2 = fixed_subgroup(g, c.iota2.then(tau), "Gamma2");
      SubgroupHandle full = full_group(g);
      rep.pathways.K1_normal = gam1->is_normal_in(full);
      rep.pathways.K2_normal = gam2->is_normal_in(full);
      std::vector<NFElement> images;
      for (const auto& q : primes_l) images.push_back(tau.apply(q.second_gen_element()));
      for (int s = 0; s < g->order(); ++s) {
        const Automorphism& si = g->element(g->inverse(s));
        int hit = -1;
        for (std::size_t j = 0; j < primes_l.size(); ++j)
          if (valuation(si.apply(images[j]), cd->chain.q) > 0) {
            if (hit >= 0) throw InternalFault("conjugate prime lies over two primes of L");
            hit = static_cast<int>(j);
          }
        if (hit < 0) throw InternalFault("conjugate prime lies over no prime of L");
        if (conj_for[hit] < 0) conj_for[hit] = s;
      }
      for (int s : conj_for)
        if (s < 0) throw InternalFault("a prime of L is not under any conjugate of q'");
      rep.pathways.galois_status = "validated";
      rep.pathways.closure_degree = cd->lp.field.degree();
      rep.pathways.structure = cd->structure;
      rep.pathways.agreement = true;
    } else {
      rep.pathways.galois_status = "skipped";
      rep.pathways.skip_reason = skip_reason;
    }

    const int pi = static_cast<int>(p);
    for (std::size_t j = 0; j < primes_l.size(); ++j) {
      const PrimeIdeal& q = primes_l[j];
      const PrimeIdeal& P1 = restrict_prime(q, c.iota1, primes1);
      const PrimeIdeal& P2 = restrict_prime(q, c.iota2, primes2);
      PrimeReport r;
      r.e_q = q.e;
      r.f_q = q.f;
      r.e1 = P1.e;
      r.f1 = P1.f;
      r.e2 = P2.e;
      r.f2 = P2.f;
      r.tame1 = r.e1 % pi != 0;
      r.tame2 = r.e2 % pi != 0;
      r.lcm = std::lcm(r.e1, r.e2);
      r.gcd = std::gcd(r.e1, r.e2);
      r.product = r.e1 * r.e2;
      r.divides_product = r.product % r.e_q == 0;
      r.e_over_p1 = relative_ramification(q, c.iota1, P1);
      r.e_over_p2 = relative_ramification(q, c.iota2, P2);
      r.multiplicativity = r.e_over_p1 * r.e1 == r.e_q && r.e_over_p2 * r.e2 == r.e_q;
      r.verdict_eq1 = r.e_q % r.lcm == 0;
      r.verdict_theorem = detail::tri(r.tame1 || r.tame2, r.e_q == r.lcm);
      r.verdict_corollary = detail::tri(r.gcd == 1, r.e_q == r.product);
      if (r.tame1 && r.e2 % r.e1 == 0)
        r.verdict_narkiewicz = detail::tri(true, r.e_over_p2 == 1);
      else if (r.tame2 && r.e1 % r.e2 == 0)
        r.verdict_narkiewicz = detail::tri(true, r.e_over_p1 == 1);
      else
        r.verdict_narkiewicz = detail::tri(false, false);
      if (cd) {
        GroupData gd = detail::group_data(*cd, conj_for[j], *gam, *gam1, *gam2, p);
        r.d = gd.d;
        r.pathway_agreement = gd.e_q == r.e_q && gd.e1 == r.e1 && gd.e2 == r.e2;
        if (!*r.pathway_agreement) rep.pathways.agreement = false;
        const bool normal = *rep.pathways.K1_normal || *rep.pathways.K2_normal;
        r.verdict_eq2 = detail::tri(normal, r.divides_product);
        r.galois = gd;
      } else {
        r.verdict_eq2 = detail::tri(false, false);
      }
      rep.primes.push_back(std::move(r));
    }
    out.push_back(std::move(rep));
  }
  return out;
}

/// Narkiewicz verdict over all primes of all checked composita.
inline std::string check_narkiewicz(const std::vector<RamificationReport>& reports) {
  bool applicable = false, holds = true;
  for (const auto& rep : reports)
    for (const auto& q : rep.primes) {
      if (q.verdict_narkiewicz == "not-applicable") continue;
      applicable = true;
      holds = holds && q.verdict_narkiewicz == "holds";
    }
  return detail::tri(applicable, holds);
}

inline std::string check_narkiewicz(const Instance& inst, const RunConfig& cfg = {}) {
  return check_narkiewicz(check_instance(inst, cfg));
}

struct CrossValidation {
  bool skipped = false;
  bool agree = false;
  std::vector<std::string> details;
};

inline CrossValidation cross_validate(const std::vector<RamificationReport>& reports) {
  CrossValidation cv;
  cv.agree = true;
  for (const auto& rep : reports) {
    if (rep.pathways.galois_status != "validated") {
      cv.skipped = true;
      cv.details.push_back("compositum " + std::to_string(rep.compositum_index) + ": " + rep.pathways.skip_reason);
      continue;
    }
    for (std::size_t j = 0; j < rep.primes.size(); ++j) {
      const auto& q = rep.primes[j];
      const GroupData& g = *q.galois;
      std::string line = "compositum " + std::to_string(rep.compositum_index) + " prime " + std::to_string(j) +
                         ": A (" + std::to_string(q.e_q) + "," + std::to_string(q.e1) + "," + std::to_string(q.e2) +
                         ") B (" + std::to_string(g.e_q) + "," + std::to_string(g.e1) + "," + std::to_string(g.e2) +
                         ")";
      cv.details.push_back(line);
      if (!*q.pathway_agreement) cv.agree = false;
    }
  }
  return cv;
}

inline CrossValidation cross_validate(const Instance& inst, const RunConfig& cfg = {}) {
  return cross_validate(check_instance(inst, cfg));
}

// ---------------------------------------------------------------------------
// Seeded instance generation.

namespace detail {

/// Uniform integer in [lo, hi] by rejection, identical on every platform.
inline long draw(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = top - top % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<long>(x % span);
}

inline RatPoly radical(int n, long a) {
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = -a;
  c[n] = 1;
  return RatPoly(std::move(c));
}

inline RatPoly cyclotomic(int m) {
  // x^m - 1 divided by the cyclotomic polynomials of the proper divisors
  RatPoly f = radical(m, 1);
  for (int d = 1; d < m; ++d)
    if (m % d == 0) f = f / cyclotomic(d);
  return f;
}

inline std::vector<std::uint64_t> ramified_primes(const RatPoly& f1, const RatPoly& f2, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (const RatPoly* f : {&f1, &f2}) {
    if (f->degree() < 2) continue;
    Rat d = discriminant(*f);
    for (auto q : prime_divisors(abs(d.get_num())))
      if (q < bound) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

struct GeneratedInstance {
  Instance instance;
  std::string family;
};

/// Deterministic instance from the seed, drawn from radical, cyclotomic and
/// shifted-polynomial families with p among the ramified primes of the pair.
inline GeneratedInstance random_instance(std::uint64_t seed, const RunConfig& cfg = {}) {
  std::mt19937_64 rng(seed);
  static const std::vector<int> cyclo = {3, 4, 5, 6, 7, 8, 9, 10, 12};
  static const std::vector<long> small_primes = {2, 3, 5, 7};
  for (;;) {
    const long family = detail::draw(rng, 0, 2);
    RatPoly f1, f2;
    std::string name;
    std::optional<std::uint64_t> forced_p;
    if (family == 0) {
      name = "radical";
      const long q = small_primes[detail::draw(rng, 0, 3)];
      const int n1 = static_cast<int>(detail::draw(rng, 2, 4));
      const int n2 = static_cast<int>(detail::draw(rng, 2, 4));
      long u1 = detail::draw(rng, 1, 5), u2 = detail::draw(rng, 1, 5);
      if (detail::draw(rng, 0, 1)) u1 = -u1;
      if (detail::draw(rng, 0, 1)) u2 = -u2;
      const long a1 = detail::draw(rng, 0, 3) ? q * u1 : u1 == 1 ? q : u1;
      const long a2 = q * u2;
      f1 = detail::radical(n1, a1);
      f2 = detail::radical(n2, a2);
      forced_p = static_cast<std::uint64_t>(q);
    } else if (family == 1) {
      name = "cyclotomic";
      const int m = cyclo[detail::draw(rng, 0, static_cast<long>(cyclo.size()) - 1)];
      f1 = detail::cyclotomic(m);
      const int n2 = static_cast<int>(detail::draw(rng, 2, 3));
      long a = detail::draw(rng, 2, 12);
      if (detail::draw(rng, 0, 1)) a = -a;
      f2 = detail::radical(n2, a);
    } else {
      name = "shifted";
      const long b = detail::draw(rng, -4, 4), c = detail::draw(rng, -8, 8);
      f1 = RatPoly({c, b, 1});
      const long s = detail::draw(rng, -3, 3), t = detail::draw(rng, -9, 9);
      f2 = compose(RatPoly({t, 0, 0, 1}), RatPoly({s, 1}));
      if (detail::draw(rng, 0, 1)) f2 = RatPoly({t, s, 0, 1});
    }
    if (f1.degree() * f2.degree() > cfg.max_field_degree) continue;
    if (!is_irreducible_over_Q(f1) || !is_irreducible_over_Q(f2)) continue;
    std::uint64_t p;
    if (forced_p) {
      p = *forced_p;
    } else {
      auto ram = detail::ramified_primes(f1, f2, cfg.prime_bound);
      if (ram.empty()) continue;
      p = ram[detail::draw(rng, 0, static_cast<long>(ram.size()) - 1)];
    }
    return {Instance{f1, f2, p, std::nullopt}, name};
  }
}

}  // namespace ramlab
