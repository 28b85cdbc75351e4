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

// Splitting fields, their automorphism groups, and the decomposition,
// inertia and wild inertia subgroups attached to a prime.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramlab/prime.hpp"

namespace ramlab {

struct SplittingField {
  NumberField field;
  std::vector<NFElement> roots;  ///< all roots of base_poly in field
  RatPoly base_poly;
  std::vector<Int> generator_in_roots;  ///< generator = sum c_i * roots[i]
};

namespace detail {

/// True when reduction modulo some small prime proves f does not split over K.
inline bool split_obstructed(const NumberField& k, const RatPoly& f) {
  int tested = 0;
  for (std::uint64_t l = 3; tested < 24 && l < 2000; l = next_prime(l + 1)) {
    ModPPoly fk = ModPPoly::reduce(l, k.defining_poly());
    ModPPoly ff = ModPPoly::reduce(l, f);
    if (fk.degree() != k.degree() || ff.degree() != f.degree()) continue;
    if (!modp_is_squarefree(fk) || !modp_is_squarefree(ff)) continue;
    ++tested;
    int g = 0;
    for (const auto& [h, m] : factor_mod_p(fk)) g = std::gcd(g, h.degree());
    for (const auto& [h, m] : factor_mod_p(ff))
      if (g % h.degree() != 0) return true;
  }
  return false;
}

inline NFPoly deflate_known_roots(const RatPoly& f, const NumberField& k, const std::vector<NFElement>& roots) {
  NFPoly h(k, f);
  for (const auto& r : roots) h = nfpoly_divmod(h, NFPoly(k, {-r, k.one()})).first;
  return h;
}

}  // namespace detail

/// Splitting field of a monic squarefree integral f by iterated adjunction of
/// a root of the first nonlinear factor. Throws CapExceeded when the degree
/// would pass cap.
inline SplittingField splitting_field(const RatPoly& f, int cap) {
  if (!f.is_monic() || !f.is_integral() || f.degree() < 1)
    throw std::invalid_argument("splitting_field: f must be monic integral of positive degree");
  if (poly_gcd(f, f.derivative()).degree() > 0) throw std::invalid_argument("splitting_field: f is not squarefree");
  NumberField k;
  std::vector<NFElement> roots;
  std::vector<Int> theta;
  for (;;) {
    NFPoly h = detail::deflate_known_roots(f, k, roots);
    auto add_root = [&](const NFElement& r) {
      roots.push_back(r);
      theta.push_back(0);
    };
    if (h.degree() == 0) break;
    if (h.degree() == 1) {
      add_root(-h.monic().coeff(0));
      continue;
    }
    if (2 * k.degree() > cap && detail::split_obstructed(k, f))
      throw CapExceeded("normal closure degree exceeds the cap " + std::to_string(cap));
    std::optional<NFPoly> g;
    for (auto& fac : factor_over_nf(h)) {
      if (fac.degree() == 1)
        add_root(-fac.coeff(0));
      else if (!g)
        g = fac;
    }
    if (!g) break;
    if (k.degree() * g->degree() > cap)
      throw CapExceeded("normal closure degree exceeds the cap " + std::to_string(cap));
    NormSplit split = norm_split(k, *g);
    if (split.components.size() != 1) throw InternalFault("splitting_field: adjoined factor is reducible");
    const NormComponent& comp = split.components[0];
    if (!comp.norm_factor.is_integral()) throw InternalFault("splitting_field: non-integral generator");
    NumberField next = NumberField::trusted(comp.norm_factor);
    NFElement alpha = next.from_poly(comp.alpha_in_gamma);
    for (auto& r : roots) r = eval_at(r.as_poly(), alpha);
    for (auto& c : theta) c *= split.shift;
    roots.push_back(next.from_poly(comp.root_in_gamma));
    theta.push_back(1);
    k = next;
  }
  if (static_cast<int>(roots.size()) != f.degree()) throw InternalFault("splitting_field: root count mismatch");
  for (const auto& r : roots)
    if (!eval_at(f, r).is_zero()) throw InternalFault("splitting_field: spurious root");
  NFElement check = k.zero();
  for (std::size_t i = 0; i < roots.size(); ++i) check += Rat(theta[i]) * roots[i];
  if (k.degree() > 1 && check != k.generator()) throw InternalFault("splitting_field: generator bookkeeping");
  return {k, roots, f, theta};
}

struct Automorphism {
  NFElement image_of_generator;
  std::vector<int> root_permutation;  ///< sigma(roots[i]) = roots[perm[i]]
  RatMatrix matrix;                   ///< row k = coordinates of sigma(theta^k)

  NFElement apply(const NFElement& x) const { return x.field().from_coords(vec_mat(x.coords(), matrix)); }
};

class GaloisGroup {
 public:
  GaloisGroup(SplittingField lp, std::vector<Automorphism> elems) : lp_(std::move(lp)), elems_(std::move(elems)) {
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < order(); ++i) index[elems_[i].root_permutation] = i;
    const int n = order();
    table_.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto& pa = elems_[a].root_permutation;
        const auto& pb = elems_[b].root_permutation;
        std::vector<int> c(pb.size());
        for (std::size_t i = 0; i < pb.size(); ++i) c[i] = pa[pb[i]];
        auto it = index.find(c);
        if (it == index.end()) throw InternalFault("automorphisms are not closed under composition");
        table_[a][b] = it->second;
      }
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table_[a][b] == 0) inverse_[a] = b;
  }

  const SplittingField& splitting_field() const { return lp_; }
  const NumberField& field() const { return lp_.field; }
  int order() const { return static_cast<int>(elems_.size()); }
  const Automorphism& element(int i) const { return elems_[i]; }
  const std::vector<Automorphism>& elements() const { return elems_; }
  /// index of a o b
  int compose(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int identity() const { return 0; }

 private:
  SplittingField lp_;
  std::vector<Automorphism> elems_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

namespace detail {

inline std::uint64_t reduce_at(const NFElement& x, std::uint64_t t, std::uint64_t l) {
  std::uint64_t acc = 0;
  const auto& c = x.coords();
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = (acc * t + mod_u64(c[i], l)) % l;
  return acc;
}

inline bool denominators_prime_to(const NFElement& x, std::uint64_t l) {
  for (const auto& c : x.coords())
    if (mod_u64(Int(c.get_den()), l) == 0) return false;
  return true;
}

inline RatMatrix power_matrix(const NFElement& image, const RatPoly& f) {
  const NumberField& k = image.field();
  const int n = k.degree();
  RatMatrix m;
  NFElement pw = k.one();
  for (int i = 0; i < n; ++i) {
    m.push_back(pw.coords());
    pw *= image;
  }
  // pw = image^n; f(image) = 0 iff pw + sum f_i image^i = 0
  NFElement val = pw;
  for (int i = 0; i < n; ++i) val += f.coeff(i) * k.from_coords(m[i]);
  if (!val.is_zero()) throw InternalFault("candidate automorphism does not preserve the defining polynomial");
  return m;
}

}  // namespace detail

/// All automorphisms of the splitting field, recovered from a prime that
/// splits completely and verified exactly. Index 0 is the identity.
inline std::shared_ptr<const GaloisGroup> automorphism_group(const SplittingField& lp) {
  const NumberField& k = lp.field;
  const int n = k.degree();
  const int r = static_cast<int>(lp.roots.size());
  if (n == 1) {
    std::vector<int> id(r);
    std::iota(id.begin(), id.end(), 0);
    return std::make_shared<const GaloisGroup>(lp, std::vector<Automorphism>{{k.generator(), id, rat_identity(1)}});
  }
  const RatPoly& F = k.defining_poly();
  for (std::uint64_t l = 3; l < (1u << 20); l = next_prime(l + 1)) {
    bool ok = true;
    for (const auto& x : lp.roots) ok = ok && detail::denominators_prime_to(x, l);
    if (!ok) continue;
    ModPPoly fl = ModPPoly::reduce(l, F);
    if (modp_powmod(ModPPoly::x(l), Int(static_cast<unsigned long>(l)), fl) != ModPPoly::x(l) % fl) continue;
    std::vector<std::uint64_t> ts = modp_roots(fl);
    if (static_cast<int>(ts.size()) != n) continue;
    std::vector<std::uint64_t> base(r);
    for (int i = 0; i < r; ++i) base[i] = detail::reduce_at(lp.roots[i], ts[0], l);
    std::vector<std::uint64_t> sorted = base;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    std::vector<Automorphism> elems;
    for (std::uint64_t t : ts) {
      std::vector<int> perm(r);
      for (int i = 0; i < r; ++i) {
        std::uint64_t v = detail::reduce_at(lp.roots[i], t, l);
        auto it = std::find(base.begin(), base.end(), v);
        if (it == base.end()) throw InternalFault("automorphism_group: reduction is not a root");
        perm[i] = static_cast<int>(it - base.begin());
      }
      NFElement img = k.zero();
      for (int i = 0; i < r; ++i) img += Rat(lp.generator_in_roots[i]) * lp.roots[perm[i]];
      Automorphism a{img, perm, detail::power_matrix(img, F)};
      for (int i = 0; i < r; ++i)
        if (a.apply(lp.roots[i]) != lp.roots[perm[i]]) throw InternalFault("automorphism_group: permutation mismatch");
      elems.push_back(std::move(a));
    }
    std::sort(elems.begin(), elems.end(),
              [](const Automorphism& a, const Automorphism& b) { return a.root_permutation < b.root_permutation; });
    return std::make_shared<const GaloisGroup>(lp, std::move(elems));
  }
  throw InternalFault("automorphism_group: no completely split prime found");
}

/// A subset of a Galois group, checked to be a subgroup.
class SubgroupHandle {
 public:
  SubgroupHandle(std::shared_ptr<const GaloisGroup> g, std::vector<bool> members, std::string label)
      : g_(std::move(g)), m_(std::move(members)), label_(std::move(label)) {
    if (!is_closed()) throw InternalFault("subgroup " + label_ + " is not closed");
  }

  const GaloisGroup& group() const { return *g_; }
  const std::shared_ptr<const GaloisGroup>& group_ptr() const { return g_; }
  const std::string& label() const { return label_; }
  const std::vector<bool>& members() const { return m_; }
  bool contains(int i) const { return m_[i]; }
  int order() const { return static_cast<int>(std::count(m_.begin(), m_.end(), true)); }
  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(m_.size()); ++i)
      if (m_[i]) out.push_back(i);
    return out;
  }

  bool is_closed() const {
    if (m_.empty() || !m_[0]) return false;
    for (int a : elements()) {
      if (!m_[g_->inverse(a)]) return false;
      for (int b : elements())
        if (!m_[g_->compose(a, b)]) return false;
    }
    return true;
  }

  SubgroupHandle intersect(const SubgroupHandle& o, std::string label = "other") const {
    std::vector<bool> m(m_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = m_[i] && o.m_[i];
    return SubgroupHandle(g_, std::move(m), std::move(label));
  }

  bool is_subset_of(const SubgroupHandle& o) const {
    for (std::size_t i = 0; i < m_.size(); ++i)
      if (m_[i] && !o.m_[i]) return false;
    return true;
  }

  /// s^-1 H s
  SubgroupHandle conjugate(int s, std::string label = "other") const {
    std::vector<bool> m(m_.size(), false);
    const int si = g_->inverse(s);
    for (int a : elements()) m[g_->compose(si, g_->compose(a, s))] = true;
    return SubgroupHandle(g_, std::move(m), std::move(label));
  }

  /// Normal inside the subgroup o.
  bool is_normal_in(const SubgroupHandle& o) const {
    if (!is_subset_of(o)) return false;
    for (int s : o.elements()) {
      const int si = g_->inverse(s);
      for (int a : elements())
        if (!m_[g_->compose(si, g_->compose(a, s))]) return false;
    }
    return true;
  }

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) { return a.m_ == b.m_; }

 private:
  std::shared_ptr<const GaloisGroup> g_;
  std::vector<bool> m_;
  std::string label_;
};

inline SubgroupHandle full_group(const std::shared_ptr<const GaloisGroup>& g) {
  return SubgroupHandle(g, std::vector<bool>(g->order(), true), "full");
}

/// Gal(L'/K_sub) for an embedding K_sub -> L'.
inline SubgroupHandle fixed_subgroup(const std::shared_ptr<const GaloisGroup>& g, const EmbeddingMap& iota,
                                     std::string label = "other") {
  if (iota.target() != g->field()) throw std::invalid_argument("fixed_subgroup: embedding target differs");
  const NFElement& x = iota.image_of_generator();
  std::vector<bool> m(g->order());
  for (int i = 0; i < g->order(); ++i) m[i] = g->element(i).apply(x) == x;
  SubgroupHandle h(g, std::move(m), std::move(label));
  if (h.order() * iota.source().degree() != g->order()) throw InternalFault("fixed subgroup has the wrong order");
  return h;
}

struct InertiaChain {
  PrimeIdeal q;  ///< the chosen prime of L' above p
  std::vector<PrimeIdeal> primes;  ///< all primes of L' above p
  SubgroupHandle D;
  SubgroupHandle G0;
  SubgroupHandle G1;
};

/// D, G0 and G1 for the first prime of L' above p, tested on an order basis.
inline InertiaChain inertia_chain(const std::shared_ptr<const GaloisGroup>& g, std::uint64_t p,
                                  const Caps& caps = {}) {
  std::vector<PrimeIdeal> primes = decompose_prime(g->field(), p, caps);
  const PrimeIdeal& q = primes.front();
  const Order& o = *q.order;
  const int n = g->order();
  const NFElement beta = q.second_gen_element();
  std::vector<NFElement> basis;
  for (int j = 0; j < o.degree(); ++j) basis.push_back(o.basis_element(j));
  std::vector<bool> d(n), g0(n), g1(n);
  for (int i = 0; i < n; ++i) {
    const Automorphism& s = g->element(i);
    d[i] = valuation(s.apply(beta), q) >= 1;
    if (!d[i]) continue;
    long vmin = kInfinity;
    for (const auto& w : basis) vmin = std::min(vmin, valuation(s.apply(w) - w, q));
    g0[i] = vmin >= 1;
    g1[i] = vmin >= 2;
  }
  SubgroupHandle D(g, d, "D"), G0(g, g0, "G0"), G1(g, g1, "G1");
  return {q, std::move(primes), D, G0, G1};
}

/// |G0| / |G0 cap Gamma|.
inline int e_via_groups(const SubgroupHandle& g0, const SubgroupHandle& gamma) {
  const int a = g0.order(), b = g0.intersect(gamma).order();
  if (a % b != 0) throw InternalFault("e_via_groups: non-integral quotient");
  return a / b;
}

struct StructureReport {
  int order_G0 = 0;
  int order_G1 = 0;
  bool e_matches_G0 = false;
  bool G1_normal = false;
  bool G1_is_p_group = false;
  bool quotient_cyclic = false;
  bool quotient_order_coprime_p = false;
  bool homomorphism_multiplicative = false;
  bool homomorphism_kernel_is_G1 = false;

  bool all() const {
    return e_matches_G0 && G1_normal && G1_is_p_group && quotient_cyclic && quotient_order_coprime_p &&
           homomorphism_multiplicative && homomorphism_kernel_is_G1;
  }

  bool operator==(const StructureReport&) const = default;
};

inline bool is_power_of(int n, std::uint64_t p) {
  while (n > 1 && n % static_cast<int>(p) == 0) n /= static_cast<int>(p);
  return n == 1;
}

/// Exhaustive checks of the structure of G0 / G1 and of s -> s(pi)/pi mod q'.
inline StructureReport structure_report(const SubgroupHandle& g0, const SubgroupHandle& g1, const PrimeIdeal& q,
                                        std::uint64_t p) {
  StructureReport r;
  const GaloisGroup& g = g0.group();
  r.order_G0 = g0.order();
  r.order_G1 = g1.order();
  r.e_matches_G0 = r.order_G0 == q.e;
  r.G1_normal = g1.is_normal_in(g0);
  r.G1_is_p_group = is_power_of(r.order_G1, p);
  const int idx = r.order_G0 / r.order_G1;
  r.quotient_order_coprime_p = std::gcd(idx, static_cast<int>(p)) == 1;
  r.quotient_cyclic = false;
  for (int s : g0.elements()) {
    int k = 1, x = s;
    while (!g1.contains(x)) {
      x = g.compose(x, s);
      ++k;
    }
    if (k == idx) {
      r.quotient_cyclic = true;
      break;
    }
  }
  const NFElement pi = q.uniformizer_element();
  const NFElement pi_inv = pi.inverse();
  std::map<int, NFElement> phi;
  for (int s : g0.elements()) phi.emplace(s, g.element(s).apply(pi) * pi_inv);
  r.homomorphism_multiplicative = true;
  for (int s : g0.elements())
    for (int t : g0.elements()) {
      const NFElement diff = phi.at(g.compose(s, t)) - phi.at(s) * phi.at(t);
      if (valuation(diff, q) < 1) r.homomorphism_multiplicative = false;
    }
  r.homomorphism_kernel_is_G1 = true;
  const NFElement one = g.field().one();
  for (int s : g0.elements()) {
    const bool in_kernel = valuation(phi.at(s) - one, q) >= 1;
    if (in_kernel != g1.contains(s)) r.homomorphism_kernel_is_G1 = false;
  }
  return r;
}

/// Embedding of a compositum L = Q(theta1 + shift*theta2) into the splitting
/// field of f1*f2, compatible with both inclusions.
inline EmbeddingMap embed_compositum(const SplittingField& lp, const NumberField& l, const EmbeddingMap& iota1,
                                     const EmbeddingMap& iota2, long shift) {
  const NumberField& k1 = iota1.source();
  const NumberField& k2 = iota2.source();
  std::vector<NFElement> r1, r2;
  for (const auto& r : lp.roots) {
    if (eval_at(k1.defining_poly(), r).is_zero()) r1.push_back(r);
    if (eval_at(k2.defining_poly(), r).is_zero()) r2.push_back(r);
  }
  const NFElement& t1 = iota1.image_of_generator();
  const NFElement& t2 = iota2.image_of_generator();
  for (const auto& a : r1)
    for (const auto& b : r2) {
      NFElement img = k1.is_rationals() ? b : k2.is_rationals() ? a : a + Rat(shift) * b;
      if (!eval_at(l.defining_poly(), img).is_zero()) continue;
      if (eval_at(t1.as_poly(), img) != a || eval_at(t2.as_poly(), img) != b) continue;
      return EmbeddingMap(l, img);
    }
  throw InternalFault("embed_compositum: compositum does not embed in the closure");
}

}  // namespace ramlab
