#pragma once

// Double Grothendieck and Schubert polynomials of permutations and ASMs.
//
// For permutations the polynomials are produced by the usual operator
// recursion from the longest element:
//   G_{w0} = prod_{i+j<=n} (x_i + y_j - x_i y_j),   S_{w0} = prod (x_i - y_j),
// then G_w = pi_{a_m}(...(pi_{a_1}(G_{w0}))) where (a_m, ..., a_1) is the
// reduced word of w^{-1} w0 built by repeatedly removing its smallest
// descent (the operators are applied in reverse word order, innermost
// first).  Schubert polynomials use delta_i in place of pi_i.
//
// For a non-permutation ASM, G_A is assembled by inclusion-exclusion over
// the Bruhat-minimal permutations above A: joins strictly increase in strong
// order, so the recursion terminates.  S_A sums the Schubert polynomials of
// the minimum-length members.  All polynomials are memoized in a PolyCache.

#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "asmvar/poly.hpp"
#include "asmvar/weak.hpp"

namespace asmvar {

class PolyCache {
 public:
  std::optional<MultiPoly> lookup(const std::string& key) const {
    const std::lock_guard<std::mutex> lock(mu_);
    const auto it = store_.find(key);
    if (it == store_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, MultiPoly value) {
    const std::lock_guard<std::mutex> lock(mu_);
    store_.insert_or_assign(key, std::move(value));
  }

  size_t size() const {
    const std::lock_guard<std::mutex> lock(mu_);
    return store_.size();
  }

  void clear() {
    const std::lock_guard<std::mutex> lock(mu_);
    store_.clear();
  }

  // Key-sorted copy of the contents, for deterministic on-disk snapshots.
  std::vector<std::pair<std::string, MultiPoly>> snapshot() const {
    const std::lock_guard<std::mutex> lock(mu_);
    std::vector<std::pair<std::string, MultiPoly>> out(store_.begin(), store_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, MultiPoly> store_;
};

inline PolyCache& default_poly_cache() {
  static PolyCache cache;
  return cache;
}

inline MultiPoly groth_top(int n) {
  MultiPoly p = MultiPoly::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j)
      p = p * (MultiPoly::x(n, i) + MultiPoly::y(n, j) - MultiPoly::x(n, i) * MultiPoly::y(n, j));
  return p;
}

inline MultiPoly schub_top(int n) {
  MultiPoly p = MultiPoly::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j)
      p = p * (MultiPoly::x(n, i) - MultiPoly::y(n, j));
  return p;
}

// Reduced word (i_1, ..., i_m) for w^{-1} w0 extracted by repeatedly taking
// the smallest descent; applying the operators in this exact sequence to the
// top polynomial walks w0 -> w0 s_{i_1} -> ... -> w, each step dropping the
// length by one.
inline std::vector<int> word_to_top(const Permutation& w) {
  Permutation u = compose(w.inverse(), Permutation::longest(w.n()));
  std::vector<int> word;
  for (;;) {
    const auto d = descents(u);
    if (d.empty()) break;
    word.push_back(d.front());
    u = right_times_simple(u, d.front());
  }
  return word;
}

namespace detail {

inline MultiPoly perm_poly(const Permutation& w, PolyCache& cache, const char* tag, const std::function<MultiPoly(int)>& top, const std::function<MultiPoly(const MultiPoly&, int)>& op) {
  const int n = w.n();
  const std::string key = std::string(tag) + "|" + canonical_string(perm_to_asm(w));
  if (auto hit = cache.lookup(key)) return *hit;

  MultiPoly p = top(n);
  Permutation v = Permutation::longest(n);
  cache.insert(std::string(tag) + "|" + canonical_string(perm_to_asm(v)), p);
  for (int i : word_to_top(w)) {
    v = right_times_simple(v, i);
    const std::string vkey = std::string(tag) + "|" + canonical_string(perm_to_asm(v));
    if (auto hit = cache.lookup(vkey)) {
      p = *hit;
      continue;
    }
    p = op(p, i);
    cache.insert(vkey, p);
  }
  if (!(v == w)) throw std::logic_error("perm_poly: descent walk did not land on the requested permutation");
  return p;
}

}  // namespace detail

inline MultiPoly groth_perm(const Permutation& w, PolyCache& cache = default_poly_cache()) {
  return detail::perm_poly(w, cache, "G2", groth_top, [](const MultiPoly& f, int i) { return k_divided_difference(f, i); });
}

inline MultiPoly schub_perm(const Permutation& w, PolyCache& cache = default_poly_cache()) {
  return detail::perm_poly(w, cache, "S2", schub_top, [](const MultiPoly& f, int i) { return divided_difference(f, i); });
}

// Inclusion-exclusion over nonempty subsets of perm_set(a): the subset's
// join contributes with sign (-1)^(|U|-1).  Singleton joins are the
// permutations themselves; larger joins lie strictly above a, so the
// recursion terminates.
inline MultiPoly groth_asm(const Asm& a, PolyCache& cache = default_poly_cache()) {
  const std::string key = "G2|" + canonical_string(a);
  if (auto hit = cache.lookup(key)) return *hit;
  if (const auto w = asm_to_perm(a)) return groth_perm(*w, cache);

  const auto members = perm_set(a);
  const int k = static_cast<int>(members.size());
  std::vector<Asm> mats;
  mats.reserve(members.size());
  for (const Permutation& w : members) mats.push_back(perm_to_asm(w));
  MultiPoly total = MultiPoly::zero(a.n());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<Asm> chosen;
    for (int t = 0; t < k; ++t)
      if (mask & (1u << t)) chosen.push_back(mats[static_cast<size_t>(t)]);
    const MultiPoly g = groth_asm(join(chosen), cache);
    if (__builtin_popcount(mask) % 2 == 1) total = total + g;
    else total = total - g;
  }
  cache.insert(key, total);
  return total;
}

// Sum of the Schubert polynomials of the minimum-length members of
// perm_set(a), i.e. of the top-dimensional components.
inline MultiPoly schub_asm(const Asm& a, PolyCache& cache = default_poly_cache()) {
  const std::string key = "S2|" + canonical_string(a);
  if (auto hit = cache.lookup(key)) return *hit;
  const auto members = perm_set(a);
  int min_len = coxeter_length(members.front());
  for (const Permutation& w : members) min_len = std::min(min_len, coxeter_length(w));
  MultiPoly total = MultiPoly::zero(a.n());
  for (const Permutation& w : members)
    if (coxeter_length(w) == min_len) total = total + schub_perm(w, cache);
  cache.insert(key, total);
  return total;
}

inline MultiPoly groth_asm_single(const Asm& a, PolyCache& cache = default_poly_cache()) { return substitute_y_zero(groth_asm(a, cache)); }
inline MultiPoly schub_asm_single(const Asm& a, PolyCache& cache = default_poly_cache()) { return substitute_y_zero(schub_asm(a, cache)); }

// pi_i(G_A) = G_{pi_i(A)}, checked in both the double and single variable
// sets; both sides are computed independently.
inline bool check_ddo(const Asm& a, int i, PolyCache& cache = default_poly_cache()) {
  const Asm b = pi(a, i);
  const bool double_ok = k_divided_difference(groth_asm(a, cache), i) == groth_asm(b, cache);
  const bool single_ok = k_divided_difference(groth_asm_single(a, cache), i) == groth_asm_single(b, cache);
  return double_ok && single_ok;
}

// delta_i(S_A) vanishes iff pi_i preserves codimension, and otherwise equals
// S_{pi_i(A)}; checked in both variable sets.
inline bool check_schubert_delta(const Asm& a, int i, PolyCache& cache = default_poly_cache()) {
  const Asm b = pi(a, i);
  const MultiPoly d2 = divided_difference(schub_asm(a, cache), i);
  const MultiPoly d1 = divided_difference(schub_asm_single(a, cache), i);
  if (codim(b) == codim(a)) return d2.is_zero() && d1.is_zero();
  return d2 == schub_asm(b, cache) && d1 == schub_asm_single(b, cache);
}

// Three-way equivalence: pi_i preserves codimension iff S_A is symmetric in
// x_i, x_{i+1} (single variables) iff it is symmetric there (double).
inline bool check_symmetry(const Asm& a, int i, PolyCache& cache = default_poly_cache()) {
  const bool same_codim = codim(pi(a, i)) == codim(a);
  const MultiPoly s2 = schub_asm(a, cache);
  const MultiPoly s1 = schub_asm_single(a, cache);
  const bool sym1 = swap_x(s1, i) == s1;
  const bool sym2 = swap_x(s2, i) == s2;
  return same_codim == sym1 && sym1 == sym2;
}

// Derivative formula, single variables:
//   (maj(A^T) + nabla - E) G_A(x) = sum over columns i with
//   pi_i^C(A) != A of i * G_{pi_i^C(A)}(x).
inline bool check_derivative(const Asm& a, PolyCache& cache = default_poly_cache()) {
  const MultiPoly g = groth_asm_single(a, cache);
  const MultiPoly lhs = BigInt(maj(transpose(a))) * g + nabla(g) - euler(g);
  MultiPoly rhs = MultiPoly::zero(a.n());
  for (int i = 1; i < a.n(); ++i) {
    const Asm b = pi_col(a, i);
    if (b == a) continue;
    rhs = rhs + BigInt(i) * groth_asm_single(b, cache);
  }
  return lhs == rhs;
}

// Distinct ASMs have distinct single Grothendieck polynomials.
inline bool distinctness_check(int n, PolyCache& cache = default_poly_cache(), int bound = 6) {
  const auto all = enumerate_asms(n, bound);
  std::vector<MultiPoly> polys;
  polys.reserve(all.size());
  for (const Asm& a : all) polys.push_back(groth_asm_single(a, cache));
  for (size_t p = 0; p < polys.size(); ++p)
    for (size_t q = p + 1; q < polys.size(); ++q)
      if (polys[p] == polys[q]) return false;
  return true;
}

}  // namespace asmvar
