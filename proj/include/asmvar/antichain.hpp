#pragma once

// Antichains of Bruhat order on S_n, modelling unions of Schubert varieties
// X_A = union of X_w over w in A.  Strong order: A <= B iff every member of
// B dominates some member of A (containment of the unions).  The weak-order
// operator acts memberwise followed by minimalization, and Grothendieck
// polynomials extend by inclusion-exclusion over subsets, with ASM joins.

#include "asmvar/groth.hpp"

namespace asmvar {

class Antichain {
 public:
  // Validates: nonempty, uniform size, pairwise Bruhat-incomparable.
  // Members are kept sorted lexicographically.
  static Antichain of(std::vector<Permutation> perms) {
    if (perms.empty()) throw std::invalid_argument("antichain: empty");
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    const int n = perms.front().n();
    for (const Permutation& w : perms)
      if (w.n() != n) throw std::invalid_argument("antichain: mixed sizes");
    for (size_t p = 0; p < perms.size(); ++p)
      for (size_t q = p + 1; q < perms.size(); ++q)
        if (leq_bruhat(perms[p], perms[q]) || leq_bruhat(perms[q], perms[p]))
          throw std::invalid_argument("antichain: members " + canonical_string(perms[p]) + " and " + canonical_string(perms[q]) + " are comparable");
    return Antichain(n, std::move(perms));
  }

  int n() const { return n_; }
  const std::vector<Permutation>& perms() const { return perms_; }

  friend bool operator==(const Antichain& a, const Antichain& b) { return a.n_ == b.n_ && a.perms_ == b.perms_; }
  friend auto operator<=>(const Antichain& a, const Antichain& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.perms_ <=> b.perms_;
  }

 private:
  Antichain(int n, std::vector<Permutation> perms) : n_(n), perms_(std::move(perms)) {}
  int n_;
  std::vector<Permutation> perms_;
};

// Bruhat-minimal elements of an arbitrary nonempty set of permutations.
inline Antichain normalize(std::vector<Permutation> perms) {
  if (perms.empty()) throw std::invalid_argument("normalize: empty");
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) { return coxeter_length(a) < coxeter_length(b); });
  std::vector<Permutation> minimal;
  for (const Permutation& w : perms) {
    bool dominated = false;
    for (const Permutation& v : minimal) {
      if (leq_bruhat(v, w)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(w);
  }
  return Antichain::of(std::move(minimal));
}

inline Antichain from_asm(const Asm& a) { return Antichain::of(perm_set(a)); }

// The candidate ASM is the meet of the members; the antichain is an ASM
// variety exactly when the meet's perm_set gives back the antichain.
inline std::optional<Asm> try_to_asm(const Antichain& a) {
  std::vector<Asm> mats;
  mats.reserve(a.perms().size());
  for (const Permutation& w : a.perms()) mats.push_back(perm_to_asm(w));
  const Asm b = meet(mats);
  if (perm_set(b) == a.perms()) return b;
  return std::nullopt;
}

// X_A contains X_B iff every member of B dominates some member of A.
inline bool leq_strong_anti(const Antichain& a, const Antichain& b) {
  if (a.n() != b.n()) throw std::invalid_argument("leq_strong_anti: size mismatch");
  for (const Permutation& u : b.perms()) {
    bool dominated = false;
    for (const Permutation& w : a.perms()) {
      if (leq_bruhat(w, u)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

// Memberwise pi_i (right multiplication at descents) then minimalization.
inline Antichain pi_anti(const Antichain& a, int i) {
  if (i < 1 || i >= a.n()) throw std::invalid_argument("pi_anti: index out of range");
  std::vector<Permutation> imgs;
  imgs.reserve(a.perms().size());
  for (const Permutation& w : a.perms()) imgs.push_back(w(i) > w(i + 1) ? right_times_simple(w, i) : w);
  return normalize(std::move(imgs));
}

inline std::vector<int> descents(const Antichain& a) {
  std::vector<int> out;
  for (int i = 1; i < a.n(); ++i)
    if (!(pi_anti(a, i) == a)) out.push_back(i);
  return out;
}

inline int maj(const Antichain& a) {
  int s = 0;
  for (int i : descents(a)) s += i;
  return s;
}

// Member inverses (Bruhat order is preserved by inversion, so the result is
// again an antichain); models transposing the union of matrix varieties.
inline Antichain transpose(const Antichain& a) {
  std::vector<Permutation> inv;
  inv.reserve(a.perms().size());
  for (const Permutation& w : a.perms()) inv.push_back(w.inverse());
  return Antichain::of(std::move(inv));
}

inline Antichain pi_col_anti(const Antichain& a, int i) { return transpose(pi_anti(transpose(a), i)); }

// Minimum Coxeter length over the members (codimension of the union).
inline int codim_anti(const Antichain& a) {
  int best = coxeter_length(a.perms().front());
  for (const Permutation& w : a.perms()) best = std::min(best, coxeter_length(w));
  return best;
}

// Ideal sum I_{A_1} + ... + I_{A_r}: geometrically the intersection of the
// unions, expanded distributively.  Every tuple picking one member per
// antichain contributes the perm_set of the tuple's ASM join; the union of
// those sets is then minimalized.
inline Antichain sum_of_antichain_ideals(const std::vector<Antichain>& parts) {
  if (parts.empty()) throw std::invalid_argument("sum_of_antichain_ideals: empty input");
  const int n = parts.front().n();
  for (const Antichain& a : parts)
    if (a.n() != n) throw std::invalid_argument("sum_of_antichain_ideals: size mismatch");
  std::vector<Permutation> acc;
  std::vector<size_t> pick(parts.size(), 0);
  for (;;) {
    std::vector<Asm> mats;
    mats.reserve(parts.size());
    for (size_t t = 0; t < parts.size(); ++t) mats.push_back(perm_to_asm(parts[t].perms()[pick[t]]));
    for (const Permutation& w : perm_set(join(mats))) acc.push_back(w);
    // advance the multi-index
    size_t t = 0;
    while (t < parts.size()) {
      if (++pick[t] < parts[t].perms().size()) break;
      pick[t] = 0;
      ++t;
    }
    if (t == parts.size()) break;
  }
  return normalize(std::move(acc));
}

// All antichains of Bruhat order on S_n (nonempty), emitted by depth-first
// extension over S_n in lexicographic order.  Counts grow steeply with n,
// hence the bound.
inline std::vector<Antichain> enumerate_antichains(int n, int bound = 4) {
  if (n < 1) throw std::invalid_argument("enumerate_antichains: n must be >= 1");
  if (n > bound) throw bound_error("enumerate_antichains: n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<Permutation> all;
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    all.push_back(Permutation{std::vector<int>(word)});
  } while (std::next_permutation(word.begin(), word.end()));
  const size_t m = all.size();
  std::vector<std::vector<char>> comparable(m, std::vector<char>(m, 0));
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q)
      comparable[p][q] = p != q && (leq_bruhat(all[p], all[q]) || leq_bruhat(all[q], all[p]));

  std::vector<Antichain> out;
  std::vector<size_t> chosen;
  const std::function<void(size_t)> walk = [&](size_t start) {
    for (size_t idx = start; idx < m; ++idx) {
      bool ok = true;
      for (size_t c : chosen) {
        if (comparable[c][idx]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(idx);
      std::vector<Permutation> members;
      members.reserve(chosen.size());
      for (size_t c : chosen) members.push_back(all[c]);
      out.push_back(Antichain::of(std::move(members)));
      walk(idx + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return out;
}

inline std::string canonical_string(const Antichain& a) {
  std::string s = "{";
  for (size_t t = 0; t < a.perms().size(); ++t) {
    if (t > 0) s += ',';
    s += canonical_string(a.perms()[t]);
  }
  s += '}';
  return s;
}

// Weak order operator graph on anti(n), edges (src, pi_i(src), i).
inline PosetGraph weak_poset_anti(int n, int bound = 4) {
  const std::vector<Antichain> all = enumerate_antichains(n, bound);
  std::vector<Antichain> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  std::map<Antichain, int> index;
  PosetGraph g;
  g.n = n;
  for (const Antichain& a : sorted) {
    index.emplace(a, static_cast<int>(g.nodes.size()));
    g.nodes.push_back(canonical_string(a));
  }
  for (const Antichain& a : sorted) {
    for (int i = 1; i < n; ++i) {
      const Antichain b = pi_anti(a, i);
      if (b == a) continue;
      g.edges.push_back({index.at(a), index.at(b), i});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) { return std::tie(x[0], x[2], x[1]) < std::tie(y[0], y[2], y[1]); });
  return g;
}

// Hasse diagram of the strong order on anti(n) (covers point downward,
// label 0).  Cover testing scans all intermediate elements, so this is held
// to very small n.
inline PosetGraph strong_hasse_anti(int n, int bound = 3) {
  if (n > bound) throw bound_error("strong_hasse_anti: n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<Antichain> all = enumerate_antichains(n, bound);
  std::sort(all.begin(), all.end());
  const size_t m = all.size();
  std::vector<std::vector<char>> less(m, std::vector<char>(m, 0));
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q)
      less[p][q] = p != q && leq_strong_anti(all[p], all[q]);
  PosetGraph g;
  g.n = n;
  for (const Antichain& a : all) g.nodes.push_back(canonical_string(a));
  for (size_t p = 0; p < m; ++p) {
    for (size_t q = 0; q < m; ++q) {
      if (!less[q][p]) continue;  // q < p: candidate downward cover p -> q
      bool has_middle = false;
      for (size_t t = 0; t < m && !has_middle; ++t) has_middle = less[q][t] && less[t][p];
      if (!has_middle) g.edges.push_back({static_cast<int>(p), static_cast<int>(q), 0});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) { return std::tie(x[0], x[2], x[1]) < std::tie(y[0], y[2], y[1]); });
  return g;
}

// Inclusion-exclusion over nonempty subsets of members, each contributing
// the Grothendieck polynomial of its ASM join with sign (-1)^(|U|-1).
inline MultiPoly groth_anti(const Antichain& a, PolyCache& cache = default_poly_cache()) {
  const int k = static_cast<int>(a.perms().size());
  std::vector<Asm> mats;
  mats.reserve(a.perms().size());
  for (const Permutation& w : a.perms()) mats.push_back(perm_to_asm(w));
  MultiPoly total = MultiPoly::zero(a.n());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<Asm> chosen;
    for (int t = 0; t < k; ++t)
      if (mask & (1u << t)) chosen.push_back(mats[static_cast<size_t>(t)]);
    const MultiPoly g = groth_asm(join(chosen), cache);
    if (__builtin_popcount(mask) % 2 == 1) total = total + g;
    else total = total - g;
  }
  return total;
}

inline MultiPoly groth_anti_single(const Antichain& a, PolyCache& cache = default_poly_cache()) { return substitute_y_zero(groth_anti(a, cache)); }

// pi_i(G_A) = G_{pi_i(A)} for antichains, double and single variable sets.
inline bool check_ddo_anti(const Antichain& a, int i, PolyCache& cache = default_poly_cache()) {
  const Antichain b = pi_anti(a, i);
  const bool double_ok = k_divided_difference(groth_anti(a, cache), i) == groth_anti(b, cache);
  const bool single_ok = k_divided_difference(groth_anti_single(a, cache), i) == groth_anti_single(b, cache);
  return double_ok && single_ok;
}

// (maj(A^T) + nabla - E) G_A(x) = sum_i i * G_{pi_i^C(A)}(x) over the
// columns where pi_i^C moves A.
inline bool check_derivative_anti(const Antichain& a, PolyCache& cache = default_poly_cache()) {
  const MultiPoly g = groth_anti_single(a, cache);
  const MultiPoly lhs = BigInt(maj(transpose(a))) * g + nabla(g) - euler(g);
  MultiPoly rhs = MultiPoly::zero(a.n());
  for (int i = 1; i < a.n(); ++i) {
    const Antichain b = pi_col_anti(a, i);
    if (b == a) continue;
    rhs = rhs + BigInt(i) * groth_anti_single(b, cache);
  }
  return lhs == rhs;
}

}  // namespace asmvar
