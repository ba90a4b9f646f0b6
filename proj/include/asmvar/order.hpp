#pragma once

// Strong (Bruhat) order on ASM(n).  A <= B iff rk_A >= rk_B pointwise; under
// this order ASM(n) is a lattice extending Bruhat order on S_n, with join the
// pointwise minimum of rank matrices and meet the pointwise maximum.

#include <map>
#include <set>

#include "asmvar/core.hpp"

namespace asmvar {

inline bool leq_strong(const Asm& a, const Asm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("leq_strong: size mismatch");
  const RankMatrix ra = rank_matrix(a), rb = rank_matrix(b);
  for (int i = 0; i <= a.n(); ++i)
    for (int j = 0; j <= a.n(); ++j)
      if (ra.at(i, j) < rb.at(i, j)) return false;
  return true;
}

// Bruhat order on S_n via the same rank-dominance criterion.
inline bool leq_bruhat(const Permutation& u, const Permutation& w) {
  return leq_strong(perm_to_asm(u), perm_to_asm(w));
}

namespace detail {

inline std::vector<int> rank_flat(const Asm& a) {
  const RankMatrix r = rank_matrix(a);
  const int m = a.n() + 1;
  std::vector<int> v(static_cast<size_t>(m) * static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) v[static_cast<size_t>(i * m + j)] = r.at(i, j);
  return v;
}

}  // namespace detail

inline Asm join(const std::vector<Asm>& elems) {
  if (elems.empty()) throw std::invalid_argument("join: empty input");
  const int n = elems.front().n();
  std::vector<int> acc = detail::rank_flat(elems.front());
  for (size_t k = 1; k < elems.size(); ++k) {
    if (elems[k].n() != n) throw std::invalid_argument("join: size mismatch");
    const std::vector<int> v = detail::rank_flat(elems[k]);
    for (size_t t = 0; t < acc.size(); ++t) acc[t] = std::min(acc[t], v[t]);
  }
  return asm_from_rank(RankMatrix::from_flat(n, std::move(acc)));
}

inline Asm meet(const std::vector<Asm>& elems) {
  if (elems.empty()) throw std::invalid_argument("meet: empty input");
  const int n = elems.front().n();
  std::vector<int> acc = detail::rank_flat(elems.front());
  for (size_t k = 1; k < elems.size(); ++k) {
    if (elems[k].n() != n) throw std::invalid_argument("meet: size mismatch");
    const std::vector<int> v = detail::rank_flat(elems[k]);
    for (size_t t = 0; t < acc.size(); ++t) acc[t] = std::max(acc[t], v[t]);
  }
  return asm_from_rank(RankMatrix::from_flat(n, std::move(acc)));
}

inline Asm join(const Asm& a, const Asm& b) { return join(std::vector<Asm>{a, b}); }
inline Asm meet(const Asm& a, const Asm& b) { return meet(std::vector<Asm>{a, b}); }

namespace detail {

// Emits every valid row extension in lexicographic entry order (-1 < 0 < 1).
// `cols` holds the running column sums, each kept in {0,1}; rows sum to 1.
template <typename Fn>
void extend_row(int n, int j, int rowpref, std::vector<int>& cols, std::vector<int>& row, Fn&& emit) {
  if (j > n) {
    if (rowpref == 1) emit();
    return;
  }
  for (int e = -1; e <= 1; ++e) {
    const int p = rowpref + e;
    if (p < 0 || p > 1) continue;
    const int c = cols[static_cast<size_t>(j - 1)] + e;
    if (c < 0 || c > 1) continue;
    row[static_cast<size_t>(j - 1)] = e;
    cols[static_cast<size_t>(j - 1)] = c;
    extend_row(n, j + 1, p, cols, row, emit);
    cols[static_cast<size_t>(j - 1)] = c - e;
  }
}

template <typename Fn>
void enumerate_rows(int n, int depth, std::vector<int>& cols, std::vector<std::vector<int>>& rows, Fn&& emit) {
  if (depth == n) {
    // Column prefix sums are in {0,1} and the n row sums total n, so every
    // column sum is exactly 1 here; no further check needed.
    emit(rows);
    return;
  }
  // extend_row owns the column-sum state: it restores cols entry by entry as
  // it unwinds, so the emit callback must leave cols untouched.
  std::vector<int> row(static_cast<size_t>(n));
  extend_row(n, 1, 0, cols, row, [&] {
    rows.push_back(row);
    enumerate_rows(n, depth + 1, cols, rows, emit);
    rows.pop_back();
  });
}

}  // namespace detail

// All of ASM(n) in ascending lexicographic order of the flattened entries.
// |ASM(n)| grows fast (1, 2, 7, 42, 429, 7436, ...), hence the bound.
inline std::vector<Asm> enumerate_asms(int n, int bound = 6) {
  if (n < 1) throw std::invalid_argument("enumerate_asms: n must be >= 1");
  if (n > bound) throw bound_error("enumerate_asms: n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<Asm> out;
  std::vector<int> cols(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> rows;
  detail::enumerate_rows(n, 0, cols, rows, [&](const std::vector<std::vector<int>>& r) { out.push_back(validate_asm(n, r)); });
  // The row-by-row search with entries tried in order -1 < 0 < 1 already
  // yields ascending flattened-entry order; keep a cheap sanity check.
  if (!std::is_sorted(out.begin(), out.end())) throw std::logic_error("enumerate_asms: output not in lexicographic order");
  return out;
}

// The element covered by `a` across essential cell `c`: same rank matrix
// except one higher at c.  On entries this adds the 2x2 sign pattern
// +1 at (i,j),(i+1,j+1) and -1 at (i+1,j),(i,j+1).
inline Asm bump_at_essential(const Asm& a, const Cell& c) {
  const auto ess = essential_set(a);
  if (!std::binary_search(ess.begin(), ess.end(), c)) throw std::invalid_argument("bump_at_essential: " + detail::cell_str(c.row, c.col) + " is not an essential cell");
  const int m = a.n() + 1;
  std::vector<int> v = detail::rank_flat(a);
  v[static_cast<size_t>(c.row * m + c.col)] += 1;
  return asm_from_rank(RankMatrix::from_flat(a.n(), std::move(v)));
}

// Lower covers in strong order: one per essential cell.
inline std::vector<Asm> lower_covers(const Asm& a) {
  std::vector<Asm> out;
  for (const Cell& c : essential_set(a)) out.push_back(bump_at_essential(a, c));
  std::sort(out.begin(), out.end());
  return out;
}

// Upper covers: candidates decrement the rank at a single cell; the candidate
// must be a valid rank matrix whose second difference is an ASM with that
// cell essential (then bump_at_essential(candidate, cell) == a).
inline std::vector<Asm> upper_covers(const Asm& a) {
  const int n = a.n();
  const int m = n + 1;
  const std::vector<int> base = detail::rank_flat(a);
  std::vector<Asm> out;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const int v = base[static_cast<size_t>(i * m + j)];
      if (v < 1) continue;
      // Dropping (i,j) by one must keep all four adjacent unit steps in {0,1}.
      if (v - 1 < base[static_cast<size_t>((i - 1) * m + j)]) continue;
      if (v - 1 < base[static_cast<size_t>(i * m + (j - 1))]) continue;
      if (base[static_cast<size_t>((i + 1) * m + j)] - (v - 1) > 1) continue;
      if (base[static_cast<size_t>(i * m + (j + 1))] - (v - 1) > 1) continue;
      std::vector<int> cand = base;
      cand[static_cast<size_t>(i * m + j)] = v - 1;
      const Asm b = asm_from_rank(RankMatrix::from_flat(n, std::move(cand)));
      const auto ess = essential_set(b);
      if (std::binary_search(ess.begin(), ess.end(), Cell{i, j})) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Bruhat-minimal permutations above `a`.  w >= a iff rk_w <= rk_a at every
// essential cell of a (by the bigrassmannian decomposition), so S_n is
// filtered by |ess(a)| cell comparisons; the survivors are then reduced to
// their minimal elements by rank dominance.
inline std::vector<Permutation> perm_set(const Asm& a) {
  const int n = a.n();
  const RankMatrix ra = rank_matrix(a);
  const auto ess = essential_set(a);
  std::vector<Permutation> candidates;
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    const Permutation w{std::vector<int>(word)};
    bool ok = true;
    for (const Cell& c : ess) {
      int rk = 0;  // #{t <= c.row : w(t) <= c.col}
      for (int t = 1; t <= c.row; ++t)
        if (w(t) <= c.col) ++rk;
      if (rk > ra.at(c.row, c.col)) {
        ok = false;
        break;
      }
    }
    if (ok) candidates.push_back(w);
  } while (std::next_permutation(word.begin(), word.end()));

  // Keep Bruhat-minimal candidates.  Processing by ascending length means a
  // non-minimal candidate always sees a shorter kept witness below it.
  std::stable_sort(candidates.begin(), candidates.end(), [](const Permutation& x, const Permutation& y) { return coxeter_length(x) < coxeter_length(y); });
  std::vector<Permutation> minimal;
  for (const Permutation& w : candidates) {
    bool dominated = false;
    for (const Permutation& v : minimal) {
      if (leq_bruhat(v, w)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(w);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

// Codimension of the ASM variety: the minimum Coxeter length over
// permutations >= a.  Every permutation above a dominates a minimal one of
// smaller-or-equal length, so the minimum over all candidates suffices and
// the minimality filter is skipped (this keeps 8x8 inputs quick).
inline int codim(const Asm& a) {
  const int n = a.n();
  const RankMatrix ra = rank_matrix(a);
  const auto ess = essential_set(a);
  int best = -1;
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    bool ok = true;
    for (const Cell& c : ess) {
      int rk = 0;
      for (int t = 1; t <= c.row; ++t)
        if (word[static_cast<size_t>(t - 1)] <= c.col) ++rk;
      if (rk > ra.at(c.row, c.col)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      int len = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (word[static_cast<size_t>(i)] > word[static_cast<size_t>(j)]) ++len;
      if (best < 0 || len < best) best = len;
    }
  } while (std::next_permutation(word.begin(), word.end()));
  if (best < 0) throw std::logic_error("codim: no permutation above the input");
  return best;
}

// a as the join of one bigrassmannian permutation per essential cell.
inline std::vector<BigrassTriple> bigrass_decomposition(const Asm& a) {
  const RankMatrix r = rank_matrix(a);
  std::vector<BigrassTriple> out;
  for (const Cell& c : essential_set(a)) out.push_back({c.row, c.col, r.at(c.row, c.col), a.n()});
  return out;
}

}  // namespace asmvar
