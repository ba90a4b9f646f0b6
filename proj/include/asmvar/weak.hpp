#pragma once

// Weak order on ASM(n), generated by the row operators pi_i.  pi_i(A) is the
// minimum of the sublattice of ASMs whose rank matrices agree with A's off
// row i; the weak order is the transitive closure of B = pi_i(A) != A, and it
// refines the strong order.  On permutations pi_i(w) = w s_i when i is a
// descent of w, else w.

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "asmvar/order.hpp"

namespace asmvar {

// Direct formula: the meet of the row-i sublattice is the pointwise maximum
// of its rank matrices, and the largest value row i can take at column j
// subject to the unit-step conditions against rows i-1 and i+1 is
// min(rk(i-1,j) + 1, rk(i+1,j)).  That bound is attained (the resulting row
// satisfies all step conditions), so it *is* the meet; pi_brute below
// recomputes this from the definition for cross-validation.
inline Asm pi(const Asm& a, int i) {
  const int n = a.n();
  if (i < 1 || i >= n) throw std::invalid_argument("pi: row index out of range");
  const int m = n + 1;
  std::vector<int> v = detail::rank_flat(a);
  for (int j = 0; j <= n; ++j)
    v[static_cast<size_t>(i * m + j)] = std::min(v[static_cast<size_t>((i - 1) * m + j)] + 1, v[static_cast<size_t>((i + 1) * m + j)]);
  return asm_from_rank(RankMatrix::from_flat(n, std::move(v)));
}

// Definitional computation of pi_i: enumerate ASM(n), keep the ASMs whose
// rank matrices agree with a's off row i, return their meet.
inline Asm pi_brute(const Asm& a, int i, int bound = 6) {
  const int n = a.n();
  if (i < 1 || i >= n) throw std::invalid_argument("pi_brute: row index out of range");
  const int m = n + 1;
  const std::vector<int> base = detail::rank_flat(a);
  std::vector<Asm> family;
  for (const Asm& b : enumerate_asms(n, bound)) {
    const std::vector<int> v = detail::rank_flat(b);
    bool same_off_row = true;
    for (int r = 0; r <= n && same_off_row; ++r) {
      if (r == i) continue;
      for (int j = 0; j <= n; ++j) {
        if (v[static_cast<size_t>(r * m + j)] != base[static_cast<size_t>(r * m + j)]) {
          same_off_row = false;
          break;
        }
      }
    }
    if (same_off_row) family.push_back(b);
  }
  if (family.empty()) throw std::logic_error("pi_brute: sublattice is empty");
  return meet(family);
}

// Column operator: conjugate of pi by transposition.
inline Asm pi_col(const Asm& a, int i) { return transpose(pi(transpose(a), i)); }

// Descents {i : pi_i(a) != a}; equal to the rows holding an essential cell,
// and the two characterizations are cross-asserted.
inline std::vector<int> descents(const Asm& a) {
  std::set<int> rows;
  for (const Cell& c : essential_set(a)) rows.insert(c.row);
  std::vector<int> out;
  for (int i = 1; i < a.n(); ++i) {
    const bool moved = !(pi(a, i) == a);
    const bool has_ess = rows.count(i) > 0;
    if (moved != has_ess) throw std::logic_error("descents: operator and essential-cell characterizations disagree at row " + std::to_string(i));
    if (moved) out.push_back(i);
  }
  return out;
}

inline int maj(const Asm& a) {
  int s = 0;
  for (int i : descents(a)) s += i;
  return s;
}

namespace detail {

// Strict images pi_i(a) != a, as (row index, image) pairs in ascending i.
inline std::vector<std::pair<int, Asm>> strict_images(const Asm& a) {
  std::vector<std::pair<int, Asm>> out;
  for (int i = 1; i < a.n(); ++i) {
    Asm b = pi(a, i);
    if (!(b == a)) out.emplace_back(i, std::move(b));
  }
  return out;
}

// All elements weakly below `a` (its descent closure, including `a`).
inline std::set<Asm> weak_ideal(const Asm& a) {
  std::set<Asm> seen{a};
  std::deque<Asm> queue{a};
  while (!queue.empty()) {
    const Asm cur = queue.front();
    queue.pop_front();
    for (auto& [i, img] : strict_images(cur)) {
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return seen;
}

}  // namespace detail

// a is weakly below b iff a lies in the descent closure of b.
inline bool is_weak_leq(const Asm& a, const Asm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("is_weak_leq: size mismatch");
  if (a == b) return true;
  std::set<Asm> seen{b};
  std::deque<Asm> queue{b};
  while (!queue.empty()) {
    const Asm cur = queue.front();
    queue.pop_front();
    for (auto& [i, img] : detail::strict_images(cur)) {
      if (img == a) return true;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return false;
}

// Labeled operator graph: one node per element, an edge (src, dst, i) for
// every strict application dst = pi_i(src).  Nodes are listed in canonical
// (lexicographic) order and edges sorted by (src, label, dst).
struct PosetGraph {
  int n = 0;
  std::vector<std::string> nodes;
  std::vector<std::array<int, 3>> edges;  // (src index, dst index, label)
  friend bool operator==(const PosetGraph&, const PosetGraph&) = default;
};

namespace detail {

inline PosetGraph graph_from(int n, const std::vector<Asm>& elems, const std::function<std::vector<std::pair<int, Asm>>(const Asm&)>& out_edges) {
  std::vector<Asm> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<Asm, int> index;
  PosetGraph g;
  g.n = n;
  for (const Asm& a : sorted) {
    index.emplace(a, static_cast<int>(g.nodes.size()));
    g.nodes.push_back(canonical_string(a));
  }
  for (const Asm& a : sorted) {
    const int src = index.at(a);
    for (auto& [label, img] : out_edges(a)) {
      const auto it = index.find(img);
      if (it == index.end()) throw std::logic_error("poset graph: edge target outside node set");
      g.edges.push_back({src, it->second, label});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) { return std::tie(x[0], x[2], x[1]) < std::tie(y[0], y[2], y[1]); });
  return g;
}

}  // namespace detail

// Weak order on all of ASM(n).
inline PosetGraph weak_poset(int n, int bound = 6) {
  return detail::graph_from(n, enumerate_asms(n, bound), detail::strict_images);
}

// Weak order restricted to the interval below `a` (its descent closure).
inline PosetGraph weak_interval_below(const Asm& a) {
  const std::set<Asm> ideal = detail::weak_ideal(a);
  return detail::graph_from(a.n(), std::vector<Asm>(ideal.begin(), ideal.end()), detail::strict_images);
}

// Hasse diagram of the strong order (covers point downward, label 0).
inline PosetGraph strong_hasse(int n, int bound = 6) {
  return detail::graph_from(n, enumerate_asms(n, bound), [](const Asm& a) {
    std::vector<std::pair<int, Asm>> out;
    for (Asm& b : lower_covers(a)) out.emplace_back(0, std::move(b));
    return out;
  });
}

// Weakly maximal elements: those that are not a strict image pi_i(c) of any
// c, decided on the full operator graph (equivalently, on its reachability
// closure: an element is non-maximal iff some strict image chain hits it,
// and the last step of such a chain is itself a strict image).
inline std::vector<Asm> maximal_weak_elements(int n, int bound = 6) {
  const std::vector<Asm> all = enumerate_asms(n, bound);
  std::set<Asm> images;
  for (const Asm& a : all)
    for (auto& [i, img] : detail::strict_images(a)) images.insert(img);
  std::vector<Asm> out;
  for (const Asm& a : all)
    if (!images.count(a)) out.push_back(a);
  return out;
}

// A saturated chain from the identity to `a` is recorded as the word
// (a_1, ..., a_k) with A_{t-1} = pi_{a_t}(A_t), A_0 = identity, A_k = a; the
// word reads identity-first, so a_k is applied to `a` first.  Enumeration is
// depth-first with descent indices ascending, words emitted in that order.
using ChainWord = std::vector<int>;

namespace detail {

template <typename Fn>
bool chains_walk(const Asm& a, std::vector<int>& applied, std::optional<int> max_len, Fn&& emit) {
  const auto imgs = strict_images(a);
  if (imgs.empty()) {
    ChainWord w(applied.rbegin(), applied.rend());
    return emit(std::move(w));
  }
  if (max_len && static_cast<int>(applied.size()) >= *max_len) return true;  // truncated branch
  for (const auto& [i, img] : imgs) {
    applied.push_back(i);
    const bool keep_going = chains_walk(img, applied, max_len, emit);
    applied.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

// All saturated chain words from the identity up to `a`; chains longer than
// `max_len` are pruned when a bound is given.  chains(identity) = {()}.
inline std::vector<ChainWord> chains(const Asm& a, std::optional<int> max_len = std::nullopt) {
  std::vector<ChainWord> out;
  std::vector<int> applied;
  detail::chains_walk(a, applied, max_len, [&](ChainWord w) {
    out.push_back(std::move(w));
    return true;
  });
  return out;
}

// Length of the shortest saturated chain (breadth-first over strict images);
// equals codim(a).
inline int min_chain_length(const Asm& a) {
  std::map<Asm, int> dist{{a, 0}};
  std::deque<Asm> queue{a};
  while (!queue.empty()) {
    const Asm cur = queue.front();
    queue.pop_front();
    const int d = dist.at(cur);
    const auto imgs = detail::strict_images(cur);
    if (imgs.empty()) return d;  // reached the identity
    for (const auto& [i, img] : imgs) {
      if (dist.emplace(img, d + 1).second) queue.push_back(img);
    }
  }
  throw std::logic_error("min_chain_length: descent walk never reached the identity");
}

namespace detail {

inline std::pair<int, int> chain_length_range(const Asm& a, std::map<Asm, std::pair<int, int>>& memo) {
  if (const auto it = memo.find(a); it != memo.end()) return it->second;
  const auto imgs = strict_images(a);
  std::pair<int, int> r{0, 0};
  if (!imgs.empty()) {
    r = {-1, -1};
    for (const auto& [i, img] : imgs) {
      const auto [lo, hi] = chain_length_range(img, memo);
      r.first = r.first < 0 ? lo + 1 : std::min(r.first, lo + 1);
      r.second = std::max(r.second, hi + 1);
    }
  }
  memo.emplace(a, r);
  return r;
}

}  // namespace detail

// True iff every saturated chain from the identity to `a` has the same
// length (min over chains == max over chains).
inline bool all_chains_equal_length(const Asm& a) {
  std::map<Asm, std::pair<int, int>> memo;
  const auto [lo, hi] = detail::chain_length_range(a, memo);
  return lo == hi;
}

// True iff every Bruhat-minimal permutation above `a` has the same length,
// i.e. the ASM variety is equidimensional.
inline bool is_equidimensional(const Asm& a) {
  const auto ws = perm_set(a);
  const int len = coxeter_length(ws.front());
  for (const Permutation& w : ws)
    if (coxeter_length(w) != len) return false;
  return true;
}

// Each chain word (a_1, ..., a_k) must multiply to a reduced product: the
// permutation s_{a_1} ... s_{a_k} has length exactly k and dominates some
// member of perm_set(a) in Bruhat order.
inline bool every_chain_word_is_reduced(const Asm& a) {
  const auto members = perm_set(a);
  for (const ChainWord& word : chains(a)) {
    Permutation p = Permutation::identity(a.n());
    for (int i : word) p = right_times_simple(p, i);
    if (coxeter_length(p) != static_cast<int>(word.size())) return false;
    bool dominates = false;
    for (const Permutation& v : members) {
      if (leq_bruhat(v, p)) {
        dominates = true;
        break;
      }
    }
    if (!dominates) return false;
  }
  return true;
}

// Every element weakly below `a`, in canonical order.
inline std::vector<Asm> weak_ideal(const Asm& a) {
  const std::set<Asm> ideal = detail::weak_ideal(a);
  return std::vector<Asm>(ideal.begin(), ideal.end());
}

}  // namespace asmvar
