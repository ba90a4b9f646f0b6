#pragma once

// Theorem-verification harness.  Each suite replays one statement (or a
// bundle of closely related statements) over an exhaustive universe, or a
// fixed-seed sample where exhaustion is infeasible, and reports every
// counterexample it finds.  Suites are keyed by id; run_suite validates the
// requested universe size against the per-suite feasibility cap, and
// run_all_suites clamps instead so a single nmax can drive the whole set.
//
// Reports carry wall-clock timing for operators' convenience, but rendering
// helpers keep elapsed time out of canonical output so identical invocations
// stay byte-identical.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "asmvar/antichain.hpp"
#include "asmvar/core.hpp"
#include "asmvar/groth.hpp"
#include "asmvar/io.hpp"
#include "asmvar/order.hpp"
#include "asmvar/poly.hpp"
#include "asmvar/weak.hpp"

namespace asmvar {

struct VerifyReport {
  std::string suite;
  std::string universe;
  long long checked = 0;
  std::vector<std::string> failures;  // canonical encodings, sorted, deduplicated
  double elapsed_seconds = 0.0;
  bool passed() const { return failures.empty(); }
};

inline json to_json(const VerifyReport& r) {
  json j;
  j["suite"] = r.suite;
  j["universe"] = r.universe;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  j["pass"] = r.passed();
  return j;
}

// One deterministic line per report; timing deliberately omitted.
inline std::string report_line(const VerifyReport& r) {
  std::string s = (r.passed() ? "pass  " : "FAIL  ") + r.suite;
  s += "  universe=\"" + r.universe + "\"  checked=" + std::to_string(r.checked);
  s += "  failures=" + std::to_string(r.failures.size());
  return s;
}

// Worked examples shared by the verification suites and the test binaries.
namespace examples {

// 4x4 element with Perm = {3412, 4123}: diagram {(1,1),(1,2)}, negative cell
// (2,3), essential cells (1,2) and (2,3), codimension 3.
inline Asm example4() { return parse_asm_rows("0,0,1,0;1,0,-1,1;0,1,0,0;0,0,1,0"); }

// Root of a 10-node weak-order interval; the interval below its transpose
// has 12 nodes, so the two intervals are not anti-isomorphic.
inline Asm interval_root4() { return parse_asm_rows("0,0,1,0;0,1,-1,1;1,0,0,0;0,0,1,0"); }

// Union of components of codimensions 3 and 4: Perm = {2341, 3412}.  Its
// Schubert polynomial forgets the small component entirely.
inline Asm mixed_dim4() { return parse_asm_rows("0,1,0,0;0,0,1,0;1,-1,0,1;0,1,0,0"); }

// Equidimensional element sitting one pi_1-step above mixed_dim4.
inline Asm equidim4() { return parse_asm_rows("0,0,1,0;0,1,0,0;1,-1,0,1;0,1,0,0"); }

// The single non-permutation element of ASM(3): Perm = {231, 312}.
inline Asm nonperm3() { return parse_asm_rows("0,1,0;1,-1,1;0,1,0"); }

// Meet of 2341 and 3124.  pi_2 moves it (to 2134) although pi_2 fixes both
// arguments, so pi_i does not commute with meets.
inline Asm meet_witness4() { return parse_asm_rows("0,1,0,0;1,-1,1,0;0,1,0,0;0,0,0,1"); }

// 8x8 element whose diagram has 17 cells but whose codimension is only 16,
// showing |D(A)| does not bound the codimension from below.
inline Asm deep8() {
  return parse_asm_rows(
      "0,0,0,0,1,0,0,0;"
      "0,0,0,1,0,0,0,0;"
      "0,0,1,0,0,0,0,0;"
      "0,1,0,0,-1,0,0,1;"
      "1,0,0,-1,0,0,1,0;"
      "0,0,0,0,0,1,0,0;"
      "0,0,0,0,1,0,0,0;"
      "0,0,0,1,0,0,0,0");
}

// Strong-order chain 31524 > chain5_mid_a > chain5_mid_b > 31254; pi_3
// collapses all four elements to 31254.
inline Asm chain5_mid_a() { return parse_asm_rows("0,0,1,0,0;1,0,0,0,0;0,0,0,1,0;0,1,0,-1,1;0,0,0,1,0"); }
inline Asm chain5_mid_b() { return parse_asm_rows("0,0,1,0,0;1,0,0,0,0;0,1,-1,1,0;0,0,1,-1,1;0,0,0,1,0"); }

// The nine weak-order-maximal elements of ASM(4).  Each has an essential cell
// in every row 1..3, which is sufficient for maximality.  Beware the similar
// matrix 0,1,0,0;0,0,1,0;1,0,-1,1;0,0,1,0 sometimes listed in place of the
// second entry: it is pi_1 of the third entry (its essential cells {(2,1),
// (3,3)} miss row 1), hence not maximal.
inline std::vector<Asm> maximal4() {
  return {
      parse_asm_rows("0,1,0,0;1,-1,1,0;0,1,-1,1;0,0,1,0"),
      parse_asm_rows("0,0,1,0;1,0,-1,1;0,0,1,0;0,1,0,0"),
      parse_asm_rows("0,0,1,0;0,1,0,0;1,0,-1,1;0,0,1,0"),
      parse_asm_rows("0,0,1,0;0,1,0,0;1,-1,0,1;0,1,0,0"),
      parse_asm_rows("0,1,0,0;1,-1,0,1;0,0,1,0;0,1,0,0"),
      parse_asm_rows("0,0,1,0;0,1,-1,1;1,-1,1,0;0,1,0,0"),
      parse_asm_rows("0,0,0,1;0,1,0,0;1,-1,1,0;0,1,0,0"),
      parse_asm_rows("0,0,1,0;0,1,-1,1;0,0,1,0;1,0,0,0"),
      parse_asm_rows("0,0,0,1;0,0,1,0;0,1,0,0;1,0,0,0"),
  };
}

// The 10 nodes of the weak interval below interval_root4, root first.
inline std::vector<Asm> interval_nodes4() {
  return {
      interval_root4(),                                       // 0: the root
      perm_to_asm(parse_perm("2413")),                        // 1
      parse_asm_rows("0,0,1,0;1,0,0,0;0,1,-1,1;0,0,1,0"),     // 2
      parse_asm_rows("1,0,0,0;0,0,1,0;0,1,-1,1;0,0,1,0"),     // 3
      perm_to_asm(parse_perm("3124")),                        // 4
      perm_to_asm(parse_perm("1243")),                        // 5
      perm_to_asm(parse_perm("1324")),                        // 6
      perm_to_asm(parse_perm("1234")),                        // 7
      perm_to_asm(parse_perm("2143")),                        // 8
      perm_to_asm(parse_perm("2134")),                        // 9
  };
}

// The 13 labeled covers of that interval: (src, dst, i) with pi_i(src) = dst,
// indices into interval_nodes4().
inline std::vector<std::array<int, 3>> interval_edges4() {
  return {{0, 1, 1}, {0, 2, 2}, {1, 8, 2}, {2, 3, 1}, {2, 4, 3}, {3, 5, 2}, {3, 6, 3},
          {4, 6, 1}, {5, 7, 3}, {6, 7, 2}, {8, 9, 3}, {8, 5, 1}, {9, 7, 1}};
}

inline Antichain antichain_of(std::initializer_list<const char*> ws) {
  std::vector<Permutation> perms;
  perms.reserve(ws.size());
  for (const char* w : ws) perms.push_back(parse_perm(w));
  return Antichain::of(std::move(perms));
}

// Strong-order covers on anti(3), upper element first.
inline std::vector<std::pair<Antichain, Antichain>> anti3_strong_covers() {
  const auto ac = [](std::initializer_list<const char*> ws) { return antichain_of(ws); };
  return {
      {ac({"321"}), ac({"231"})},
      {ac({"321"}), ac({"312"})},
      {ac({"231"}), ac({"231", "312"})},
      {ac({"312"}), ac({"231", "312"})},
      {ac({"231", "312"}), ac({"213"})},
      {ac({"231", "312"}), ac({"132"})},
      {ac({"213"}), ac({"213", "132"})},
      {ac({"132"}), ac({"213", "132"})},
      {ac({"213", "132"}), ac({"123"})},
  };
}

// Weak-order operator edges on anti(3): (src, pi_i(src), i).
inline std::vector<std::tuple<Antichain, Antichain, int>> anti3_weak_edges() {
  const auto ac = [](std::initializer_list<const char*> ws) { return antichain_of(ws); };
  return {
      {ac({"321"}), ac({"231"}), 1},
      {ac({"321"}), ac({"312"}), 2},
      {ac({"231"}), ac({"213"}), 2},
      {ac({"231", "312"}), ac({"132"}), 1},
      {ac({"231", "312"}), ac({"213"}), 2},
      {ac({"312"}), ac({"132"}), 1},
      {ac({"213"}), ac({"123"}), 1},
      {ac({"132"}), ac({"123"}), 2},
      {ac({"213", "132"}), ac({"123"}), 1},
      {ac({"213", "132"}), ac({"123"}), 2},
  };
}

}  // namespace examples

namespace detail {

class SuiteRun {
 public:
  void universe(std::string u) { universe_ = std::move(u); }
  const std::string& universe() const { return universe_; }
  long long checked() const { return checked_; }

  template <class Tag>
  void check(bool ok, Tag&& tag) {
    ++checked_;
    if (!ok) {
      if constexpr (std::is_invocable_v<Tag&>) failures_.push_back(std::string(tag()));
      else failures_.push_back(std::string(std::forward<Tag>(tag)));
    }
  }

  // Sorted, deduplicated counterexample list.
  std::vector<std::string> take_failures() {
    std::sort(failures_.begin(), failures_.end());
    failures_.erase(std::unique(failures_.begin(), failures_.end()), failures_.end());
    return std::move(failures_);
  }

 private:
  std::string universe_;
  long long checked_ = 0;
  std::vector<std::string> failures_;
};

template <class Fn>
void guarded(SuiteRun& run, const std::string& tag, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    run.check(false, tag + ": threw: " + e.what());
  }
}

inline std::vector<Permutation> all_perms(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{std::vector<int>(word)});
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

inline Permutation pi_perm(const Permutation& w, int i) {
  return w(i) > w(i + 1) ? right_times_simple(w, i) : w;
}

// All reduced words (a_1, ..., a_k) with s_{a_1} ... s_{a_k} = w.
inline std::vector<ChainWord> reduced_words(const Permutation& w) {
  const auto d = descents(w);
  if (d.empty()) return {ChainWord{}};
  std::vector<ChainWord> out;
  for (int i : d) {
    for (ChainWord u : reduced_words(right_times_simple(w, i))) {
      u.push_back(i);
      out.push_back(std::move(u));
    }
  }
  return out;
}

// mt19937 output is fully specified, so rng() % m is reproducible everywhere;
// the slight modulo bias is irrelevant for sampling test cases.
inline size_t pick(std::mt19937& rng, size_t m) { return static_cast<size_t>(rng()) % m; }

inline std::vector<size_t> sample_indices(size_t m, size_t want, uint32_t seed) {
  std::vector<size_t> idx(m);
  std::iota(idx.begin(), idx.end(), size_t{0});
  if (m <= want) return idx;
  std::mt19937 rng(seed);
  for (size_t t = 0; t < want; ++t) std::swap(idx[t], idx[t + pick(rng, m - t)]);
  idx.resize(want);
  return idx;
}

// |ASM(n)| = prod_{k=0}^{n-1} (3k+1)! / (n+k)!.
inline BigInt asm_count_formula(int n) {
  const auto fact = [](int m) {
    BigInt f = 1;
    for (int t = 2; t <= m; ++t) f *= t;
    return f;
  };
  BigInt num = 1, den = 1;
  for (int k = 0; k < n; ++k) {
    num *= fact(3 * k + 1);
    den *= fact(n + k);
  }
  if (num % den != 0) throw std::logic_error("asm_count_formula: division is not exact");
  return num / den;
}

// Grothendieck polynomial recomputed along the largest-descent reduced word
// of w^{-1} w0, bypassing the cache, for reduced-word-independence checks.
inline MultiPoly groth_perm_by_largest_descent(const Permutation& w) {
  const int n = w.n();
  MultiPoly p = groth_top(n);
  Permutation u = compose(w.inverse(), Permutation::longest(n));
  Permutation v = Permutation::longest(n);
  for (;;) {
    const auto d = descents(u);
    if (d.empty()) break;
    const int i = d.back();
    u = right_times_simple(u, i);
    v = right_times_simple(v, i);
    p = k_divided_difference(p, i);
  }
  if (!(v == w)) throw std::logic_error("groth_perm_by_largest_descent: walk missed the target");
  return p;
}

// Build the expected PosetGraph from explicit elements and labeled edges,
// mirroring the canonical node order (sorted values) and edge order.
template <class Elem>
PosetGraph expected_graph(int n, std::vector<Elem> elems, std::vector<std::tuple<Elem, Elem, int>> edges) {
  std::sort(elems.begin(), elems.end());
  std::map<Elem, int> index;
  PosetGraph g;
  g.n = n;
  for (const Elem& e : elems) {
    index.emplace(e, static_cast<int>(g.nodes.size()));
    g.nodes.push_back(canonical_string(e));
  }
  for (const auto& [src, dst, label] : edges) g.edges.push_back({index.at(src), index.at(dst), label});
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) { return std::tie(x[0], x[2], x[1]) < std::tie(y[0], y[2], y[1]); });
  return g;
}

inline std::string itag(const Asm& a, int i) { return canonical_string(a) + " i=" + std::to_string(i); }
inline std::string itag(const Antichain& a, int i) { return canonical_string(a) + " i=" + std::to_string(i); }

// ---------------------------------------------------------------------------
// Suite bodies.  Each takes the effective universe size n (already validated
// against the suite cap), the accumulator, and a polynomial cache.
// ---------------------------------------------------------------------------

inline void suite_enumeration(int n, SuiteRun& run, PolyCache&) {
  run.universe("|ASM(k)| for k in [1.." + std::to_string(n) + "] vs product formula");
  for (int k = 1; k <= n; ++k) {
    const auto all = enumerate_asms(k);
    run.check(BigInt(all.size()) == asm_count_formula(k), "count n=" + std::to_string(k) + ": got " + std::to_string(all.size()));
    run.check(std::adjacent_find(all.begin(), all.end()) == all.end(), "duplicates at n=" + std::to_string(k));
  }
}

inline void suite_core_roundtrip(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(1.." + std::to_string(n) + ")" + (n >= 4 ? std::string(", diagram sizes on S_4") : std::string()));
  for (int k = 1; k <= n; ++k) {
    for (const Asm& a : enumerate_asms(k)) {
      guarded(run, canonical_string(a), [&] {
        bool ok = asm_from_rank(rank_matrix(a)) == a;

        const auto inv = inversions(a);
        const auto neg = negatives(a);
        const auto dia = rothe_diagram(a);
        std::vector<Cell> merged = neg;
        merged.insert(merged.end(), dia.begin(), dia.end());
        std::sort(merged.begin(), merged.end());
        ok = ok && merged == inv;
        std::vector<Cell> overlap;
        std::set_intersection(neg.begin(), neg.end(), dia.begin(), dia.end(), std::back_inserter(overlap));
        ok = ok && overlap.empty();

        const Asm t = transpose(a);
        ok = ok && transpose(t) == a;
        std::vector<Cell> mirrored;
        for (const Cell& c : inv) mirrored.push_back({c.col, c.row});
        std::sort(mirrored.begin(), mirrored.end());
        ok = ok && mirrored == inversions(t);

        essential_set(a);  // internal cross-assert between characterizations
        run.check(ok, canonical_string(a));
      });
    }
  }
  if (n >= 4) {
    for (const Permutation& w : all_perms(4))
      run.check(static_cast<int>(rothe_diagram(perm_to_asm(w)).size()) == coxeter_length(w), "diagram size of " + canonical_string(w));
  }
}

inline void suite_lattice(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ") pairs and triples");
  const std::vector<Asm> all = enumerate_asms(n);
  const int m = static_cast<int>(all.size());
  std::map<Asm, int> index;
  for (int p = 0; p < m; ++p) index.emplace(all[static_cast<size_t>(p)], p);

  std::vector<std::vector<char>> le(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) le[static_cast<size_t>(p)][static_cast<size_t>(q)] = leq_strong(all[static_cast<size_t>(p)], all[static_cast<size_t>(q)]);

  for (int p = 0; p < m; ++p) run.check(le[static_cast<size_t>(p)][static_cast<size_t>(p)], "reflexivity " + canonical_string(all[static_cast<size_t>(p)]));
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      run.check(!(le[static_cast<size_t>(p)][static_cast<size_t>(q)] && le[static_cast<size_t>(q)][static_cast<size_t>(p)]),
                "antisymmetry " + canonical_string(all[static_cast<size_t>(p)]) + " / " + canonical_string(all[static_cast<size_t>(q)]));

  std::vector<std::vector<int>> joins(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), -1));
  std::vector<std::vector<int>> meets = joins;
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      joins[static_cast<size_t>(p)][static_cast<size_t>(q)] = index.at(join(all[static_cast<size_t>(p)], all[static_cast<size_t>(q)]));
      meets[static_cast<size_t>(p)][static_cast<size_t>(q)] = index.at(meet(all[static_cast<size_t>(p)], all[static_cast<size_t>(q)]));
    }
  }

  for (int p = 0; p < m; ++p) {
    run.check(joins[static_cast<size_t>(p)][static_cast<size_t>(p)] == p && meets[static_cast<size_t>(p)][static_cast<size_t>(p)] == p,
              "idempotence " + canonical_string(all[static_cast<size_t>(p)]));
  }
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      const int j = joins[static_cast<size_t>(p)][static_cast<size_t>(q)];
      const int t = meets[static_cast<size_t>(p)][static_cast<size_t>(q)];
      bool ok = j == joins[static_cast<size_t>(q)][static_cast<size_t>(p)] && t == meets[static_cast<size_t>(q)][static_cast<size_t>(p)];
      // absorption
      ok = ok && joins[static_cast<size_t>(p)][static_cast<size_t>(t)] == p && meets[static_cast<size_t>(p)][static_cast<size_t>(j)] == p;
      // least upper / greatest lower bound
      ok = ok && le[static_cast<size_t>(p)][static_cast<size_t>(j)] && le[static_cast<size_t>(q)][static_cast<size_t>(j)];
      ok = ok && le[static_cast<size_t>(t)][static_cast<size_t>(p)] && le[static_cast<size_t>(t)][static_cast<size_t>(q)];
      for (int c = 0; c < m; ++c) {
        if (le[static_cast<size_t>(p)][static_cast<size_t>(c)] && le[static_cast<size_t>(q)][static_cast<size_t>(c)]) ok = ok && le[static_cast<size_t>(j)][static_cast<size_t>(c)];
        if (le[static_cast<size_t>(c)][static_cast<size_t>(p)] && le[static_cast<size_t>(c)][static_cast<size_t>(q)]) ok = ok && le[static_cast<size_t>(c)][static_cast<size_t>(t)];
      }
      run.check(ok, "pair laws " + canonical_string(all[static_cast<size_t>(p)]) + " / " + canonical_string(all[static_cast<size_t>(q)]));
    }
  }

  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      for (int r = 0; r < m; ++r) {
        bool ok = !(le[static_cast<size_t>(p)][static_cast<size_t>(q)] && le[static_cast<size_t>(q)][static_cast<size_t>(r)]) || le[static_cast<size_t>(p)][static_cast<size_t>(r)];
        ok = ok && joins[static_cast<size_t>(joins[static_cast<size_t>(p)][static_cast<size_t>(q)])][static_cast<size_t>(r)] ==
                       joins[static_cast<size_t>(p)][static_cast<size_t>(joins[static_cast<size_t>(q)][static_cast<size_t>(r)])];
        ok = ok && meets[static_cast<size_t>(meets[static_cast<size_t>(p)][static_cast<size_t>(q)])][static_cast<size_t>(r)] ==
                       meets[static_cast<size_t>(p)][static_cast<size_t>(meets[static_cast<size_t>(q)][static_cast<size_t>(r)])];
        run.check(ok, [&] {
          return "triple laws " + canonical_string(all[static_cast<size_t>(p)]) + " / " + canonical_string(all[static_cast<size_t>(q)]) + " / " +
                 canonical_string(all[static_cast<size_t>(r)]);
        });
      }
    }
  }
}

inline void suite_bigrassmannian(int n, SuiteRun& run, PolyCache&) {
  run.universe("bigrassmannian triples for n=" + std::to_string(n) + "; ASM(" + std::to_string(n) + ") pairs");
  const std::vector<Asm> all = enumerate_asms(n);

  // join of the essential-cell decomposition restores the element
  for (const Asm& a : all) {
    guarded(run, "decomposition " + canonical_string(a), [&] {
      const auto triples = bigrass_decomposition(a);
      Asm restored = perm_to_asm(Permutation::identity(n));
      if (!triples.empty()) {
        std::vector<Asm> parts;
        for (const BigrassTriple& t : triples) parts.push_back(perm_to_asm(bigrassmannian(t)));
        restored = join(parts);
      }
      run.check(restored == a, "decomposition " + canonical_string(a));
    });
  }

  // each valid triple: single essential cell, rank there, and the meet law
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      for (int r = 0; r < std::min(i, j) && i + j - r <= n; ++r) {
        const BigrassTriple t{i, j, r, n};
        guarded(run, "triple " + cell_str(i, j) + " r=" + std::to_string(r), [&] {
          const Asm u = perm_to_asm(bigrassmannian(t));
          const RankMatrix ru = rank_matrix(u);
          bool ok = essential_set(u) == std::vector<Cell>{{i, j}} && ru.at(i, j) == r;
          std::vector<Asm> above;
          for (const Asm& a : all)
            if (rank_matrix(a).at(i, j) <= r) above.push_back(a);
          for (const Asm& a : above) ok = ok && leq_strong(u, a);
          ok = ok && meet(above) == u;
          run.check(ok, "triple " + cell_str(i, j) + " r=" + std::to_string(r));
        });
      }
    }
  }

  // essential-cell comparison criterion: A <= B iff rk_B <= rk_A on ess(A)
  for (const Asm& a : all) {
    const RankMatrix ra = rank_matrix(a);
    const auto ess = essential_set(a);
    for (const Asm& b : all) {
      const RankMatrix rb = rank_matrix(b);
      bool dominated = true;
      for (const Cell& c : ess) dominated = dominated && rb.at(c.row, c.col) <= ra.at(c.row, c.col);
      run.check(dominated == leq_strong(a, b), [&] { return "criterion " + canonical_string(a) + " vs " + canonical_string(b); });
    }
  }
}

inline void suite_perm_set(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ") x S_" + std::to_string(n));
  const auto perms = all_perms(n);
  for (const Asm& a : enumerate_asms(n)) {
    guarded(run, canonical_string(a), [&] {
      const auto ws = perm_set(a);
      bool ok = !ws.empty() && std::is_sorted(ws.begin(), ws.end());
      for (const Permutation& w : ws) ok = ok && leq_strong(a, perm_to_asm(w));
      for (size_t p = 0; p < ws.size(); ++p)
        for (size_t q = p + 1; q < ws.size(); ++q) ok = ok && !leq_bruhat(ws[p], ws[q]) && !leq_bruhat(ws[q], ws[p]);

      // brute minimal elements of {w : w >= a}
      std::vector<Permutation> above;
      for (const Permutation& w : perms)
        if (leq_strong(a, perm_to_asm(w))) above.push_back(w);
      ok = ok && normalize(above).perms() == ws;

      int shortest = coxeter_length(ws.front());
      for (const Permutation& w : ws) shortest = std::min(shortest, coxeter_length(w));
      ok = ok && codim(a) == shortest && codim(a) == codim(transpose(a));
      run.check(ok, canonical_string(a));
    });
  }
  for (const Permutation& w : perms)
    run.check(perm_set(perm_to_asm(w)) == std::vector<Permutation>{w}, "perm_set of " + canonical_string(w));
}

inline void suite_covers(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ") pairs");
  const std::vector<Asm> all = enumerate_asms(n);
  const size_t m = all.size();
  std::vector<std::vector<char>> lt(m, std::vector<char>(m, 0));
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q) lt[p][q] = p != q && leq_strong(all[p], all[q]);

  long long edge_total = 0;
  for (size_t p = 0; p < m; ++p) {
    std::vector<Asm> below, above;
    for (size_t q = 0; q < m; ++q) {
      if (lt[q][p]) {
        bool middle = false;
        for (size_t t = 0; t < m && !middle; ++t) middle = lt[q][t] && lt[t][p];
        if (!middle) below.push_back(all[q]);
      }
      if (lt[p][q]) {
        bool middle = false;
        for (size_t t = 0; t < m && !middle; ++t) middle = lt[p][t] && lt[t][q];
        if (!middle) above.push_back(all[q]);
      }
    }
    edge_total += static_cast<long long>(below.size());
    run.check(lower_covers(all[p]) == below, "lower covers of " + canonical_string(all[p]));
    run.check(upper_covers(all[p]) == above, "upper covers of " + canonical_string(all[p]));
  }
  run.check(static_cast<long long>(strong_hasse(n).edges.size()) == edge_total, "hasse edge count");
}

inline void suite_pi_oracle(int n, SuiteRun& run, PolyCache&) {
  std::string uni = "ASM(2.." + std::to_string(std::min(n, 4)) + ") x all i, exhaustive";
  for (int k = 2; k <= std::min(n, 4); ++k)
    for (const Asm& a : enumerate_asms(k))
      for (int i = 1; i < k; ++i) run.check(pi(a, i) == pi_brute(a, i), [&] { return itag(a, i); });
  if (n >= 5) {
    uni += "; 500 sampled from ASM(5)";
    const std::vector<Asm> pool = enumerate_asms(5);
    std::mt19937 rng(744851u);
    for (int t = 0; t < 500; ++t) {
      const Asm& a = pool[pick(rng, pool.size())];
      const int i = 1 + static_cast<int>(pick(rng, 4));
      run.check(pi(a, i) == pi_brute(a, i), [&] { return itag(a, i); });
    }
  }
  run.universe(uni);
}

inline void suite_pi_operator_algebra(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ") x operator relations");
  for (const Asm& a : enumerate_asms(n)) {
    for (int i = 1; i < n; ++i) run.check(pi(pi(a, i), i) == pi(a, i), [&] { return "idempotence " + itag(a, i); });
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        run.check(pi(pi(a, i), j) == pi(pi(a, j), i), [&] { return "commutation " + itag(a, i) + "," + std::to_string(j); });
    for (int i = 1; i + 1 < n; ++i)
      run.check(pi(pi(pi(a, i), i + 1), i) == pi(pi(pi(a, i + 1), i), i + 1), [&] { return "braid " + itag(a, i); });
  }
}

inline void suite_pi_order_preserving(int n, SuiteRun& run, PolyCache&) {
  run.universe("comparable pairs in ASM(" + std::to_string(n) + ") x i in [" + std::to_string(n - 1) + "]");
  const std::vector<Asm> all = enumerate_asms(n);
  for (const Asm& a : all) {
    for (const Asm& b : all) {
      if (!leq_strong(a, b)) continue;
      for (int i = 1; i < n; ++i)
        run.check(leq_strong(pi(a, i), pi(b, i)), [&] { return canonical_string(a) + " <= " + canonical_string(b) + " i=" + std::to_string(i); });
    }
  }
}

inline void suite_join_compat(int n, SuiteRun& run, PolyCache&) {
  std::string uni = "ASM(3) pairs x i, exhaustive";
  const auto compatible = [&](const Asm& a, const Asm& b, int i) { return pi(join(a, b), i) == join(pi(a, i), pi(b, i)); };
  const std::vector<Asm> small = enumerate_asms(std::min(n, 3));
  for (const Asm& a : small)
    for (const Asm& b : small)
      for (int i = 1; i < std::min(n, 3); ++i)
        run.check(compatible(a, b, i), [&] { return canonical_string(a) + " v " + canonical_string(b) + " i=" + std::to_string(i); });
  if (n >= 4) {
    uni += "; 2000 sampled pairs from ASM(4) x i";
    const std::vector<Asm> pool = enumerate_asms(4);
    std::mt19937 rng(915237u);
    for (int t = 0; t < 2000; ++t) {
      const Asm& a = pool[pick(rng, pool.size())];
      const Asm& b = pool[pick(rng, pool.size())];
      for (int i = 1; i < 4; ++i)
        run.check(compatible(a, b, i), [&] { return canonical_string(a) + " v " + canonical_string(b) + " i=" + std::to_string(i); });
    }
  }
  run.universe(uni);
}

inline void suite_intersectoperator(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ") x i in [" + std::to_string(n - 1) + "]");
  for (const Asm& a : enumerate_asms(n)) {
    const auto ws = perm_set(a);
    for (int i = 1; i < n; ++i) {
      guarded(run, itag(a, i), [&] {
        const auto lhs = perm_set(pi(a, i));
        std::vector<Permutation> imgs;
        for (const Permutation& w : ws) imgs.push_back(pi_perm(w, i));
        bool ok = normalize(imgs).perms() == lhs;
        // members with a descent at i stay in the perm set of the image
        for (const Permutation& w : ws)
          if (w(i) > w(i + 1)) ok = ok && std::binary_search(lhs.begin(), lhs.end(), pi_perm(w, i));
        run.check(ok, itag(a, i));
      });
    }
  }
}

inline void suite_stepdown_codim(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ") x i in [" + std::to_string(n - 1) + "]");
  for (const Asm& a : enumerate_asms(n)) {
    const auto ws = perm_set(a);
    const int c = codim(a);
    for (int i = 1; i < n; ++i) {
      guarded(run, itag(a, i), [&] {
        const Asm b = pi(a, i);
        const int d = codim(b);
        bool min_member_descends = false;
        for (const Permutation& w : ws) min_member_descends = min_member_descends || (coxeter_length(w) == c && w(i) > w(i + 1));
        bool ok = (c - d == 0 || c - d == 1) && ((c - d == 1) == min_member_descends);
        if (c - d == 1) {
          // min-length members of Perm(pi_i(A)) are exactly the w s_i above
          std::vector<Permutation> expect;
          for (const Permutation& w : ws)
            if (coxeter_length(w) == c && w(i) > w(i + 1)) expect.push_back(right_times_simple(w, i));
          std::sort(expect.begin(), expect.end());
          std::vector<Permutation> got;
          for (const Permutation& u : perm_set(b))
            if (coxeter_length(u) == d) got.push_back(u);
          ok = ok && got == expect;
        }
        run.check(ok, itag(a, i));
      });
    }
  }
}

inline void suite_descent_transfer(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ")");
  for (const Asm& a : enumerate_asms(n)) {
    guarded(run, canonical_string(a), [&] {
      std::set<int> transferred;
      for (const Permutation& w : perm_set(a))
        for (int i : descents(w)) transferred.insert(i);
      const auto d = descents(a);
      run.check(std::vector<int>(transferred.begin(), transferred.end()) == d, canonical_string(a));
    });
  }
}

inline void suite_chains_codim(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ")");
  for (const Asm& a : enumerate_asms(n)) run.check(min_chain_length(a) == codim(a), [&] { return canonical_string(a); });
}

inline void suite_chains_equal_length(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ")");
  for (const Asm& a : enumerate_asms(n)) {
    guarded(run, canonical_string(a), [&] {
      bool all_equidim = true;
      for (const Asm& b : asmvar::weak_ideal(a)) all_equidim = all_equidim && is_equidimensional(b);
      run.check(all_chains_equal_length(a) == all_equidim, canonical_string(a));
    });
  }
}

inline void suite_chains_reduced(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ") and reduced words of their perm-set members");
  for (const Asm& a : enumerate_asms(n)) {
    guarded(run, canonical_string(a), [&] {
      run.check(every_chain_word_is_reduced(a), "chain words of " + canonical_string(a));
      const auto cs = chains(a);
      const std::set<ChainWord> chain_set(cs.begin(), cs.end());
      for (const Permutation& w : perm_set(a)) {
        bool all_in = true;
        for (const ChainWord& word : reduced_words(w)) all_in = all_in && chain_set.count(word) > 0;
        run.check(all_in, "reduced words of " + canonical_string(w) + " below " + canonical_string(a));
      }
    });
  }
}

inline void suite_max_weak(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ")");
  const std::vector<Asm> all = enumerate_asms(n);
  const std::vector<Asm> maximal = maximal_weak_elements(n);
  const std::set<Asm> max_set(maximal.begin(), maximal.end());
  for (const Asm& a : all) {
    guarded(run, canonical_string(a), [&] {
      // independent reachability angle: maximal iff nothing else sits above
      bool below_something = false;
      for (const Asm& b : all) below_something = below_something || (!(b == a) && is_weak_leq(a, b));
      bool ok = (max_set.count(a) > 0) == !below_something;
      // essential cell in every row 1..n-1 forces maximality
      std::set<int> rows;
      for (const Cell& c : essential_set(a)) rows.insert(c.row);
      if (static_cast<int>(rows.size()) == n - 1) ok = ok && max_set.count(a) > 0;
      run.check(ok, canonical_string(a));
    });
  }
}

inline void suite_operator_algebra(int n, SuiteRun& run, PolyCache&) {
  const int b = std::max(n, 2);
  run.universe("random polynomials, block size " + std::to_string(b) + ", 1000 cases (fixed seed)");
  std::mt19937 rng(271828u);
  const auto random_poly = [&] {
    MultiPoly f = MultiPoly::zero(b);
    const int terms = 1 + static_cast<int>(pick(rng, 6));
    for (int t = 0; t < terms; ++t) {
      std::vector<int> e(static_cast<size_t>(2 * b), 0);
      for (int v = 0; v < b; ++v) e[static_cast<size_t>(v)] = static_cast<int>(pick(rng, 4));
      for (int v = 0; v < b; ++v) e[static_cast<size_t>(b + v)] = static_cast<int>(pick(rng, 3));
      const int c = 1 + static_cast<int>(pick(rng, 9));
      f.add_term(e, pick(rng, 2) ? BigInt(c) : BigInt(-c));
    }
    return f;
  };
  for (int t = 0; t < 1000; ++t) {
    const MultiPoly f = random_poly();
    const std::string tag = "case " + std::to_string(t);
    guarded(run, tag, [&] {
      const MultiPoly zero = MultiPoly::zero(b);
      for (int i = 1; i < b; ++i) {
        run.check(divided_difference(divided_difference(f, i), i) == zero, tag + " dd^2 i=" + std::to_string(i));
        const MultiPoly k = k_divided_difference(f, i);
        run.check(k_divided_difference(k, i) == k, tag + " pi^2 i=" + std::to_string(i));
        const MultiPoly sym = f + swap_x(f, i);
        run.check(divided_difference(sym, i) == zero, tag + " symmetric kills i=" + std::to_string(i));
        if (divided_difference(f, i) == zero) run.check(swap_x(f, i) == f, tag + " kernel is symmetric i=" + std::to_string(i));
      }
      for (int i = 1; i + 1 < b; ++i) {
        run.check(divided_difference(divided_difference(divided_difference(f, i), i + 1), i) ==
                      divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1),
                  tag + " dd braid i=" + std::to_string(i));
        run.check(k_divided_difference(k_divided_difference(k_divided_difference(f, i), i + 1), i) ==
                      k_divided_difference(k_divided_difference(k_divided_difference(f, i + 1), i), i + 1),
                  tag + " pi braid i=" + std::to_string(i));
      }
      for (int i = 1; i < b; ++i) {
        for (int j = i + 2; j < b; ++j) {
          run.check(divided_difference(divided_difference(f, i), j) == divided_difference(divided_difference(f, j), i),
                    tag + " dd commute " + std::to_string(i) + "," + std::to_string(j));
          run.check(k_divided_difference(k_divided_difference(f, i), j) == k_divided_difference(k_divided_difference(f, j), i),
                    tag + " pi commute " + std::to_string(i) + "," + std::to_string(j));
        }
      }
    });
  }
}

inline void suite_ddo(int n, SuiteRun& run, PolyCache& cache) {
  run.universe("ASM(" + std::to_string(n) + ") x i in [" + std::to_string(n - 1) + "]");
  for (const Asm& a : enumerate_asms(n))
    for (int i = 1; i < n; ++i)
      guarded(run, itag(a, i), [&] { run.check(check_ddo(a, i, cache), itag(a, i)); });
}

inline void suite_schubert_delta(int n, SuiteRun& run, PolyCache& cache) {
  run.universe("ASM(" + std::to_string(n) + ") x i in [" + std::to_string(n - 1) + "]");
  for (const Asm& a : enumerate_asms(n))
    for (int i = 1; i < n; ++i)
      guarded(run, itag(a, i), [&] { run.check(check_schubert_delta(a, i, cache), itag(a, i)); });
}

inline void suite_symmetry(int n, SuiteRun& run, PolyCache& cache) {
  run.universe("ASM(" + std::to_string(n) + ") x i in [" + std::to_string(n - 1) + "]");
  for (const Asm& a : enumerate_asms(n))
    for (int i = 1; i < n; ++i)
      guarded(run, itag(a, i), [&] { run.check(check_symmetry(a, i, cache), itag(a, i)); });
}

inline void suite_derivatives(int n, SuiteRun& run, PolyCache& cache) {
  run.universe("ASM(" + std::to_string(n) + ")");
  for (const Asm& a : enumerate_asms(n))
    guarded(run, canonical_string(a), [&] { run.check(check_derivative(a, cache), canonical_string(a)); });
}

inline void suite_distinctness(int n, SuiteRun& run, PolyCache& cache) {
  const std::vector<Asm> all = enumerate_asms(n);
  run.universe("ASM(" + std::to_string(n) + ") pairs (" + std::to_string(all.size()) + " polynomials)");
  std::vector<std::string> texts;
  texts.reserve(all.size());
  for (const Asm& a : all) texts.push_back(poly_to_text(groth_asm_single(a, cache)));
  for (size_t p = 0; p < all.size(); ++p)
    for (size_t q = p + 1; q < all.size(); ++q)
      run.check(texts[p] != texts[q], [&] { return "collision " + canonical_string(all[p]) + " / " + canonical_string(all[q]); });
}

inline void suite_groth_consistency(int n, SuiteRun& run, PolyCache& cache) {
  run.universe("ASM(" + std::to_string(n) + ") and S_" + std::to_string(n));
  for (const Asm& a : enumerate_asms(n)) {
    guarded(run, canonical_string(a), [&] {
      run.check(lowest_degree_part(groth_asm_single(a, cache)) == schub_asm_single(a, cache), "lowest part " + canonical_string(a));
      if (!asm_to_perm(a)) {
        const auto ws = perm_set(a);
        bool ascends = true;
        for (size_t mask = 1; mask < (size_t{1} << ws.size()); ++mask) {
          std::vector<Asm> part;
          for (size_t t = 0; t < ws.size(); ++t)
            if (mask & (size_t{1} << t)) part.push_back(perm_to_asm(ws[t]));
          const Asm j = join(part);
          ascends = ascends && !(j == a) && leq_strong(a, j);
        }
        run.check(ascends, "joins ascend " + canonical_string(a));
      }
    });
  }
  for (const Permutation& w : all_perms(n)) {
    guarded(run, canonical_string(w), [&] {
      const MultiPoly g = groth_perm(w, cache);
      run.check(lowest_degree_part(negate_y(g)) == schub_perm(w, cache), "lowest part after y-negation " + canonical_string(w));
      run.check(substitute_x_all_t(g) == substitute_x_all_t(groth_perm(w.inverse(), cache)), "untwisted coordinates " + canonical_string(w));
      run.check(groth_perm_by_largest_descent(w) == g, "reduced word independence " + canonical_string(w));
    });
  }
}

inline void suite_anti_operator_algebra(int n, SuiteRun& run, PolyCache&) {
  run.universe("anti(" + std::to_string(n) + ") x operator relations");
  for (const Antichain& a : enumerate_antichains(n)) {
    for (int i = 1; i < n; ++i) run.check(pi_anti(pi_anti(a, i), i) == pi_anti(a, i), [&] { return "idempotence " + itag(a, i); });
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        run.check(pi_anti(pi_anti(a, i), j) == pi_anti(pi_anti(a, j), i), [&] { return "commutation " + itag(a, i) + "," + std::to_string(j); });
    for (int i = 1; i + 1 < n; ++i)
      run.check(pi_anti(pi_anti(pi_anti(a, i), i + 1), i) == pi_anti(pi_anti(pi_anti(a, i + 1), i), i + 1), [&] { return "braid " + itag(a, i); });
  }
}

inline void suite_anti_order_preserving(int n, SuiteRun& run, PolyCache&) {
  std::string uni = "comparable pairs in anti(3) x i";
  const std::vector<Antichain> small = enumerate_antichains(std::min(n, 3));
  for (const Antichain& a : small) {
    for (const Antichain& b : small) {
      if (!leq_strong_anti(a, b)) continue;
      for (int i = 1; i < std::min(n, 3); ++i)
        run.check(leq_strong_anti(pi_anti(a, i), pi_anti(b, i)), [&] { return canonical_string(a) + " <= " + canonical_string(b) + " i=" + std::to_string(i); });
    }
  }
  if (n >= 4) {
    uni += "; 1000 sampled pairs from anti(4) x i";
    const std::vector<Antichain> pool = enumerate_antichains(4);
    std::mt19937 rng(582910u);
    for (int t = 0; t < 1000; ++t) {
      const Antichain& a = pool[pick(rng, pool.size())];
      const Antichain& b = pool[pick(rng, pool.size())];
      if (!leq_strong_anti(a, b)) continue;
      for (int i = 1; i < 4; ++i)
        run.check(leq_strong_anti(pi_anti(a, i), pi_anti(b, i)), [&] { return canonical_string(a) + " <= " + canonical_string(b) + " i=" + std::to_string(i); });
    }
  }
  run.universe(uni);
}

inline void suite_anti_pi_commutes(int n, SuiteRun& run, PolyCache&) {
  const int k = std::min(n, 3);
  run.universe("anti(" + std::to_string(k) + ") pairs x i");
  const std::vector<Antichain> all = enumerate_antichains(k);
  for (const Antichain& a : all) {
    for (const Antichain& b : all) {
      for (int i = 1; i < k; ++i) {
        guarded(run, canonical_string(a) + " + " + canonical_string(b) + " i=" + std::to_string(i), [&] {
          const Antichain lhs = pi_anti(sum_of_antichain_ideals({a, b}), i);
          const Antichain rhs = sum_of_antichain_ideals({pi_anti(a, i), pi_anti(b, i)});
          run.check(lhs == rhs, canonical_string(a) + " + " + canonical_string(b) + " i=" + std::to_string(i));
        });
      }
    }
  }
}

inline void suite_anti_restriction(int n, SuiteRun& run, PolyCache&) {
  run.universe("ASM(" + std::to_string(n) + ") images in anti(" + std::to_string(n) + ")");
  const std::vector<Asm> all = enumerate_asms(n);
  for (const Asm& a : all) {
    guarded(run, canonical_string(a), [&] {
      for (int i = 1; i < n; ++i)
        run.check(pi_anti(from_asm(a), i) == from_asm(pi(a, i)), itag(a, i));
    });
  }
  for (const Asm& a : all)
    for (const Asm& b : all)
      run.check(leq_strong_anti(from_asm(a), from_asm(b)) == leq_strong(a, b), [&] { return canonical_string(a) + " vs " + canonical_string(b); });
}

inline void suite_anti_ddo(int n, SuiteRun& run, PolyCache& cache) {
  std::string uni = "anti(3) x i, exhaustive";
  for (const Antichain& a : enumerate_antichains(std::min(n, 3)))
    for (int i = 1; i < std::min(n, 3); ++i)
      guarded(run, itag(a, i), [&] { run.check(check_ddo_anti(a, i, cache), itag(a, i)); });
  if (n >= 4) {
    uni += "; 200 sampled from anti(4) x i";
    const std::vector<Antichain> pool = enumerate_antichains(4);
    for (size_t idx : sample_indices(pool.size(), 200, 660412u)) {
      const Antichain& a = pool[idx];
      for (int i = 1; i < 4; ++i)
        guarded(run, itag(a, i), [&] { run.check(check_ddo_anti(a, i, cache), itag(a, i)); });
    }
  }
  run.universe(uni);
}

inline void suite_anti_derivatives(int n, SuiteRun& run, PolyCache& cache) {
  std::string uni = "anti(3), exhaustive";
  for (const Antichain& a : enumerate_antichains(std::min(n, 3)))
    guarded(run, canonical_string(a), [&] { run.check(check_derivative_anti(a, cache), canonical_string(a)); });
  if (n >= 4) {
    uni += "; 200 sampled from anti(4)";
    const std::vector<Antichain> pool = enumerate_antichains(4);
    for (size_t idx : sample_indices(pool.size(), 200, 797003u)) {
      const Antichain& a = pool[idx];
      guarded(run, canonical_string(a), [&] { run.check(check_derivative_anti(a, cache), canonical_string(a)); });
    }
  }
  run.universe(uni);
}

inline void suite_paper_examples(int, SuiteRun& run, PolyCache& cache) {
  run.universe("worked examples");
  using namespace examples;

  guarded(run, "diagram of the 4x4 example", [&] {
    const Asm a = example4();
    bool ok = rothe_diagram(a) == std::vector<Cell>{{1, 1}, {1, 2}};
    ok = ok && negatives(a) == std::vector<Cell>{{2, 3}};
    ok = ok && essential_set(a) == std::vector<Cell>{{1, 2}, {2, 3}};
    ok = ok && inversions(a) == std::vector<Cell>{{1, 1}, {1, 2}, {2, 3}};
    const RankMatrix r = rank_matrix(a);
    ok = ok && r.at(1, 2) == 0 && r.at(2, 3) == 1;
    run.check(ok, "diagram of the 4x4 example");
  });

  guarded(run, "bigrassmannian block", [&] {
    run.check(bigrassmannian({3, 4, 2, 5}) == parse_perm("12534"), "bigrassmannian (3,4) r=2 in S_5");
    run.check(bigrassmannian({1, 2, 0, 4}) == parse_perm("3124"), "bigrassmannian (1,2) r=0 in S_4");
    run.check(bigrassmannian({2, 3, 1, 4}) == parse_perm("1423"), "bigrassmannian (2,3) r=1 in S_4");
    run.check(join(perm_to_asm(parse_perm("3124")), perm_to_asm(parse_perm("1423"))) == example4(), "join of the two blocks");
  });

  guarded(run, "pi_3 collapses the 5x5 chain", [&] {
    const Asm top = perm_to_asm(parse_perm("31524"));
    const Asm bottom = perm_to_asm(parse_perm("31254"));
    const Asm a = chain5_mid_a(), b = chain5_mid_b();
    bool ok = pi(top, 3) == bottom && pi(a, 3) == bottom && pi(b, 3) == bottom && pi(bottom, 3) == bottom;
    ok = ok && bump_at_essential(top, {3, 4}) == a && bump_at_essential(a, {3, 2}) == b && bump_at_essential(b, {3, 3}) == bottom;
    ok = ok && leq_strong(bottom, b) && leq_strong(b, a) && leq_strong(a, top) && !(a == top) && !(b == a) && !(bottom == b);
    run.check(ok, "pi_3 collapses the 5x5 chain");
  });

  guarded(run, "meet counterexample", [&] {
    const Asm u = perm_to_asm(parse_perm("2341")), v = perm_to_asm(parse_perm("3124"));
    const Asm m = meet(u, v);
    bool ok = m == meet_witness4();
    const auto ds = descents(m);
    ok = ok && std::find(ds.begin(), ds.end(), 2) != ds.end();
    ok = ok && pi(m, 2) == perm_to_asm(parse_perm("2134"));
    ok = ok && pi(u, 2) == u && pi(v, 2) == v;
    ok = ok && !(pi(m, 2) == meet(pi(u, 2), pi(v, 2)));
    run.check(ok, "meet counterexample");
  });

  guarded(run, "perm set and chains of the 4x4 example", [&] {
    const Asm a = example4();
    bool ok = perm_set(a) == std::vector<Permutation>{parse_perm("3412"), parse_perm("4123")};
    ok = ok && codim(a) == 3 && min_chain_length(a) == 3;
    ok = ok && chains(a, 3) == std::vector<ChainWord>{{3, 2, 1}};
    const auto cs = chains(a);
    ok = ok && std::find(cs.begin(), cs.end(), ChainWord{3, 2, 1, 2}) != cs.end();
    Permutation p = Permutation::identity(4);
    for (int i : {3, 2, 1}) p = right_times_simple(p, i);
    ok = ok && p == parse_perm("4123");
    Permutation q = Permutation::identity(4);
    for (int i : {3, 2, 1, 2}) q = right_times_simple(q, i);
    ok = ok && q == parse_perm("4213") && leq_strong(a, perm_to_asm(q)) && leq_bruhat(parse_perm("4123"), q);
    const auto ws = perm_set(a);
    ok = ok && std::find(ws.begin(), ws.end(), q) == ws.end();
    run.check(ok, "perm set and chains of the 4x4 example");
  });

  guarded(run, "maximal elements of ASM(4)", [&] {
    std::vector<Asm> expect = maximal4();
    std::sort(expect.begin(), expect.end());
    run.check(maximal_weak_elements(4) == expect, "maximal elements of ASM(4)");
  });

  guarded(run, "8x8 deep element", [&] {
    const Asm a = deep8();
    run.check(rothe_diagram(a).size() == 17, "8x8 diagram size");
    run.check(codim(a) == 16, "8x8 codimension");
  });

  guarded(run, "weak interval below the 4x4 root", [&] {
    const auto nodes = interval_nodes4();
    std::vector<std::tuple<Asm, Asm, int>> edges;
    for (const auto& [s, d, i] : interval_edges4()) edges.emplace_back(nodes[static_cast<size_t>(s)], nodes[static_cast<size_t>(d)], i);
    const PosetGraph expect = detail::expected_graph(4, nodes, edges);
    const PosetGraph got = weak_interval_below(interval_root4());
    run.check(got == expect, "interval nodes and labeled edges");
    const PosetGraph flipped = weak_interval_below(transpose(interval_root4()));
    run.check(flipped.nodes.size() == 12, "transpose interval node count");
    run.check(got.nodes.size() != flipped.nodes.size(), "intervals cannot be anti-isomorphic");
  });

  guarded(run, "anti(3) posets", [&] {
    const auto all3 = enumerate_antichains(3);
    run.check(all3.size() == 8, "anti(3) count");

    std::vector<Antichain> elems;
    std::vector<std::tuple<Antichain, Antichain, int>> cover_edges;
    for (const auto& [hi, lo] : anti3_strong_covers()) cover_edges.emplace_back(hi, lo, 0);
    for (const Antichain& a : all3) elems.push_back(a);
    run.check(strong_hasse_anti(3) == detail::expected_graph(3, elems, cover_edges), "anti(3) strong covers");

    std::vector<std::tuple<Antichain, Antichain, int>> weak_edges;
    for (const auto& [src, dst, i] : anti3_weak_edges()) weak_edges.emplace_back(src, dst, i);
    run.check(weak_poset_anti(3) == detail::expected_graph(3, elems, weak_edges), "anti(3) weak operator graph");
  });

  guarded(run, "antichain ideal sums", [&] {
    bool ok = sum_of_antichain_ideals({antichain_of({"213"}), antichain_of({"132"})}) == antichain_of({"231", "312"});
    ok = ok && sum_of_antichain_ideals({antichain_of({"231"}), antichain_of({"312"})}) == antichain_of({"321"});
    ok = ok && join(perm_to_asm(parse_perm("213")), perm_to_asm(parse_perm("132"))) == nonperm3();
    ok = ok && join(perm_to_asm(parse_perm("231")), perm_to_asm(parse_perm("312"))) == perm_to_asm(parse_perm("321"));
    ok = ok && !try_to_asm(antichain_of({"213", "132"})).has_value();
    ok = ok && try_to_asm(antichain_of({"4123", "3412"})) == example4();
    ok = ok && pi_anti(antichain_of({"231", "312"}), 2) == antichain_of({"213"});
    ok = ok && pi_anti(antichain_of({"213", "132"}), 1) == antichain_of({"123"});
    ok = ok && pi_anti(antichain_of({"213", "132"}), 2) == antichain_of({"123"});
    run.check(ok, "antichain ideal sums");
  });

  guarded(run, "Grothendieck of {213,132}", [&] {
    const Antichain a = antichain_of({"213", "132"});
    const MultiPoly x1 = MultiPoly::x(3, 1), x2 = MultiPoly::x(3, 2);
    const MultiPoly expect = BigInt(2) * x1 + x2 - BigInt(2) * (x1 * x2) - x1 * x1 + x1 * x1 * x2;
    const MultiPoly g = groth_anti_single(a, cache);
    run.check(g == expect, "single Grothendieck of {213,132}");

    const MultiPoly dbl = groth_perm(parse_perm("213"), cache) + groth_perm(parse_perm("132"), cache) - groth_perm(parse_perm("231"), cache) -
                          groth_perm(parse_perm("312"), cache) + groth_perm(parse_perm("321"), cache);
    run.check(groth_anti(a, cache) == dbl, "five-term double expansion");

    run.check(maj(transpose(a)) == 3, "maj of the transpose");
    run.check(descents(transpose(a)) == std::vector<int>{1, 2}, "descents of the transpose");
    const MultiPoly lhs = BigInt(3) * g + nabla(g) - euler(g);
    run.check(lhs == MultiPoly::constant(3, 3), "(3 + nabla - E) collapses to 3");
    run.check(check_derivative_anti(a, cache), "derivative identity for {213,132}");
  });

  guarded(run, "Schubert forgets the small component", [&] {
    const Asm a = mixed_dim4();
    bool ok = perm_set(a) == std::vector<Permutation>{parse_perm("2341"), parse_perm("3412")};
    ok = ok && !is_equidimensional(a) && codim(a) == 3;
    const MultiPoly s = schub_asm(a, cache);
    const int n = 4;
    const auto X = [&](int i) { return MultiPoly::x(n, i); };
    const auto Y = [&](int j) { return MultiPoly::y(n, j); };
    ok = ok && s == (X(1) - Y(1)) * (X(2) - Y(1)) * (X(3) - Y(1));
    ok = ok && s == schub_perm(parse_perm("2341"), cache);
    ok = ok && divided_difference(s, 2) == MultiPoly::zero(n);

    const Asm b = pi(a, 2);
    ok = ok && b == parse_asm_rows("0,1,0,0;1,-1,1,0;0,0,0,1;0,1,0,0");
    ok = ok && perm_set(b) == std::vector<Permutation>{parse_perm("2341"), parse_perm("3142")};
    ok = ok && is_equidimensional(b) && codim(b) == 3;
    const MultiPoly three = (X(1) - Y(1)) * (X(1) - Y(2)) * (X(3) - Y(2)) + (X(1) - Y(1)) * (X(1) - Y(2)) * (X(2) - Y(1)) +
                            (X(1) - Y(1)) * (X(2) - Y(1)) * (X(3) - Y(1));
    ok = ok && schub_asm(b, cache) == three;
    run.check(ok, "Schubert forgets the small component");
  });

  guarded(run, "equidimensional step", [&] {
    bool ok = is_equidimensional(equidim4()) && pi(equidim4(), 1) == mixed_dim4();
    run.check(ok, "equidimensional step");
  });

  guarded(run, "the non-permutation element of ASM(3)", [&] {
    const Asm a = nonperm3();
    bool ok = perm_set(a) == std::vector<Permutation>{parse_perm("231"), parse_perm("312")};
    ok = ok && pi(a, 2) == perm_to_asm(parse_perm("213"));
    ok = ok && perm_set(pi(a, 2)) == std::vector<Permutation>{parse_perm("213")};
    const MultiPoly expect = groth_perm(parse_perm("231"), cache) + groth_perm(parse_perm("312"), cache) - groth_perm(parse_perm("321"), cache);
    ok = ok && groth_asm(a, cache) == expect;
    run.check(ok, "the non-permutation element of ASM(3)");
  });

  guarded(run, "small closed forms", [&] {
    bool ok = schub_top(2) == MultiPoly::x(2, 1) - MultiPoly::y(2, 1);
    ok = ok && groth_perm(Permutation::identity(3), cache) == MultiPoly::constant(3, 1);
    ok = ok && schub_perm(Permutation::identity(3), cache) == MultiPoly::constant(3, 1);
    run.check(ok, "small closed forms");
  });
}

}  // namespace detail

struct VerifySuite {
  std::string id;
  std::string summary;
  int default_n;  // 0 = fixed universe, request size ignored
  int cap_n;      // exceeding this raises bound_error (clamped by run-all)
  std::function<void(int, detail::SuiteRun&, PolyCache&)> run;
};

inline const std::vector<VerifySuite>& verify_suites() {
  static const std::vector<VerifySuite> suites = {
      {"anti-ddo", "pi_i of an antichain Grothendieck polynomial matches the image's polynomial", 3, 4, detail::suite_anti_ddo},
      {"anti-derivatives", "(maj + nabla - E) identity for antichain Grothendieck polynomials", 3, 4, detail::suite_anti_derivatives},
      {"anti-operator-algebra", "pi_i on antichains is idempotent and satisfies braid/commutation", 3, 4, detail::suite_anti_operator_algebra},
      {"anti-order-preserving", "pi_i preserves strong order on antichains", 3, 4, detail::suite_anti_order_preserving},
      {"anti-pi-commutes", "pi_i commutes with antichain ideal sums", 3, 3, detail::suite_anti_pi_commutes},
      {"anti-restriction", "antichain operations restrict to ASM operations on perm-set images", 4, 4, detail::suite_anti_restriction},
      {"bigrassmannian", "essential-cell decomposition, meet law, and comparison criterion", 4, 4, detail::suite_bigrassmannian},
      {"chains-codim", "minimum saturated chain length equals codimension", 5, 5, detail::suite_chains_codim},
      {"chains-equal-length", "all chains share a length iff everything weakly below is equidimensional", 4, 4, detail::suite_chains_equal_length},
      {"chains-reduced", "chain words are reduced; reduced words of perm-set members are chains", 4, 4, detail::suite_chains_reduced},
      {"core-roundtrip", "rank-matrix round trip, diagram partition, transpose involution", 5, 6, detail::suite_core_roundtrip},
      {"covers", "cover computations agree with brute-force interval checks", 4, 4, detail::suite_covers},
      {"ddo", "pi_i of a Grothendieck polynomial matches the image's polynomial (double and single)", 4, 4, detail::suite_ddo},
      {"derivatives", "(maj + nabla - E) identity for ASM Grothendieck polynomials", 4, 4, detail::suite_derivatives},
      {"descent-transfer", "descents of A are exactly the descents realized in Perm(A)", 4, 4, detail::suite_descent_transfer},
      {"distinctness", "single Grothendieck polynomials are pairwise distinct", 4, 4, detail::suite_distinctness},
      {"enumeration", "ASM counts match the product formula", 5, 6, detail::suite_enumeration},
      {"groth-consistency", "lowest-degree parts, y-negation, untwisted coordinates, word independence", 4, 4, detail::suite_groth_consistency},
      {"intersectoperator", "Perm(pi_i(A)) is the minimal image of Perm(A)", 4, 4, detail::suite_intersectoperator},
      {"join-compat", "pi_i commutes with joins", 4, 4, detail::suite_join_compat},
      {"lattice", "strong order is a lattice: order axioms, join/meet laws", 4, 4, detail::suite_lattice},
      {"max-weak", "weak-order maximality agrees with reachability; essential-row criterion", 4, 4, detail::suite_max_weak},
      {"operator-algebra", "divided-difference operator relations on a random corpus", 4, 4, detail::suite_operator_algebra},
      {"paper-examples", "golden values from the worked examples", 0, 0, detail::suite_paper_examples},
      {"perm-set", "perm-set members are the Bruhat-minimal permutations above A", 4, 4, detail::suite_perm_set},
      {"pi-operator-algebra", "pi_i on ASMs is idempotent and satisfies braid/commutation", 4, 4, detail::suite_pi_operator_algebra},
      {"pi-oracle", "direct pi_i formula equals the brute-force sublattice meet", 5, 5, detail::suite_pi_oracle},
      {"pi-order-preserving", "pi_i preserves strong order", 4, 4, detail::suite_pi_order_preserving},
      {"schubert-delta", "delta_i kills or steps the Schubert polynomial by codimension", 4, 4, detail::suite_schubert_delta},
      {"stepdown-codim", "codimension steps down by at most one, with the descent criterion", 4, 4, detail::suite_stepdown_codim},
      {"symmetry", "codimension is preserved iff the Schubert polynomial is symmetric in x_i, x_{i+1}", 4, 4, detail::suite_symmetry},
  };
  return suites;
}

inline const VerifySuite* find_suite(const std::string& id) {
  for (const VerifySuite& s : verify_suites())
    if (s.id == id) return &s;
  return nullptr;
}

// Runs one suite.  With no explicit size the suite default applies; an
// explicit size beyond the cap raises bound_error unless clamp is set.
inline VerifyReport run_suite(const std::string& id, std::optional<int> nmax = std::nullopt, PolyCache* cache = nullptr, bool clamp = false) {
  const VerifySuite* suite = find_suite(id);
  if (suite == nullptr) throw std::invalid_argument("unknown verify suite: " + id);
  int n = 0;
  if (suite->default_n > 0) {
    n = nmax.value_or(suite->default_n);
    if (n < 1) throw std::invalid_argument("verify: nmax must be >= 1");
    if (n > suite->cap_n) {
      if (!clamp) throw bound_error("verify " + id + ": nmax = " + std::to_string(n) + " exceeds bound " + std::to_string(suite->cap_n));
      n = suite->cap_n;
    }
  }
  PolyCache local;
  PolyCache& effective = cache ? *cache : local;
  detail::SuiteRun acc;
  const auto start = std::chrono::steady_clock::now();
  suite->run(n, acc, effective);
  const auto stop = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = id;
  report.universe = acc.universe();
  report.checked = acc.checked();
  report.failures = acc.take_failures();
  report.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  return report;
}

// Runs every suite in id order, clamping nmax to each suite's cap.
inline std::vector<VerifyReport> run_all_suites(std::optional<int> nmax = std::nullopt, PolyCache* cache = nullptr) {
  std::vector<VerifyReport> reports;
  for (const VerifySuite& s : verify_suites()) reports.push_back(run_suite(s.id, nmax, cache, /*clamp=*/true));
  return reports;
}

}  // namespace asmvar
