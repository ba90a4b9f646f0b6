#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <asmvar/asmvar.hpp>

using namespace asmvar;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Inversion count straight from the definition, independent of rank matrices.
int inversion_count(const Permutation& w) {
  int c = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++c;
  return c;
}

// Rothe diagram of a permutation from the classical description:
// (i, j) with j < w(i) and w^{-1}(j) > i.
std::set<Cell> rothe_of_perm(const Permutation& w) {
  const Permutation inv = w.inverse();
  std::set<Cell> out;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = 1; j < w(i); ++j)
      if (inv(j) > i) out.insert({i, j});
  return out;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("permutation construction and arithmetic") {
  const Permutation w = parse_perm("31524");
  CHECK(w.n() == 5);
  CHECK(w(1) == 3);
  CHECK(w(5) == 4);
  CHECK(w.inverse()(3) == 1);
  CHECK(compose(w, w.inverse()) == Permutation::identity(5));
  CHECK(compose(w.inverse(), w) == Permutation::identity(5));
  CHECK(Permutation::longest(4) == parse_perm("4321"));
  CHECK(Permutation::simple(4, 2) == parse_perm("1324"));
  CHECK(right_times_simple(parse_perm("2341"), 3) == parse_perm("2314"));
  CHECK(left_times_simple(3, parse_perm("2341")) == parse_perm("2431"));
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(right_times_simple(parse_perm("123"), 3), std::invalid_argument);
  CHECK_THROWS_AS(compose(parse_perm("12"), parse_perm("123")), std::invalid_argument);
}

TEST_CASE("coxeter length equals the inversion count") {
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& w : all_perms(n))
      CHECK(coxeter_length(w) == inversion_count(w));
  CHECK(coxeter_length(Permutation::longest(6)) == 15);
}

TEST_CASE("descents of a permutation") {
  CHECK(descents(parse_perm("2143")) == std::vector<int>{1, 3});
  CHECK(descents(Permutation::identity(4)).empty());
  CHECK(descents(Permutation::longest(4)) == std::vector<int>{1, 2, 3});
  for (const Permutation& w : all_perms(4))
    for (int i : descents(w)) CHECK(w(i) > w(i + 1));
}

TEST_CASE("asm validation accepts exactly the alternating matrices") {
  CHECK_NOTHROW(validate_asm(3, {{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}));
  // row sum not 1
  CHECK_THROWS_AS(validate_asm(2, {{1, 1}, {0, 0}}), std::invalid_argument);
  // entry out of range
  CHECK_THROWS_AS(validate_asm(2, {{2, -1}, {-1, 2}}), std::invalid_argument);
  // leading -1 in a row
  CHECK_THROWS_AS(validate_asm(3, {{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}}), std::invalid_argument);
  // column prefix sums exceed 1
  CHECK_THROWS_AS(validate_asm(3, {{0, 1, 0}, {0, 1, 0}, {1, -1, 1}}), std::invalid_argument);
  // ragged input
  CHECK_THROWS_AS(validate_asm(2, {{1, 0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_asm(0, {}), std::invalid_argument);
}

TEST_CASE("rank matrix borders, steps, and inversion") {
  for (const Asm& a : enumerate_asms(4)) {
    const RankMatrix r = rank_matrix(a);
    for (int j = 0; j <= 4; ++j) {
      CHECK(r.at(0, j) == 0);
      CHECK(r.at(4, j) == j);
    }
    for (int i = 0; i <= 4; ++i) {
      CHECK(r.at(i, 0) == 0);
      CHECK(r.at(i, 4) == i);
    }
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        const int dr = r.at(i, j) - r.at(i, j - 1);
        const int dc = r.at(i, j) - r.at(i - 1, j);
        CHECK(dr >= 0);
        CHECK(dr <= 1);
        CHECK(dc >= 0);
        CHECK(dc <= 1);
      }
    CHECK(asm_from_rank(r) == a);
  }
}

TEST_CASE("rank matrix validation rejects broken step conditions") {
  CHECK_THROWS_AS(RankMatrix::from_values({{0, 0, 0}, {0, 2, 1}, {0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(RankMatrix::from_values({{0, 0, 0}, {0, 1, 1}, {0, 1, 1}}), std::invalid_argument);
  CHECK_NOTHROW(RankMatrix::from_values({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}}));
}

TEST_CASE("permutation matrices round-trip") {
  for (const Permutation& w : all_perms(4)) {
    const Asm a = perm_to_asm(w);
    const auto back = asm_to_perm(a);
    REQUIRE(back.has_value());
    CHECK(*back == w);
    const RankMatrix r = rank_matrix(a);
    // rk_w(i,j) = #{p <= i : w(p) <= j}
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        int count = 0;
        for (int p = 1; p <= i; ++p)
          if (w(p) <= j) ++count;
        CHECK(r.at(i, j) == count);
      }
  }
  CHECK_FALSE(asm_to_perm(examples::nonperm3()).has_value());
}

TEST_CASE("transpose is an involution and inverts permutations") {
  for (const Asm& a : enumerate_asms(3)) CHECK(transpose(transpose(a)) == a);
  for (const Permutation& w : all_perms(4))
    CHECK(transpose(perm_to_asm(w)) == perm_to_asm(w.inverse()));
}

TEST_CASE("inversions split into the diagram and the negative cells") {
  for (const Asm& a : enumerate_asms(4)) {
    const auto inv = inversions(a);
    const auto dia = rothe_diagram(a);
    const auto neg = negatives(a);
    CHECK(inv.size() == dia.size() + neg.size());
    std::set<Cell> inv_set(inv.begin(), inv.end());
    for (const Cell& c : dia) {
      CHECK(a.at(c.row, c.col) == 0);
      CHECK(inv_set.count(c) == 1);
    }
    for (const Cell& c : neg) {
      CHECK(a.at(c.row, c.col) == -1);
      CHECK(inv_set.count(c) == 1);
    }
    // every -1 cell is an inversion
    int minus = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (a.at(i, j) == -1) ++minus;
    CHECK(static_cast<int>(neg.size()) == minus);
  }
}

TEST_CASE("diagram of a permutation matches the classical Rothe diagram") {
  for (const Permutation& w : all_perms(4)) {
    const auto dia = rothe_diagram(perm_to_asm(w));
    const std::set<Cell> got(dia.begin(), dia.end());
    CHECK(got == rothe_of_perm(w));
    CHECK(static_cast<int>(dia.size()) == coxeter_length(w));
    CHECK(negatives(perm_to_asm(w)).empty());
  }
}

TEST_CASE("essential cells are the diagram's outer corners") {
  for (const Asm& a : enumerate_asms(4)) {
    const auto inv = inversions(a);
    const std::set<Cell> inv_set(inv.begin(), inv.end());
    std::set<Cell> expect;
    for (const Cell& c : inv)
      if (!inv_set.count({c.row + 1, c.col}) && !inv_set.count({c.row, c.col + 1}))
        expect.insert(c);
    const auto ess = essential_set(a);
    CHECK(std::set<Cell>(ess.begin(), ess.end()) == expect);
  }
}

TEST_CASE("essential cells pin the rank function locally") {
  // At an essential cell the rank stalls from the left and from above and
  // grows into the next row and column.
  for (const Asm& a : enumerate_asms(4)) {
    const RankMatrix r = rank_matrix(a);
    for (const Cell& c : essential_set(a)) {
      CHECK(r.at(c.row, c.col) == r.at(c.row - 1, c.col));
      CHECK(r.at(c.row, c.col) == r.at(c.row, c.col - 1));
      CHECK(r.at(c.row + 1, c.col) == r.at(c.row, c.col) + 1);
      CHECK(r.at(c.row, c.col + 1) == r.at(c.row, c.col) + 1);
    }
  }
}

TEST_CASE("bigrassmannian permutations have singleton essential sets") {
  CHECK(bigrassmannian({3, 4, 2, 5}) == parse_perm("12534"));
  for (int row = 1; row <= 3; ++row)
    for (int col = 1; col <= 3; ++col)
      for (int rank = std::max(0, row + col - 4); rank < std::min(row, col); ++rank) {
        const Permutation w = bigrassmannian({row, col, rank, 4});
        const Asm a = perm_to_asm(w);
        const auto ess = essential_set(a);
        REQUIRE(ess.size() == 1);
        CHECK(ess.front() == Cell{row, col});
        CHECK(rank_matrix(a).at(row, col) == rank);
      }
  CHECK_THROWS_AS(bigrassmannian({3, 3, 3, 4}), std::invalid_argument);
}

TEST_CASE("canonical strings") {
  CHECK(canonical_string(examples::nonperm3()) == "0,1,0;1,-1,1;0,1,0");
  CHECK(canonical_string(parse_perm("2143")) == "2143");
  CHECK(canonical_string(Permutation::identity(10)).substr(0, 4) == "1,2,");
}

}  // TEST_SUITE("core")
