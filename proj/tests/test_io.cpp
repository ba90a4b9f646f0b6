#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <asmvar/asmvar.hpp>

using namespace asmvar;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("io_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("asm json round trip") {
  const Asm a = examples::nonperm3();
  const json j = to_json(a);
  CHECK(j.at("n") == 3);
  CHECK(j.at("rows")[1][1] == -1);
  CHECK(asm_from_json(j) == a);
  CHECK_THROWS_AS(asm_from_json(json{{"n", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(asm_from_json(json::parse(R"({"n":2,"rows":[[1,1],[0,0]]})")), std::invalid_argument);
}

TEST_CASE("permutation json round trip") {
  const Permutation w = parse_perm("31524");
  const json j = to_json(w);
  CHECK(j.at("oneline") == json::array({3, 1, 5, 2, 4}));
  CHECK(perm_from_json(j) == w);
  CHECK_THROWS_AS(perm_from_json(json::parse(R"({"n":3,"oneline":[1,2]})")), std::invalid_argument);
}

TEST_CASE("antichain json round trip") {
  const Antichain a = parse_antichain("{231,312}");
  const json j = to_json(a);
  CHECK(j.at("perms").size() == 2);
  CHECK(antichain_from_json(j) == a);
  CHECK_THROWS_AS(antichain_from_json(json::parse(R"({"n":3,"perms":[[1,2,3],[2,1,3]]})")), std::invalid_argument);
}

TEST_CASE("rank matrix and cell lists serialize") {
  const json r = to_json(rank_matrix(examples::nonperm3()));
  CHECK(r.at("values")[3][3] == 3);
  const json cells = to_json(essential_set(examples::nonperm3()));
  CHECK(cells == json::parse("[[1,1],[2,2]]"));
  const json t = to_json(BigrassTriple{2, 2, 1, 3});
  CHECK(t.at("rank") == 1);
}

TEST_CASE("polynomial json keeps exact coefficients") {
  const int n = 2;
  MultiPoly p = MultiPoly::x(n, 1) - BigInt(3) * MultiPoly::y(n, 2);
  CHECK(poly_from_json(to_json(p)) == p);
  // coefficient too wide for 64 bits survives as a string
  BigInt big("123456789012345678901234567890");
  MultiPoly q = MultiPoly::constant(n, big);
  const json j = to_json(q);
  CHECK(j.at("terms")[0].at("coef").is_string());
  CHECK(poly_from_json(j) == q);
  CHECK_THROWS_AS(poly_from_json(json::parse(R"({"n":2,"terms":[{"exp":[1,0],"coef":1}]})")), std::invalid_argument);
}

TEST_CASE("poset graph json") {
  const PosetGraph g = weak_poset(2);
  const json j = to_json(g);
  CHECK(j.at("nodes").size() == 2);
  CHECK(j.at("edges").size() == 1);
  CHECK(j.at("edges")[0] == json::array({0, 1, 1}));
}

TEST_CASE("dot export quotes labels and tags weak edges") {
  const std::string dot = poset_to_dot(weak_poset(2), "weak_asm_2");
  CHECK(dot.find("digraph weak_asm_2 {") == 0);
  CHECK(dot.find("n0 [label=\"0,1;1,0\"]") != std::string::npos);
  CHECK(dot.find("[label=\"1\"]") != std::string::npos);
  const std::string hasse = poset_to_dot(strong_hasse(2));
  CHECK(hasse.find("label=\"0\"") == std::string::npos);  // cover edges unlabeled
  CHECK(hasse.find("->") != std::string::npos);
}

TEST_CASE("text parsers accept the compact forms and reject junk") {
  CHECK(parse_asm_rows("0,1,0;1,-1,1;0,1,0") == examples::nonperm3());
  CHECK_THROWS_AS(parse_asm_rows("0,1;1,0;0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_asm_rows("a,b;c,d"), std::invalid_argument);
  CHECK_THROWS_AS(parse_asm_rows(""), std::invalid_argument);
  CHECK(parse_perm("3,1,5,2,4") == parse_perm("31524"));
  CHECK_THROWS_AS(parse_perm("120"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm(""), std::invalid_argument);
  CHECK(parse_antichain("{231,312}").perms().size() == 2);
  CHECK_THROWS_AS(parse_antichain("231,312"), std::invalid_argument);
  CHECK_THROWS_AS(parse_antichain("{123,213}"), std::invalid_argument);
}

TEST_CASE("canonical polynomial text matches the documented shape") {
  PolyCache cache;
  const MultiPoly g = groth_anti(parse_antichain("{213,132}"), cache);
  CHECK(poly_to_text(substitute_y_zero(g)) == "2*x1 + x2 - x1^2 - 2*x1*x2 + x1^2*x2");
}

TEST_CASE("poly cache round trips through disk") {
  TempFile file("cache.jsonl");
  PolyCache cache;
  groth_asm(examples::nonperm3(), cache);
  const auto before = cache.snapshot();
  REQUIRE_FALSE(before.empty());
  save_poly_cache(cache, file.path);

  PolyCache loaded;
  load_poly_cache(loaded, file.path);
  CHECK(loaded.snapshot() == before);

  // a reloaded cache serves the same polynomial without recomputation drift
  CHECK(groth_asm(examples::nonperm3(), loaded) == groth_asm(examples::nonperm3(), cache));
}

TEST_CASE("cache loading tolerates absence and rejects foreign headers") {
  PolyCache cache;
  CHECK_NOTHROW(load_poly_cache(cache, "io_test_does_not_exist.jsonl"));
  CHECK(cache.snapshot().empty());

  TempFile file("badcache.jsonl");
  {
    std::ofstream out(file.path);
    out << R"({"format":"something-else","version":1})" << "\n";
  }
  CHECK_THROWS_AS(load_poly_cache(cache, file.path), std::invalid_argument);

  TempFile file2("oldcache.jsonl");
  {
    std::ofstream out(file2.path);
    out << R"({"format":"asmvar-poly-cache","version":0})" << "\n";
  }
  CHECK_THROWS_AS(load_poly_cache(cache, file2.path), std::invalid_argument);
}

}  // TEST_SUITE("io")
