#include <doctest.h>

#include "isoschub/chains.hpp"
#include "isoschub/io.hpp"
#include "isoschub/orders.hpp"
#include "isoschub/schubert.hpp"
#include "isoschub/schur_pq.hpp"

using namespace isoschub;

TEST_CASE("basis names") {
  CHECK(parse_basis("B") == Basis::B);
  CHECK(parse_basis("c") == Basis::C);
  CHECK(to_string(Basis::C) == "C");
  CHECK_THROWS_AS(parse_basis("D"), ParseError);
}

TEST_CASE("Schubert vectors") {
  auto j = to_json(pieri(parse_permutation("3,-1,2"), 2, Basis::B));
  CHECK(j["basis"] == "B");
  CHECK(j["n"] == 3);
  REQUIRE(j["terms"].size() == 4);
  CHECK(j["terms"][0]["perm"] == "-3,-2,1");
  CHECK(j["terms"][0]["coeff"] == 2);
  // ordered by window
  std::vector<std::string> perms;
  for (const auto& t : j["terms"]) perms.push_back(t["perm"]);
  CHECK(perms == std::vector<std::string>{"-3,-2,1", "-1,-3,2", "2,-3,1", "3,-2,-1"});
}

TEST_CASE("intervals as JSON and DOT") {
  auto iv = lagrangian_interval(parse_cycles("<1,2>"), LabelMode::Reseau);
  auto j = to_json(iv);
  CHECK(j["kind"] == "lagrangian");
  CHECK(j["mode"] == "reseau");
  CHECK(j["bottom"] == "1,2");
  CHECK(j["top"] == "2,1");
  REQUIRE(j["nodes"].size() == 2);
  CHECK(j["nodes"][1]["rank"] == 1);
  REQUIRE(j["edges"].size() == 2);
  CHECK(j["edges"][0]["label"] == -1);
  CHECK(j["edges"][1]["label"] == 2);

  auto dot = to_dot(iv);
  CHECK(dot.rfind("digraph interval {", 0) == 0);
  CHECK(dot.find("rankdir=BT;") != std::string::npos);
  CHECK(dot.find("\"1,2\" -> \"2,1\" [label=-1];") != std::string::npos);
  CHECK(dot.find("\"1,2\" -> \"2,1\" [label=2];") != std::string::npos);

  auto k = to_json(k_bruhat_interval(parse_permutation("1,2"), parse_permutation("2,1"), 1));
  CHECK(k["kind"] == "k_bruhat");
  CHECK(k["k"] == 1);
}

TEST_CASE("factorizations, expansions, histograms, reports") {
  auto f = to_json(irreducible_factors(parse_cycles("<1,2><3]")));
  CHECK(f["theta"] == 2);
  CHECK(f["chi"] == 2);
  REQUIRE(f["factors"].size() == 2);
  CHECK(f["factors"][0]["cycles"] == "<1,2>");
  CHECK(f["factors"][0]["delta"] == 1);
  CHECK(f["factors"][1]["minimal"] == true);

  auto q = to_json(q_expansion(StrictPartition({2, 1})));
  REQUIRE(q.size() == 2);
  CHECK(q[0]["monomial"] == std::vector<int>{3});
  CHECK(q[0]["coeff"] == -2);
  CHECK(q[1]["monomial"] == std::vector<int>{2, 1});

  auto h = to_json(Histogram{{{}, 1}, {{2, 4}, 3}});
  CHECK(h.dump() == R"([{"set":[],"count":1},{"set":[2,4],"count":3}])");

  VerifyReport r;
  r.suite = "x";
  r.check(false, "c", "in", "1", "2");
  auto rj = to_json(r);
  CHECK(rj["ok"] == false);
  CHECK(rj["cases"] == 1);
  CHECK(rj["failures"][0]["actual"] == "2");
  CHECK_FALSE(rj.contains("seconds"));
}
