#include <doctest.h>

#include "isoschub/chains.hpp"
#include "isoschub/orders.hpp"
#include "isoschub/verify.hpp"
#include "oracles.hpp"

using namespace isoschub;

namespace {
SignedPermutation P(const char* s, int n = 0) { return parse_permutation(s, n); }
}  // namespace

TEST_CASE("0-Bruhat covers match the defining scan on B_4") {
  auto c = covers0_up(SignedPermutation(2));
  REQUIRE(c.size() == 1);
  CHECK(one_line(c[0].target) == "-1,2");
  CHECK(c[0].labels == std::vector<int>{1});

  auto len = oracle::bfs_lengths(4);
  for (const auto& [u, l] : len) {
    std::set<oracle::Window> expected, actual;
    for (auto& w : oracle::covers0(u, len)) expected.insert(w);
    for (const auto& cv : covers0_up(SignedPermutation(u))) {
      actual.insert(oracle::window(cv.target.embedded(4)));
      CHECK(length(cv.target) == l + 1);
      // labels read off the left factor w u^{-1}
      auto t = cv.target * SignedPermutation(u).inverse();
      CHECK(reflection_labels(t) == cv.labels);
    }
    CHECK(actual == expected);
  }
}

TEST_CASE("0-Bruhat comparison matches cover reachability on B_3 and B_4") {
  CHECK(leq0(P("3,-1,2"), P("3,-1,2")));
  CHECK(leq0(P("3,-1,2"), P("-3,-2,1")));
  CHECK_FALSE(leq0(P("2,1"), P("1,2")));
  for (int n = 3; n <= 4; ++n) {
    auto up = oracle::zero_bruhat_up_sets(n);
    for (const auto& [u, above] : up)
      for (const auto& [w, unused] : up) CHECK(leq0(SignedPermutation(u), SignedPermutation(w)) == (above.count(w) > 0));
  }
}

TEST_CASE("Lagrangian order and rank match the witness definition on B_3") {
  CHECK(lagrangian_rank(P("<1]", 3)) == 1);
  CHECK(lagrangian_rank(P("<2]", 3)) == 1);
  CHECK(lagrangian_rank(P("<3]", 3)) == 1);
  CHECK(lagrangian_rank(P("<1,3,4><2]", 4)) == 5);
  oracle::Lagrangian lag(3);
  for (const auto& z : lag.elements) {
    SignedPermutation zeta(z);
    CHECK(lagrangian_rank(zeta) == lag.rank.at(z));
    CHECK(lagrangian_leq(SignedPermutation(3), zeta));
    for (const auto& eta : lag.elements)
      CHECK(lagrangian_leq(SignedPermutation(eta), zeta) == (lag.leq.count({eta, z}) > 0));
  }
}

TEST_CASE("Lagrangian rank matches the witness definition on B_4") {
  oracle::Lagrangian lag(4, false);
  for (const auto& z : lag.elements) CHECK(lagrangian_rank(SignedPermutation(z)) == lag.rank.at(z));
}

TEST_CASE("witness and greedy chains") {
  CHECK(witness_u(SignedPermutation(3)).is_identity());
  auto t2 = P("<2]", 2);
  auto u = witness_u(t2);
  CHECK(one_line(u) == "2,1");
  CHECK(one_line(t2 * u) == "-2,1");
  CHECK(is_grassmannian(t2 * u));
  CHECK(length(t2 * u) - length(u) == 1);

  auto t3 = greedy_chain(P("<3]", 3));
  REQUIRE(t3.size() == 1);
  CHECK(t3[0].a == -3);
  CHECK(t3[0].b == 3);
  CHECK(greedy_chain(P("<1,2,5,3,4>")).size() == 4);

  for (int n = 1; n <= 4; ++n)
    for (const auto& z : all_signed_permutations(n)) {
      auto w = witness_u(z);
      CHECK(leq0(w, z * w));
      CHECK(length(z * w) - length(w) == lagrangian_rank(z));
      auto steps = greedy_chain(z);
      CHECK(static_cast<int>(steps.size()) == lagrangian_rank(z));
      // reversed steps climb from e to zeta through covers
      SignedPermutation cur(n);
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        CHECK(lagrangian_leq(cur, it->before));
        CHECK(lagrangian_rank(it->before) == lagrangian_rank(cur) + 1);
        cur = it->before;
      }
      CHECK(cur == z);
      CHECK(2 * lagrangian_rank(z) == grassmann_rank(z) + sign_changes(z));
    }
}

TEST_CASE("intervals") {
  auto iv = zero_bruhat_interval(P("3,-1,2"), P("-3,-2,1"), LabelMode::Order);
  CHECK(iv.rank_span() == 2);
  CHECK(iv.nodes.front() == P("3,-1,2"));
  CHECK(iv.nodes.back() == P("-3,-2,1"));
  for (const auto& e : iv.edges) CHECK(iv.ranks[static_cast<std::size_t>(e.to)] == iv.ranks[static_cast<std::size_t>(e.from)] + 1);

  CHECK(count_chains(lagrangian_interval(P("<1,2,4,3>"), LabelMode::Order), ChainFilter::all()) == 2);

  auto t1 = lagrangian_interval(P("<1]", 1), LabelMode::Reseau);
  REQUIRE(t1.edges.size() == 1);
  CHECK(t1.edges[0].label == 1);

  CHECK_THROWS_AS(zero_bruhat_interval(P("1,2"), P("2,1"), LabelMode::Order), Error);
}

TEST_CASE("reseau edges refine order edges on B_3") {
  for (const auto& z : all_signed_permutations(3)) {
    auto order = lagrangian_interval(z, LabelMode::Order);
    auto res = lagrangian_interval(z, LabelMode::Reseau);
    std::vector<Edge> positive;
    std::map<std::pair<int, int>, std::vector<int>> by_cover;
    for (const auto& e : res.edges) {
      if (e.label > 0) positive.push_back(e);
      by_cover[{e.from, e.to}].push_back(e.label);
    }
    CHECK(positive == order.edges);
    for (const auto& [cover, labels] : by_cover) {
      // one positive label, plus one negative label for sign-changing pairs
      CHECK(std::count_if(labels.begin(), labels.end(), [](int l) { return l > 0; }) == 1);
      CHECK(labels.size() <= 2);
    }
  }
}

TEST_CASE("transport between shape-equivalent intervals") {
  auto z = P("<1,2]", 3);
  auto u = witness_u(z);
  CHECK(transport_check(u, z * u, u, z * u));
  int tried = 0;
  for (const auto& x : all_signed_permutations(3))
    if (leq0(x, z * x)) {
      CHECK(transport_check(u, z * u, x, z * x));
      ++tried;
    }
  CHECK(tried > 1);
  // the relabeled support still transports
  auto y = P("<1,3]", 3);
  auto v = witness_u(y);
  CHECK(transport_check(u, z * u, v, y * v));
}

TEST_CASE("orders suite on B_4") {
  auto r = orders_suite(4);
  for (const auto& f : r.failures) MESSAGE(f.check << " " << f.inputs << " " << f.actual);
  CHECK(r.ok());
}
