#include <doctest.h>

#include <numeric>

#include "isoschub/chains.hpp"
#include "isoschub/factor.hpp"
#include "isoschub/verify.hpp"
#include "oracles.hpp"

using namespace isoschub;

namespace {
SignedPermutation C(const char* s, int n = 0) { return parse_cycles(s, n); }

int sign_changes_of(const oracle::Window& t) {
  return static_cast<int>(std::count_if(t.begin(), t.end(), [](int v) { return v < 0; }));
}

/// Maximal chains of [e,zeta] counted over the oracle's covers.  In the
/// reseau a cover by a transposition pair has two edges, a cover by (-b,b)
/// one.
std::pair<long long, long long> oracle_chain_counts(const oracle::Lagrangian& lag, const oracle::Window& z) {
  std::vector<oracle::Window> below;
  for (const auto& eta : lag.elements)
    if (lag.leq.count({eta, z})) below.push_back(eta);
  std::sort(below.begin(), below.end(), [&](const auto& a, const auto& b) { return lag.rank.at(a) < lag.rank.at(b); });
  std::map<oracle::Window, std::pair<long long, long long>> ways;
  ways[below.front()] = {1, 1};
  for (const auto& x : below)
    for (const auto& y : below) {
      if (lag.rank.at(y) != lag.rank.at(x) + 1 || !lag.leq.count({x, y})) continue;
      auto t = oracle::compose(y, oracle::inverse(x));
      long long mult = sign_changes_of(t) == 1 ? 1 : 2;
      ways[y].first += ways[x].first;
      ways[y].second += mult * ways[x].second;
    }
  return ways[z];
}
}  // namespace

TEST_CASE("chain statistics of a label word") {
  auto s = chain_stat({1, 3, 2, 4, -1});
  CHECK(s.peaks == std::vector<int>{2, 4});
  CHECK(s.descents == std::vector<int>{2, 4});
  CHECK(s.ascents == std::vector<int>{1, 3});
  CHECK(chain_stat({5}).peaks.empty());
  CHECK(is_peakless({3, 2, 1, 4}));
  CHECK_FALSE(is_peakless({1, 3, 2}));
  CHECK_THROWS_AS(chain_stat({1, 1}), Error);
}

TEST_CASE("histograms and shuffles") {
  Histogram h{{{}, 1}, {{1}, 2}, {{2}, 3}, {{1, 2}, 4}};
  CHECK(histogram_vector(h, 2) == std::vector<long long>{1, 2, 3, 4});
  CHECK(count_subsets(h, {1}) == 3);
  CHECK(count_subsets(h, {1, 2}) == 10);
  CHECK(shuffles({1, 2}, {3, 4, 5}).size() == 10);
  auto sh = shuffles({1}, {2});
  CHECK(sh == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
}

TEST_CASE("chain counts match the definition on B_3") {
  oracle::Lagrangian lag(3);
  for (const auto& z : lag.elements) {
    SignedPermutation zeta(z);
    CAPTURE(cycle_notation(zeta));
    auto [f, g] = oracle_chain_counts(lag, z);
    CHECK(count_chains(lagrangian_interval(zeta, LabelMode::Order), ChainFilter::all()) == f);
    CHECK(count_chains(lagrangian_interval(zeta, LabelMode::Reseau), ChainFilter::all()) == g);
  }
}

TEST_CASE("pruned enumeration agrees with filtering every chain") {
  for (const char* z : {"<1,3,4><2]", "<1,2,4,3>", "<1,2><3]", "<1,-3,2]"}) {
    CAPTURE(z);
    auto iv = lagrangian_interval(C(z, 4), LabelMode::Reseau);
    auto every = collect_chains(iv, ChainFilter::all());
    for (auto kind : {FilterKind::Peakless, FilterKind::NoDescent, FilterKind::NoAscent}) {
      auto f = ChainFilter::of(kind);
      long long expected = std::count_if(every.begin(), every.end(), [&](const Chain& c) { return f.accepts(c.stat); });
      CHECK(count_chains(iv, f) == expected);
    }
    auto s = ChainFilter::of(FilterKind::DescentsSubset, {1, 3});
    long long expected = std::count_if(every.begin(), every.end(), [&](const Chain& c) { return s.accepts(c.stat); });
    CHECK(count_chains(iv, s) == expected);
    for (const auto& c : every) {
      std::vector<int> all = c.stat.descents;
      all.insert(all.end(), c.stat.ascents.begin(), c.stat.ascents.end());
      std::sort(all.begin(), all.end());
      std::vector<int> positions(c.stat.labels.size() - 1);
      std::iota(positions.begin(), positions.end(), 1);
      CHECK(all == positions);
    }
  }
}

TEST_CASE("f and g") {
  auto v2 = special_element(2, 2);
  auto fg = count_f_g(SignedPermutation(2), v2);
  CHECK(fg.g == 2);
  CHECK(fg.f == count_chains(zero_bruhat_interval(SignedPermutation(2), v2, LabelMode::Order), ChainFilter::all()));
  for (const auto& w : all_signed_permutations(3))
    if (leq0(SignedPermutation(3), w)) CHECK(count_f_g(SignedPermutation(3), w).g >= count_f_g(SignedPermutation(3), w).f);
  CHECK_THROWS_AS(count_f_g(special_element(2, 2), SignedPermutation(2)), Error);
}

TEST_CASE("statistics of <1,3,4><2] and its rho conjugate") {
  for (const char* z : {"<1,3,4><2]", "<1,4,2><3]"}) {
    CAPTURE(z);
    auto s = stat_counts(C(z, 4));
    CHECK(s.reseau_chains == 80);
    CHECK(s.order_chains == 5);
    CHECK(s.by_peakset == Histogram{{{3}, 2}, {{2}, 1}, {{4}, 1}, {{2, 4}, 1}});
    CHECK(histogram_vector(s.by_descentset, 4) ==
          std::vector<long long>{0, 2, 6, 4, 6, 12, 8, 2, 2, 8, 12, 6, 4, 6, 2, 0});
    CHECK(s.by_ascentset == s.by_descentset);
  }
}

TEST_CASE("statistics of <1,2,4,3> and its gamma conjugate") {
  for (const char* z : {"<1,2,4,3>", "<1,4,2,3>"}) {
    CAPTURE(z);
    auto s = stat_counts(C(z, 4));
    CHECK(s.reseau_chains == 16);
    CHECK(s.order_chains == 2);
    CHECK(s.peakless == 1);
    CHECK(s.by_peakset == Histogram{{{}, 1}, {{2}, 1}});
    CHECK(s.increasing == 2);
    CHECK(s.decreasing == 2);
    CHECK(s.by_descentset.at({1}) == 6);
    CHECK(s.by_descentset.at({2}) == 6);
  }
}

TEST_CASE("increasing chains of <1,2,5,3,4>") {
  auto iv = lagrangian_interval(C("<1,2,5,3,4>"), LabelMode::Reseau);
  std::vector<std::vector<int>> labels;
  for (const auto& c : collect_chains(iv, ChainFilter::of(FilterKind::NoDescent))) labels.push_back(c.stat.labels);
  CHECK(labels == std::vector<std::vector<int>>{{-3, -2, -1, 5}, {-3, -2, 2, 5}});
}

TEST_CASE("a single cover has one peakless chain") {
  for (int b = 1; b <= 3; ++b) {
    auto iv = lagrangian_interval(reflection_pair(-b, b, 3), LabelMode::Order);
    CHECK(count_chains(iv, ChainFilter::of(FilterKind::Peakless)) == 1);
  }
}

TEST_CASE("chains suite on B_4") {
  auto r = chains_suite(4);
  for (const auto& f : r.failures) MESSAGE(f.check << " " << f.inputs << " " << f.actual);
  CHECK(r.ok());
}
