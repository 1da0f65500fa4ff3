#include "isoschub/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "isoschub/chains.hpp"
#include "isoschub/factor.hpp"
#include "isoschub/monoid.hpp"
#include "isoschub/orders.hpp"
#include "isoschub/schubert.hpp"
#include "isoschub/schur_pq.hpp"

namespace isoschub {

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string show(const Histogram& h) {
  std::string s;
  for (const auto& [set, c] : h) s += (s.empty() ? "{" : " {") + join(set) + "}:" + std::to_string(c);
  return s;
}

std::string show(const SchubertVector& v) {
  std::string s;
  for (const auto& [w, c] : v.terms()) s += (s.empty() ? "" : " ") + one_line(w) + ":" + std::to_string(c);
  return s.empty() ? "0" : s;
}

std::string str(long long x) { return std::to_string(x); }

std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

// Rank of eta in the Grassmann-Bruhat order of S_n, from the greedy loop
// on positive letters.
int plain_rank(std::vector<int> eta) {
  const int n = static_cast<int>(eta.size());
  auto at = [&](int a) -> int& { return eta[static_cast<std::size_t>(a - 1)]; };
  int steps = 0;
  for (;;) {
    int b = 0;
    for (int x = n; x >= 1; --x)
      if (x > at(x)) {
        b = x;
        break;
      }
    if (b == 0) return steps;
    int a = 0;
    for (int x = 1; x <= n; ++x)
      if (x <= at(b) && at(b) < at(x)) {
        a = x;
        break;
      }
    if (a == 0) throw Error("plain greedy chain stalled");
    std::swap(at(a), at(b));
    ++steps;
  }
}

std::vector<SignedPermutation> sample(const std::vector<SignedPermutation>& all, std::size_t k, std::uint64_t salt) {
  if (all.size() <= k) return all;
  std::vector<SignedPermutation> out;
  auto rng = make_rng(salt);
  std::sample(all.begin(), all.end(), std::back_inserter(out), k, rng);
  return out;
}

bool disjoint_supports(const SignedPermutation& a, const SignedPermutation& b) {
  auto sa = support(a), sb = support(b);
  std::vector<int> both;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
  return both.empty();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void check_rank(int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw Error("rank " + std::to_string(n) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
}

}  // namespace

// ---- core --------------------------------------------------------------------------

VerifyReport core_suite(int n) {
  check_rank(n, 1, 5);
  VerifyReport r;
  r.suite = "core";
  for (const auto& w : all_signed_permutations(n)) {
    const int l = length(w);
    const auto ow = one_line(w);
    r.check(2 * l == spm_inversions(w) + sign_changes(w), "length from inversions on +-[n]", ow, str(l),
            str(spm_inversions(w)) + "+" + str(sign_changes(w)));
    for (const auto& c : covers0_up(w))
      r.check(length(c.target) == l + 1, "0-Bruhat cover raises length by one", ow + " -> " + one_line(c.target),
              str(l + 1), str(length(c.target)));
    if (n <= 4) {
      r.check(parse_one_line(ow, n) == w && parse_one_line(ow, n).rank() == n, "parse one-line", ow);
      const auto cn = cycle_notation(w, true);
      auto back = parse_cycles(cn);
      r.check(back == w && back.rank() == n, "parse cycles", cn, ow, one_line(back));
      for (int p = 1; p <= n; ++p) {
        auto x = epsilon_pq(slash_p(w, p), p, w(p));
        r.check(x == w, "insert after erase", ow + " p=" + str(p), ow, one_line(x));
      }
    }
  }
  for (const auto& eta : all_plain_permutations(n)) {
    auto z = iota(eta);
    r.check(lagrangian_rank(z) == plain_rank(eta), "iota respects rank", join(eta), str(plain_rank(eta)),
            str(lagrangian_rank(z)));
  }
  const int m = std::min(n, 3);
  auto rng = make_rng(1);
  for (const auto& u : all_signed_permutations(m))
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<int> pool(static_cast<std::size_t>(m + 3));
      for (int i = 0; i < m + 3; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
      std::vector<int> P;
      std::sample(pool.begin(), pool.end(), std::back_inserter(P), m, rng);
      auto moved = epsilon_P(u, P);
      r.check(shape_canonical(moved).form == shape_canonical(u).form, "shape canonical form under relabeling",
              one_line(u) + " P=" + join(P), one_line(shape_canonical(u).form), one_line(shape_canonical(moved).form));
    }
  return r;
}

// ---- factor ------------------------------------------------------------------------

namespace {

void irreducible_bound(VerifyReport& r, const SignedPermutation& z) {
  auto f = irreducible_factors(z);
  if (f.factors.size() != 1 || z.is_identity()) return;
  const int L = lagrangian_rank(z);
  const int s = static_cast<int>(support(z).size());
  const int d = delta(z);
  const auto cn = cycle_notation(z, true);
  r.check(L >= s - d, "irreducible rank bound", cn, ">= " + str(s - d), str(L));
  if (L != s - d) return;
  auto cycles = spm_cycles(z);
  bool pair = d == 1 && cycles.size() == 2 && !cycles[0].self_mirrored && !cycles[1].self_mirrored;
  bool single = d == 0 && cycles.size() == 1 && cycles[0].self_mirrored;
  r.check(pair || single, "equality forces a single cycle", cn, "eta*eta-bar with delta 1 or one cycle with delta 0",
          str(cycles.size()) + " cycles, delta " + str(d));
}

void product_law(VerifyReport& r, const SignedPermutation& z) {
  auto f = irreducible_factors(z);
  const auto cn = cycle_notation(z, true);
  auto whole = lagrangian_interval(z, LabelMode::Order);
  std::map<SignedPermutation, int> rank_of;
  for (std::size_t i = 0; i < whole.nodes.size(); ++i) rank_of[whole.nodes[i]] = whole.ranks[i];
  std::vector<std::pair<SignedPermutation, int>> products{{SignedPermutation(z.rank()), 0}};
  for (const auto& x : f.factors) {
    auto iv = lagrangian_interval(x.perm, LabelMode::Order);
    std::vector<std::pair<SignedPermutation, int>> next;
    for (const auto& [p, rk] : products)
      for (std::size_t i = 0; i < iv.nodes.size(); ++i) next.emplace_back(p * iv.nodes[i], rk + iv.ranks[i]);
    products = std::move(next);
  }
  std::set<SignedPermutation> seen;
  bool ranks_ok = true;
  for (const auto& [p, rk] : products) {
    seen.insert(p);
    auto it = rank_of.find(p);
    if (it == rank_of.end() || it->second != rk) ranks_ok = false;
  }
  r.check(seen.size() == products.size() && seen.size() == whole.nodes.size() && ranks_ok,
          "product of factor intervals", cn, str(whole.nodes.size()) + " elements",
          str(products.size()) + " tuples, " + str(seen.size()) + " distinct");
}

}  // namespace

VerifyReport factor_suite(int n) {
  check_rank(n, 1, 5);
  VerifyReport r;
  r.suite = "factor";
  const int m = std::min(n, 4);
  const auto all = all_signed_permutations(m);
  for (const auto& z : all) {
    auto f = irreducible_factors(z);
    const auto cn = cycle_notation(z, true);
    int total = 0;
    SignedPermutation prod(m);
    for (const auto& x : f.factors) {
      total += lagrangian_rank(x.perm);
      prod = prod * x.perm;
    }
    r.check(total == lagrangian_rank(z), "factor ranks add up", cn, str(lagrangian_rank(z)), str(total));
    r.check(prod == z, "factors multiply to zeta", cn, cycle_notation(z), cycle_notation(prod));
    for (std::size_t i = 0; i < f.factors.size(); ++i)
      for (std::size_t j = i + 1; j < f.factors.size(); ++j)
        r.check(f.factors[i].perm * f.factors[j].perm == f.factors[j].perm * f.factors[i].perm, "factors commute",
                cn + " " + cycle_notation(f.factors[i].perm) + " " + cycle_notation(f.factors[j].perm));
    irreducible_bound(r, z);
    if (is_single_cycle(z) && is_minimal_cycle(z))
      r.check(sign_changes(z) + delta(z) == 1, "minimal cycle sign changes", cn, "1",
              str(sign_changes(z) + delta(z)));
  }
  if (n >= 5)
    for (const auto& z : sample(all_signed_permutations(5), 600, 2)) irreducible_bound(r, z);
  for (const auto& z : all_signed_permutations(std::min(n, 3))) product_law(r, z);
  if (n >= 4)
    for (const auto& z : sample(all_signed_permutations(4), 120, 3)) product_law(r, z);
  return r;
}

// ---- orders ------------------------------------------------------------------------

namespace {

// Upward closure in S_{+-n} under 0-Bruhat covers.
std::set<std::vector<int>> spm_reach(const SpmPerm& u) {
  std::set<std::vector<int>> seen{u.img};
  std::deque<SpmPerm> queue{u};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& c : spm_covers_up(v))
      if (seen.insert(c.img).second) queue.push_back(c);
  }
  return seen;
}

std::set<SignedPermutation> cover_reach(const SignedPermutation& u) {
  std::set<SignedPermutation> seen{u};
  std::deque<SignedPermutation> queue{u};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& c : covers0_up(v))
      if (seen.insert(c.target).second) queue.push_back(c.target);
  }
  return seen;
}

using EdgeKey = std::tuple<SignedPermutation, SignedPermutation, int>;

std::set<EdgeKey> edge_keys(const LabeledInterval& iv, bool positive_only) {
  std::set<EdgeKey> out;
  for (const auto& e : iv.edges)
    if (!positive_only || e.label > 0)
      out.emplace(iv.nodes[static_cast<std::size_t>(e.from)], iv.nodes[static_cast<std::size_t>(e.to)], e.label);
  return out;
}

}  // namespace

VerifyReport orders_suite(int n) {
  check_rank(n, 1, 5);
  VerifyReport r;
  r.suite = "orders";
  const int m3 = std::min(n, 3);
  const int m4 = std::min(n, 4);
  const auto b3 = all_signed_permutations(m3);

  // 0-Bruhat order is induced from S_{+-n}, and agrees with cover reachability
  for (const auto& u : b3) {
    auto spm = spm_reach(SpmPerm::from(u));
    auto own = cover_reach(u);
    for (const auto& w : b3) {
      const bool closed = leq0(u, w);
      const bool induced = spm.count(SpmPerm::from(w).img) > 0;
      const bool reach = own.count(w) > 0;
      const auto in = one_line(u) + " <= " + one_line(w);
      r.check(closed == induced, "induced order", in, induced ? "true" : "false", closed ? "true" : "false");
      r.check(closed == reach, "closed form against covers", in, reach ? "true" : "false", closed ? "true" : "false");
    }
  }

  // Lagrangian order against its witness definition
  {
    std::vector<std::vector<bool>> below(b3.size(), std::vector<bool>(b3.size(), false));
    for (const auto& u : b3)
      for (std::size_t i = 0; i < b3.size(); ++i) {
        auto eu = b3[i] * u;
        if (!leq0(u, eu)) continue;
        for (std::size_t j = 0; j < b3.size(); ++j)
          if (leq0(eu, b3[j] * u)) below[i][j] = true;
      }
    for (std::size_t i = 0; i < b3.size(); ++i)
      for (std::size_t j = 0; j < b3.size(); ++j)
        r.check(lagrangian_leq(b3[i], b3[j]) == below[i][j], "Lagrangian order against witnesses",
                cycle_notation(b3[i]) + " <= " + cycle_notation(b3[j]), below[i][j] ? "true" : "false");
  }

  for (const auto& z : all_signed_permutations(m4)) {
    const auto cn = cycle_notation(z, true);
    const int L = lagrangian_rank(z);
    auto u = witness_u(z);
    r.check(leq0(u, z * u), "witness lies below", cn + " u=" + one_line(u));
    r.check(L == length(z * u) - length(u), "rank through witness", cn, str(L), str(length(z * u) - length(u)));
    r.check(2 * L == grassmann_rank(z) + sign_changes(z), "rank against S_{+-n}", cn, str(2 * L),
            str(grassmann_rank(z)) + "+" + str(sign_changes(z)));
    r.check(static_cast<int>(greedy_chain(z).size()) == L, "greedy chain length", cn, str(L),
            str(greedy_chain(z).size()));
    auto iv = lagrangian_interval(z, LabelMode::Reseau);
    bool coherent = iv.nodes.front().is_identity() && iv.nodes.back() == z && iv.ranks.back() == L;
    for (const auto& e : iv.edges)
      coherent = coherent && iv.ranks[static_cast<std::size_t>(e.to)] == iv.ranks[static_cast<std::size_t>(e.from)] + 1;
    r.check(coherent, "interval ranks", cn);
  }
  for (const auto& z : b3) {
    const auto cn = cycle_notation(z, true);
    auto order = lagrangian_interval(z, LabelMode::Order);
    auto reseau = lagrangian_interval(z, LabelMode::Reseau);
    r.check(order.nodes == reseau.nodes && edge_keys(order, false) == edge_keys(reseau, true),
            "order is the reseau without negative labels", cn);

    auto zi = z.inverse();
    auto dual = lagrangian_interval(zi, LabelMode::Order);
    std::set<std::pair<SignedPermutation, SignedPermutation>> dual_edges;
    for (const auto& e : dual.edges)
      dual_edges.emplace(dual.nodes[static_cast<std::size_t>(e.from)], dual.nodes[static_cast<std::size_t>(e.to)]);
    std::set<SignedPermutation> image;
    for (const auto& x : order.nodes) image.insert(x * zi);
    bool reversing = image == std::set<SignedPermutation>(dual.nodes.begin(), dual.nodes.end()) &&
                     order.edges.size() == dual.edges.size();
    for (const auto& e : order.edges) {
      auto lo = order.nodes[static_cast<std::size_t>(e.from)] * zi;
      auto hi = order.nodes[static_cast<std::size_t>(e.to)] * zi;
      reversing = reversing && dual_edges.count({hi, lo}) > 0;
    }
    r.check(reversing, "duality with the inverse", cn);
  }

  // cover dichotomy
  for (const auto& u : all_signed_permutations(m4)) {
    auto su = SpmPerm::from(u);
    const int lu = spm_length(su);
    auto covered_by_u = [&](const SignedPermutation& v) {
      for (const auto& c : covers0_up(v))
        if (c.target == u) return true;
      return false;
    };
    for (int i = 1; i <= m4; ++i)
      for (int j = i + 1; j <= m4; ++j) {
        auto v = su.swapped(-j, i);
        if (spm_length(v) != lu - 1) continue;
        auto ups = spm_covers_up(v);
        if (std::find(ups.begin(), ups.end(), su) == ups.end()) continue;
        bool first = covered_by_u(u * reflection_pair(-i, j, m4));
        bool both = covered_by_u(u * reflection_pair(-i, i, m4)) && covered_by_u(u * reflection_pair(-j, j, m4));
        r.check(first || both, "cover dichotomy", one_line(u) + " i=" + str(i) + " j=" + str(j));
      }
  }

  // transport of intervals along shape equivalence
  {
    auto rng = make_rng(4);
    const int src = m3;
    const int dst = std::min(n + 1, 5);
    const auto targets = all_signed_permutations(dst);
    std::vector<SignedPermutation> zetas;
    for (const auto& z : b3)
      if (!z.is_identity()) zetas.push_back(z);
    for (int s = 0; s < 50; ++s) {
      const auto& z = zetas[rng() % zetas.size()];
      std::vector<SignedPermutation> us;
      for (const auto& u : all_signed_permutations(src))
        if (leq0(u, z * u)) us.push_back(u);
      const auto& u = us[rng() % us.size()];
      auto canon = shape_canonical(z);
      const int k = static_cast<int>(canon.support.size());
      std::vector<int> pool(static_cast<std::size_t>(dst));
      for (int i = 0; i < dst; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
      std::vector<int> P;
      std::sample(pool.begin(), pool.end(), std::back_inserter(P), k, rng);
      auto z2 = epsilon_P(canon.form.embedded(k), P).embedded(dst);
      std::vector<SignedPermutation> xs;
      for (const auto& x : targets)
        if (leq0(x, z2 * x)) xs.push_back(x);
      const auto& x = xs[rng() % xs.size()];
      bool ok = false;
      std::string err;
      try {
        ok = transport_check(u, z * u, x, z2 * x);
      } catch (const Error& e) {
        err = e.what();
      }
      r.check(ok, "transport along shape equivalence",
              one_line(u) + " -> " + one_line(z * u) + " vs " + one_line(x) + " -> " + one_line(z2 * x), "isomorphic",
              err);
    }
  }

  // k-Bruhat with k = 1 does not transport
  {
    auto a = k_bruhat_interval(parse_one_line("3,-2,1,4"), parse_one_line("3,-4,1,2"), 1);
    auto b = k_bruhat_interval(parse_one_line("1,-2,4,3"), parse_one_line("1,-4,2,3"), 1);
    auto u1 = parse_one_line("3,-2,1,4"), w1 = parse_one_line("3,-4,1,2");
    auto u2 = parse_one_line("1,-2,4,3"), w2 = parse_one_line("1,-4,2,3");
    r.check(shape_equivalent(w1 * u1.inverse(), w2 * u2.inverse()), "1-Bruhat control pairs are shape equivalent",
            "3,-2,1,4 -> 3,-4,1,2 ; 1,-2,4,3 -> 1,-4,2,3");
    r.check(!isomorphic(a, b), "1-Bruhat control intervals differ",
            "3,-2,1,4 -> 3,-4,1,2 ; 1,-2,4,3 -> 1,-4,2,3", "non-isomorphic",
            str(a.nodes.size()) + " vs " + str(b.nodes.size()) + " elements");
  }
  return r;
}

// ---- chains -------------------------------------------------------------------------

VerifyReport chains_suite(int n) {
  check_rank(n, 1, 5);
  VerifyReport r;
  r.suite = "chains";
  const int m = std::min(n, 4);
  const auto all = all_signed_permutations(m);
  std::vector<StatCounts> stats;
  stats.reserve(all.size());
  for (const auto& z : all) stats.push_back(stat_counts(z));
  auto index = [&](const SignedPermutation& z) {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), z) - all.begin());
  };

  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& z = all[i];
    const auto& s = stats[i];
    const auto cn = cycle_notation(z, true);
    auto cls = classify(z);
    r.check(s.peakless == cls.theta, "peakless chains count theta", cn, str(cls.theta), str(s.peakless));
    r.check(s.increasing == cls.chi, "increasing chains count chi", cn, str(cls.chi), str(s.increasing));
    r.check(s.decreasing == cls.chi, "decreasing chains count chi", cn, str(cls.chi), str(s.decreasing));
    r.check(s.by_descentset == s.by_ascentset, "descent and ascent histograms agree", cn, show(s.by_descentset),
            show(s.by_ascentset));

    auto same_hist = [&](const SignedPermutation& y, const std::string& how) {
      const auto& t = stats[index(y)];
      const auto in = cn + " " + how + " " + cycle_notation(y);
      r.check(t.by_peakset == s.by_peakset, "peak histogram under " + how, in, show(s.by_peakset), show(t.by_peakset));
      r.check(t.by_descentset == s.by_descentset, "descent histogram under " + how, in, show(s.by_descentset),
              show(t.by_descentset));
    };
    auto rh = rho(m);
    same_hist(rh * z * rh, "rho");
    if (delta(z) == 1) {
      auto g = gamma_cycle(m), gi = gamma_cycle(m).inverse();
      auto y = z;
      for (int k = 1; k < m; ++k) {
        y = g * y * gi;
        same_hist(y, "gamma");
      }
    }

    if (is_single_cycle(z) && is_minimal_cycle(z)) {
      auto iv = lagrangian_interval(z, LabelMode::Order);
      auto peakless = collect_chains(iv, ChainFilter::of(FilterKind::Peakless));
      r.check(peakless.size() == 1, "minimal cycle has one peakless chain", cn, "1", str(peakless.size()));
      if (peakless.size() == 1 && delta(z) == 0) {
        const auto& c = peakless.front();
        auto lo = std::min_element(c.stat.labels.begin(), c.stat.labels.end()) - c.stat.labels.begin();
        auto from = iv.nodes[static_cast<std::size_t>(c.path[static_cast<std::size_t>(lo)])];
        auto to = iv.nodes[static_cast<std::size_t>(c.path[static_cast<std::size_t>(lo) + 1])];
        auto g = generator_of(to * from.inverse());
        r.check(g.a == g.b, "smallest label on a sign-changing cover", cn + " chain " + join(c.stat.labels), "t_b",
                to_string(MonoidWord{{g}}));
      }
    }
  }

  // disjoint products
  std::vector<std::vector<int>> supports;
  for (const auto& z : all) supports.push_back(support(z));
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].is_identity()) continue;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[j].is_identity() || !disjoint_supports(all[i], all[j])) continue;
      auto p = all[i] * all[j];
      if (!(p == all[j] * all[i])) continue;
      if (lagrangian_rank(p) != lagrangian_rank(all[i]) + lagrangian_rank(all[j])) continue;
      const auto& sp = stats[index(p)];
      const auto in = cycle_notation(all[i]) + " * " + cycle_notation(all[j]);
      long long pi = 2 * stats[i].peakless * stats[j].peakless;
      long long inc = stats[i].increasing * stats[j].increasing;
      r.check(sp.peakless == pi, "peakless chains of a disjoint product", in, str(pi), str(sp.peakless));
      r.check(sp.increasing == inc, "increasing chains of a disjoint product", in, str(inc), str(sp.increasing));
    }
  }

  // shuffles of peakless words over disjoint alphabets
  {
    auto rng = make_rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> letters{1, 2, 3, 4, 5, 6, 7, 8};
      std::shuffle(letters.begin(), letters.end(), rng);
      const std::size_t la = 1 + rng() % 4, lb = 1 + rng() % 4;
      std::vector<int> a(letters.begin(), letters.begin() + static_cast<long>(la));
      std::vector<int> b(letters.begin() + static_cast<long>(la), letters.begin() + static_cast<long>(la + lb));
      long long count = 0;
      for (const auto& w : shuffles(a, b)) count += is_peakless(w);
      long long expected = is_peakless(a) && is_peakless(b) ? 2 : 0;
      r.check(count == expected, "peakless shuffles", join(a) + " | " + join(b), str(expected), str(count));
    }
  }
  return r;
}

// ---- pieri ---------------------------------------------------------------------------

VerifyReport pieri_suite(int n) {
  check_rank(n, 1, 5);
  VerifyReport r;
  r.suite = "pieri";
  const int m4 = std::min(n, 4);
  for (const auto& u : all_signed_permutations(m4)) {
    const auto ou = one_line(u);
    for (int m = 1; m <= m4; ++m) {
      const auto in = ou + " m=" + str(m);
      auto bc = pieri(u, m, Basis::B);
      auto bm = pieri(u, m, Basis::B, PieriMethod::Minimal);
      r.check(bc == bm, "B chains against minimal", in, show(bm), show(bc));
      auto cd = pieri(u, m, Basis::C, PieriMethod::Chains, PieriVariant::NoDescent);
      auto ca = pieri(u, m, Basis::C, PieriMethod::Chains, PieriVariant::NoAscent);
      auto cm = pieri(u, m, Basis::C, PieriMethod::Minimal);
      r.check(cd == cm, "C no-descent against minimal", in, show(cm), show(cd));
      r.check(ca == cd, "C no-ascent against no-descent", in, show(cd), show(ca));
    }
    for (auto basis : {Basis::B, Basis::C})
      r.check(chevalley(u, basis) == pieri(u, 1, basis), "Chevalley against Pieri", ou,
              show(chevalley(u, basis)), show(pieri(u, 1, basis)));
  }

  const int k = std::min(n, 3);
  const auto bk = all_signed_permutations(k);
  for (const auto& u : bk)
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b)
        for (auto basis : {Basis::B, Basis::C}) {
          auto x = pieri(pieri(u, a, basis), b);
          auto y = pieri(pieri(u, b, basis), a);
          r.check(x == y, "products commute", one_line(u) + " a=" + str(a) + " b=" + str(b), show(x), show(y));
        }

  // chain counts through structure constants, and integrality of b
  const auto e = SignedPermutation(k);
  std::map<StrictPartition, FG> from_e;
  for (int d = 0; d <= k * k; ++d)
    for (const auto& lam : strict_partitions(d, k)) from_e[lam] = count_f_g(e, grassmannian(lam, k));
  for (const auto& u : bk)
    for (const auto& w : bk) {
      if (!leq0(u, w)) continue;
      const auto in = one_line(u) + " <= " + one_line(w);
      auto fg = count_f_g(u, w);
      long long f = 0, g = 0;
      for (const auto& lam : strict_partitions(length(w) - length(u), k)) {
        try {
          f += from_e[lam].f * structure_constant(u, w, lam, Basis::B);
          r.check(true, "b integrality", in);
        } catch (const Error& ex) {
          r.check(false, "b integrality", in + " lambda=" + to_string(lam), "exact", ex.what());
        }
        g += from_e[lam].g * structure_constant(u, w, lam, Basis::C);
      }
      r.check(f == fg.f, "order chains through b", in, str(fg.f), str(f));
      r.check(g == fg.g, "reseau chains through c", in, str(fg.g), str(g));
    }

  // monomial products against chain statistics
  std::map<std::pair<SignedPermutation, SignedPermutation>, std::pair<Histogram, Histogram>> hist;
  for (const auto& u : bk)
    for (const auto& w : bk) {
      if (!leq0(u, w)) continue;
      auto& [peaks, descents] = hist[{u, w}];
      enumerate_chains(zero_bruhat_interval(u, w, LabelMode::Order), ChainFilter::all(),
                       [&](const Chain& c) { ++peaks[c.stat.peaks]; });
      enumerate_chains(zero_bruhat_interval(u, w, LabelMode::Reseau), ChainFilter::all(),
                       [&](const Chain& c) { ++descents[c.stat.descents]; });
    }
  std::vector<std::vector<int>> compositions{{}};
  for (std::size_t i = 0; i < compositions.size(); ++i) {
    int total = 0;
    for (int x : compositions[i]) total += x;
    for (int part = 1; part <= k && total + part <= k * k; ++part) {
      auto c = compositions[i];
      c.push_back(part);
      compositions.push_back(std::move(c));
    }
  }
  for (const auto& u : bk)
    for (const auto& alpha : compositions) {
      if (alpha.empty()) continue;
      int total = 0;
      for (int x : alpha) total += x;
      auto sorted = alpha;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      const auto allowed = partial_sums(alpha);
      const auto peak_allowed = peak_positions(alpha);
      const auto in = one_line(u) + " alpha=" + join(alpha);
      for (auto basis : {Basis::B, Basis::C}) {
        auto prod = multiply_q_monomial(SchubertVector::of(basis, u), alpha);
        auto ref = multiply_q_monomial(SchubertVector::of(basis, u), sorted);
        r.check(prod == ref, "product depends only on the parts", in, show(ref), show(prod));
        SchubertVector counted(basis, k);
        for (const auto& w : bk) {
          auto it = hist.find({u, w});
          if (it == hist.end() || length(w) - length(u) != total) continue;
          counted.add(w, count_subsets(basis == Basis::B ? it->second.first : it->second.second,
                                       basis == Basis::B ? peak_allowed : allowed));
        }
        r.check(prod == counted, basis == Basis::B ? "p products count peak sets" : "q products count descent sets",
                in, show(counted), show(prod));
      }
    }
  return r;
}

// ---- schur ---------------------------------------------------------------------------

VerifyReport schur_suite(int n) {
  check_rank(n, 1, 5);
  VerifyReport r;
  r.suite = "schur";
  auto evaluate = [](const QPolynomial& p, int rank) {
    SchubertVector out(Basis::C, rank);
    const auto e = SchubertVector::of(Basis::C, SignedPermutation(rank));
    for (const auto& [mono, c] : p.terms()) out += c * multiply_q_monomial(e, mono);
    return out;
  };
  const int N = 5;
  for (int d = 1; d <= N; ++d)
    for (const auto& lam : strict_partitions(d, N)) {
      auto got = evaluate(q_expansion(lam), N);
      auto want = SchubertVector::of(Basis::C, grassmannian(lam, N));
      r.check(got == want, "Q_lambda is a Schubert class", "(" + to_string(lam) + ")", show(want), show(got));
    }
  for (int m = 1; m <= 4; ++m) {
    QPolynomial rhs;
    for (const auto& lam : strict_partitions(m, m))
      rhs += count_f_g(SignedPermutation(m), grassmannian(lam, m)).g * q_expansion(lam);
    QPolynomial lhs = QPolynomial::one();
    for (int i = 0; i < m; ++i) lhs = lhs * QPolynomial::q(1);
    auto a = evaluate(lhs, m), b = evaluate(rhs, m);
    r.check(a == b, "q_1 power through reseau counts", "m=" + str(m), show(a), show(b));
  }
  return r;
}

// ---- monoid --------------------------------------------------------------------------

VerifyReport monoid_suite(int n) {
  check_rank(n, 1, 5);
  VerifyReport r;
  r.suite = "monoid";
  r.merge(relations_suite(n));

  // words up to length 4 are determined by their value at e
  {
    const int m = std::min(n, 4);
    OperatorTable table(m);
    const int e = table.index_of(SignedPermutation(m));
    std::map<int, std::pair<MonoidWord, std::vector<int>>> by_value;
    std::vector<MonoidWord> layer{MonoidWord{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<MonoidWord> next;
      for (const auto& w : layer)
        for (const auto& g : table.gens()) {
          auto x = w;
          x.letters.push_back(g);
          next.push_back(std::move(x));
        }
      for (const auto& w : next) {
        auto values = table.evaluate(w);
        auto [it, fresh] = by_value.emplace(values[static_cast<std::size_t>(e)], std::pair{w, values});
        if (!fresh)
          r.check(it->second.second == values, "word determined by its value at e",
                  to_string(w) + " vs " + to_string(it->second.first));
      }
      layer = std::move(next);
    }
  }

  // every element is a value at e, and chains give words
  {
    const int m = std::min(n, 3);
    OperatorTable table(m);
    std::vector<bool> seen(table.elements().size(), false);
    std::deque<int> queue{table.index_of(SignedPermutation(m))};
    seen[static_cast<std::size_t>(queue.front())] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < table.gens().size(); ++g) {
        int y = table.apply(static_cast<int>(g), x);
        if (y >= 0 && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          queue.push_back(y);
        }
      }
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      r.check(seen[i], "reached from e", cycle_notation(table.elements()[i], true));

    for (const auto& z : table.elements()) {
      const auto cn = cycle_notation(z, true);
      MonoidWord w;
      for (const auto& step : greedy_chain(z)) w.letters.push_back(generator_of(step.before * step.after.inverse()));
      auto v = op_apply(w, SignedPermutation(m));
      r.check(v && *v == z, "greedy word reaches zeta", cn + " word " + to_string(w), cycle_notation(z),
              v ? cycle_notation(*v) : "0");
      auto words = reduced_decompositions(z);
      auto chains = count_chains(lagrangian_interval(z, LabelMode::Order), ChainFilter::all());
      r.check(static_cast<long long>(words.size()) == chains, "one word per maximal chain", cn, str(chains),
              str(words.size()));
      for (const auto& x : words) {
        auto y = op_apply(x, SignedPermutation(m));
        r.check(y && *y == z, "reduced word reaches zeta", cn + " word " + to_string(x));
      }
    }
  }
  return r;
}

// ---- structure constants -----------------------------------------------------------

VerifyReport symmetry_battery(int n) {
  check_rank(n, 1, 5);
  VerifyReport r;
  r.suite = "symmetry";
  for (const auto& z : all_signed_permutations(n)) {
    const int L = lagrangian_rank(z);
    for (const auto& lam : strict_partitions(L, L)) {
      try {
        r.merge(symmetry_suite(z, lam));
      } catch (const Error& ex) {
        r.check(false, "constants computable", cycle_notation(z, true) + " lambda=(" + to_string(lam) + ")", "",
                ex.what());
      }
    }
  }
  return r;
}

// ---- examples ------------------------------------------------------------------------

VerifyReport examples_suite() {
  VerifyReport r;
  r.suite = "examples";
  {
    auto u = parse_one_line("3,-1,2");
    const std::vector<std::string> classes{"-3,-2,1", "2,-3,1", "3,-2,-1", "-1,-3,2"};
    const std::vector<long long> b{2, 1, 1, 1}, c{2, 2, 1, 1};
    auto pb = pieri(u, 2, Basis::B), pc = pieri(u, 2, Basis::C);
    SchubertVector wb(Basis::B, 3), wc(Basis::C, 3);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      wb.add(parse_one_line(classes[i]), b[i]);
      wc.add(parse_one_line(classes[i]), c[i]);
    }
    r.check(pb == wb, "B product of 3,-1,2 with p_2", "3,-1,2 m=2", show(wb), show(pb));
    r.check(pc == wc, "C product of 3,-1,2 with q_2", "3,-1,2 m=2", show(wc), show(pc));
  }
  {
    const std::vector<std::string> zs{"<1,2><3]", "<1,3,2>", "<1,2]", "<1,3]"};
    const std::vector<long long> th{2, 1, 1, 1}, ch{2, 2, 1, 1};
    for (std::size_t i = 0; i < zs.size(); ++i) {
      auto cls = classify(parse_cycles(zs[i]));
      r.check(cls.theta == th[i], "theta", zs[i], str(th[i]), str(cls.theta));
      r.check(cls.chi == ch[i], "chi", zs[i], str(ch[i]), str(cls.chi));
    }
  }
  {
    const Histogram peaks{{{2}, 1}, {{2, 4}, 1}, {{3}, 2}, {{4}, 1}};
    const std::vector<long long> descents{0, 2, 6, 4, 6, 12, 8, 2, 2, 8, 12, 6, 4, 6, 2, 0};
    for (const auto* zs : {"<1,3,4><2]", "<1,4,2><3]"}) {
      auto s = stat_counts(parse_cycles(zs));
      r.check(s.reseau_chains == 80, "reseau chains", zs, "80", str(s.reseau_chains));
      r.check(s.order_chains == 5, "order chains", zs, "5", str(s.order_chains));
      r.check(s.by_peakset == peaks, "peak sets", zs, show(peaks), show(s.by_peakset));
      auto dv = histogram_vector(s.by_descentset, 4);
      r.check(dv == descents, "descent vector", zs, join(descents), join(dv));
      r.check(s.by_ascentset == s.by_descentset, "ascent sets equal descent sets", zs);
    }
    auto z = parse_cycles("<1,3,4><2]");
    r.check(rho(4) * z * rho(4) == parse_cycles("<1,4,2><3]"), "rho conjugate", "<1,3,4><2]");
  }
  {
    for (const auto* zs : {"<1,2,4,3>", "<1,4,2,3>"}) {
      auto s = stat_counts(parse_cycles(zs));
      auto at = [](const Histogram& h, std::vector<int> k) {
        auto it = h.find(k);
        return it == h.end() ? 0LL : it->second;
      };
      r.check(s.reseau_chains == 16, "reseau chains", zs, "16", str(s.reseau_chains));
      r.check(s.order_chains == 2, "order chains", zs, "2", str(s.order_chains));
      r.check(s.peakless == 1, "peakless chains", zs, "1", str(s.peakless));
      r.check(at(s.by_peakset, {2}) == 1, "peak set {2}", zs, "1", str(at(s.by_peakset, {2})));
      r.check(s.increasing == 2, "increasing chains", zs, "2", str(s.increasing));
      r.check(s.decreasing == 2, "decreasing chains", zs, "2", str(s.decreasing));
      r.check(at(s.by_descentset, {1}) == 6, "descent set {1}", zs, "6", str(at(s.by_descentset, {1})));
      r.check(at(s.by_descentset, {2}) == 6, "descent set {2}", zs, "6", str(at(s.by_descentset, {2})));
    }
    auto z = parse_cycles("<1,2,4,3>");
    auto g = gamma_cycle(4);
    bool conj = false;
    auto y = z;
    for (int i = 1; i < 4; ++i) conj = conj || (y = g * y * g.inverse()) == parse_cycles("<1,4,2,3>");
    r.check(conj, "gamma conjugate", "<1,2,4,3>");
  }
  {
    auto z = parse_cycles("<1,2,5,3,4>");
    std::vector<std::string> got;
    for (const auto& c : collect_chains(lagrangian_interval(z, LabelMode::Reseau), ChainFilter::of(FilterKind::NoDescent)))
      got.push_back("(" + join(c.stat.labels) + ")");
    const std::vector<std::string> want{"(-3,-2,-1,5)", "(-3,-2,2,5)"};
    r.check(got == want, "increasing chains", "<1,2,5,3,4>", join(want, " "), join(got, " "));
  }
  {
    r.check(reduced_decompositions(parse_cycles("<1,3,4><2]")).size() == 5, "reduced words", "<1,3,4><2]");
    r.check(reduced_decompositions(parse_cycles("<1,2,4,3>")).size() == 2, "reduced words", "<1,2,4,3>");
    auto q = q_expansion(StrictPartition({2, 1}));
    r.check(to_string(q) == "-2*q3 + q2*q1", "Q_21", "(2,1)", "-2*q3 + q2*q1", to_string(q));
  }
  return r;
}

// ---- dispatch ------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core",  "factor", "orders",   "chains",  "pieri",
                                              "schur", "monoid", "symmetry", "examples"};
  return names;
}

VerifyReport run_suite(std::string_view name, int rank) {
  check_rank(rank, 1, 5);
  Timer t;
  VerifyReport r;
  if (name == "all") {
    r.suite = "all";
    for (const auto& s : suite_names()) r.merge(run_suite(s, rank));
  } else if (name == "core") {
    r = core_suite(rank);
  } else if (name == "factor") {
    r = factor_suite(rank);
  } else if (name == "orders") {
    r = orders_suite(rank);
  } else if (name == "chains") {
    r = chains_suite(rank);
  } else if (name == "pieri") {
    r = pieri_suite(rank);
  } else if (name == "schur") {
    r = schur_suite(rank);
  } else if (name == "monoid") {
    r = monoid_suite(rank);
  } else if (name == "symmetry") {
    r = symmetry_battery(rank);
  } else if (name == "examples") {
    r = examples_suite();
  } else {
    throw ParseError("unknown suite '" + std::string(name) + "'");
  }
  r.seconds = t.seconds();
  return r;
}

}  // namespace isoschub
