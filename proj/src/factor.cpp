#include "isoschub/factor.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "isoschub/orders.hpp"

namespace isoschub {

std::vector<SpmCycle> spm_cycles(const SignedPermutation& w) {
  const int n = w.rank();
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  std::vector<SpmCycle> out;
  auto visit = [&](int start) {
    SpmCycle c;
    int x = start;
    do {
      c.elements.push_back(x);
      seen[static_cast<std::size_t>(letter_index(x, n))] = 1;
      x = w(x);
    } while (x != start);
    c.self_mirrored = std::find(c.elements.begin(), c.elements.end(), -start) != c.elements.end();
    out.push_back(std::move(c));
  };
  for (int m = 1; m <= n; ++m) {
    for (int a : {m, -m}) {
      if (seen[static_cast<std::size_t>(letter_index(a, n))] || w(a) == a) continue;
      // start paired cycles at their entry of least absolute value
      visit(a);
    }
  }
  return out;
}

namespace {

using Block = std::set<int>;

bool crossing(const Block& p, const Block& q) {
  // a < c < b < d with a, b in p and c, d in q
  auto one_way = [](const Block& x, const Block& y) {
    for (auto a = x.begin(); a != x.end(); ++a)
      for (auto b = std::next(a); b != x.end(); ++b) {
        auto c = y.upper_bound(*a);
        if (c == y.end() || *c >= *b) continue;
        if (y.upper_bound(*b) != y.end()) return true;
      }
    return false;
  };
  return one_way(p, q) || one_way(q, p);
}

}  // namespace

Factorization irreducible_factors(const SignedPermutation& zeta) {
  const int n = zeta.rank();
  std::vector<Block> blocks;
  for (const auto& c : spm_cycles(zeta)) blocks.emplace_back(c.elements.begin(), c.elements.end());

  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < blocks.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < blocks.size() && !merged; ++j)
        if (crossing(blocks[i], blocks[j])) {
          blocks[i].insert(blocks[j].begin(), blocks[j].end());
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
  }

  Factorization f{zeta, {}};
  std::set<int> done;  // smallest positive letter of each emitted factor
  for (const auto& b : blocks) {
    std::set<int> letters;
    for (int a : b) letters.insert(a < 0 ? -a : a);
    if (done.count(*letters.begin())) continue;
    done.insert(*letters.begin());
    std::vector<int> window(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a) window[static_cast<std::size_t>(a - 1)] = letters.count(a) ? zeta(a) : a;
    Factor fac{SignedPermutation(std::move(window)), {letters.begin(), letters.end()}, 0, false};
    fac.delta = delta(fac.perm);
    fac.minimal_cycle = is_minimal_cycle(fac.perm);
    f.factors.push_back(std::move(fac));
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const Factor& a, const Factor& b) { return a.support.front() < b.support.front(); });
  return f;
}

bool is_single_cycle(const SignedPermutation& zeta) {
  auto cycles = spm_cycles(zeta);
  if (cycles.size() == 1) return cycles.front().self_mirrored;
  return cycles.size() == 2 && !cycles.front().self_mirrored;
}

bool is_minimal_cycle(const SignedPermutation& zeta) {
  if (!is_single_cycle(zeta)) return false;
  return lagrangian_rank(zeta) == static_cast<int>(support(zeta).size()) - delta(zeta);
}

Classification classify(const SignedPermutation& zeta) {
  Classification c;
  c.delta = delta(zeta);
  auto f = irreducible_factors(zeta);
  c.factor_count = static_cast<int>(f.factors.size());
  c.minimal = std::all_of(f.factors.begin(), f.factors.end(), [](const Factor& x) { return x.minimal_cycle; });
  if (!c.minimal) return c;
  if (f.factors.empty()) {
    c.theta = c.chi = 1;
    return c;
  }
  int with_delta = 0;
  for (const auto& x : f.factors) with_delta += x.delta;
  c.theta = 1LL << (c.factor_count - 1);
  c.chi = 1LL << with_delta;
  return c;
}

long long theta(const SignedPermutation& zeta) { return classify(zeta).theta; }
long long chi(const SignedPermutation& zeta) { return classify(zeta).chi; }

SkewShapeResult skew_shape(const SignedPermutation& zeta) {
  const int n = zeta.rank();
  const int L = lagrangian_rank(zeta);
  SkewShapeResult result;
  result.search_cap = static_cast<int>(support(zeta).size());

  std::vector<std::pair<SignedPermutation, std::string>> candidates;
  candidates.emplace_back(shape_canonical(zeta).form, "direct");
  if (n > 0) {
    auto r = rho(n);
    candidates.emplace_back(shape_canonical(r * zeta * r).form, "rho");
    if (delta(zeta) == 1) {
      auto g = gamma_cycle(n);
      auto gi = g.inverse();
      SignedPermutation conj = zeta;
      for (int i = 1; i < n; ++i) {
        conj = g * conj * gi;
        candidates.emplace_back(shape_canonical(conj).form, "gamma^" + std::to_string(i));
      }
    }
  }

  // Positions where v(kappa) and v(mu) agree can be erased with slash_p,
  // which keeps both Grassmannian and the product's shape, so every skew
  // shape has a representative with kappa_1 <= #supp(zeta).
  const int cap = result.search_cap;
  for (int outer_size = L; outer_size <= cap * (cap + 1) / 2; ++outer_size) {
    for (const auto& kappa : strict_partitions(outer_size, cap)) {
      for (const auto& mu : strict_partitions(outer_size - L, cap)) {
        if (!kappa.contains(mu)) continue;
        const int N = kappa.largest();
        auto skew = grassmannian(kappa, N) * grassmannian(mu, N).inverse();
        auto canon = shape_canonical(skew).form;
        for (const auto& [cand, via] : candidates) {
          if (canon.rank() == cand.rank() && canon == cand) {
            result.shape = SkewShape{kappa, mu, via};
            return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace isoschub
