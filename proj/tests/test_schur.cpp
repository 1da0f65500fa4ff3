#include <doctest.h>

#include <functional>

#include "isoschub/chains.hpp"
#include "isoschub/schubert.hpp"
#include "isoschub/schur_pq.hpp"
#include "isoschub/verify.hpp"

using namespace isoschub;

namespace {

/// Integer polynomial in x_1..x_N keyed by exponent vectors.
using XPoly = std::map<std::vector<int>, long long>;

XPoly times(const XPoly& a, const XPoly& b) {
  XPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

XPoly plus(XPoly a, const XPoly& b, long long scale = 1) {
  for (const auto& [e, c] : b) a[e] += scale * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

XPoly one(int N) { return {{std::vector<int>(static_cast<std::size_t>(N), 0), 1}}; }

/// Q_lambda(x_1..x_N) as a sum over marked shifted tableaux.  Letters
/// 1' < 1 < 2' < 2 < ... are encoded 1, 2, 3, 4, ...; odd codes are primed.
/// Rows and columns weakly increase, a primed letter repeats in no row and
/// an unprimed letter in no column.
XPoly schur_q(const StrictPartition& lambda, int N) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = i; j < i + lambda.parts()[static_cast<std::size_t>(i)]; ++j) cells.emplace_back(i, j);
  std::map<std::pair<int, int>, int> entry;
  XPoly out;
  std::vector<int> exps(static_cast<std::size_t>(N), 0);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      out[exps] += 1;
      return;
    }
    auto [i, j] = cells[k];
    for (int code = 1; code <= 2 * N; ++code) {
      const bool primed = code % 2 == 1;
      auto left = entry.find({i, j - 1});
      if (left != entry.end() && (left->second > code || (primed && left->second == code))) continue;
      auto up = entry.find({i - 1, j});
      if (up != entry.end() && (up->second > code || (!primed && up->second == code))) continue;
      entry[{i, j}] = code;
      ++exps[static_cast<std::size_t>((code - 1) / 2)];
      fill(k + 1);
      --exps[static_cast<std::size_t>((code - 1) / 2)];
      entry.erase({i, j});
    }
  };
  fill(0);
  return out;
}

XPoly evaluate(const QPolynomial& p, int N) {
  XPoly out;
  for (const auto& [mono, c] : p.terms()) {
    XPoly term = one(N);
    for (int m : mono) term = times(term, schur_q(StrictPartition({m}), N));
    out = plus(out, term, c);
  }
  return out;
}

std::vector<StrictPartition> strict_of_size(int k) { return k == 0 ? std::vector<StrictPartition>{StrictPartition()} : strict_partitions(k, k); }

}  // namespace

TEST_CASE("expansions of small Q classes") {
  CHECK(q_expansion(StrictPartition({4})) == QPolynomial::q(4));
  auto q21 = q_expansion(StrictPartition({2, 1}));
  CHECK(q21 == QPolynomial::q(2) * QPolynomial::q(1) + (-2) * QPolynomial::q(3));
  CHECK(to_string(q21) == "-2*q3 + q2*q1");
  CHECK(q_expansion(StrictPartition()) == QPolynomial::one());
  CHECK(QPolynomial::q(0) == QPolynomial::one());
  CHECK(QPolynomial::q(-1).is_zero());
}

TEST_CASE("expansions agree with marked shifted tableaux") {
  // a two-variable sanity value: Q_1(x1,x2) = 2x1 + 2x2
  CHECK(schur_q(StrictPartition({1}), 2) == XPoly{{{1, 0}, 2}, {{0, 1}, 2}});
  for (int k = 1; k <= 6; ++k)
    for (const auto& lam : strict_partitions(k, k)) {
      CAPTURE(to_string(lam));
      const int N = std::min(k, 5);
      CHECK(evaluate(q_expansion(lam), N) == schur_q(lam, N));
    }
}

TEST_CASE("Littlewood-Richardson coefficients agree with tableau products") {
  CHECK(lr_coefficient(StrictPartition({1}), StrictPartition({2}), StrictPartition({3}), LRKind::Q) == 2);
  CHECK(lr_coefficient(StrictPartition({1}), StrictPartition({2}), StrictPartition({2, 1}), LRKind::Q) == 1);
  CHECK(lr_coefficient(StrictPartition({1}), StrictPartition({2}), StrictPartition({3}), LRKind::P) == 1);
  CHECK(lr_coefficient(StrictPartition({1}), StrictPartition({2}), StrictPartition({2, 1}), LRKind::P) == 1);
  CHECK_THROWS_AS(lr_coefficient(StrictPartition({1}), StrictPartition({2}), StrictPartition({2}), LRKind::Q), Error);

  for (int total = 1; total <= 5; ++total) {
    const int N = total;
    for (int a = 0; a <= total; ++a)
      for (const auto& mu : strict_of_size(a))
        for (const auto& lam : strict_of_size(total - a)) {
          CAPTURE(to_string(mu));
          CAPTURE(to_string(lam));
          auto lhs = times(schur_q(mu, N), schur_q(lam, N));
          XPoly rhs;
          for (const auto& kappa : strict_partitions(total, total)) {
            long long c = lr_coefficient(mu, lam, kappa, LRKind::Q);
            CHECK(c == lr_coefficient(lam, mu, kappa, LRKind::Q));
            if (mu.empty()) CHECK(c == (kappa == lam ? 1 : 0));
            // P_lambda = 2^{-length} Q_lambda
            const int shift = kappa.length() - mu.length() - lam.length();
            long long p = lr_coefficient(mu, lam, kappa, LRKind::P);
            if (shift >= 0)
              CHECK(p == (c << shift));
            else
              CHECK((p << -shift) == c);
            rhs = plus(rhs, schur_q(kappa, N), c);
          }
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("powers of q_1 expand with reseau chain counts") {
  for (int m = 1; m <= 4; ++m) {
    XPoly lhs = one(m);
    for (int i = 0; i < m; ++i) lhs = times(lhs, schur_q(StrictPartition({1}), m));
    XPoly rhs;
    for (const auto& lam : strict_partitions(m, m)) {
      long long g = count_f_g(SignedPermutation(m), grassmannian(lam, m)).g;
      rhs = plus(rhs, schur_q(lam, m), g);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("schur suite") {
  auto r = schur_suite(5);
  for (const auto& f : r.failures) MESSAGE(f.check << " " << f.inputs << " " << f.actual);
  CHECK(r.ok());
}
