#include "isoschub/schur_pq.hpp"

#include <algorithm>
#include <functional>

#include "isoschub/schubert.hpp"

namespace isoschub {

QPolynomial QPolynomial::one() {
  QPolynomial p;
  p.add({}, 1);
  return p;
}

QPolynomial QPolynomial::q(int m) {
  QPolynomial p;
  if (m == 0) p.add({}, 1);
  if (m > 0) p.add({m}, 1);
  return p;
}

long long QPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void QPolynomial::add(Monomial m, long long c) {
  if (c == 0) return;
  std::erase(m, 0);
  std::sort(m.begin(), m.end(), std::greater<>());
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(std::move(m), ca * cb);
    }
  return out;
}

QPolynomial operator*(long long c, const QPolynomial& a) {
  QPolynomial out;
  for (const auto& [m, x] : a.terms_) out.add(m, c * x);
  return out;
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  // largest monomials first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    long long mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int x : m) mono += (mono.empty() ? "q" : "*q") + std::to_string(x);
    if (mono.empty()) {
      s += std::to_string(mag);
    } else {
      if (mag != 1) s += std::to_string(mag) + "*";
      s += mono;
    }
  }
  return s;
}

namespace {

// Q_{(r,s)} with r > s >= 0.
QPolynomial two_row(int r, int s) {
  if (s == 0) return QPolynomial::q(r);
  QPolynomial out = QPolynomial::q(r) * QPolynomial::q(s);
  for (int i = 1; i <= s; ++i) out += (i % 2 ? -2 : 2) * (QPolynomial::q(r + i) * QPolynomial::q(s - i));
  return out;
}

QPolynomial pfaffian(const std::vector<std::vector<QPolynomial>>& a, std::vector<int> rows) {
  if (rows.empty()) return QPolynomial::one();
  const int first = rows.front();
  QPolynomial out;
  for (std::size_t j = 1; j < rows.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < rows.size(); ++k)
      if (k != j) rest.push_back(rows[k]);
    auto term = a[static_cast<std::size_t>(first)][static_cast<std::size_t>(rows[j])] * pfaffian(a, rest);
    out += (j % 2 ? 1 : -1) * term;
  }
  return out;
}

}  // namespace

QPolynomial q_expansion(const StrictPartition& lambda) {
  auto parts = lambda.parts();
  if (parts.empty()) return QPolynomial::one();
  if (parts.size() == 1) return QPolynomial::q(parts[0]);
  if (parts.size() % 2) parts.push_back(0);
  const std::size_t k = parts.size();
  std::vector<std::vector<QPolynomial>> a(k, std::vector<QPolynomial>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) a[i][j] = two_row(parts[i], parts[j]);
  std::vector<int> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = static_cast<int>(i);
  return pfaffian(a, rows);
}

long long lr_coefficient(const StrictPartition& mu, const StrictPartition& lambda, const StrictPartition& kappa,
                         LRKind kind) {
  if (mu.size() + lambda.size() != kappa.size())
    throw Error("lr: |mu| + |lambda| must equal |kappa|");
  const int n = std::max({kappa.largest(), mu.largest(), lambda.largest()}) + 1;
  return structure_constant(grassmannian(mu, n), grassmannian(kappa, n), lambda,
                            kind == LRKind::Q ? Basis::C : Basis::B);
}

}  // namespace isoschub
