#pragma once

// Schur Q-classes as polynomials in the special classes q_1, q_2, ...

#include <map>
#include <string>
#include <vector>

#include "isoschub/perm.hpp"

namespace isoschub {

/// Integer polynomial in q_1, q_2, ...  A monomial is its multiset of
/// indices sorted decreasingly; the empty monomial is 1.
class QPolynomial {
public:
  using Monomial = std::vector<int>;

  QPolynomial() = default;
  static QPolynomial one();
  /// q_m; q_0 = 1 and q_m = 0 for m < 0.
  static QPolynomial q(int m);

  const std::map<Monomial, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(const Monomial& m) const;
  void add(Monomial m, long long c);

  QPolynomial& operator+=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(long long c, const QPolynomial& a);
  bool operator==(const QPolynomial&) const = default;

private:
  std::map<Monomial, long long> terms_;
};

/// "q2*q1 - 2*q3"
std::string to_string(const QPolynomial& p);

/// Q_lambda in terms of the q_m: two-row formula, Pfaffian beyond.
QPolynomial q_expansion(const StrictPartition& lambda);

enum class LRKind { P, Q };

/// Coefficient of the kappa class in the product of the mu and lambda
/// classes, computed from Grassmannian structure constants.
long long lr_coefficient(const StrictPartition& mu, const StrictPartition& lambda, const StrictPartition& kappa,
                         LRKind kind);

}  // namespace isoschub
