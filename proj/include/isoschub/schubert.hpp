#pragma once

// Multiplication of Schubert classes by special classes: Chevalley and
// Pieri rules, products with monomials in the special classes, and the
// structure constants b and c.

#include <map>
#include <optional>
#include <vector>

#include "isoschub/perm.hpp"
#include "isoschub/report.hpp"

namespace isoschub {

/// B: odd orthogonal classes (p_m).  C: symplectic classes (q_m).
enum class Basis { B, C };

class SchubertVector {
public:
  SchubertVector(Basis basis, int n) : basis_(basis), n_(n) {}
  static SchubertVector of(Basis basis, const SignedPermutation& w, long long coeff = 1);

  Basis basis() const { return basis_; }
  int rank() const { return n_; }
  const std::map<SignedPermutation, long long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  long long coefficient(const SignedPermutation& w) const;

  void add(const SignedPermutation& w, long long coeff);
  SchubertVector& operator+=(const SchubertVector& o);
  friend SchubertVector operator*(long long c, const SchubertVector& v);
  bool operator==(const SchubertVector& o) const {
    return basis_ == o.basis_ && n_ == o.n_ && terms_ == o.terms_;
  }

private:
  Basis basis_;
  int n_;
  std::map<SignedPermutation, long long> terms_;
};

enum class PieriMethod { Chains, Minimal };
enum class PieriVariant { Peakless, NoDescent, NoAscent };

/// Peakless for B, no descents for C.
PieriVariant default_variant(Basis basis);

SchubertVector chevalley(const SignedPermutation& u, Basis basis);

/// Class of u times p_m (B) or q_m (C).  Chains with an invalid variant
/// for the basis throw.
SchubertVector pieri(const SignedPermutation& u, int m, Basis basis, PieriMethod method = PieriMethod::Chains,
                     std::optional<PieriVariant> variant = std::nullopt);
SchubertVector pieri(const SchubertVector& v, int m, PieriMethod method = PieriMethod::Chains,
                     std::optional<PieriVariant> variant = std::nullopt);

/// v times p_alpha or q_alpha.  Parts above the rank give zero; zero parts
/// are ignored.
SchubertVector multiply_q_monomial(const SchubertVector& v, const std::vector<int>& alpha,
                                   PieriMethod method = PieriMethod::Chains);

/// {alpha_1, alpha_1 + alpha_2, ...} without the total.
std::vector<int> partial_sums(const std::vector<int>& alpha);
/// Positions where a chain cut into peakless pieces of lengths alpha may
/// peak: each partial sum s gives s and s + 1.
std::vector<int> peak_positions(const std::vector<int>& alpha);

/// Chains in [u,w]_0 with peak set inside peak_positions(alpha) (B, order)
/// or descent set inside partial_sums(alpha) (C, reseau).
long long monomial_chain_count(const SignedPermutation& u, const SignedPermutation& w, const std::vector<int>& alpha,
                               Basis basis);

/// b^w_{u,lambda} (B) or c^w_{u,lambda} (C), computed in rank
/// max(rank, lambda_1).
long long structure_constant(const SignedPermutation& u, const SignedPermutation& w, const StrictPartition& lambda,
                             Basis basis);

/// The constant attached to zeta through the witness u <=_0 zeta u.
long long zeta_constant(const SignedPermutation& zeta, const StrictPartition& lambda, Basis basis);

/// Identities among constants of zeta for |lambda| = L(zeta): independence
/// of the witness, rho and gamma conjugation, erasing a common position,
/// and the skew-shape reduction.
VerifyReport symmetry_suite(const SignedPermutation& zeta, const StrictPartition& lambda);

}  // namespace isoschub
