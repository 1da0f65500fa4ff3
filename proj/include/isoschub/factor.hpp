#pragma once

// Cycle structure of signed permutations in S_{+-n}, the non-crossing
// closure of the cycle partition, irreducible factorization and the Pieri
// multiplicities theta and chi.

#include <optional>
#include <string>
#include <vector>

#include "isoschub/perm.hpp"

namespace isoschub {

/// A cycle of a signed permutation acting on +-[n].
struct SpmCycle {
  std::vector<int> elements;  // a -> next -> ... (starts at the entry of least absolute value)
  bool self_mirrored = false; // (a,...,c,-a,...,-c)
  bool operator==(const SpmCycle&) const = default;
};

/// Disjoint cycles of w on +-[n], fixed points omitted.  Paired cycles are
/// listed next to their mirror.
std::vector<SpmCycle> spm_cycles(const SignedPermutation& w);

struct Factor {
  SignedPermutation perm;
  std::vector<int> support;
  int delta = 0;
  bool minimal_cycle = false;
};

struct Factorization {
  SignedPermutation zeta;
  std::vector<Factor> factors;
};

/// Irreducible factors of zeta via the non-crossing closure of its cycles.
Factorization irreducible_factors(const SignedPermutation& zeta);

struct Classification {
  int delta = 0;
  bool minimal = false;
  long long theta = 0;
  long long chi = 0;
  int factor_count = 0;
};

/// A single B-cycle (<...> or <...]).
bool is_single_cycle(const SignedPermutation& zeta);
/// Cycle with L(zeta) = #supp(zeta) - delta(zeta).
bool is_minimal_cycle(const SignedPermutation& zeta);

Classification classify(const SignedPermutation& zeta);
long long theta(const SignedPermutation& zeta);
long long chi(const SignedPermutation& zeta);

struct SkewShape {
  StrictPartition outer;  // kappa
  StrictPartition inner;  // mu
  /// Which clause matched: "direct", "rho", or "gamma^i".
  std::string via;
};

struct SkewShapeResult {
  std::optional<SkewShape> shape;
  /// Search bound used for the outer partition's largest part.
  int search_cap = 0;
};

/// Searches mu inside kappa with |kappa| - |mu| = L(zeta) for
/// v(kappa) v(mu)^{-1} shape equivalent to zeta, its rho-conjugate, or (when
/// delta = 1) one of its gamma-power conjugates.  kappa_1 is bounded by
/// #supp(zeta); larger shapes reduce to these by erasing common positions.
SkewShapeResult skew_shape(const SignedPermutation& zeta);

}  // namespace isoschub
