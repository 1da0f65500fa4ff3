#pragma once

// The 0-Bruhat order on B_n, the Lagrangian order, their rank functions and
// labeled intervals (orders and reseaux).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoschub/perm.hpp"

namespace isoschub {

// ---- covers and comparison ---------------------------------------------------

/// Labels of a left reflection t: {b} for (-b,b), {-a,b} for
/// (a,b)(-a,-b) with 0 < a < b.  Other reflections throw.
std::vector<int> reflection_labels(const SignedPermutation& t);

struct Cover {
  SignedPermutation target;
  Reflection reflection;    // right factor u^{-1}w (0-Bruhat) or left factor (Lagrangian)
  std::vector<int> labels;  // reseau labels, increasing
};

/// Upper covers of u in the 0-Bruhat order of B_rank(u).  Results are
/// memoized in a bounded, thread-safe cache.
std::vector<Cover> covers0_up(const SignedPermutation& u);

/// Non-recursive 0-Bruhat comparison.
bool leq0(const SignedPermutation& u, const SignedPermutation& w);

/// Rank in the Lagrangian order.
int lagrangian_rank(const SignedPermutation& zeta);
bool lagrangian_leq(const SignedPermutation& eta, const SignedPermutation& zeta);

/// Upper covers eta -> t*eta in the Lagrangian order inside B_n.
std::vector<Cover> lagrangian_covers_up(const SignedPermutation& eta, int n);

/// u with u <=_0 zeta*u built from the letters a > zeta(a).
SignedPermutation witness_u(const SignedPermutation& zeta);

// ---- greedy chains -------------------------------------------------------------

struct ChainStep {
  SignedPermutation before;
  SignedPermutation after;  // before * t_{ab}
  int a = 0;
  int b = 0;  // a = -b means t_b
};

/// Repeatedly zeta := zeta * t_{ab}; the reversed steps form a saturated
/// chain from e to zeta in the Lagrangian order.
std::vector<ChainStep> greedy_chain(const SignedPermutation& zeta);

/// The same loop in S_{+-n} with plain transpositions (a,b).  Returns the
/// transpositions applied.
std::vector<std::pair<int, int>> greedy_chain_spm(const SignedPermutation& zeta);
/// Rank of zeta in the Grassmann-Bruhat order of S_{+-n}.
int grassmann_rank(const SignedPermutation& zeta);

// ---- S_{+-n} --------------------------------------------------------------------

/// A permutation of +-[n] stored by letter_index.
struct SpmPerm {
  int n = 0;
  std::vector<int> img;

  static SpmPerm identity(int n);
  static SpmPerm from(const SignedPermutation& w);
  int operator()(int a) const { return img[static_cast<std::size_t>(letter_index(a, n))]; }
  /// Right multiplication by the position transposition (a,b).
  SpmPerm swapped(int a, int b) const;
  bool is_signed() const;
  SignedPermutation to_signed() const;
  bool operator==(const SpmPerm&) const = default;
};

int spm_length(const SpmPerm& w);
/// Covers u -> u(a,b) with a < k < b (k = 0 sits between -1 and 1) and
/// length one more.
std::vector<SpmPerm> spm_covers_up(const SpmPerm& u, int k = 0);
/// Non-recursive k-Bruhat comparison on S_{+-n}.
bool spm_leq(const SpmPerm& u, const SpmPerm& w, int k = 0);

// ---- intervals -------------------------------------------------------------------

enum class IntervalKind { ZeroBruhat, Lagrangian, KBruhat };
enum class LabelMode { Order, Reseau };

struct Edge {
  int from = 0;  // node indices
  int to = 0;
  int label = 0;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

struct LabeledInterval {
  IntervalKind kind = IntervalKind::ZeroBruhat;
  LabelMode mode = LabelMode::Order;
  int k = 0;  // for KBruhat
  SignedPermutation bottom;
  SignedPermutation top;
  /// Sorted by rank, then one-line form.
  std::vector<SignedPermutation> nodes;
  std::vector<int> ranks;
  /// Sorted; parallel edges appear for reseau double covers.
  std::vector<Edge> edges;
  /// Outgoing edge indices per node, in label order.
  std::vector<std::vector<int>> out;

  int rank_span() const { return ranks.empty() ? 0 : ranks.back() - ranks.front(); }
  std::optional<int> index_of(const SignedPermutation& v) const;
  int bottom_index() const { return 0; }
  int top_index() const { return static_cast<int>(nodes.size()) - 1; }
};

/// Default node cap; ISOSCHUB_MAX_NODES overrides it.
std::size_t max_interval_nodes();

/// [u,w]_0; throws if u is not below w.
LabeledInterval zero_bruhat_interval(const SignedPermutation& u, const SignedPermutation& w, LabelMode mode);
/// [e,zeta] in the Lagrangian order.
LabeledInterval lagrangian_interval(const SignedPermutation& zeta, LabelMode mode);
/// [u,w] in the k-Bruhat order of B_n; edges carry label 0.
LabeledInterval k_bruhat_interval(const SignedPermutation& u, const SignedPermutation& w, int k);

/// Graded isomorphism of the underlying Hasse diagrams (labels ignored).
bool isomorphic(const LabeledInterval& a, const LabeledInterval& b);

/// Checks that v -> eps_P(v u^{-1}) x carries [u,w]_0 onto [x,z]_0 with
/// edges and relabeled reseau labels preserved.  Throws if the inputs are
/// not comparable or w u^{-1}, z x^{-1} are not shape equivalent.
bool transport_check(const SignedPermutation& u, const SignedPermutation& w, const SignedPermutation& x,
                     const SignedPermutation& z);

}  // namespace isoschub
