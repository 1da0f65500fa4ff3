#pragma once

// Signed permutations (the hyperoctahedral group B_n) and their embeddings.
//
// An element w of B_n is a permutation of {-n,...,-1,1,...,n} with
// w(-a) = -w(a).  It is stored by its window w(1),...,w(n).  Composition
// is (u*v)(a) = u(v(a)).  Elements of different rank are compared and
// multiplied after embedding both into the larger rank, where the new
// letters are fixed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isoschub {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// Strictly decreasing sequence of positive integers.
class StrictPartition {
public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // |lambda|
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }
  bool contains(const StrictPartition& mu) const;  // mu inside this

  auto operator<=>(const StrictPartition&) const = default;

private:
  std::vector<int> parts_;
};

/// All strict partitions of `total` with largest part at most `max_part`.
std::vector<StrictPartition> strict_partitions(int total, int max_part);

std::string to_string(const StrictPartition& lambda);  // "3,1" ; "" for empty
StrictPartition parse_partition(std::string_view text);

class SignedPermutation {
public:
  /// Identity of rank n.
  explicit SignedPermutation(int n = 0);
  /// Throws ParseError if the window is not a signed permutation.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n) { return SignedPermutation(n); }

  int rank() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }

  /// w(a) for a in +-[n]; letters beyond the rank are fixed.
  int operator()(int a) const {
    int m = a < 0 ? -a : a;
    if (m > rank()) return a;
    int v = window_[static_cast<std::size_t>(m - 1)];
    return a < 0 ? -v : v;
  }

  bool is_identity() const;
  /// Same element viewed in B_m, m >= rank().
  SignedPermutation embedded(int m) const;
  /// Smallest rank containing the support.
  SignedPermutation trimmed() const;

  SignedPermutation inverse() const;
  friend SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v);

  /// Equality and ordering ignore trailing fixed letters.
  friend bool operator==(const SignedPermutation& u, const SignedPermutation& v);
  friend std::strong_ordering operator<=>(const SignedPermutation& u, const SignedPermutation& v);

  std::size_t hash() const;

private:
  std::vector<int> window_;
};

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& w) const { return w.hash(); }
};

// ---- notation ------------------------------------------------------------

/// "3,-1,2"
std::string one_line(const SignedPermutation& w);
/// Cycle notation: "<1,3,4><2]"; the identity is "e".  With `with_rank`
/// the rank is appended as " n=4".
std::string cycle_notation(const SignedPermutation& w, bool with_rank = false);

/// One-line form "3,-1,2".  If `rank` is positive the element is embedded
/// into B_rank (which must be at least the window length).
SignedPermutation parse_one_line(std::string_view text, int rank = 0);
/// Cycle form "<1,3,4><2]" with optional " n=4" suffix.  The rank is the
/// explicit one (suffix or `rank` argument) or the largest |entry|.
SignedPermutation parse_cycles(std::string_view text, int rank = 0);
/// Dispatches on the first non-blank character ('<' or 'e' means cycles).
SignedPermutation parse_permutation(std::string_view text, int rank = 0);

// ---- statistics ------------------------------------------------------------

/// Coxeter length in B_n.
int length(const SignedPermutation& w);
/// Inversions of w as a permutation of the totally ordered set +-[n].
int spm_inversions(const SignedPermutation& w);
/// #{i > 0 : w(i) < 0}
int sign_changes(const SignedPermutation& w);
/// {a > 0 : w(a) != a}, increasing.
std::vector<int> support(const SignedPermutation& w);
/// 1 when w maps positive letters to positive letters.
int delta(const SignedPermutation& w);

// ---- reflections ------------------------------------------------------------

struct Reflection {
  enum class Kind { T, Tij, TbarIJ };
  Kind kind = Kind::T;
  int i = 0;  // unused for T
  int j = 0;  // for T this is b

  static Reflection t(int b) { return {Kind::T, 0, b}; }
  static Reflection tij(int i, int j) { return {Kind::Tij, i, j}; }
  static Reflection tbar(int i, int j) { return {Kind::TbarIJ, i, j}; }

  /// As an element of B_n, n >= largest index.
  SignedPermutation as_permutation(int n) const;
  bool operator==(const Reflection&) const = default;
};

std::string to_string(const Reflection& r);

/// t_{ab} = (a,b)(-a,-b) for letters a < b of +-[n], with t_{-b,b} = (-b,b).
SignedPermutation reflection_pair(int a, int b, int n);

// ---- named elements ----------------------------------------------------------

SignedPermutation omega0(int n);
/// rho(i) = i - 1 - n
SignedPermutation rho(int n);
/// gamma(i) = i + 1, gamma(n) = 1
SignedPermutation gamma_cycle(int n);
/// Grassmannian permutation v(lambda) in B_n; requires lambda_1 <= n.
SignedPermutation grassmannian(const StrictPartition& lambda, int n);
/// v_m = v((m))
SignedPermutation special_element(int m, int n);
bool is_grassmannian(const SignedPermutation& v);
/// Inverse of grassmannian(); throws if v is not Grassmannian.
StrictPartition partition_of(const SignedPermutation& v);

// ---- embeddings --------------------------------------------------------------

/// epsilon_{p,q}: B_n -> B_{n+1}, inserting the value q at position p.
SignedPermutation epsilon_pq(const SignedPermutation& w, int p, int q);
/// Left inverse of epsilon_{p,w(p)}: erase position p and value w(p).
SignedPermutation slash_p(const SignedPermutation& w, int p);
/// epsilon_k: S_n -> B_n.  `eta` is a plain permutation window of [n].
SignedPermutation epsilon_k(std::span<const int> eta, int k);
/// iota = epsilon_0.
SignedPermutation iota(std::span<const int> eta);
/// epsilon_P: relabel letter i as P[i-1]; P strictly increasing, #P >= rank.
SignedPermutation epsilon_P(const SignedPermutation& w, std::span<const int> P);

struct ShapeCanonical {
  SignedPermutation form;   // support is exactly {1,...,k}
  std::vector<int> support; // original support
};
ShapeCanonical shape_canonical(const SignedPermutation& w);
bool shape_equivalent(const SignedPermutation& a, const SignedPermutation& b);

/// Every element of B_n, in lexicographic window order.
std::vector<SignedPermutation> all_signed_permutations(int n);
/// Every permutation of {1,...,n} as a window.
std::vector<std::vector<int>> all_plain_permutations(int n);

/// The embedding of S_n in S_{+-n} on the ordered letters +-[n]: dense
/// index of letter a (-n -> 0, ..., -1 -> n-1, 1 -> n, ..., n -> 2n-1).
inline int letter_index(int a, int n) { return a < 0 ? a + n : a + n - 1; }
inline int letter_at(int idx, int n) { return idx < n ? idx - n : idx - n + 1; }

}  // namespace isoschub

template <>
struct std::hash<isoschub::SignedPermutation> {
  std::size_t operator()(const isoschub::SignedPermutation& w) const { return w.hash(); }
};
