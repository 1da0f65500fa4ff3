#pragma once

// The monoid with zero generated by t_{ab} (0 < a < b) and t_b = t_{bb},
// acting on B_n by left multiplication along covers of the Lagrangian order.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "isoschub/perm.hpp"
#include "isoschub/report.hpp"

namespace isoschub {

struct Generator {
  int a = 0;  // a == b means t_b
  int b = 0;
  auto operator<=>(const Generator&) const = default;

  SignedPermutation reflection(int n) const;
};

/// Letters in written order; the rightmost letter acts first.
struct MonoidWord {
  std::vector<Generator> letters;
  auto operator<=>(const MonoidWord&) const = default;

  MonoidWord reversed() const;
  int max_index() const;
};

/// "t(1).t(2,3)"; the empty word is "e".
std::string to_string(const MonoidWord& w);
MonoidWord parse_word(std::string_view text);

/// t.zeta when zeta -> t zeta is a Lagrangian cover, otherwise zero.
std::optional<SignedPermutation> op_apply(const Generator& g, const SignedPermutation& zeta);
std::optional<SignedPermutation> op_apply(const MonoidWord& w, const SignedPermutation& zeta);

/// Generator whose reflection is t: t_b for (-b,b), t_{ab} for
/// (a,b)(-a,-b) with 0 < a < b.
Generator generator_of(const SignedPermutation& t);

/// All generators with indices at most n.
std::vector<Generator> generators(int n);

/// Generator tables over B_n: next[g][i] is the index of t_g . element i,
/// or -1 for zero.
class OperatorTable {
public:
  explicit OperatorTable(int n);
  int rank() const { return n_; }
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  const std::vector<Generator>& gens() const { return gens_; }
  int index_of(const SignedPermutation& w) const;
  int generator_index(const Generator& g) const;
  /// -1 for zero.
  int apply(int gen, int element) const { return next_[static_cast<std::size_t>(gen)][static_cast<std::size_t>(element)]; }
  int apply(const MonoidWord& w, int element) const;
  /// Values on every element, -1 for zero.
  std::vector<int> evaluate(const MonoidWord& w) const;

private:
  int n_;
  std::vector<SignedPermutation> elements_;
  std::vector<Generator> gens_;
  std::vector<std::vector<int>> next_;
};

/// Checks relations (i)-(vi) and their reversals as operator identities
/// on B_n.
VerifyReport relations_suite(int n);

/// Words of maximal chains of [e,zeta] in the Lagrangian order.
std::set<MonoidWord> reduced_decompositions(const SignedPermutation& zeta);

}  // namespace isoschub
