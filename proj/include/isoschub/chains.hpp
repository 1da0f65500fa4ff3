#pragma once

// Saturated chains in labeled intervals and their peak, descent and ascent
// statistics.

#include <functional>
#include <map>
#include <vector>

#include "isoschub/orders.hpp"

namespace isoschub {

/// Index sets are 1-based positions in the label sequence.
struct ChainStat {
  std::vector<int> labels;
  std::vector<int> peaks;     // i in 2..m-1 with a_{i-1} < a_i > a_{i+1}
  std::vector<int> descents;  // i in 1..m-1 with a_i > a_{i+1}
  std::vector<int> ascents;   // i in 1..m-1 with a_i < a_{i+1}
};

/// Throws Error if two consecutive labels are equal.
ChainStat chain_stat(std::vector<int> labels);

bool is_peakless(const std::vector<int>& word);

enum class FilterKind {
  All,
  Peakless,
  NoDescent,
  NoAscent,
  PeaksSubset,
  PeaksEqual,
  DescentsSubset,
  DescentsEqual,
  AscentsSubset,
  AscentsEqual,
};

struct ChainFilter {
  FilterKind kind = FilterKind::All;
  std::vector<int> set;  // for the subset/equal kinds

  static ChainFilter all() { return {}; }
  static ChainFilter of(FilterKind k, std::vector<int> s = {}) { return {k, std::move(s)}; }
  bool accepts(const ChainStat& s) const;
};

/// Can `next` follow a chain whose last two labels are `prev2`, `prev`
/// (pass 0 for missing) without violating a local filter?  Set filters
/// are only checked on complete chains.
bool may_extend(const ChainFilter& f, int prev2, int prev, int next, int position);

struct Chain {
  std::vector<int> path;  // node indices, bottom to top
  ChainStat stat;
};

/// Every maximal chain of the interval accepted by the filter, ordered
/// lexicographically by label sequence.
void enumerate_chains(const LabeledInterval& iv, const ChainFilter& filter,
                      const std::function<void(const Chain&)>& visit);
std::vector<Chain> collect_chains(const LabeledInterval& iv, const ChainFilter& filter);
long long count_chains(const LabeledInterval& iv, const ChainFilter& filter);

struct FG {
  long long f = 0;  // chains in [u,w]_0
  long long g = 0;  // chains in the reseau
};
FG count_f_g(const SignedPermutation& u, const SignedPermutation& w);

using Histogram = std::map<std::vector<int>, long long>;

struct StatCounts {
  long long peakless = 0;    // Pi: peakless chains of the order
  long long increasing = 0;  // I: reseau chains without descents
  long long decreasing = 0;  // D: reseau chains without ascents
  long long order_chains = 0;
  long long reseau_chains = 0;
  Histogram by_peakset;      // order chains
  Histogram by_descentset;   // reseau chains
  Histogram by_ascentset;    // reseau chains
};

/// Statistics of [e,zeta] in the Lagrangian order and reseau.
StatCounts stat_counts(const SignedPermutation& zeta);

/// Exact-set histogram as a vector over subsets of {1..m-1}; subset S sits
/// at index sum_{i in S} 2^{i-1}.
std::vector<long long> histogram_vector(const Histogram& h, int positions);

/// Sum of histogram counts over sets contained in `allowed`.
long long count_subsets(const Histogram& h, const std::vector<int>& allowed);

/// All interleavings of two words.
std::vector<std::vector<int>> shuffles(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace isoschub
