#include "isoschub/chains.hpp"

#include <algorithm>
#include <tuple>

namespace isoschub {

namespace {

bool contains(const std::vector<int>& set, int x) { return std::find(set.begin(), set.end(), x) != set.end(); }

bool subset_of(const std::vector<int>& s, const std::vector<int>& allowed) {
  return std::all_of(s.begin(), s.end(), [&](int x) { return contains(allowed, x); });
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ChainStat chain_stat(std::vector<int> labels) {
  ChainStat s;
  const int m = static_cast<int>(labels.size());
  for (int i = 1; i < m; ++i) {
    int x = labels[static_cast<std::size_t>(i - 1)], y = labels[static_cast<std::size_t>(i)];
    if (x == y) throw Error("consecutive chain labels are equal (" + std::to_string(x) + ")");
    (x > y ? s.descents : s.ascents).push_back(i);
    if (i >= 2 && labels[static_cast<std::size_t>(i - 2)] < x && x > y) s.peaks.push_back(i);
  }
  s.labels = std::move(labels);
  return s;
}

bool is_peakless(const std::vector<int>& word) {
  for (std::size_t i = 1; i + 1 < word.size(); ++i)
    if (word[i - 1] < word[i] && word[i] > word[i + 1]) return false;
  return true;
}

bool ChainFilter::accepts(const ChainStat& s) const {
  switch (kind) {
    case FilterKind::All: return true;
    case FilterKind::Peakless: return s.peaks.empty();
    case FilterKind::NoDescent: return s.descents.empty();
    case FilterKind::NoAscent: return s.ascents.empty();
    case FilterKind::PeaksSubset: return subset_of(s.peaks, set);
    case FilterKind::PeaksEqual: return s.peaks == sorted(set);
    case FilterKind::DescentsSubset: return subset_of(s.descents, set);
    case FilterKind::DescentsEqual: return s.descents == sorted(set);
    case FilterKind::AscentsSubset: return subset_of(s.ascents, set);
    case FilterKind::AscentsEqual: return s.ascents == sorted(set);
  }
  return true;
}

bool may_extend(const ChainFilter& f, int prev2, int prev, int next, int position) {
  if (position < 2) return true;
  const int i = position - 1;  // index of prev
  const bool descent = prev > next;
  const bool ascent = prev < next;
  const bool peak = position >= 3 && prev2 < prev && prev > next;
  switch (f.kind) {
    case FilterKind::Peakless: return !peak;
    case FilterKind::NoDescent: return !descent;
    case FilterKind::NoAscent: return !ascent;
    case FilterKind::PeaksSubset: return !peak || contains(f.set, i);
    case FilterKind::DescentsSubset: return !descent || contains(f.set, i);
    case FilterKind::AscentsSubset: return !ascent || contains(f.set, i);
    default: return true;
  }
}

void enumerate_chains(const LabeledInterval& iv, const ChainFilter& filter,
                      const std::function<void(const Chain&)>& visit) {
  if (iv.nodes.empty()) return;
  const int top = iv.top_index();
  std::vector<int> path{iv.bottom_index()};
  std::vector<int> labels;
  std::function<void(int)> walk = [&](int v) {
    if (v == top) {
      auto stat = chain_stat(labels);
      if (filter.accepts(stat)) visit(Chain{path, std::move(stat)});
      return;
    }
    const int m = static_cast<int>(labels.size());
    for (int ei : iv.out[static_cast<std::size_t>(v)]) {
      const auto& e = iv.edges[static_cast<std::size_t>(ei)];
      int prev = m >= 1 ? labels[static_cast<std::size_t>(m - 1)] : 0;
      int prev2 = m >= 2 ? labels[static_cast<std::size_t>(m - 2)] : 0;
      if (m >= 1 && prev == e.label) throw Error("consecutive chain labels are equal (" + std::to_string(prev) + ")");
      if (!may_extend(filter, prev2, prev, e.label, m + 1)) continue;
      path.push_back(e.to);
      labels.push_back(e.label);
      walk(e.to);
      labels.pop_back();
      path.pop_back();
    }
  };
  walk(iv.bottom_index());
}

std::vector<Chain> collect_chains(const LabeledInterval& iv, const ChainFilter& filter) {
  std::vector<Chain> out;
  enumerate_chains(iv, filter, [&](const Chain& c) { out.push_back(c); });
  return out;
}

long long count_chains(const LabeledInterval& iv, const ChainFilter& filter) {
  if (iv.nodes.empty()) return 0;
  switch (filter.kind) {
    case FilterKind::All:
    case FilterKind::Peakless:
    case FilterKind::NoDescent:
    case FilterKind::NoAscent: break;
    default: {
      long long n = 0;
      enumerate_chains(iv, filter, [&](const Chain&) { ++n; });
      return n;
    }
  }
  // Local filters depend on the last two labels only.
  const int top = iv.top_index();
  std::map<std::tuple<int, int, int>, long long> memo;
  std::function<long long(int, int, int, int)> count = [&](int v, int prev2, int prev, int depth) -> long long {
    if (v == top) return 1;
    auto key = std::make_tuple(v, depth >= 2 ? prev2 : 0, depth >= 1 ? prev : 0);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    for (int ei : iv.out[static_cast<std::size_t>(v)]) {
      const auto& e = iv.edges[static_cast<std::size_t>(ei)];
      if (depth >= 1 && prev == e.label) throw Error("consecutive chain labels are equal (" + std::to_string(prev) + ")");
      if (!may_extend(filter, prev2, prev, e.label, depth + 1)) continue;
      total += count(e.to, prev, e.label, depth + 1);
    }
    memo.emplace(key, total);
    return total;
  };
  return count(iv.bottom_index(), 0, 0, 0);
}

FG count_f_g(const SignedPermutation& u, const SignedPermutation& w) {
  FG r;
  r.f = count_chains(zero_bruhat_interval(u, w, LabelMode::Order), ChainFilter::all());
  r.g = count_chains(zero_bruhat_interval(u, w, LabelMode::Reseau), ChainFilter::all());
  return r;
}

StatCounts stat_counts(const SignedPermutation& zeta) {
  StatCounts s;
  auto order = lagrangian_interval(zeta, LabelMode::Order);
  enumerate_chains(order, ChainFilter::all(), [&](const Chain& c) {
    ++s.order_chains;
    ++s.by_peakset[c.stat.peaks];
  });
  auto reseau = lagrangian_interval(zeta, LabelMode::Reseau);
  enumerate_chains(reseau, ChainFilter::all(), [&](const Chain& c) {
    ++s.reseau_chains;
    ++s.by_descentset[c.stat.descents];
    ++s.by_ascentset[c.stat.ascents];
  });
  auto at = [](const Histogram& h, const std::vector<int>& k) {
    auto it = h.find(k);
    return it == h.end() ? 0LL : it->second;
  };
  s.peakless = at(s.by_peakset, {});
  s.increasing = at(s.by_descentset, {});
  s.decreasing = at(s.by_ascentset, {});
  return s;
}

std::vector<long long> histogram_vector(const Histogram& h, int positions) {
  std::vector<long long> v(std::size_t{1} << positions, 0);
  for (const auto& [set, count] : h) {
    std::size_t idx = 0;
    for (int i : set) idx |= std::size_t{1} << (i - 1);
    v.at(idx) += count;
  }
  return v;
}

long long count_subsets(const Histogram& h, const std::vector<int>& allowed) {
  long long total = 0;
  for (const auto& [set, count] : h)
    if (subset_of(set, allowed)) total += count;
  return total;
}

std::vector<std::vector<int>> shuffles(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (i == a.size() && j == b.size()) {
      out.push_back(cur);
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      go(i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      go(i, j + 1);
      cur.pop_back();
    }
  };
  go(0, 0);
  return out;
}

}  // namespace isoschub
