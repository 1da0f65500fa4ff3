#include "isoschub/orders.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <list>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace isoschub {

namespace {

int abs_of(int a) { return a < 0 ? -a : a; }

// Letters of +-[n] in increasing order.
std::vector<int> letters(int n) {
  std::vector<int> out;
  for (int a = -n; a <= n; ++a)
    if (a != 0) out.push_back(a);
  return out;
}

class CoverCache {
public:
  explicit CoverCache(std::size_t capacity) : capacity_(capacity) {}

  std::optional<std::vector<Cover>> find(const std::vector<int>& key) {
    std::lock_guard lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void put(const std::vector<int>& key, const std::vector<Cover>& value) {
    std::lock_guard lock(mutex_);
    if (index_.count(key)) return;
    order_.emplace_front(key, value);
    index_[key] = order_.begin();
    if (index_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = 1469598103934665603ULL;
      for (int x : v) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ULL;
      return h;
    }
  };
  using Entry = std::pair<std::vector<int>, std::vector<Cover>>;

  std::size_t capacity_;
  std::mutex mutex_;
  std::list<Entry> order_;
  std::unordered_map<std::vector<int>, std::list<Entry>::iterator, KeyHash> index_;
};

CoverCache& cover_cache() {
  static CoverCache cache(std::size_t{1} << 20);
  return cache;
}

Reflection reflection_of(int a, int b) {
  if (a == -b) return Reflection::t(b);
  if (a > 0) return Reflection::tij(a, b);
  return Reflection::tbar(-a, b);
}

}  // namespace

std::vector<int> reflection_labels(const SignedPermutation& t) {
  auto supp = support(t);
  if (supp.size() == 1 && t(supp[0]) == -supp[0]) return {supp[0]};
  if (supp.size() == 2) {
    int a = supp[0], b = supp[1];
    if (t(a) == b && t(b) == a) return {-a, b};
  }
  throw Error("unexpected left reflection " + cycle_notation(t));
}

std::vector<Cover> covers0_up(const SignedPermutation& u) {
  std::vector<int> key(u.window().begin(), u.window().end());
  if (auto hit = cover_cache().find(key)) return *hit;

  const int n = u.rank();
  const int lu = length(u);
  const auto uinv = u.inverse();
  std::vector<Cover> out;
  auto consider = [&](int a, int b) {
    auto w = u * reflection_pair(a, b, n);
    if (length(w) != lu + 1) return;
    out.push_back({w, reflection_of(a, b), reflection_labels(w * uinv)});
  };
  for (int j = 1; j <= n; ++j) {
    consider(-j, j);
    for (int i = 1; i < j; ++i) consider(-i, j);
  }
  std::sort(out.begin(), out.end(), [](const Cover& x, const Cover& y) { return x.target < y.target; });
  cover_cache().put(key, out);
  return out;
}

bool leq0(const SignedPermutation& u0, const SignedPermutation& w0) {
  const int n = std::max(u0.rank(), w0.rank());
  auto u = u0.embedded(n);
  auto w = w0.embedded(n);
  for (int i = 1; i <= n; ++i)
    if (u(i) < w(i)) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (u(i) < u(j) && !(w(i) < w(j))) return false;
  return true;
}

int lagrangian_rank(const SignedPermutation& zeta) {
  const int n = zeta.rank();
  const auto ls = letters(n);
  int total = 0;
  // sign sum of zeta*u for the witness u: only letters with a > zeta(a)
  for (int a : ls)
    if (a > zeta(a) && zeta(a) < 0) total += -zeta(a);
  for (int a = 1; a <= n; ++a) {
    if (zeta(a) != a) continue;
    for (int b = a + 1; b <= n; ++b)
      if (a > zeta(b)) --total;
  }
  for (std::size_t i = 0; i < ls.size(); ++i) {
    int a = ls[i];
    if (!(a > zeta(a))) continue;
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      int b = ls[j];
      if (b > zeta(b) && zeta(a) > zeta(b)) --total;
    }
  }
  for (int a = -n; a < 0; ++a)
    if (a > zeta(a)) total -= -a;
  return total;
}

bool lagrangian_leq(const SignedPermutation& eta0, const SignedPermutation& zeta0) {
  const int n = std::max(eta0.rank(), zeta0.rank());
  auto eta = eta0.embedded(n);
  auto zeta = zeta0.embedded(n);
  const auto ls = letters(n);
  for (int a : ls)
    if (a > eta(a) && !(eta(a) >= zeta(a))) return false;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    int a = ls[i];
    if (!(a > zeta(a))) continue;
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      int b = ls[j];
      if (b > zeta(b) && zeta(a) < zeta(b) && !(eta(a) < eta(b))) return false;
    }
  }
  return true;
}

std::vector<Cover> lagrangian_covers_up(const SignedPermutation& eta0, int n) {
  auto eta = eta0.embedded(std::max(n, eta0.rank()));
  n = eta.rank();
  const int L = lagrangian_rank(eta);
  std::vector<Cover> out;
  for (int b = 1; b <= n; ++b) {
    for (int a = -b; a < b; ++a) {
      if (a == 0) continue;
      if (a < 0 && a != -b && -a > b) continue;
      auto t = reflection_pair(a, b, n);
      auto target = t * eta;
      if (lagrangian_rank(target) != L + 1 || !lagrangian_leq(eta, target)) continue;
      out.push_back({target, reflection_of(a, b), reflection_labels(t)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Cover& x, const Cover& y) { return x.target < y.target; });
  return out;
}

SignedPermutation witness_u(const SignedPermutation& zeta) {
  const int n = zeta.rank();
  std::vector<int> low;
  for (int a : letters(n))
    if (a > zeta(a)) low.push_back(a);
  std::sort(low.begin(), low.end(), [&](int x, int y) { return zeta(x) < zeta(y); });
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int a : low) used[static_cast<std::size_t>(abs_of(a))] = 1;
  for (int a = 1; a <= n; ++a)
    if (!used[static_cast<std::size_t>(a)]) low.push_back(a);
  return SignedPermutation(std::move(low));
}

std::vector<ChainStep> greedy_chain(const SignedPermutation& zeta0) {
  const int n = zeta0.rank();
  const auto ls = letters(n);
  SignedPermutation zeta = zeta0;
  std::vector<ChainStep> steps;
  for (;;) {
    int b = 0;
    for (int x = n; x >= 1; --x)
      if (x > zeta(x)) {
        b = x;
        break;
      }
    if (b == 0) break;
    int a = 0;
    for (int x : ls)
      if (x <= zeta(b) && zeta(b) < zeta(x)) {
        a = x;
        break;
      }
    if (a == 0) throw Error("greedy chain: no letter a for b=" + std::to_string(b));
    auto next = zeta * reflection_pair(a, b, n);
    steps.push_back({zeta, next, a, b});
    zeta = next;
    if (steps.size() > static_cast<std::size_t>(2 * n * n + 2)) throw Error("greedy chain did not terminate");
  }
  return steps;
}

std::vector<std::pair<int, int>> greedy_chain_spm(const SignedPermutation& zeta0) {
  const int n = zeta0.rank();
  const auto ls = letters(n);
  auto zeta = SpmPerm::from(zeta0);
  std::vector<std::pair<int, int>> steps;
  for (;;) {
    int b = 0;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
      if (*it > zeta(*it)) {
        b = *it;
        break;
      }
    if (b == 0) break;
    int a = 0;
    for (int x : ls)
      if (x <= zeta(b) && zeta(b) < zeta(x)) {
        a = x;
        break;
      }
    if (a == 0) throw Error("greedy chain: no letter a for b=" + std::to_string(b));
    zeta = zeta.swapped(a, b);
    steps.emplace_back(a, b);
    if (steps.size() > static_cast<std::size_t>(8 * n * n + 2)) throw Error("greedy chain did not terminate");
  }
  return steps;
}

int grassmann_rank(const SignedPermutation& zeta) { return static_cast<int>(greedy_chain_spm(zeta).size()); }

// ---- S_{+-n} ---------------------------------------------------------------------------

SpmPerm SpmPerm::identity(int n) {
  SpmPerm p{n, std::vector<int>(static_cast<std::size_t>(2 * n))};
  for (int i = 0; i < 2 * n; ++i) p.img[static_cast<std::size_t>(i)] = letter_at(i, n);
  return p;
}

SpmPerm SpmPerm::from(const SignedPermutation& w) {
  auto p = identity(w.rank());
  for (int i = 0; i < 2 * p.n; ++i) p.img[static_cast<std::size_t>(i)] = w(letter_at(i, p.n));
  return p;
}

SpmPerm SpmPerm::swapped(int a, int b) const {
  SpmPerm p = *this;
  std::swap(p.img[static_cast<std::size_t>(letter_index(a, n))], p.img[static_cast<std::size_t>(letter_index(b, n))]);
  return p;
}

bool SpmPerm::is_signed() const {
  for (int a = 1; a <= n; ++a)
    if ((*this)(-a) != -(*this)(a)) return false;
  return true;
}

SignedPermutation SpmPerm::to_signed() const {
  if (!is_signed()) throw Error("permutation of +-[n] does not commute with negation");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) w[static_cast<std::size_t>(a - 1)] = (*this)(a);
  return SignedPermutation(std::move(w));
}

int spm_length(const SpmPerm& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.img.size(); ++i)
    for (std::size_t j = i + 1; j < w.img.size(); ++j)
      if (w.img[i] > w.img[j]) ++count;
  return count;
}

std::vector<SpmPerm> spm_covers_up(const SpmPerm& u, int k) {
  const auto ls = letters(u.n);
  const int lu = spm_length(u);
  std::vector<SpmPerm> out;
  for (int a : ls) {
    if (!(a < k)) continue;
    for (int b : ls) {
      if (!(k < b) || !(a < b)) continue;
      auto w = u.swapped(a, b);
      if (spm_length(w) == lu + 1) out.push_back(std::move(w));
    }
  }
  return out;
}

bool spm_leq(const SpmPerm& u, const SpmPerm& w, int k) {
  const auto ls = letters(u.n);
  for (int a : ls) {
    if (a < k && u(a) > w(a)) return false;
    if (k < a && u(a) < w(a)) return false;
  }
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      int a = ls[i], b = ls[j];
      if (u(a) < u(b) && w(a) > w(b) && !(a < k && k < b)) return false;
    }
  return true;
}

// ---- intervals --------------------------------------------------------------------------

std::optional<int> LabeledInterval::index_of(const SignedPermutation& v) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == v) return static_cast<int>(i);
  return std::nullopt;
}

std::size_t max_interval_nodes() {
  if (const char* env = std::getenv("ISOSCHUB_MAX_NODES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

namespace {

struct RawEdge {
  SignedPermutation from;
  SignedPermutation to;
  int label;
};

template <class CoversFn, class KeepFn, class RankFn>
LabeledInterval bfs_interval(const SignedPermutation& bottom, CoversFn covers, KeepFn keep, RankFn rank_of,
                             LabelMode mode) {
  const std::size_t cap = max_interval_nodes();
  std::unordered_set<SignedPermutation> seen{bottom};
  std::vector<SignedPermutation> frontier{bottom};
  std::vector<RawEdge> raw;
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& v : frontier) {
      for (const auto& c : covers(v)) {
        if (!keep(c.target)) continue;
        for (int lab : c.labels)
          if (mode == LabelMode::Reseau || lab > 0) raw.push_back({v, c.target, lab});
        if (seen.insert(c.target).second) {
          if (seen.size() > cap)
            throw Error("interval exceeds " + std::to_string(cap) + " nodes (set ISOSCHUB_MAX_NODES to raise)");
          next.push_back(c.target);
        }
      }
    }
    frontier = std::move(next);
  }

  LabeledInterval iv;
  iv.mode = mode;
  std::vector<std::pair<int, SignedPermutation>> ranked;
  for (const auto& v : seen) ranked.emplace_back(rank_of(v), v);
  std::sort(ranked.begin(), ranked.end());
  std::unordered_map<SignedPermutation, int> index;
  for (const auto& [r, v] : ranked) {
    index.emplace(v, static_cast<int>(iv.nodes.size()));
    iv.nodes.push_back(v);
    iv.ranks.push_back(r);
  }
  for (const auto& e : raw) iv.edges.push_back({index.at(e.from), index.at(e.to), e.label});
  std::sort(iv.edges.begin(), iv.edges.end());
  iv.out.assign(iv.nodes.size(), {});
  for (std::size_t i = 0; i < iv.edges.size(); ++i) {
    const auto& e = iv.edges[i];
    if (iv.ranks[static_cast<std::size_t>(e.to)] != iv.ranks[static_cast<std::size_t>(e.from)] + 1)
      throw Error("interval edge does not join consecutive ranks");
    iv.out[static_cast<std::size_t>(e.from)].push_back(static_cast<int>(i));
  }
  for (auto& o : iv.out)
    std::stable_sort(o.begin(), o.end(), [&](int x, int y) {
      return iv.edges[static_cast<std::size_t>(x)].label < iv.edges[static_cast<std::size_t>(y)].label;
    });
  return iv;
}

}  // namespace

LabeledInterval zero_bruhat_interval(const SignedPermutation& u0, const SignedPermutation& w0, LabelMode mode) {
  const int n = std::max(u0.rank(), w0.rank());
  auto u = u0.embedded(n);
  auto w = w0.embedded(n);
  if (!leq0(u, w)) throw Error(one_line(u) + " is not below " + one_line(w) + " in the 0-Bruhat order");
  auto iv = bfs_interval(
      u, [](const SignedPermutation& v) { return covers0_up(v); },
      [&](const SignedPermutation& v) { return leq0(v, w); }, [](const SignedPermutation& v) { return length(v); },
      mode);
  iv.kind = IntervalKind::ZeroBruhat;
  iv.bottom = u;
  iv.top = w;
  return iv;
}

LabeledInterval lagrangian_interval(const SignedPermutation& zeta, LabelMode mode) {
  const int n = zeta.rank();
  auto iv = bfs_interval(
      SignedPermutation::identity(n), [n](const SignedPermutation& v) { return lagrangian_covers_up(v, n); },
      [&](const SignedPermutation& v) { return lagrangian_leq(v, zeta); },
      [](const SignedPermutation& v) { return lagrangian_rank(v); }, mode);
  iv.kind = IntervalKind::Lagrangian;
  iv.bottom = SignedPermutation::identity(n);
  iv.top = zeta;
  return iv;
}

LabeledInterval k_bruhat_interval(const SignedPermutation& u0, const SignedPermutation& w0, int k) {
  const int n = std::max(u0.rank(), w0.rank());
  auto u = u0.embedded(n);
  auto w = w0.embedded(n);
  const int top_len = length(w);
  auto covers = [&](const SignedPermutation& v) {
    std::vector<Cover> out;
    const int lv = length(v);
    auto consider = [&](int a, int b) {
      auto x = v * reflection_pair(a, b, n);
      if (length(x) == lv + 1 && length(x) <= top_len) out.push_back({x, reflection_of(a, b), {0}});
    };
    for (int j = k + 1; j <= n; ++j) {
      consider(-j, j);
      for (int i = 1; i < j; ++i) {
        consider(-i, j);
        if (i <= k) consider(i, j);
      }
    }
    return out;
  };
  // Everything above u up to the length of w, then keep what lies below w.
  auto up = bfs_interval(u, covers, [](const SignedPermutation&) { return true; },
                         [](const SignedPermutation& v) { return length(v); }, LabelMode::Reseau);
  auto top = up.index_of(w);
  if (!top) throw Error(one_line(u) + " is not below " + one_line(w) + " in the " + std::to_string(k) + "-Bruhat order");
  std::vector<char> below(up.nodes.size(), 0);
  below[static_cast<std::size_t>(*top)] = 1;
  // Edges go from lower to higher rank; sweep nodes from the top down.
  for (int i = static_cast<int>(up.nodes.size()) - 1; i >= 0; --i)
    for (int e : up.out[static_cast<std::size_t>(i)])
      if (below[static_cast<std::size_t>(up.edges[static_cast<std::size_t>(e)].to)]) below[static_cast<std::size_t>(i)] = 1;

  LabeledInterval iv;
  iv.kind = IntervalKind::KBruhat;
  iv.mode = LabelMode::Order;
  iv.k = k;
  iv.bottom = u;
  iv.top = w;
  std::vector<int> remap(up.nodes.size(), -1);
  for (std::size_t i = 0; i < up.nodes.size(); ++i)
    if (below[i]) {
      remap[i] = static_cast<int>(iv.nodes.size());
      iv.nodes.push_back(up.nodes[i]);
      iv.ranks.push_back(up.ranks[i]);
    }
  for (const auto& e : up.edges)
    if (below[static_cast<std::size_t>(e.from)] && below[static_cast<std::size_t>(e.to)])
      iv.edges.push_back({remap[static_cast<std::size_t>(e.from)], remap[static_cast<std::size_t>(e.to)], e.label});
  iv.out.assign(iv.nodes.size(), {});
  for (std::size_t i = 0; i < iv.edges.size(); ++i) iv.out[static_cast<std::size_t>(iv.edges[i].from)].push_back(static_cast<int>(i));
  return iv;
}

bool isomorphic(const LabeledInterval& a, const LabeledInterval& b) {
  const std::size_t N = a.nodes.size();
  if (N != b.nodes.size()) return false;
  auto adjacency = [](const LabeledInterval& iv) {
    std::vector<std::set<int>> up(iv.nodes.size()), down(iv.nodes.size());
    for (const auto& e : iv.edges) {
      up[static_cast<std::size_t>(e.from)].insert(e.to);
      down[static_cast<std::size_t>(e.to)].insert(e.from);
    }
    return std::pair{up, down};
  };
  auto [aup, adown] = adjacency(a);
  auto [bup, bdown] = adjacency(b);
  auto rel = [](const LabeledInterval& iv, std::size_t i) { return iv.ranks[i] - iv.ranks.front(); };
  std::vector<int> map(N, -1);
  std::vector<char> used(N, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == N) return true;
    for (std::size_t j = 0; j < N; ++j) {
      if (used[j] || rel(a, i) != rel(b, j)) continue;
      if (aup[i].size() != bup[j].size() || adown[i].size() != bdown[j].size()) continue;
      bool ok = true;
      // nodes are sorted by rank, so all lower neighbours of i are mapped
      for (int p : adown[i])
        if (!bdown[j].count(map[static_cast<std::size_t>(p)])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[i] = static_cast<int>(j);
      used[j] = 1;
      if (extend(i + 1)) return true;
      used[j] = 0;
      map[i] = -1;
    }
    return false;
  };
  return extend(0);
}

bool transport_check(const SignedPermutation& u, const SignedPermutation& w, const SignedPermutation& x,
                     const SignedPermutation& z) {
  auto src = zero_bruhat_interval(u, w, LabelMode::Reseau);
  auto dst = zero_bruhat_interval(x, z, LabelMode::Reseau);
  const auto z1 = src.top * src.bottom.inverse();
  const auto z2 = dst.top * dst.bottom.inverse();
  if (!shape_equivalent(z1, z2)) throw Error("w u^-1 and z x^-1 are not shape equivalent");
  const auto from = support(z1);
  const auto to = support(z2);
  const int n2 = dst.top.rank();

  auto relabel_letter = [&](int a) -> std::optional<int> {
    auto it = std::lower_bound(from.begin(), from.end(), abs_of(a));
    if (it == from.end() || *it != abs_of(a)) return std::nullopt;
    int img = to[static_cast<std::size_t>(it - from.begin())];
    return a < 0 ? -img : img;
  };
  auto phi = [&](const SignedPermutation& v) -> std::optional<SignedPermutation> {
    auto y = v * src.bottom.inverse();
    std::vector<int> win(static_cast<std::size_t>(n2));
    for (int a = 1; a <= n2; ++a) win[static_cast<std::size_t>(a - 1)] = a;
    for (int a = 1; a <= y.rank(); ++a) {
      if (y(a) == a) continue;
      auto pa = relabel_letter(a);
      auto pv = relabel_letter(y(a));
      if (!pa || !pv || abs_of(*pa) > n2) return std::nullopt;
      win[static_cast<std::size_t>(*pa - 1)] = *pv;
    }
    return SignedPermutation(std::move(win)) * dst.bottom;
  };

  if (src.nodes.size() != dst.nodes.size() || src.edges.size() != dst.edges.size()) return false;
  std::vector<int> image(src.nodes.size());
  std::vector<char> hit(dst.nodes.size(), 0);
  for (std::size_t i = 0; i < src.nodes.size(); ++i) {
    auto v = phi(src.nodes[i]);
    if (!v) return false;
    auto j = dst.index_of(*v);
    if (!j || hit[static_cast<std::size_t>(*j)]) return false;
    hit[static_cast<std::size_t>(*j)] = 1;
    image[i] = *j;
  }
  std::vector<Edge> mapped;
  for (const auto& e : src.edges) {
    auto lab = relabel_letter(e.label);
    if (!lab) return false;
    mapped.push_back({image[static_cast<std::size_t>(e.from)], image[static_cast<std::size_t>(e.to)], *lab});
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == dst.edges;
}

}  // namespace isoschub
