#pragma once

// Slow reference implementations written from the definitions, sharing no
// code with the library beyond the SignedPermutation value type.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "isoschub/perm.hpp"

namespace oracle {

using Window = std::vector<int>;

inline int apply(const Window& w, int a) {
  int v = w[static_cast<std::size_t>(std::abs(a) - 1)];
  return a < 0 ? -v : v;
}

inline Window compose(const Window& u, const Window& v) {
  Window out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = apply(u, v[i]);
  return out;
}

inline Window inverse(const Window& w) {
  Window out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    int v = w[i];
    out[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
  }
  return out;
}

inline Window window(const isoschub::SignedPermutation& w) { return Window(w.window().begin(), w.window().end()); }

/// Every signed window of rank n.
inline std::vector<Window> all_windows(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Window> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Window w = p;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Coxeter length by breadth-first search over the simple generators s_0
/// (negate w(1)) and s_i (swap positions i, i+1).
inline std::map<Window, int> bfs_lengths(int n) {
  Window e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  std::map<Window, int> dist{{e, 0}};
  std::deque<Window> queue{e};
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    std::vector<Window> next;
    auto a = w;
    a[0] = -a[0];
    next.push_back(a);
    for (int i = 0; i + 1 < n; ++i) {
      auto b = w;
      std::swap(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i + 1)]);
      next.push_back(b);
    }
    for (auto& x : next)
      if (dist.emplace(x, dist[w] + 1).second) queue.push_back(x);
  }
  return dist;
}

/// Inversions of w acting on the ordered set -n < ... < -1 < 1 < ... < n.
inline int pair_scan_inversions(const Window& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> letters;
  for (int a = -n; a <= n; ++a)
    if (a != 0) letters.push_back(a);
  int inv = 0;
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      if (apply(w, letters[i]) > apply(w, letters[j])) ++inv;
  return inv;
}

/// Window of the reflection t_{ab} = (a,b)(-a,-b), a < b letters, with
/// t_{-b,b} = (-b,b).
inline Window reflection(int a, int b, int n) {
  Window t(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int v = i;
    if (i == a) v = b;
    else if (i == b) v = a;
    else if (i == -a) v = -b;
    else if (i == -b) v = -a;
    t[static_cast<std::size_t>(i - 1)] = v;
  }
  return t;
}

/// Upper 0-Bruhat covers straight from the definition: right factors
/// (-i,i) and (-i,j)(-j,i), length one more.
inline std::vector<Window> covers0(const Window& u, const std::map<Window, int>& len) {
  const int n = static_cast<int>(u.size());
  std::vector<Window> out;
  for (int i = 1; i <= n; ++i) {
    auto w = compose(u, reflection(-i, i, n));
    if (len.at(w) == len.at(u) + 1) out.push_back(w);
    for (int j = i + 1; j <= n; ++j) {
      auto x = compose(u, reflection(-i, j, n));
      if (len.at(x) == len.at(u) + 1) out.push_back(x);
    }
  }
  return out;
}

/// Reflexive-transitive closure of covers0: below[u] = {w : u <=_0 w}.
inline std::map<Window, std::set<Window>> zero_bruhat_up_sets(int n) {
  auto len = bfs_lengths(n);
  std::map<Window, std::set<Window>> up;
  for (const auto& [u, l] : len) {
    std::set<Window> seen{u};
    std::deque<Window> queue{u};
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto& w : covers0(v, len))
        if (seen.insert(w).second) queue.push_back(w);
    }
    up[u] = std::move(seen);
  }
  return up;
}

/// Lagrangian order and rank from the witness definition:
/// eta <= zeta iff u <=_0 eta u <=_0 zeta u for some u; L(zeta) =
/// l(zeta u) - l(u) for any u <=_0 zeta u.  Without the order only the
/// rank is filled in.
struct Lagrangian {
  std::vector<Window> elements;
  std::map<Window, int> rank;
  std::set<std::pair<Window, Window>> leq;

  explicit Lagrangian(int n, bool with_order = true) {
    elements = all_windows(n);
    auto len = bfs_lengths(n);
    auto up = zero_bruhat_up_sets(n);
    for (const auto& z : elements)
      for (const auto& u : elements) {
        auto zu = compose(z, u);
        if (!up[u].count(zu)) continue;
        rank[z] = len[zu] - len[u];
        if (!with_order) break;
        for (const auto& eta : elements) {
          auto eu = compose(eta, u);
          if (up[u].count(eu) && up[eu].count(zu)) leq.emplace(eta, z);
        }
      }
  }
};

/// {a > 0 : w(a) != a}
inline std::vector<int> support(const Window& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != static_cast<int>(i) + 1) out.push_back(static_cast<int>(i) + 1);
  return out;
}

}  // namespace oracle
