#include "isoschub/schubert.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <tuple>

#include "isoschub/chains.hpp"
#include "isoschub/factor.hpp"
#include "isoschub/orders.hpp"
#include "isoschub/schur_pq.hpp"

namespace isoschub {

SchubertVector SchubertVector::of(Basis basis, const SignedPermutation& w, long long coeff) {
  SchubertVector v(basis, w.rank());
  v.add(w, coeff);
  return v;
}

long long SchubertVector::coefficient(const SignedPermutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void SchubertVector::add(const SignedPermutation& w, long long coeff) {
  if (coeff == 0) return;
  if (w.rank() > n_) throw Error("class " + one_line(w) + " does not lie in B_" + std::to_string(n_));
  auto key = w.embedded(n_);
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
}

SchubertVector& SchubertVector::operator+=(const SchubertVector& o) {
  if (o.basis_ != basis_) throw Error("cannot add Schubert vectors of different types");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

SchubertVector operator*(long long c, const SchubertVector& v) {
  SchubertVector out(v.basis_, v.n_);
  for (const auto& [w, x] : v.terms_) out.add(w, c * x);
  return out;
}

PieriVariant default_variant(Basis basis) {
  return basis == Basis::B ? PieriVariant::Peakless : PieriVariant::NoDescent;
}

SchubertVector chevalley(const SignedPermutation& u, Basis basis) {
  SchubertVector out(basis, u.rank());
  for (const auto& c : covers0_up(u)) out.add(c.target, basis == Basis::B ? 1 : static_cast<long long>(c.labels.size()));
  return out;
}

namespace {

using PieriKey = std::tuple<std::vector<int>, int, int, int, int>;

std::mutex pieri_mutex;
std::map<PieriKey, SchubertVector> pieri_cache;

// With `below`, branches leaving the lower set of *below are cut.
SchubertVector pieri_chains(const SignedPermutation& u, int m, Basis basis, PieriVariant variant,
                            const SignedPermutation* below = nullptr) {
  ChainFilter filter;
  switch (variant) {
    case PieriVariant::Peakless: filter.kind = FilterKind::Peakless; break;
    case PieriVariant::NoDescent: filter.kind = FilterKind::NoDescent; break;
    case PieriVariant::NoAscent: filter.kind = FilterKind::NoAscent; break;
  }
  SchubertVector out(basis, u.rank());
  std::vector<int> labels;
  std::function<void(const SignedPermutation&)> walk = [&](const SignedPermutation& v) {
    const int depth = static_cast<int>(labels.size());
    if (depth == m) {
      out.add(v, 1);
      return;
    }
    int prev = depth >= 1 ? labels[static_cast<std::size_t>(depth - 1)] : 0;
    int prev2 = depth >= 2 ? labels[static_cast<std::size_t>(depth - 2)] : 0;
    for (const auto& c : covers0_up(v)) {
      if (below && !leq0(c.target, *below)) continue;
      for (int lab : c.labels) {
        if (basis == Basis::B && lab < 0) continue;
        if (depth >= 1 && lab == prev) throw Error("consecutive chain labels are equal (" + std::to_string(lab) + ")");
        if (!may_extend(filter, prev2, prev, lab, depth + 1)) continue;
        labels.push_back(lab);
        walk(c.target);
        labels.pop_back();
      }
    }
  };
  walk(u);
  return out;
}

SchubertVector pieri_minimal(const SignedPermutation& u, int m, Basis basis) {
  std::set<SignedPermutation> level{u};
  for (int i = 0; i < m; ++i) {
    std::set<SignedPermutation> next;
    for (const auto& v : level)
      for (const auto& c : covers0_up(v)) next.insert(c.target);
    level = std::move(next);
  }
  SchubertVector out(basis, u.rank());
  const auto uinv = u.inverse();
  for (const auto& w : level) {
    auto cls = classify(w * uinv);
    out.add(w, basis == Basis::B ? cls.theta : cls.chi);
  }
  return out;
}

std::mutex below_mutex;
std::map<std::tuple<std::vector<int>, std::vector<int>, int>, SchubertVector> below_cache;

// The part of u*q_m lying below w.
SchubertVector pieri_below(const SignedPermutation& u, int m, const SignedPermutation& w) {
  std::tuple key{std::vector<int>(u.window().begin(), u.window().end()),
                 std::vector<int>(w.window().begin(), w.window().end()), m};
  {
    std::lock_guard lock(below_mutex);
    if (auto it = below_cache.find(key); it != below_cache.end()) return it->second;
  }
  auto out = pieri_chains(u, m, Basis::C, PieriVariant::NoDescent, &w);
  std::lock_guard lock(below_mutex);
  if (below_cache.size() > (1u << 18)) below_cache.clear();
  below_cache.emplace(std::move(key), out);
  return out;
}

}  // namespace

SchubertVector pieri(const SignedPermutation& u, int m, Basis basis, PieriMethod method,
                     std::optional<PieriVariant> variant) {
  if (m < 0 || m > u.rank())
    throw Error("pieri: m=" + std::to_string(m) + " out of range 0.." + std::to_string(u.rank()));
  const PieriVariant var = variant.value_or(default_variant(basis));
  if (method == PieriMethod::Chains) {
    bool ok = basis == Basis::B ? var == PieriVariant::Peakless : var != PieriVariant::Peakless;
    if (!ok) throw Error("pieri: variant does not apply to this basis");
  }
  PieriKey key{std::vector<int>(u.window().begin(), u.window().end()), m, static_cast<int>(basis),
               static_cast<int>(method), method == PieriMethod::Chains ? static_cast<int>(var) : -1};
  {
    std::lock_guard lock(pieri_mutex);
    if (auto it = pieri_cache.find(key); it != pieri_cache.end()) return it->second;
  }
  auto out = method == PieriMethod::Chains ? pieri_chains(u, m, basis, var) : pieri_minimal(u, m, basis);
  std::lock_guard lock(pieri_mutex);
  pieri_cache.emplace(std::move(key), out);
  return out;
}

SchubertVector pieri(const SchubertVector& v, int m, PieriMethod method, std::optional<PieriVariant> variant) {
  SchubertVector out(v.basis(), v.rank());
  for (const auto& [w, c] : v.terms()) out += c * pieri(w, m, v.basis(), method, variant);
  return out;
}

SchubertVector multiply_q_monomial(const SchubertVector& v, const std::vector<int>& alpha, PieriMethod method) {
  SchubertVector cur = v;
  for (int part : alpha) {
    if (part < 0) throw Error("negative part in composition");
    if (part == 0) continue;
    if (part > v.rank()) return SchubertVector(v.basis(), v.rank());
    cur = pieri(cur, part, method);
    if (cur.empty()) break;
  }
  return cur;
}

std::vector<int> partial_sums(const std::vector<int>& alpha) {
  std::vector<int> out;
  int s = 0;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) out.push_back(s += alpha[i]);
  return out;
}

std::vector<int> peak_positions(const std::vector<int>& alpha) {
  std::vector<int> out;
  for (int s : partial_sums(alpha)) {
    out.push_back(s);
    out.push_back(s + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long monomial_chain_count(const SignedPermutation& u, const SignedPermutation& w, const std::vector<int>& alpha,
                               Basis basis) {
  int total = 0;
  for (int a : alpha) total += a;
  if (!leq0(u, w) || length(w.embedded(std::max(u.rank(), w.rank()))) - length(u) != total) return 0;
  auto allowed = partial_sums(alpha);
  if (basis == Basis::B)
    return count_chains(zero_bruhat_interval(u, w, LabelMode::Order),
                        ChainFilter::of(FilterKind::PeaksSubset, peak_positions(alpha)));
  return count_chains(zero_bruhat_interval(u, w, LabelMode::Reseau), ChainFilter::of(FilterKind::DescentsSubset, allowed));
}

long long structure_constant(const SignedPermutation& u0, const SignedPermutation& w0, const StrictPartition& lambda,
                             Basis basis) {
  const int n = std::max({u0.rank(), w0.rank(), lambda.largest()});
  auto u = u0.embedded(n);
  auto w = w0.embedded(n);
  if (!leq0(u, w) || length(w) - length(u) != lambda.size()) return 0;
  // Pieri products only move up in the 0-Bruhat order, so terms not below
  // w are dropped along the way.
  long long c = 0;
  const auto expansion = q_expansion(lambda);
  for (const auto& [mono, coeff] : expansion.terms()) {
    auto cur = SchubertVector::of(Basis::C, u);
    for (int part : mono) {
      SchubertVector next(Basis::C, n);
      for (const auto& [v, x] : cur.terms()) next += x * pieri_below(v, part, w);
      cur = std::move(next);
    }
    c += coeff * cur.coefficient(w);
  }
  if (basis == Basis::C) return c;
  const int up = sign_changes(w);
  const int down = sign_changes(u) + lambda.length();
  const long long scaled = c * (1LL << up);
  if (scaled % (1LL << down) != 0)
    throw Error("b-conversion is not exact for u=" + one_line(u) + " w=" + one_line(w) + " lambda=(" +
                to_string(lambda) + ")");
  return scaled / (1LL << down);
}

long long zeta_constant(const SignedPermutation& zeta, const StrictPartition& lambda, Basis basis) {
  auto u = witness_u(zeta);
  return structure_constant(u, zeta * u, lambda, basis);
}

VerifyReport symmetry_suite(const SignedPermutation& zeta, const StrictPartition& lambda) {
  VerifyReport r;
  r.suite = "symmetry";
  const int n = zeta.rank();
  if (lambda.size() != lagrangian_rank(zeta))
    throw Error("symmetry suite needs |lambda| = L(zeta)");
  const std::string tag = cycle_notation(zeta, true) + " lambda=(" + to_string(lambda) + ")";
  const long long ref_b = zeta_constant(zeta, lambda, Basis::B);
  const long long ref_c = zeta_constant(zeta, lambda, Basis::C);
  auto same = [&](const std::string& name, const std::string& inputs, long long b, long long c) {
    r.check(b == ref_b, name + " (b)", inputs, std::to_string(ref_b), std::to_string(b));
    r.check(c == ref_c, name + " (c)", inputs, std::to_string(ref_c), std::to_string(c));
  };

  // every u with u <=_0 zeta u, thinned out beyond 16 of them
  std::vector<SignedPermutation> witnesses;
  for (const auto& u : all_signed_permutations(n))
    if (leq0(u, zeta * u)) witnesses.push_back(u);
  const std::size_t stride = std::max<std::size_t>(1, witnesses.size() / 16);
  for (std::size_t i = 0; i < witnesses.size(); i += stride) {
    const auto& u = witnesses[i];
    const auto w = zeta * u;
    const std::string in = tag + " u=" + one_line(u);
    same("witness independence", in, structure_constant(u, w, lambda, Basis::B),
         structure_constant(u, w, lambda, Basis::C));
    for (int p = 1; p <= n; ++p) {
      if (u(p) != w(p)) continue;
      auto us = slash_p(u, p);
      auto ws = slash_p(w, p);
      same("erase common position", in + " p=" + std::to_string(p), structure_constant(us, ws, lambda, Basis::B),
           structure_constant(us, ws, lambda, Basis::C));
    }
  }

  if (n > 0) {
    auto rh = rho(n);
    auto zr = rh * zeta * rh;
    same("rho conjugation", tag + " conj=" + cycle_notation(zr), zeta_constant(zr, lambda, Basis::B),
         zeta_constant(zr, lambda, Basis::C));
    if (delta(zeta) == 1) {
      auto g = gamma_cycle(n);
      auto gi = g.inverse();
      auto zg = zeta;
      for (int i = 1; i < n; ++i) {
        zg = g * zg * gi;
        same("gamma conjugation", tag + " conj=" + cycle_notation(zg), zeta_constant(zg, lambda, Basis::B),
             zeta_constant(zg, lambda, Basis::C));
      }
    }
  }

  auto skew = skew_shape(zeta);
  if (skew.shape) {
    const auto& s = *skew.shape;
    same("skew shape", tag + " kappa=(" + to_string(s.outer) + ") mu=(" + to_string(s.inner) + ")",
         lr_coefficient(s.inner, lambda, s.outer, LRKind::P), lr_coefficient(s.inner, lambda, s.outer, LRKind::Q));
  }
  return r;
}

}  // namespace isoschub
