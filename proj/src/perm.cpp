#include "isoschub/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace isoschub {

// ---- StrictPartition ----------------------------------------------------------

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("strict partition parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1]) throw Error("partition is not strictly decreasing");
  }
}

int StrictPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool StrictPartition::contains(const StrictPartition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[static_cast<std::size_t>(i)] > parts_[static_cast<std::size_t>(i)]) return false;
  return true;
}

namespace {

void strict_partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    strict_partitions_rec(remaining - p, p - 1, cur, out);
    cur.pop_back();
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<StrictPartition> strict_partitions(int total, int max_part) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  if (total >= 0) strict_partitions_rec(total, max_part, cur, out);
  return out;
}

std::string to_string(const StrictPartition& lambda) {
  std::string s;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambda.parts()[i]);
  }
  return s;
}

StrictPartition parse_partition(std::string_view text) {
  text = trim(text);
  if (text == "0" || text == "()" || text.empty()) return {};
  try {
    return StrictPartition(parse_int_list(text));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

// ---- SignedPermutation ------------------------------------------------------------

SignedPermutation::SignedPermutation(int n) {
  if (n < 0) throw Error("rank must be non-negative");
  window_.resize(static_cast<std::size_t>(n));
  std::iota(window_.begin(), window_.end(), 1);
}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : window_) {
    if (v == 0) throw ParseError("zero entry in signed permutation");
    int m = v < 0 ? -v : v;
    if (m > n) throw ParseError("entry " + std::to_string(v) + " out of range for rank " + std::to_string(n));
    if (seen[static_cast<std::size_t>(m)]) throw ParseError("duplicate absolute value " + std::to_string(m));
    seen[static_cast<std::size_t>(m)] = 1;
  }
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (window_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

SignedPermutation SignedPermutation::embedded(int m) const {
  if (m < rank()) throw Error("cannot embed B_" + std::to_string(rank()) + " into B_" + std::to_string(m));
  SignedPermutation r(m);
  std::copy(window_.begin(), window_.end(), r.window_.begin());
  return r;
}

SignedPermutation SignedPermutation::trimmed() const {
  int k = rank();
  while (k > 0 && window_[static_cast<std::size_t>(k - 1)] == k) --k;
  SignedPermutation r(k);
  std::copy(window_.begin(), window_.begin() + k, r.window_.begin());
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r(rank());
  for (int i = 1; i <= rank(); ++i) {
    int v = window_[static_cast<std::size_t>(i - 1)];
    if (v > 0)
      r.window_[static_cast<std::size_t>(v - 1)] = i;
    else
      r.window_[static_cast<std::size_t>(-v - 1)] = -i;
  }
  return r;
}

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
  const int n = std::max(u.rank(), v.rank());
  SignedPermutation r(n);
  for (int i = 1; i <= n; ++i) r.window_[static_cast<std::size_t>(i - 1)] = u(v(i));
  return r;
}

bool operator==(const SignedPermutation& u, const SignedPermutation& v) {
  const int n = std::max(u.rank(), v.rank());
  for (int i = 1; i <= n; ++i)
    if (u(i) != v(i)) return false;
  return true;
}

std::strong_ordering operator<=>(const SignedPermutation& u, const SignedPermutation& v) {
  const int n = std::max(u.rank(), v.rank());
  for (int i = 1; i <= n; ++i) {
    int a = u(i), b = v(i);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::size_t SignedPermutation::hash() const {
  int k = rank();
  while (k > 0 && window_[static_cast<std::size_t>(k - 1)] == k) --k;
  std::size_t h = 1469598103934665603ULL;
  for (int i = 0; i < k; ++i) {
    h ^= static_cast<std::size_t>(window_[static_cast<std::size_t>(i)] + 64);
    h *= 1099511628211ULL;
  }
  return h;
}

// ---- notation ----------------------------------------------------------------

std::string one_line(const SignedPermutation& w) {
  std::string s;
  for (int i = 1; i <= w.rank(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(w(i));
  }
  return s;
}

std::string cycle_notation(const SignedPermutation& w, bool with_rank) {
  const int n = w.rank();
  std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
  std::string s;
  for (int a = 1; a <= n; ++a) {
    if (done[static_cast<std::size_t>(a)] || w(a) == a) continue;
    std::vector<int> cyc;
    int x = a;
    bool mirrored = false;
    do {
      cyc.push_back(x);
      done[static_cast<std::size_t>(x < 0 ? -x : x)] = 1;
      x = w(x);
      if (x == -a) mirrored = true;
    } while (x != a && x != -a);
    s += '<';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(cyc[i]);
    }
    s += mirrored ? ']' : '>';
  }
  if (s.empty()) s = "e";
  if (with_rank) s += " n=" + std::to_string(n);
  return s;
}

SignedPermutation parse_one_line(std::string_view text, int rank) {
  auto entries = parse_int_list(text);
  if (entries.empty()) throw ParseError("empty one-line permutation");
  SignedPermutation w(std::move(entries));
  if (rank > 0) {
    if (rank < w.rank()) throw ParseError("window longer than the requested rank");
    return w.embedded(rank);
  }
  return w;
}

SignedPermutation parse_cycles(std::string_view text, int rank) {
  text = trim(text);
  int explicit_rank = rank;
  if (auto pos = text.find("n="); pos != std::string_view::npos) {
    explicit_rank = parse_int(text.substr(pos + 2));
    if (explicit_rank <= 0) throw ParseError("rank suffix must be positive");
    text = trim(text.substr(0, pos));
  }
  struct Cycle {
    std::vector<int> entries;
    bool mirrored;
  };
  std::vector<Cycle> cycles;
  if (text != "e") {
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != '<') throw ParseError("malformed cycle notation: expected '<' in '" + std::string(text) + "'");
      std::size_t close = text.find_first_of(">]", i + 1);
      if (close == std::string_view::npos) throw ParseError("malformed cycle notation: unterminated cycle");
      auto body = text.substr(i + 1, close - i - 1);
      if (body.find('<') != std::string_view::npos) throw ParseError("malformed cycle notation: nested '<'");
      auto entries = parse_int_list(body);
      if (entries.empty()) throw ParseError("malformed cycle notation: empty cycle");
      cycles.push_back({std::move(entries), text[close] == ']'});
      i = close + 1;
    }
    if (cycles.empty()) throw ParseError("malformed cycle notation: no cycles");
  }
  int inferred = 0;
  for (const auto& c : cycles)
    for (int v : c.entries) {
      if (v == 0) throw ParseError("zero entry in cycle notation");
      inferred = std::max(inferred, v < 0 ? -v : v);
    }
  int n = explicit_rank > 0 ? explicit_rank : inferred;
  if (n < inferred) throw ParseError("cycle entry out of range for rank " + std::to_string(n));
  if (n == 0) n = 1;
  std::vector<int> image(static_cast<std::size_t>(2 * n), 0);
  auto set = [&](int a, int b) {
    auto& slot = image[static_cast<std::size_t>(letter_index(a, n))];
    if (slot != 0) throw ParseError("letter " + std::to_string(a) + " appears twice in cycle notation");
    slot = b;
  };
  for (const auto& c : cycles) {
    const auto& e = c.entries;
    for (std::size_t k = 0; k < e.size(); ++k) {
      int a = e[k];
      int b = k + 1 < e.size() ? e[k + 1] : (c.mirrored ? -e[0] : e[0]);
      set(a, b);
      set(-a, -b);
    }
  }
  std::vector<int> window(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    int img = image[static_cast<std::size_t>(letter_index(a, n))];
    window[static_cast<std::size_t>(a - 1)] = img == 0 ? a : img;
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation parse_permutation(std::string_view text, int rank) {
  auto t = trim(text);
  if (!t.empty() && (t.front() == '<' || t.front() == 'e')) return parse_cycles(t, rank);
  return parse_one_line(t, rank);
}

// ---- statistics ----------------------------------------------------------------

int length(const SignedPermutation& w) {
  const int n = w.rank();
  int inv = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++inv;
  int neg = 0;
  for (int i = 1; i <= n; ++i)
    if (w(i) < 0) neg -= w(i);
  return inv + neg;
}

int spm_inversions(const SignedPermutation& w) {
  const int n = w.rank();
  int inv = 0;
  for (int x = 0; x < 2 * n; ++x)
    for (int y = x + 1; y < 2 * n; ++y)
      if (w(letter_at(x, n)) > w(letter_at(y, n))) ++inv;
  return inv;
}

int sign_changes(const SignedPermutation& w) {
  int s = 0;
  for (int i = 1; i <= w.rank(); ++i)
    if (w(i) < 0) ++s;
  return s;
}

std::vector<int> support(const SignedPermutation& w) {
  std::vector<int> s;
  for (int a = 1; a <= w.rank(); ++a)
    if (w(a) != a) s.push_back(a);
  return s;
}

int delta(const SignedPermutation& w) { return sign_changes(w) == 0 ? 1 : 0; }

// ---- reflections ------------------------------------------------------------------

SignedPermutation reflection_pair(int a, int b, int n) {
  if (a == 0 || b == 0 || a >= b) throw Error("reflection letters must satisfy a < b, both nonzero");
  std::vector<int> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), 1);
  auto put = [&](int x, int y) {
    if (x > 0) window[static_cast<std::size_t>(x - 1)] = y;
  };
  if (a == -b) {
    put(b, -b);
  } else {
    put(a, b);
    put(b, a);
    put(-a, -b);
    put(-b, -a);
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation Reflection::as_permutation(int n) const {
  switch (kind) {
    case Kind::T:
      if (j <= 0) break;
      return reflection_pair(-j, j, n);
    case Kind::Tij:
      if (i <= 0 || i >= j) break;
      return reflection_pair(i, j, n);
    case Kind::TbarIJ:
      if (i <= 0 || i >= j) break;
      return reflection_pair(-i, j, n);
  }
  throw Error("invalid reflection " + to_string(*this));
}

std::string to_string(const Reflection& r) {
  switch (r.kind) {
    case Reflection::Kind::T: return "t(" + std::to_string(r.j) + ")";
    case Reflection::Kind::Tij: return "t(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
    case Reflection::Kind::TbarIJ: return "t(-" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
  }
  return "t(?)";
}

// ---- named elements -------------------------------------------------------------

SignedPermutation omega0(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = -i;
  return SignedPermutation(std::move(w));
}

SignedPermutation rho(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = i - 1 - n;
  return SignedPermutation(std::move(w));
}

SignedPermutation gamma_cycle(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = i == n ? 1 : i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation grassmannian(const StrictPartition& lambda, int n) {
  if (lambda.largest() > n)
    throw Error("partition (" + to_string(lambda) + ") does not fit in B_" + std::to_string(n));
  std::vector<int> w;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int p : lambda.parts()) {
    w.push_back(-p);
    used[static_cast<std::size_t>(p)] = 1;
  }
  for (int a = 1; a <= n; ++a)
    if (!used[static_cast<std::size_t>(a)]) w.push_back(a);
  return SignedPermutation(std::move(w));
}

SignedPermutation special_element(int m, int n) {
  if (m < 1 || m > n) throw Error("special element index m=" + std::to_string(m) + " out of range 1.." + std::to_string(n));
  return grassmannian(StrictPartition({m}), n);
}

bool is_grassmannian(const SignedPermutation& v) {
  for (int i = 1; i < v.rank(); ++i)
    if (v(i) > v(i + 1)) return false;
  return true;
}

StrictPartition partition_of(const SignedPermutation& v) {
  if (!is_grassmannian(v)) throw Error(one_line(v) + " is not Grassmannian");
  std::vector<int> parts;
  for (int i = 1; i <= v.rank() && v(i) < 0; ++i) parts.push_back(-v(i));
  return StrictPartition(std::move(parts));
}

// ---- embeddings ---------------------------------------------------------------------

SignedPermutation epsilon_pq(const SignedPermutation& w, int p, int q) {
  const int n = w.rank();
  const int aq = q < 0 ? -q : q;
  if (p < 1 || p > n + 1) throw Error("epsilon_pq: position p out of range");
  if (aq < 1 || aq > n + 1) throw Error("epsilon_pq: value q out of range");
  auto shift = [&](int v) {
    if (v <= -aq) return v - 1;
    if (v >= aq) return v + 1;
    return v;
  };
  std::vector<int> out(static_cast<std::size_t>(n + 1));
  for (int j = 1; j <= n + 1; ++j) {
    int v;
    if (j < p)
      v = shift(w(j));
    else if (j == p)
      v = q;
    else
      v = shift(w(j - 1));
    out[static_cast<std::size_t>(j - 1)] = v;
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation slash_p(const SignedPermutation& w, int p) {
  const int n1 = w.rank();
  if (p < 1 || p > n1) throw Error("slash_p: position out of range");
  const int q = w(p);
  const int aq = q < 0 ? -q : q;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n1 - 1));
  for (int j = 1; j <= n1; ++j) {
    if (j == p) continue;
    int v = w(j);
    if (v > aq) --v;
    else if (v < -aq) ++v;
    out.push_back(v);
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation epsilon_k(std::span<const int> eta, int k) {
  const int n = static_cast<int>(eta.size());
  if (k < 0 || k > n) throw Error("epsilon_k: k out of range");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : eta) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw Error("epsilon_k: not a permutation of [n]");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    if (j <= n - k)
      out[static_cast<std::size_t>(j - 1)] = eta[static_cast<std::size_t>(j + k - 1)];
    else
      out[static_cast<std::size_t>(j - 1)] = -eta[static_cast<std::size_t>(n - j)];
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation iota(std::span<const int> eta) { return epsilon_k(eta, 0); }

SignedPermutation epsilon_P(const SignedPermutation& w, std::span<const int> P) {
  const int k = static_cast<int>(P.size());
  if (k < w.rank()) throw Error("epsilon_P: #P smaller than the rank");
  for (int i = 0; i < k; ++i)
    if (P[static_cast<std::size_t>(i)] < 1 || (i > 0 && P[static_cast<std::size_t>(i)] <= P[static_cast<std::size_t>(i - 1)]))
      throw Error("epsilon_P: P must be strictly increasing positive integers");
  const int n = k == 0 ? 0 : P.back();
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 1);
  for (int i = 1; i <= w.rank(); ++i) {
    int v = w(i);
    int img = P[static_cast<std::size_t>((v < 0 ? -v : v) - 1)];
    out[static_cast<std::size_t>(P[static_cast<std::size_t>(i - 1)] - 1)] = v < 0 ? -img : img;
  }
  return SignedPermutation(std::move(out));
}

ShapeCanonical shape_canonical(const SignedPermutation& w) {
  auto supp = support(w);
  const int k = static_cast<int>(supp.size());
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    int v = w(supp[static_cast<std::size_t>(i)]);
    int idx = static_cast<int>(std::lower_bound(supp.begin(), supp.end(), v < 0 ? -v : v) - supp.begin()) + 1;
    out[static_cast<std::size_t>(i)] = v < 0 ? -idx : idx;
  }
  return {SignedPermutation(std::move(out)), std::move(supp)};
}

bool shape_equivalent(const SignedPermutation& a, const SignedPermutation& b) {
  auto ca = shape_canonical(a).form;
  auto cb = shape_canonical(b).form;
  return ca.rank() == cb.rank() && ca == cb;
}

std::vector<std::vector<int>> all_plain_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : all_plain_permutations(n)) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = p;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isoschub
