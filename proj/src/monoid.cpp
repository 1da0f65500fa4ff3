#include "isoschub/monoid.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "isoschub/chains.hpp"
#include "isoschub/orders.hpp"

namespace isoschub {

SignedPermutation Generator::reflection(int n) const {
  if (a < 1 || a > b) throw Error("generator indices must satisfy 0 < a <= b");
  return a == b ? reflection_pair(-b, b, n) : reflection_pair(a, b, n);
}

MonoidWord MonoidWord::reversed() const {
  MonoidWord w = *this;
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

int MonoidWord::max_index() const {
  int m = 0;
  for (const auto& g : letters) m = std::max(m, g.b);
  return m;
}

std::string to_string(const MonoidWord& w) {
  if (w.letters.empty()) return "e";
  std::string s;
  for (const auto& g : w.letters) {
    if (!s.empty()) s += ".";
    s += g.a == g.b ? "t(" + std::to_string(g.b) + ")" : "t(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
  }
  return s;
}

MonoidWord parse_word(std::string_view text) {
  MonoidWord w;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "e") return w;
  auto number = [&](std::string_view s) {
    s = trim(s);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad generator index '" + std::string(s) + "'");
    return v;
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto dot = text.find('.', pos);
    auto tok = trim(text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos));
    if (tok.size() < 4 || tok.substr(0, 2) != "t(" || tok.back() != ')')
      throw ParseError("bad generator '" + std::string(tok) + "' (expected t(b) or t(a,b))");
    auto inner = tok.substr(2, tok.size() - 3);
    auto comma = inner.find(',');
    Generator g;
    if (comma == std::string_view::npos) {
      g.a = g.b = number(inner);
    } else {
      g.a = number(inner.substr(0, comma));
      g.b = number(inner.substr(comma + 1));
    }
    if (g.a < 1 || g.a > g.b) throw ParseError("generator t(" + std::to_string(g.a) + "," + std::to_string(g.b) + ") needs 0 < a <= b");
    w.letters.push_back(g);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return w;
}

std::optional<SignedPermutation> op_apply(const Generator& g, const SignedPermutation& zeta0) {
  const int n = std::max(zeta0.rank(), g.b);
  auto zeta = zeta0.embedded(n);
  auto target = g.reflection(n) * zeta;
  if (lagrangian_rank(target) != lagrangian_rank(zeta) + 1 || !lagrangian_leq(zeta, target)) return std::nullopt;
  return target;
}

std::optional<SignedPermutation> op_apply(const MonoidWord& w, const SignedPermutation& zeta) {
  std::optional<SignedPermutation> cur = zeta;
  for (auto it = w.letters.rbegin(); it != w.letters.rend() && cur; ++it) cur = op_apply(*it, *cur);
  return cur;
}

Generator generator_of(const SignedPermutation& t) {
  auto labels = reflection_labels(t);
  int b = labels.back();
  return {labels.size() == 2 ? -labels.front() : b, b};
}

std::vector<Generator> generators(int n) {
  std::vector<Generator> out;
  for (int b = 1; b <= n; ++b)
    for (int a = 1; a <= b; ++a) out.push_back({a, b});
  return out;
}

OperatorTable::OperatorTable(int n) : n_(n), elements_(all_signed_permutations(n)), gens_(generators(n)) {
  std::vector<int> ranks(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) ranks[i] = lagrangian_rank(elements_[i]);
  for (const auto& g : gens_) {
    auto t = g.reflection(n);
    std::vector<int> row(elements_.size(), -1);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      auto target = t * elements_[i];
      int j = index_of(target);
      if (ranks[static_cast<std::size_t>(j)] == ranks[i] + 1 && lagrangian_leq(elements_[i], target)) row[i] = j;
    }
    next_.push_back(std::move(row));
  }
}

int OperatorTable::index_of(const SignedPermutation& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || !(*it == w)) throw Error(one_line(w) + " is not in B_" + std::to_string(n_));
  return static_cast<int>(it - elements_.begin());
}

int OperatorTable::generator_index(const Generator& g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) throw Error("generator out of range for B_" + std::to_string(n_));
  return static_cast<int>(it - gens_.begin());
}

int OperatorTable::apply(const MonoidWord& w, int element) const {
  int cur = element;
  for (auto it = w.letters.rbegin(); it != w.letters.rend() && cur >= 0; ++it) cur = apply(generator_index(*it), cur);
  return cur;
}

std::vector<int> OperatorTable::evaluate(const MonoidWord& w) const {
  std::vector<int> idx;
  for (const auto& g : w.letters) idx.push_back(generator_index(g));
  std::vector<int> out(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    int cur = static_cast<int>(i);
    for (auto it = idx.rbegin(); it != idx.rend() && cur >= 0; ++it) cur = next_[static_cast<std::size_t>(*it)][static_cast<std::size_t>(cur)];
    out[i] = cur;
  }
  return out;
}

VerifyReport relations_suite(int n) {
  VerifyReport r;
  r.suite = "relations";
  OperatorTable table(n);
  auto t = [](int a, int b) { return Generator{a, b}; };
  auto word = [](std::initializer_list<Generator> gs) { return MonoidWord{std::vector<Generator>(gs)}; };
  const std::vector<int> zero(table.elements().size(), -1);

  auto equal = [&](const std::string& name, const MonoidWord& x, const MonoidWord& y) {
    for (const auto& [p, q] : {std::pair{x, y}, std::pair{x.reversed(), y.reversed()}}) {
      auto vp = table.evaluate(p);
      auto vq = table.evaluate(q);
      std::string actual;
      if (vp != vq)
        for (std::size_t i = 0; i < vp.size(); ++i)
          if (vp[i] != vq[i]) {
            actual = "differ at " + one_line(table.elements()[i]);
            break;
          }
      r.check(vp == vq, name, to_string(p) + " == " + to_string(q), "equal operators", actual);
    }
  };
  auto vanishes = [&](const std::string& name, const MonoidWord& x) {
    for (const auto& p : {x, x.reversed()}) {
      auto v = table.evaluate(p);
      std::string actual;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] >= 0) {
          actual = "nonzero at " + one_line(table.elements()[i]);
          break;
        }
      r.check(v == zero, name, to_string(p) + " == 0", "0", actual);
    }
  };

  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int c = b; c <= n; ++c) {
        if (a < b && b < c) {
          equal("(i)", word({t(a, c), t(a, a), t(a, b)}), word({t(a, b), t(b, c), t(b, b)}));
          vanishes("(vi)", word({t(b, c), t(a, b), t(b, c)}));
          vanishes("(vi)", word({t(a, b), t(b, c), t(a, b)}));
        }
        if ((a < b && b <= c) || (a == b && b == c)) {
          vanishes("(iv)", word({t(a, c), t(b, b)}));
          vanishes("(iv)", word({t(b, b), t(a, c)}));
        }
        for (int d = c; d <= n; ++d) {
          if (a < b && b < c && c < d)
            equal("(ii)", word({t(b, c), t(c, d), t(a, c)}), word({t(b, d), t(a, b), t(b, c)}));
          if (a <= b && b < c && c <= d) {
            vanishes("(v)", word({t(a, c), t(b, d)}));
            vanishes("(v)", word({t(b, d), t(a, c)}));
          }
        }
      }
  // (iii) ranges over a separate index pattern
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = c; d <= n; ++d)
          if ((b < c) || (a < c && c < d && d < b)) equal("(iii)", word({t(a, b), t(c, d)}), word({t(c, d), t(a, b)}));
  return r;
}

std::set<MonoidWord> reduced_decompositions(const SignedPermutation& zeta) {
  auto iv = lagrangian_interval(zeta, LabelMode::Order);
  std::set<MonoidWord> out;
  enumerate_chains(iv, ChainFilter::all(), [&](const Chain& c) {
    MonoidWord w;
    for (std::size_t i = c.path.size(); i-- > 1;) {
      const auto& hi = iv.nodes[static_cast<std::size_t>(c.path[i])];
      const auto& lo = iv.nodes[static_cast<std::size_t>(c.path[i - 1])];
      w.letters.push_back(generator_of(hi * lo.inverse()));
    }
    out.insert(std::move(w));
  });
  return out;
}

}  // namespace isoschub
