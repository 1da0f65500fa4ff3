#include "isoschub/io.hpp"

#include <map>
#include <sstream>

namespace isoschub {

std::string to_string(Basis basis) { return basis == Basis::B ? "B" : "C"; }

Basis parse_basis(std::string_view text) {
  if (text == "B" || text == "b") return Basis::B;
  if (text == "C" || text == "c") return Basis::C;
  throw ParseError("basis must be B or C, got '" + std::string(text) + "'");
}

Json to_json(const SchubertVector& v) {
  Json terms = Json::array();
  for (const auto& [w, c] : v.terms()) terms.push_back({{"perm", one_line(w)}, {"coeff", c}});
  return {{"basis", to_string(v.basis())}, {"n", v.rank()}, {"terms", terms}};
}

Json to_json(const LabeledInterval& iv) {
  static const char* kinds[] = {"zero_bruhat", "lagrangian", "k_bruhat"};
  Json nodes = Json::array();
  for (std::size_t i = 0; i < iv.nodes.size(); ++i)
    nodes.push_back({{"perm", one_line(iv.nodes[i])}, {"rank", iv.ranks[i]}});
  Json edges = Json::array();
  for (const auto& e : iv.edges)
    edges.push_back({{"from", one_line(iv.nodes[static_cast<std::size_t>(e.from)])},
                     {"to", one_line(iv.nodes[static_cast<std::size_t>(e.to)])},
                     {"label", e.label}});
  Json out = {{"kind", kinds[static_cast<int>(iv.kind)]}, {"mode", iv.mode == LabelMode::Order ? "order" : "reseau"}};
  if (iv.kind == IntervalKind::KBruhat) out["k"] = iv.k;
  out["bottom"] = one_line(iv.bottom);
  out["top"] = one_line(iv.top);
  out["nodes"] = nodes;
  out["edges"] = edges;
  return out;
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& x : f.factors)
    factors.push_back({{"cycles", cycle_notation(x.perm)}, {"delta", x.delta}, {"minimal", x.minimal_cycle}});
  auto cls = classify(f.zeta);
  return {{"zeta", cycle_notation(f.zeta)}, {"factors", factors}, {"theta", cls.theta}, {"chi", cls.chi}};
}

Json to_json(const QPolynomial& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back({{"monomial", it->first}, {"coeff", it->second}});
  return out;
}

Json to_json(const Histogram& h) {
  Json out = Json::array();
  for (const auto& [set, count] : h) out.push_back({{"set", set}, {"count", count}});
  return out;
}

Json to_json(const VerifyReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"suite", r.suite}, {"cases", r.cases}, {"failures", failures}, {"ok", r.ok()}};
}

std::string to_dot(const LabeledInterval& iv) {
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n";
  std::map<int, std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < iv.nodes.size(); ++i) layers[iv.ranks[i]].push_back(i);
  for (const auto& [rank, idx] : layers) {
    os << "  { rank=same;";
    for (auto i : idx) os << " \"" << one_line(iv.nodes[i]) << "\";";
    os << " }\n";
  }
  for (const auto& e : iv.edges)
    os << "  \"" << one_line(iv.nodes[static_cast<std::size_t>(e.from)]) << "\" -> \""
       << one_line(iv.nodes[static_cast<std::size_t>(e.to)]) << "\" [label=" << e.label << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace isoschub
