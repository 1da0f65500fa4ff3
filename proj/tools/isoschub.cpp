// isoschub: products, intervals, chain statistics and verification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "isoschub/chains.hpp"
#include "isoschub/factor.hpp"
#include "isoschub/io.hpp"
#include "isoschub/orders.hpp"
#include "isoschub/schubert.hpp"
#include "isoschub/schur_pq.hpp"
#include "isoschub/verify.hpp"

using namespace isoschub;

namespace {

const char* grammar =
    "Permutations: one-line windows like 3,-1,2, or cycles like \"<1,3,4><2]\" (optional \" n=5\").\n"
    "Partitions: strictly decreasing parts like 3,1.\n";

std::string out_path;

void emit(const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot write " + out_path);
  f << text;
}

void emit(const Json& j) { emit(j.dump(2) + "\n"); }

PieriMethod parse_method(const std::string& s) {
  if (s == "chains") return PieriMethod::Chains;
  if (s == "minimal") return PieriMethod::Minimal;
  throw ParseError("method must be chains or minimal");
}

PieriVariant parse_variant(const std::string& s) {
  if (s == "peakless") return PieriVariant::Peakless;
  if (s == "no_descent") return PieriVariant::NoDescent;
  if (s == "no_ascent") return PieriVariant::NoAscent;
  throw ParseError("variant must be peakless, no_descent or no_ascent");
}

std::vector<long long> to_vector(const Histogram& h, long long chain_length) {
  return histogram_vector(h, static_cast<int>(std::max(0LL, chain_length - 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pieri-type products and chain statistics for signed permutations"};
  app.footer(grammar);
  app.require_subcommand(1);
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string basis_s = "C", u_s, w_s, zeta_s, method_s = "chains", variant_s, lambda_s, mu_s, kappa_s, kind_s = "Q",
              format = "json", suite = "all";
  int m = 1, rank = 3;
  bool reseau = false, peaks = false, descents = false, ascents = false;

  auto* mult = app.add_subcommand("mult", "Schubert class of u times p_m (B) or q_m (C)");
  mult->add_option("--basis", basis_s, "B or C")->required();
  mult->add_option("--u", u_s, "permutation")->required();
  mult->add_option("--m", m, "degree of the special class")->required();
  mult->add_option("--method", method_s, "chains or minimal");
  mult->add_option("--variant", variant_s, "peakless, no_descent or no_ascent");

  auto* chev = app.add_subcommand("chevalley", "Schubert class of u times the divisor class");
  chev->add_option("--basis", basis_s, "B or C")->required();
  chev->add_option("--u", u_s, "permutation")->required();

  auto* interval = app.add_subcommand("interval", "[u,w] in the 0-Bruhat order or [e,zeta] in the Lagrangian order");
  auto* iu = interval->add_option("--u", u_s, "bottom");
  auto* iw = interval->add_option("--w", w_s, "top");
  auto* iz = interval->add_option("--zeta", zeta_s, "Lagrangian top");
  iu->needs(iw);
  iw->needs(iu);
  iz->excludes(iu)->excludes(iw);
  interval->add_flag("--reseau", reseau, "keep negative labels");
  interval->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* stats = app.add_subcommand("stats", "chain statistics of [e,zeta]");
  stats->add_option("--zeta", zeta_s, "permutation")->required();
  stats->add_flag("--peaks", peaks, "peak-set histogram only");
  stats->add_flag("--descents", descents, "descent-set histogram and vector only");
  stats->add_flag("--ascents", ascents, "ascent-set histogram and vector only");

  auto* cnst = app.add_subcommand("const", "structure constant b or c");
  cnst->add_option("--u", u_s, "permutation")->required();
  cnst->add_option("--w", w_s, "permutation")->required();
  cnst->add_option("--lambda", lambda_s, "strict partition")->required();
  cnst->add_option("--basis", basis_s, "B (b) or C (c)")->required();

  auto* lr = app.add_subcommand("lr", "coefficient of the kappa class in the product of the mu and lambda classes");
  lr->add_option("--mu", mu_s, "strict partition")->required();
  lr->add_option("--lambda", lambda_s, "strict partition")->required();
  lr->add_option("--kappa", kappa_s, "strict partition")->required();
  lr->add_option("--kind", kind_s, "P or Q")->check(CLI::IsMember({"P", "Q"}));

  auto* fac = app.add_subcommand("factor", "irreducible factors, theta and chi");
  fac->add_option("--zeta", zeta_s, "permutation")->required();

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite, "suite name or all");
  ver->add_option("--rank", rank, "rank n of B_n")->check(CLI::Range(1, 5));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mult) {
      auto u = parse_permutation(u_s);
      std::optional<PieriVariant> variant;
      if (!variant_s.empty()) variant = parse_variant(variant_s);
      emit(to_json(pieri(u, m, parse_basis(basis_s), parse_method(method_s), variant)));
    } else if (*chev) {
      emit(to_json(chevalley(parse_permutation(u_s), parse_basis(basis_s))));
    } else if (*interval) {
      const auto mode = reseau ? LabelMode::Reseau : LabelMode::Order;
      LabeledInterval iv;
      if (!zeta_s.empty())
        iv = lagrangian_interval(parse_permutation(zeta_s), mode);
      else if (!u_s.empty())
        iv = zero_bruhat_interval(parse_permutation(u_s), parse_permutation(w_s), mode);
      else
        throw ParseError("interval needs --u and --w, or --zeta");
      if (format == "dot")
        emit(to_dot(iv));
      else
        emit(to_json(iv));
    } else if (*stats) {
      auto z = parse_permutation(zeta_s);
      auto s = stat_counts(z);
      const long long len = lagrangian_rank(z);
      Json out = {{"zeta", cycle_notation(z)}, {"rank", len}};
      const bool all = !peaks && !descents && !ascents;
      if (all) {
        out["order_chains"] = s.order_chains;
        out["reseau_chains"] = s.reseau_chains;
        out["peakless"] = s.peakless;
        out["increasing"] = s.increasing;
        out["decreasing"] = s.decreasing;
      }
      if (all || peaks) out["peaks"] = {{"histogram", to_json(s.by_peakset)}};
      if (all || descents)
        out["descents"] = {{"histogram", to_json(s.by_descentset)}, {"vector", to_vector(s.by_descentset, len)}};
      if (all || ascents)
        out["ascents"] = {{"histogram", to_json(s.by_ascentset)}, {"vector", to_vector(s.by_ascentset, len)}};
      emit(out);
    } else if (*cnst) {
      auto u = parse_permutation(u_s), w = parse_permutation(w_s);
      auto lam = parse_partition(lambda_s);
      auto basis = parse_basis(basis_s);
      emit(Json{{"u", one_line(u)},
                {"w", one_line(w)},
                {"lambda", lam.parts()},
                {"basis", to_string(basis)},
                {"value", structure_constant(u, w, lam, basis)}});
    } else if (*lr) {
      auto mu = parse_partition(mu_s), lam = parse_partition(lambda_s), kap = parse_partition(kappa_s);
      emit(Json{{"mu", mu.parts()},
                {"lambda", lam.parts()},
                {"kappa", kap.parts()},
                {"kind", kind_s},
                {"value", lr_coefficient(mu, lam, kap, kind_s == "P" ? LRKind::P : LRKind::Q)}});
    } else if (*fac) {
      emit(to_json(irreducible_factors(parse_permutation(zeta_s))));
    } else if (*ver) {
      std::vector<std::string> names;
      if (suite == "all")
        names = suite_names();
      else
        names = {suite};
      Json reports = Json::array();
      bool ok = true;
      for (const auto& name : names) {
        auto r = run_suite(name, rank);
        std::cerr << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures, " << r.seconds
                  << " s\n";
        ok = ok && r.ok();
        reports.push_back(to_json(r));
      }
      emit(Json{{"rank", rank}, {"ok", ok}, {"suites", reports}});
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << grammar;
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
