#pragma once

// JSON and DOT emission.

#include <string>

#include <json.hpp>

#include "isoschub/chains.hpp"
#include "isoschub/factor.hpp"
#include "isoschub/monoid.hpp"
#include "isoschub/orders.hpp"
#include "isoschub/report.hpp"
#include "isoschub/schubert.hpp"
#include "isoschub/schur_pq.hpp"

namespace isoschub {

using Json = nlohmann::ordered_json;

std::string to_string(Basis basis);
Basis parse_basis(std::string_view text);

/// {basis, n, terms:[{perm, coeff}]} sorted by one-line form.
Json to_json(const SchubertVector& v);
/// {kind, mode, nodes:[{perm, rank}], edges:[{from, to, label}]}; edge
/// endpoints are one-line forms.
Json to_json(const LabeledInterval& iv);
/// {factors:[{cycles, delta, minimal}], theta, chi}
Json to_json(const Factorization& f);
/// [{monomial, coeff}] with the largest monomial first.
Json to_json(const QPolynomial& p);
/// [{set, count}] in set order.
Json to_json(const Histogram& h);
Json to_json(const VerifyReport& r);

/// Rank-layered digraph; nodes named by one-line form, bottom rank at the
/// bottom.
std::string to_dot(const LabeledInterval& iv);

}  // namespace isoschub
