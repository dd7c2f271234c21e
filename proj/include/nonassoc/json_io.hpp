#pragma once

#include "nonassoc/algebra.hpp"
#include "nonassoc/assoc.hpp"
#include "nonassoc/observability.hpp"
#include "nonassoc/ym.hpp"

#include <json.hpp>

namespace nonassoc {

using ordered_json = nlohmann::ordered_json;

/// {"terms": [{"coeff": "...", "tree": "..."}]} in canonical term order.
ordered_json expr_to_json(const Expr& e);

/// {"coeffs": ["...", ...], "text": "..."}.
ordered_json element_to_json(const Element& e);

/// {"name", "dim", "gammas"?, "table", "involution"?}; exact string coeffs.
ordered_json algebra_to_json(const Algebra& a);

/// Accepts {"gammas"} and/or {"table"} plus optional {"name", "dim",
/// "involution"}. When both gammas and table are present they must agree.
/// Coefficients may be JSON integers or rational strings.
AlgebraPtr algebra_from_json(const ordered_json& j);

/// {"raw", "normal", "associators": [{"sign", "slots", "label"}]}.
ordered_json commutator_to_json(const CommutatorResult& r);

/// {"observable", "closure_dim", "witness"} (+ "involution_closed" when the
/// algebra declares an involution).
ordered_json report_to_json(const ObservabilityReport& r);

/// {"free_indices": {"a", "mu"}, "terms": [...]}.
ordered_json equation_to_json(const DerivedEquation& eq);

} // namespace nonassoc
