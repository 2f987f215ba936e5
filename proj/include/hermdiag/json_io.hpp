#pragma once

// JSON wire formats shared by the library and the CLI. Rationals are always
// "p/q" strings in lowest terms with q > 0.

#include "hermdiag/classify.hpp"
#include "hermdiag/diffop.hpp"
#include "hermdiag/hermite.hpp"
#include "hermdiag/laguerre.hpp"
#include "hermdiag/polynomial.hpp"
#include "hermdiag/sequence.hpp"

#include <json.hpp>

namespace hermdiag::io {

using json = nlohmann::json;

json to_json(const Rational& value);
/// Accepts "p/q" or "p" strings and integers. Throws std::invalid_argument.
Rational rational_from_json(const json& j);

/// {"coeffs": ["p/q", ...]} ascending degree.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// {"alpha": "p/q", "coeffs": [...]}
json to_json(const HermiteExpansion& e);
HermiteExpansion expansion_from_json(const json& j);

/// {"alpha": "p/q", "p_shift": int, "Q": [poly, ...]}
json to_json(const HermiteDiffOp& op);
HermiteDiffOp operator_from_json(const json& j);

/// {"alpha": "p/q", "p": int, "rows": [{"k": int, "real_rooted": bool}]}
json to_json(const RealityTable& table);

/// {"family": str, "input": poly, "output": poly}
json to_json(const Witness& w);

/// {"status": str, "reason": str, "bound"?: int, "witness"?: {...}}
json to_json(const Verdict& v);

/// [{"a": "p/q", "status": str, "witness"?: {"input": poly, "output": poly}}]
json to_json(const std::vector<LaguerreDemoRow>& rows);

/// {"gammas": ["p/q", ...], "tail": "p/q"} with tail optional (default 0).
GammaSeq sequence_from_json(const json& j);

}  // namespace hermdiag::io
