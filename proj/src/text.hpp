#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "nsym.hpp"
#include "qsym.hpp"
#include "sym.hpp"

namespace ncsf {

using Basis = std::variant<NSymBasis, QSymBasis, SymBasis>;
using AnyExpr = std::variant<NSymExpr, QSymExpr, SymExpr>;

// Basis letters: H R S Qp (NSym), M F Sd P (QSym), h s (Sym).
Basis parse_basis(std::string_view letter);
std::string basis_name(const Basis& b);
Basis basis_of(const AnyExpr& e);
const Terms& terms_of(const AnyExpr& e);
AnyExpr make_expr(const Basis& b, Terms terms);

// "5*S[4,2,3] - (q^2-2*q+1)*Qp[3,4,1]"; zero renders as "0".
std::string render(const AnyExpr& e);
std::string render_terms(const Terms& t, std::string_view letter);
// Accepts the rendered form plus integer or single-monomial coefficients
// without parentheses ("q^2*S[2]", "3 S[1]" is rejected).
AnyExpr parse_expression(std::string_view text);

// {"basis": "S", "degree": 5 | null, "terms": [{"index": [...], "coef": "..."}]}
nlohmann::ordered_json to_json(const AnyExpr& e);
AnyExpr from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const TransitionMatrix& m);

}  // namespace ncsf
