#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "ouroboros/constraint.hpp"
#include "ouroboros/matrix.hpp"
#include "ouroboros/polynomial.hpp"

namespace ouroboros {

// JSON polynomial document:
//   {"vars":["c1",...,"cn"(,"lambda")],"terms":[{"coeff":"num/den","exps":[e1,...]},...]}
// Terms are written in canonical (graded-lex descending) order; "/den" is omitted when 1.
// Output is compact and byte-stable.

std::string render_json(const Polynomial& p);
std::string render_json(const PolyMatrix& m);
std::string render_json(const VerificationReport& r);

/// Parses a polynomial document, normalizing term order and merging repeated monomials.
/// Throws ParseError naming the offending field.
Polynomial parse_json(std::string_view text);

/// "c_1^2+c_1c_2-c_1"; zero renders as "0".
std::string render_latex(const Polynomial& p);
/// Same layout without TeX markup: "c1^2+c1c2-c1".
std::string render_plain(const Polynomial& p);

std::string render_latex(const PolyMatrix& m);
std::string render_plain(const PolyMatrix& m);
std::string render_plain(const VerificationReport& r);

}  // namespace ouroboros
