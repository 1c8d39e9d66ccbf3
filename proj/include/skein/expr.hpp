#pragma once

#include <string_view>

#include "skein/quantum_torus.hpp"
#include "skein/torus_skein.hpp"

namespace skein {

// Evaluates the CLI expression grammar in the chosen algebra at the given
// cutoff: atoms P[i,j] (torus-skein), X[i,j] (quantum-torus), Q[i,j],
// Qinv[i,j], scalar literals (rationals, s, q = s^2), and the operators
// + - * / ^ with parentheses. Scalar-only subexpressions are computed in the
// coefficient field and promoted where needed. Throws ParseError with a
// position for both syntax and semantic faults.
SkeinElement evaluate_skein_expression(std::string_view text, int max_degree);
QTSeries evaluate_qt_expression(std::string_view text, int max_degree);

}  // namespace skein
