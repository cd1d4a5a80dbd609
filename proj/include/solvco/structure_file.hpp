#pragma once

#include <string>
#include <string_view>

#include "solvco/lie_algebra.hpp"

namespace solvco {

/// Parses the line-oriented structure-equation format:
///
///     # comment
///     dim 4
///     d e1 = e2^e4
///     d e2 = -1 e1^e4
///
/// A term is `[coef] e<i>^e<j>` with i < j (an optional `*` may follow the
/// coefficient); terms are joined by `+` or `-`; `0` denotes d = 0. Unlisted
/// generators are closed. c(k,i,j) = -(coefficient of e^{ij} in d e^k).
///
/// Throws ParseError with a 1-based line number; with `check` set, also runs
/// validate() and throws AntisymmetryViolation / JacobiViolation.
LieAlgebra parse_structure_file(std::string_view text, bool check = true);

/// Inverse of parse_structure_file; omits closed generators.
std::string dump_structure(const LieAlgebra& g);

}  // namespace solvco
