#pragma once

#include <string>

#include "braidlie/poly.hpp"
#include "braidlie/report.hpp"

namespace braidlie {

/// Canonical scalar text: terms ascending in z-power at the minimal level,
/// e.g. "1 - 1*z^1 @ 3"; zero is "0 @ 1". parse_scalar(render_scalar(u)) == u.
std::string render_scalar(const CycScalar& u);

/// Accepts both the canonical form with a trailing "@ M" applying to bare
/// z^k terms, and inline z^k@M atoms; +, -, *, / and parentheses.
CycScalar parse_scalar(const std::string& text);

std::string render_word(const GeneratorTable& table, const Word& w);  // "x*y", "1"
std::string render_poly(const GradedPoly& p);                         // "x*y - y*x"
std::string render_tensor(const TensorPoly& t);  // "x(x)1 + 1(x)x"
std::string render_group_element(const GroupElement& g);  // "(1,0)"
std::string render_permutation(const Permutation& sigma);  // "(2,1)"
std::string render_family(const ZetaFamily& fam);  // "zeta=-1 @ 1 family=(1),(1)"

/// One line per entry: "<name> PASS" or "<name> FAIL <witness>", preceded by
/// CAVEAT lines and followed by a SUMMARY line.
std::string render_report(const CheckReport& report);

/// Infix polynomial expression over the table's generators: + - * / ^,
/// integer and rational scalars, z^k@M atoms, parenthesized scalar groups,
/// explicit * between factors. "(x)" is reserved as the tensor separator
/// and is rejected here.
GradedPoly parse_poly(const std::string& text, const TablePtr& table);

/// Same grammar plus the "(x)" separator; every term must have exactly one.
TensorPoly parse_tensor(const std::string& text, const TablePtr& table);

}  // namespace braidlie
