#ifndef SPHEREC_POLY_TEXT_HPP
#define SPHEREC_POLY_TEXT_HPP

#include "spherec/polynomial.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace spherec {

/// Text form with terms like `3/2*x1^2*x3 - x2 + 1`, descending in ord.
std::string printPolynomial(const Polynomial& f, const std::vector<std::string>& names,
                            const MonomialOrder& ord);

/// Default variable names x1..xN.
std::vector<std::string> defaultVariableNames(std::size_t varCount);

/// Parses one polynomial over the declared variables.
///   poly   := [+|-] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := rational | name ("^" uint)?
Polynomial parsePolynomial(const std::string& text, const std::vector<std::string>& names,
                           const MonomialOrder& ord);

/// An ideal file: header `vars: x1 x2 ...`, then one polynomial per line.
/// Blank lines and `#` comments are skipped.
struct IdealFile {
    std::vector<std::string> variableNames;
    std::vector<Polynomial> polynomials;
};

IdealFile readIdealFile(std::istream& in, const MonomialOrder& ord);
IdealFile readIdealFileFromString(const std::string& text, const MonomialOrder& ord);

/// Writes the header and one polynomial per line. Every polynomial is
/// emitted in primitive integer form (an equivalent generator).
void writeIdealFile(std::ostream& out, const IdealFile& file, const MonomialOrder& ord);

} // namespace spherec

#endif
