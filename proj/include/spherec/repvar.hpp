#ifndef SPHEREC_REPVAR_HPP
#define SPHEREC_REPVAR_HPP

#include "spherec/groebner.hpp"
#include "spherec/presentation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace spherec {

/// 2x2 matrix of polynomials in the ambient ring C^{4n}, entries (a b; c d).
struct PolyMatrix {
    Polynomial a, b, c, d;

    static PolyMatrix identity(std::size_t varCount);
};

/// Image of generator i: the coordinate variables x_{4i+1}..x_{4i+4}
/// arranged (a b; c d). Throws on i >= n.
PolyMatrix generatorMatrix(std::size_t i, std::size_t n);

/// Adjugate (d -b; -c a); the inverse on the det = 1 locus.
PolyMatrix inverseMatrix(const PolyMatrix& m);

PolyMatrix multiply(const PolyMatrix& x, const PolyMatrix& y, const MonomialOrder& ord);

/// Left-to-right product of generator images / adjugates along the word;
/// the empty word gives the identity.
PolyMatrix evaluateRelator(const Word& w, std::size_t n, const MonomialOrder& ord);

/// Where an equation came from: one matrix entry of a relator equation, or
/// one determinant condition.
struct EquationTag {
    enum class Kind { RelatorEntry, Determinant };
    Kind kind = Kind::RelatorEntry;
    std::size_t index = 0; // relator index or generator index
    char entry = 'a';      // 'a'..'d' for relator entries
    bool purged = false;   // tautological (zero) equation dropped from the ideal
    std::optional<std::size_t> generatorIndex; // position in ideal.generators

    std::string describe() const;
};

/// Defining equations of Hom(pi, SL(2,C)) in C^{4n}: per relator the four
/// entries of (word product - identity), per generator det - 1. Exactly
/// 4m + n equations are generated; identically-zero ones (from empty
/// relators) are purged from the ideal with their tags retained.
struct RepresentationIdeal {
    Ideal ideal;
    std::vector<EquationTag> tags; // size 4m + n, aligned with generation order
    std::size_t equationCount = 0; // 4m + n
};

RepresentationIdeal representationIdeal(const GroupPresentation& p, const MonomialOrder& ord);

} // namespace spherec

#endif
