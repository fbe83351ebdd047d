#ifndef SPHEREC_DIMENSION_HPP
#define SPHEREC_DIMENSION_HPP

#include "spherec/groebner.hpp"
#include "spherec/numeric.hpp"

#include <cstddef>
#include <vector>

namespace spherec {

/// Monomial ideal by its minimal generating set: no generator divides
/// another. A single unit generator marks the unit ideal; an empty set is
/// the zero ideal.
class MonomialIdeal {
public:
    static MonomialIdeal make(std::size_t varCount, std::vector<Monomial> generators);

    std::size_t varCount() const { return varCount_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool isUnit() const { return gens_.size() == 1 && gens_[0].isUnit(); }
    bool isZeroIdeal() const { return gens_.empty(); }

    bool contains(const Monomial& m) const;

private:
    std::size_t varCount_ = 0;
    std::vector<Monomial> gens_;
};

/// Minimal generators of the ideal of leading terms of the basis.
MonomialIdeal leadingTermIdeal(const GroebnerBasis& basis);

struct KrullResult {
    int dimension = 0;                // -1 encodes the empty variety
    std::vector<std::size_t> witness; // maximal independent variable set,
                                      // lexicographically smallest such
};

/// Dimension of V(M): the largest variable subset S such that no generator
/// has its support inside S (equivalently N minus a minimum hitting set of
/// the generator supports). Unit ideal -> -1; zero ideal -> N.
KrullResult krullDimension(const MonomialIdeal& m);

/// Test oracle: exhaustive enumeration over all 2^N variable subsets.
/// Exponential; intended for small N.
KrullResult krullDimensionBruteForce(const MonomialIdeal& m);

/// Hilbert series of R/M written over the denominator (1-t)^N.
struct HilbertData {
    std::vector<Int> numerator; // coefficient of t^k at index k
    int degree = 0;             // degree of the (affine) Hilbert polynomial,
                                // pinned so that the zero ideal gives N;
                                // -1 encodes the empty variety
};

HilbertData hilbertSeries(const MonomialIdeal& m);

struct DimensionReport {
    int dimension = 0;
    std::vector<std::size_t> witness;
    int hilbertDegree = 0;
    bool agreement = false;
};

/// Computes the dimension both ways (variable subsets and Hilbert series)
/// and requires agreement; throws InternalError if they differ.
DimensionReport crossCheck(const GroebnerBasis& basis);

} // namespace spherec

#endif
