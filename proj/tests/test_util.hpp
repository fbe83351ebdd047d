#ifndef SPHEREC_TEST_UTIL_HPP
#define SPHEREC_TEST_UTIL_HPP

#include "spherec/dimension.hpp"
#include "spherec/groebner.hpp"

#include <stdexcept>
#include <string>

namespace spherec::testutil {

// Buchberger post-condition: the basis is monic, inter-reduced, every
// pairwise S-polynomial and every input generator normal-forms to zero,
// and leading terms cover the input generators' leading terms. Throws
// std::runtime_error with a description on the first violation.
inline void verifyGroebnerContract(const Ideal& ideal, const GroebnerBasis& basis) {
    auto fail = [](const std::string& what) { throw std::runtime_error(what); };

    for (const Polynomial& g : basis.elements) {
        if (g.isZero())
            fail("zero element in basis");
        if (g.leadingCoefficient() != 1)
            fail("non-monic basis element");
    }

    // Inter-reduced: no monomial of any element divisible by another's LM.
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        for (std::size_t j = 0; j < basis.elements.size(); ++j) {
            if (i == j)
                continue;
            for (const Term& t : basis.elements[i].terms())
                if (basis.elements[j].leadingMonomial().divides(t.monomial))
                    fail("basis not inter-reduced");
        }

    // Buchberger criterion.
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
            Polynomial s = sPolynomial(basis.elements[i], basis.elements[j], basis.order);
            if (!normalForm(s, basis).isZero())
                fail("s-polynomial does not reduce to zero");
        }

    // Both containments, observed through normal forms and leading terms.
    MonomialIdeal lt = leadingTermIdeal(basis);
    for (const Polynomial& g : ideal.generators) {
        if (!normalForm(g, basis).isZero())
            fail("input generator does not reduce to zero");
        if (!lt.contains(g.leadingMonomial()))
            fail("input leading term not in the leading-term ideal");
    }
}

// The Macaulay cross-check plus strategy/uniqueness checks used on every
// basis the suites compute: both pair strategies agree element-for-element
// and the combinatorial dimension equals the Hilbert degree.
inline GroebnerBasis computeCheckedBasis(const Ideal& ideal, const Budget& budget = {}) {
    GroebnerBasis normal = buchberger(ideal, budget, PairStrategy::NormalMinimalLcm);
    verifyGroebnerContract(ideal, normal);

    GroebnerBasis fifo = buchberger(ideal, budget, PairStrategy::FirstCome);
    if (normal.elements.size() != fifo.elements.size())
        throw std::runtime_error("pair strategies disagree on basis size");
    for (std::size_t i = 0; i < normal.elements.size(); ++i)
        if (!(normal.elements[i] == fifo.elements[i]))
            throw std::runtime_error("pair strategies disagree on basis elements");

    crossCheck(normal); // throws InternalError on disagreement
    return normal;
}

} // namespace spherec::testutil

#endif
