#ifndef SPHEREC_POLYNOMIAL_HPP
#define SPHEREC_POLYNOMIAL_HPP

#include "spherec/monomial.hpp"
#include "spherec/numeric.hpp"

#include <cstddef>
#include <vector>

namespace spherec {

/// Exact rational q = num/den in lowest terms.
Rat makeRational(const mpz_class& num, const mpz_class& den);

struct Term {
    Monomial monomial;
    Rat coefficient;
};

/// Sparse multivariate polynomial over Q. Terms are kept strictly
/// descending under the order the polynomial was last normalized with; the
/// zero polynomial has no terms. Monomial orders are explicit parameters,
/// never ambient state.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t varCount) : varCount_(varCount) {}

    static Polynomial zero(std::size_t varCount) { return Polynomial(varCount); }
    static Polynomial constant(std::size_t varCount, const Rat& value);
    static Polynomial variable(std::size_t index, std::size_t varCount);
    /// Merges duplicates, purges zero coefficients, sorts descending.
    static Polynomial fromTerms(std::size_t varCount, std::vector<Term> terms,
                                const MonomialOrder& ord);
    /// Adopts terms already strictly descending, duplicate-free, zero-free.
    static Polynomial fromSorted(std::size_t varCount, std::vector<Term> terms);

    std::size_t varCount() const { return varCount_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Leading data of a nonzero polynomial (throws std::logic_error on zero).
    const Monomial& leadingMonomial() const;
    const Rat& leadingCoefficient() const;
    const Term& leadingTerm() const;

    std::uint32_t totalDegree() const; // max term degree; 0 for the zero polynomial

    bool isConstant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.isUnit());
    }

    /// Exact equality as elements of Q[x]; independent of term ordering.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Rat evaluate(const std::vector<Rat>& point) const;

private:
    friend Polynomial add(const Polynomial&, const Polynomial&, const MonomialOrder&);
    friend Polynomial sub(const Polynomial&, const Polynomial&, const MonomialOrder&);
    friend Polynomial mul(const Polynomial&, const Polynomial&, const MonomialOrder&);
    friend Polynomial mulTerm(const Polynomial&, const Monomial&, const Rat&);
    friend Polynomial scale(const Polynomial&, const Rat&);
    friend Polynomial negate(const Polynomial&);

    std::size_t varCount_ = 0;
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
/// Multiplies by a single term; preserves sortedness under every order.
Polynomial mulTerm(const Polynomial& f, const Monomial& m, const Rat& c);
Polynomial scale(const Polynomial& f, const Rat& c);
Polynomial negate(const Polynomial& f);

/// Leading coefficient 1 (identity on the zero polynomial).
Polynomial makeMonic(const Polynomial& f);

/// Integer coefficients with content 1 and positive leading coefficient;
/// a positive rational multiple of f.
Polynomial primitivePart(const Polynomial& f);

bool hasIntegerCoefficients(const Polynomial& f);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division: f = sum(quotients[i] * divisors[i]) + remainder,
/// no monomial of the remainder divisible by any divisor's leading monomial.
/// Deterministic given the divisor order. Divisors must be nonzero.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord);

} // namespace spherec

#endif
