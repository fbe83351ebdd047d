#include "spherec/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace spherec {

Rat makeRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Polynomial Polynomial::constant(std::size_t varCount, const Rat& value) {
    Polynomial p(varCount);
    if (value != 0)
        p.terms_.push_back(Term{Monomial(varCount), value});
    return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t varCount) {
    Polynomial p(varCount);
    p.terms_.push_back(Term{Monomial::variable(index, varCount), Rat(1)});
    return p;
}

Polynomial Polynomial::fromTerms(std::size_t varCount, std::vector<Term> terms,
                                 const MonomialOrder& ord) {
    for (const Term& t : terms)
        if (t.monomial.varCount() != varCount)
            throw std::invalid_argument("term ambient mismatch");
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.monomial, b.monomial);
    });
    Polynomial p(varCount);
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
            p.terms_.back().coefficient += t.coefficient;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coefficient == 0)
            p.terms_.pop_back();
    }
    return p;
}

const Monomial& Polynomial::leadingMonomial() const { return leadingTerm().monomial; }
const Rat& Polynomial::leadingCoefficient() const { return leadingTerm().coefficient; }

const Term& Polynomial::leadingTerm() const {
    if (terms_.empty())
        throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
}

std::uint32_t Polynomial::totalDegree() const {
    std::uint32_t d = 0;
    for (const Term& t : terms_)
        d = std::max(d, t.monomial.degree());
    return d;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.varCount_ != b.varCount_ || a.terms_.size() != b.terms_.size())
        return false;
    auto canon = [](const Polynomial& p) {
        std::vector<const Term*> v;
        v.reserve(p.terms_.size());
        for (const Term& t : p.terms_)
            v.push_back(&t);
        std::sort(v.begin(), v.end(), [](const Term* x, const Term* y) {
            return x->monomial.exponents() < y->monomial.exponents();
        });
        return v;
    };
    auto va = canon(a), vb = canon(b);
    for (std::size_t i = 0; i < va.size(); ++i)
        if (!(va[i]->monomial == vb[i]->monomial) ||
            va[i]->coefficient != vb[i]->coefficient)
            return false;
    return true;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != varCount_)
        throw std::invalid_argument("evaluation point ambient mismatch");
    Rat total(0);
    for (const Term& t : terms_) {
        Rat v = t.coefficient;
        for (std::size_t i = 0; i < varCount_; ++i)
            for (std::uint32_t k = 0; k < t.monomial.exponent(i); ++k)
                v *= point[i];
        total += v;
    }
    return total;
}

namespace {

void requireSameAmbient(const Polynomial& f, const Polynomial& g) {
    if (f.varCount() != g.varCount())
        throw std::invalid_argument("polynomial ambient mismatch");
}

} // namespace

// Merge two term sequences sorted descending under ord; the output is
// already normalized, no re-sort.
Polynomial mergeSorted(const Polynomial& f, const Polynomial& g, bool negateG,
                       const MonomialOrder& ord);

Polynomial mergeSorted(const Polynomial& f, const Polynomial& g, bool negateG,
                       const MonomialOrder& ord) {
    requireSameAmbient(f, g);
    std::vector<Term> terms;
    terms.reserve(f.termCount() + g.termCount());
    std::size_t i = 0, j = 0;
    const auto& ft = f.terms();
    const auto& gt = g.terms();
    while (i < ft.size() && j < gt.size()) {
        auto cmp = ord.compare(ft[i].monomial, gt[j].monomial);
        if (cmp == std::strong_ordering::greater) {
            terms.push_back(ft[i++]);
        } else if (cmp == std::strong_ordering::less) {
            terms.push_back(gt[j]);
            if (negateG)
                terms.back().coefficient = -terms.back().coefficient;
            ++j;
        } else {
            Rat c = negateG ? Rat(ft[i].coefficient - gt[j].coefficient)
                            : Rat(ft[i].coefficient + gt[j].coefficient);
            if (c != 0)
                terms.push_back(Term{ft[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < ft.size(); ++i)
        terms.push_back(ft[i]);
    for (; j < gt.size(); ++j) {
        terms.push_back(gt[j]);
        if (negateG)
            terms.back().coefficient = -terms.back().coefficient;
    }
    return Polynomial::fromSorted(f.varCount(), std::move(terms));
}

Polynomial Polynomial::fromSorted(std::size_t varCount, std::vector<Term> terms) {
    Polynomial p(varCount);
    p.terms_ = std::move(terms);
    return p;
}

Polynomial add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    return mergeSorted(f, g, false, ord);
}

Polynomial sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    return mergeSorted(f, g, true, ord);
}

Polynomial mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    requireSameAmbient(f, g);
    std::vector<Term> terms;
    terms.reserve(f.termCount() * g.termCount());
    for (const Term& a : f.terms())
        for (const Term& b : g.terms())
            terms.push_back(Term{a.monomial.times(b.monomial),
                                 Rat(a.coefficient * b.coefficient)});
    return Polynomial::fromTerms(f.varCount(), std::move(terms), ord);
}

Polynomial mulTerm(const Polynomial& f, const Monomial& m, const Rat& c) {
    if (m.varCount() != f.varCount())
        throw std::invalid_argument("polynomial ambient mismatch");
    Polynomial out(f.varCount());
    if (c == 0)
        return out;
    out.terms_.reserve(f.termCount());
    for (const Term& t : f.terms())
        out.terms_.push_back(Term{t.monomial.times(m), Rat(t.coefficient * c)});
    return out;
}

Polynomial scale(const Polynomial& f, const Rat& c) {
    Polynomial out(f.varCount());
    if (c == 0)
        return out;
    out.terms_.reserve(f.termCount());
    for (const Term& t : f.terms())
        out.terms_.push_back(Term{t.monomial, Rat(t.coefficient * c)});
    return out;
}

Polynomial negate(const Polynomial& f) {
    Polynomial out = f;
    for (Term& t : out.terms_)
        t.coefficient = -t.coefficient;
    return out;
}

Polynomial makeMonic(const Polynomial& f) {
    if (f.isZero())
        return f;
    return scale(f, makeRational(f.leadingCoefficient().get_den(),
                                 f.leadingCoefficient().get_num()));
}

Polynomial primitivePart(const Polynomial& f) {
    if (f.isZero())
        return f;
    mpz_class denLcm(1), numGcd(0);
    for (const Term& t : f.terms()) {
        mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(),
                t.coefficient.get_den().get_mpz_t());
        mpz_gcd(numGcd.get_mpz_t(), numGcd.get_mpz_t(),
                t.coefficient.get_num().get_mpz_t());
    }
    Rat factor = makeRational(denLcm, numGcd);
    if (f.leadingCoefficient() < 0)
        factor = -factor;
    return scale(f, factor);
}

bool hasIntegerCoefficients(const Polynomial& f) {
    for (const Term& t : f.terms())
        if (t.coefficient.get_den() != 1)
            return false;
    return true;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord) {
    // Renormalize under the active order so leading-term access is valid
    // even if a caller built its inputs under a different order.
    std::vector<Polynomial> gs;
    gs.reserve(divisors.size());
    for (const Polynomial& g : divisors) {
        if (g.isZero())
            throw std::invalid_argument("division by the zero polynomial");
        if (g.varCount() != f.varCount())
            throw std::invalid_argument("polynomial ambient mismatch");
        gs.push_back(Polynomial::fromTerms(g.varCount(), g.terms(), ord));
    }

    DivisionResult res;
    res.quotients.assign(divisors.size(), Polynomial(f.varCount()));
    std::vector<Term> remainderTerms;

    Polynomial p = Polynomial::fromTerms(f.varCount(), f.terms(), ord);
    while (!p.isZero()) {
        const Term lt = p.leadingTerm();
        bool reduced = false;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            const Polynomial& g = gs[i];
            if (!g.leadingMonomial().divides(lt.monomial))
                continue;
            Monomial qm = lt.monomial.dividedBy(g.leadingMonomial());
            Rat qc = lt.coefficient / g.leadingCoefficient();
            res.quotients[i] = add(res.quotients[i],
                                   Polynomial::fromSorted(f.varCount(), {Term{qm, qc}}),
                                   ord);
            p = sub(p, mulTerm(g, qm, qc), ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            // Leading term moves to the remainder.
            remainderTerms.push_back(lt);
            p = sub(p, Polynomial::fromSorted(f.varCount(), {lt}), ord);
        }
    }

    res.remainder = Polynomial::fromSorted(f.varCount(), std::move(remainderTerms));

#ifdef SPHEREC_SELFCHECK
    // Post-hoc contract verification: reconstruct f and check the remainder
    // divisibility condition.
    Polynomial recon = res.remainder;
    for (std::size_t i = 0; i < gs.size(); ++i)
        recon = add(recon, mul(res.quotients[i], gs[i], ord), ord);
    if (!(recon == f))
        throw std::logic_error("division self-check failed: reconstruction mismatch");
    for (const Term& t : res.remainder.terms())
        for (const Polynomial& g : gs)
            if (g.leadingMonomial().divides(t.monomial))
                throw std::logic_error("division self-check failed: reducible remainder");
#endif

    return res;
}

} // namespace spherec
