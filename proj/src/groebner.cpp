#include "spherec/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <set>
#include <utility>

namespace spherec {

Ideal Ideal::make(std::size_t varCount, std::vector<Polynomial> generators,
                  const MonomialOrder& ord) {
    Ideal ideal;
    ideal.varCount = varCount;
    ideal.order = ord;
    for (Polynomial& g : generators) {
        if (g.varCount() != varCount)
            throw std::invalid_argument("ideal generator ambient mismatch");
        if (!g.isZero())
            ideal.generators.push_back(Polynomial::fromTerms(varCount, g.terms(), ord));
    }
    return ideal;
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.isZero() || g.isZero())
        throw std::invalid_argument("s-polynomial of a zero polynomial");
    Polynomial fn = Polynomial::fromTerms(f.varCount(), f.terms(), ord);
    Polynomial gn = Polynomial::fromTerms(g.varCount(), g.terms(), ord);
    Monomial l = Monomial::lcm(fn.leadingMonomial(), gn.leadingMonomial());
    Polynomial left = mulTerm(fn, l.dividedBy(fn.leadingMonomial()),
                              makeRational(fn.leadingCoefficient().get_den(),
                                           fn.leadingCoefficient().get_num()));
    Polynomial right = mulTerm(gn, l.dividedBy(gn.leadingMonomial()),
                               makeRational(gn.leadingCoefficient().get_den(),
                                            gn.leadingCoefficient().get_num()));
    return sub(left, right, ord);
}

namespace {

using Clock = std::chrono::steady_clock;

// Integer-primitive working form: exact rational arithmetic is kept but the
// inner loop runs on cleared-denominator, content-1 polynomials.
struct ZTerm {
    Monomial mono;
    mpz_class coeff;
};

struct ZPoly {
    std::vector<ZTerm> terms; // strictly descending under the active order

    bool isZero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().mono; }
    const mpz_class& lc() const { return terms.front().coeff; }
};

// Divide by content and make the leading coefficient positive.
void normalizeContent(ZPoly& p) {
    if (p.isZero())
        return;
    mpz_class content(0);
    for (const ZTerm& t : p.terms) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_mpz_t());
        if (content == 1)
            break;
    }
    bool flip = p.lc() < 0;
    if (content == 1 && !flip)
        return;
    if (flip)
        content = -content;
    for (ZTerm& t : p.terms)
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), content.get_mpz_t());
}

ZPoly toZ(const Polynomial& f, const MonomialOrder& ord) {
    Polynomial n = Polynomial::fromTerms(f.varCount(), f.terms(), ord);
    mpz_class denLcm(1);
    for (const Term& t : n.terms())
        mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(),
                t.coefficient.get_den().get_mpz_t());
    ZPoly p;
    p.terms.reserve(n.termCount());
    for (const Term& t : n.terms())
        p.terms.push_back(ZTerm{t.monomial,
                                mpz_class(t.coefficient.get_num() *
                                          (denLcm / t.coefficient.get_den()))});
    normalizeContent(p);
    return p;
}

Polynomial fromZ(const ZPoly& p, std::size_t varCount) {
    std::vector<Term> terms;
    terms.reserve(p.terms.size());
    for (const ZTerm& t : p.terms)
        terms.push_back(Term{t.mono, Rat(t.coeff)});
    return Polynomial::fromSorted(varCount, std::move(terms));
}

// S-polynomial in integer form: (b/g)(l/lm_f) f - (a/g)(l/lm_g) g with
// a = lc(f), b = lc(g), g = gcd(a,b). A positive scalar multiple of the
// rational S-polynomial.
ZPoly zSPoly(const ZPoly& f, const ZPoly& g, const Monomial& l, const MonomialOrder& ord) {
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
    mpz_class mf = g.lc() / cg;
    mpz_class mg = f.lc() / cg;
    Monomial qf = l.dividedBy(f.lm());
    Monomial qg = l.dividedBy(g.lm());

    ZPoly out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        Monomial a = f.terms[i].mono.times(qf);
        Monomial b = g.terms[j].mono.times(qg);
        auto cmp = ord.compare(a, b);
        if (cmp == std::strong_ordering::greater) {
            out.terms.push_back(ZTerm{std::move(a), mpz_class(mf * f.terms[i].coeff)});
            ++i;
        } else if (cmp == std::strong_ordering::less) {
            out.terms.push_back(ZTerm{std::move(b), mpz_class(-mg * g.terms[j].coeff)});
            ++j;
        } else {
            mpz_class c = mf * f.terms[i].coeff - mg * g.terms[j].coeff;
            if (c != 0)
                out.terms.push_back(ZTerm{std::move(a), std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < f.terms.size(); ++i)
        out.terms.push_back(ZTerm{f.terms[i].mono.times(qf), mpz_class(mf * f.terms[i].coeff)});
    for (; j < g.terms.size(); ++j)
        out.terms.push_back(ZTerm{g.terms[j].mono.times(qg), mpz_class(-mg * g.terms[j].coeff)});
    normalizeContent(out);
    return out;
}

class Reducer {
public:
    Reducer(const MonomialOrder& ord, GbStats& stats) : ord_(ord), stats_(stats) {}

    // Fully reduce p modulo basis[k] for k with usable(k), starting at term
    // index `from` (1 for tail reduction). The result is content-normalized.
    template <typename Usable>
    ZPoly reduce(ZPoly p, const std::vector<ZPoly>& basis, Usable usable,
                 std::size_t from = 0) const {
        std::size_t i = from;
        std::uint32_t sinceNormalize = 0;
        while (i < p.terms.size()) {
            const Monomial& target = p.terms[i].mono;
            std::size_t k = basis.size();
            for (std::size_t c = 0; c < basis.size(); ++c)
                if (usable(c) && basis[c].lm().divides(target)) {
                    k = c;
                    break;
                }
            if (k == basis.size()) {
                ++i;
                continue;
            }
            eliminate(p, i, basis[k]);
            ++stats_.reductionSteps;
            if (++sinceNormalize >= 64) {
                normalizeContent(p);
                sinceNormalize = 0;
            }
        }
        normalizeContent(p);
        return p;
    }

private:
    // Cancel p.terms[i] against g: p <- (lc(g)/d) p - (coeff/d) (m/lm(g)) g.
    void eliminate(ZPoly& p, std::size_t i, const ZPoly& g) const {
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), p.terms[i].coeff.get_mpz_t(), g.lc().get_mpz_t());
        mpz_class multP = g.lc() / d;
        mpz_class multG = p.terms[i].coeff / d;
        if (multP < 0) {
            multP = -multP;
            multG = -multG;
        }
        if (multP != 1)
            for (ZTerm& t : p.terms)
                t.coeff *= multP;
        Monomial q = p.terms[i].mono.dividedBy(g.lm());

        // Merge the scaled reducer into the tail p.terms[i..]; the head
        // terms p.terms[0..i) are untouched apart from the scaling above.
        std::vector<ZTerm> tail;
        tail.reserve(p.terms.size() - i + g.terms.size());
        std::size_t a = i, b = 0;
        while (a < p.terms.size() && b < g.terms.size()) {
            Monomial gm = g.terms[b].mono.times(q);
            auto cmp = ord_.compare(p.terms[a].mono, gm);
            if (cmp == std::strong_ordering::greater) {
                tail.push_back(std::move(p.terms[a]));
                ++a;
            } else if (cmp == std::strong_ordering::less) {
                tail.push_back(ZTerm{std::move(gm), mpz_class(-multG * g.terms[b].coeff)});
                ++b;
            } else {
                mpz_class c = p.terms[a].coeff - multG * g.terms[b].coeff;
                if (c != 0)
                    tail.push_back(ZTerm{std::move(gm), std::move(c)});
                ++a;
                ++b;
            }
        }
        for (; a < p.terms.size(); ++a)
            tail.push_back(std::move(p.terms[a]));
        for (; b < g.terms.size(); ++b)
            tail.push_back(ZTerm{g.terms[b].mono.times(q), mpz_class(-multG * g.terms[b].coeff)});

        p.terms.resize(i);
        for (ZTerm& t : tail)
            p.terms.push_back(std::move(t));
    }

    const MonomialOrder& ord_;
    GbStats& stats_;
};

struct PairEntry {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint64_t seq;
};

} // namespace

GroebnerBasis buchberger(const Ideal& ideal, const Budget& budget, PairStrategy strategy) {
    const MonomialOrder ord = ideal.order;
    const std::size_t nvars = ideal.varCount;
    GbStats stats;
    Reducer reducer(ord, stats);
    const auto start = Clock::now();

    auto elapsedSeconds = [&] {
        return std::chrono::duration<double>(Clock::now() - start).count();
    };

    std::vector<ZPoly> basis;
    basis.reserve(ideal.generators.size() * 2);

    // Pair queue. The normal strategy pops the minimal lcm under the active
    // order, ties broken by creation sequence; FirstCome pops in creation
    // order. `pending` backs the chain criterion.
    auto lcmLess = [&](const PairEntry& x, const PairEntry& y) {
        if (strategy == PairStrategy::NormalMinimalLcm) {
            auto cmp = ord.compare(x.lcm, y.lcm);
            if (cmp != std::strong_ordering::equal)
                return cmp == std::strong_ordering::less;
        }
        return x.seq < y.seq;
    };
    auto queueCmp = [&](const PairEntry& x, const PairEntry& y) { return lcmLess(y, x); };
    std::priority_queue<PairEntry, std::vector<PairEntry>, decltype(queueCmp)> queue(queueCmp);
    std::set<std::pair<std::uint32_t, std::uint32_t>> pending;
    std::uint64_t seq = 0;

    auto addElement = [&](ZPoly p) {
        std::uint32_t t = static_cast<std::uint32_t>(basis.size());
        for (std::uint32_t k = 0; k < t; ++k) {
            if (basis[k].lm().coprime(p.lm())) {
                ++stats.pairsSkipped; // Buchberger's first criterion
                continue;
            }
            PairEntry e{k, t, Monomial::lcm(basis[k].lm(), p.lm()), seq++};
            pending.insert({k, t});
            queue.push(std::move(e));
        }
        basis.push_back(std::move(p));
    };

    for (const Polynomial& g : ideal.generators)
        addElement(toZ(g, ord));

    std::size_t additionsSinceTailReduce = 0;
    while (!queue.empty()) {
        if (stats.pairsProcessed >= budget.maxPairs)
            throw BudgetExhausted("pair budget exhausted", stats);
        if (elapsedSeconds() > budget.maxSeconds)
            throw BudgetExhausted("time budget exhausted", stats);

        PairEntry e = queue.top();
        queue.pop();
        pending.erase({e.i, e.j});

        // Chain criterion: skip when some k with LM(k) | lcm(i,j) has both
        // companion pairs already handled.
        bool skip = false;
        for (std::uint32_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == e.i || k == e.j)
                continue;
            if (!basis[k].lm().divides(e.lcm))
                continue;
            auto key = [&](std::uint32_t a, std::uint32_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending.count(key(e.i, k)) && !pending.count(key(e.j, k)))
                skip = true;
        }
        if (skip) {
            ++stats.pairsSkipped;
            continue;
        }

        ++stats.pairsProcessed;
        ZPoly s = zSPoly(basis[e.i], basis[e.j], e.lcm, ord);
        ZPoly h = reducer.reduce(std::move(s), basis, [](std::size_t) { return true; });
        if (h.isZero()) {
            ++stats.reductionsToZero;
            continue;
        }
        addElement(std::move(h));

        // Periodic tail reduction keeps the working basis short; leading
        // monomials are untouched so pair bookkeeping stays valid.
        if (++additionsSinceTailReduce >= 16) {
            additionsSinceTailReduce = 0;
            for (std::size_t t = 0; t < basis.size(); ++t)
                basis[t] = reducer.reduce(std::move(basis[t]), basis,
                                          [&](std::size_t c) { return c != t; }, 1);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's (equal leading monomials keep the earliest).
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            if (basis[j].lm().divides(basis[i].lm()) &&
                (!(basis[i].lm() == basis[j].lm()) || j < i))
                redundant = true;
        }
        if (!redundant)
            kept.push_back(i);
    }

    std::vector<ZPoly> minimal;
    minimal.reserve(kept.size());
    for (std::size_t i : kept)
        minimal.push_back(std::move(basis[i]));

    // Inter-reduce: fully reduce each element modulo the others. Leading
    // monomials are pairwise non-divisible, so only tails change.
    std::vector<ZPoly> reduced = minimal;
    for (std::size_t t = 0; t < minimal.size(); ++t)
        reduced[t] = reducer.reduce(std::move(reduced[t]), minimal,
                                    [&](std::size_t c) { return c != t; });

    GroebnerBasis out;
    out.varCount = nvars;
    out.order = ord;
    for (const ZPoly& p : reduced)
        out.elements.push_back(makeMonic(fromZ(p, nvars)));
    std::sort(out.elements.begin(), out.elements.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ord.less(a.leadingMonomial(), b.leadingMonomial());
              });
    out.stats = stats;
    return out;
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis) {
    return divide(f, basis.elements, basis.order).remainder;
}

} // namespace spherec
