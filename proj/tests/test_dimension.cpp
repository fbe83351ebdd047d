#include "spherec/dimension.hpp"
#include "spherec/errors.hpp"
#include "spherec/poly_text.hpp"

#include <doctest.h>

#include <random>

using namespace spherec;

namespace {

Monomial monomialOf(std::initializer_list<std::uint32_t> exps) {
    return Monomial(std::vector<std::uint32_t>(exps));
}

MonomialIdeal idealOf(std::size_t n, std::initializer_list<std::initializer_list<std::uint32_t>> gens) {
    std::vector<Monomial> ms;
    for (auto g : gens)
        ms.push_back(Monomial(std::vector<std::uint32_t>(g)));
    return MonomialIdeal::make(n, std::move(ms));
}

MonomialIdeal randomMonomialIdeal(std::mt19937_64& rng, std::size_t maxVars = 6,
                                  std::size_t maxGens = 8) {
    std::uniform_int_distribution<std::size_t> varsDist(1, maxVars);
    std::uniform_int_distribution<std::size_t> gensDist(0, maxGens);
    std::uniform_int_distribution<std::uint32_t> expDist(0, 3);
    std::size_t n = varsDist(rng);
    std::size_t k = gensDist(rng);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::uint32_t> exps(n);
        for (auto& e : exps)
            e = expDist(rng);
        gens.push_back(Monomial(std::move(exps)));
    }
    return MonomialIdeal::make(n, std::move(gens));
}

} // namespace

TEST_CASE("monomial ideal minimalization") {
    MonomialIdeal m = idealOf(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}, {2, 1, 0}});
    CHECK(m.generators().size() == 4); // x^2 y is swallowed by x y
    CHECK(m.contains(monomialOf({2, 1, 0})));
    CHECK_FALSE(m.contains(monomialOf({0, 0, 5})));

    MonomialIdeal unit = idealOf(3, {{0, 0, 0}, {1, 0, 0}});
    CHECK(unit.isUnit());
    CHECK(unit.generators().size() == 1);

    MonomialIdeal zero = MonomialIdeal::make(4, {});
    CHECK(zero.isZeroIdeal());
}

TEST_CASE("leading term ideal of the twisted cubic basis") {
    MonomialOrder lex = MonomialOrder::lex();
    std::vector<std::string> xyz{"x", "y", "z"};
    std::vector<Polynomial> gens = {
        parsePolynomial("x^2 - y", xyz, lex),
        parsePolynomial("x^3 - z", xyz, lex),
    };
    GroebnerBasis basis = buchberger(Ideal::make(3, gens, lex));
    MonomialIdeal lt = leadingTermIdeal(basis);
    REQUIRE(lt.generators().size() == 4);
    CHECK(lt.contains(monomialOf({2, 0, 0}))); // x^2
    CHECK(lt.contains(monomialOf({1, 1, 0}))); // x y
    CHECK(lt.contains(monomialOf({1, 0, 1}))); // x z
    CHECK(lt.contains(monomialOf({0, 3, 0}))); // y^3

    // Unit and zero ideals.
    GroebnerBasis unit = buchberger(
        Ideal::make(2, {parsePolynomial("x", {"x", "y"}, lex),
                        parsePolynomial("x - 1", {"x", "y"}, lex)},
                    lex));
    CHECK(leadingTermIdeal(unit).isUnit());
    GroebnerBasis zero = buchberger(Ideal::make(2, {}, lex));
    CHECK(leadingTermIdeal(zero).isZeroIdeal());
}

TEST_CASE("krull dimension frozen examples") {
    // <x y, x z> in 3 variables: dim 2, witness {y, z}.
    KrullResult r = krullDimension(idealOf(3, {{1, 1, 0}, {1, 0, 1}}));
    CHECK(r.dimension == 2);
    CHECK(r.witness == std::vector<std::size_t>{1, 2});

    // Twisted cubic leading terms: dim 1, witness {z}.
    r = krullDimension(idealOf(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}}));
    CHECK(r.dimension == 1);
    CHECK(r.witness == std::vector<std::size_t>{2});

    // Zero ideal in 4 variables: the whole affine space.
    r = krullDimension(MonomialIdeal::make(4, {}));
    CHECK(r.dimension == 4);
    CHECK(r.witness == std::vector<std::size_t>{0, 1, 2, 3});

    // Unit ideal: empty variety.
    r = krullDimension(idealOf(3, {{0, 0, 0}}));
    CHECK(r.dimension == -1);
    CHECK(r.witness.empty());

    // Non-radical subtlety: <x^2> has dimension 0 in one variable.
    r = krullDimension(idealOf(1, {{2}}));
    CHECK(r.dimension == 0);
    CHECK(r.witness.empty());
}

TEST_CASE("krull dimension equals brute force on random ideals") {
    std::mt19937_64 rng(880011);
    for (int trial = 0; trial < 600; ++trial) {
        MonomialIdeal m = randomMonomialIdeal(rng);
        KrullResult fast = krullDimension(m);
        KrullResult slow = krullDimensionBruteForce(m);
        CHECK(fast.dimension == slow.dimension);
        CHECK(fast.witness == slow.witness);
    }
}

TEST_CASE("adding a generator never increases the dimension") {
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<std::uint32_t> expDist(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        MonomialIdeal m = randomMonomialIdeal(rng, 5, 5);
        std::vector<std::uint32_t> exps(m.varCount());
        for (auto& e : exps)
            e = expDist(rng);
        std::vector<Monomial> gens = m.generators();
        gens.push_back(Monomial(std::move(exps)));
        MonomialIdeal bigger = MonomialIdeal::make(m.varCount(), std::move(gens));
        CHECK(krullDimension(bigger).dimension <= krullDimension(m).dimension);
    }
}

TEST_CASE("hilbert series frozen examples") {
    // Full affine space C^3: series 1/(1-t)^3, dimension 3.
    HilbertData h = hilbertSeries(MonomialIdeal::make(3, {}));
    CHECK(h.numerator == std::vector<Int>{1});
    CHECK(h.degree == 3);

    // Single point: R/<x> in one variable.
    h = hilbertSeries(idealOf(1, {{1}}));
    CHECK(h.degree == 0);

    // Twisted cubic leading-term ideal: degree 1, matching dim 1.
    h = hilbertSeries(idealOf(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}}));
    CHECK(h.degree == 1);

    // Empty variety.
    h = hilbertSeries(idealOf(2, {{0, 0}}));
    CHECK(h.degree == -1);

    // <x y, x z>: (1-t)(1 + t - t^2) over (1-t)^3.
    h = hilbertSeries(idealOf(3, {{1, 1, 0}, {1, 0, 1}}));
    CHECK(h.degree == 2);
    CHECK(h.numerator == std::vector<Int>{1, 0, -2, 1});
}

TEST_CASE("hilbert degree equals combinatorial dimension on random ideals") {
    std::mt19937_64 rng(246810);
    for (int trial = 0; trial < 400; ++trial) {
        MonomialIdeal m = randomMonomialIdeal(rng);
        CHECK(hilbertSeries(m).degree == krullDimension(m).dimension);
    }
}

TEST_CASE("hilbert numerator evaluates to the variety degree at t = 1") {
    // For the twisted cubic leading terms the reduced numerator at 1 is 3.
    HilbertData h = hilbertSeries(idealOf(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}}));
    std::vector<Int> reduced = h.numerator;
    auto evalOne = [](const std::vector<Int>& p) {
        Int s = 0;
        for (const Int& c : p)
            s += c;
        return s;
    };
    auto divide = [](const std::vector<Int>& p) {
        std::vector<Int> q(p.size());
        Int acc = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            acc += p[i];
            q[i] = acc;
        }
        while (!q.empty() && q.back() == 0)
            q.pop_back();
        return q;
    };
    int vanish = 0;
    while (evalOne(reduced) == 0) {
        reduced = divide(reduced);
        ++vanish;
    }
    CHECK(vanish == 2); // dim V = 3 - 2 = 1
    CHECK(evalOne(reduced) == 3);
}

TEST_CASE("crossCheck agrees on standard cases") {
    MonomialOrder lex = MonomialOrder::lex();
    std::vector<std::string> xyz{"x", "y", "z"};
    GroebnerBasis basis = buchberger(
        Ideal::make(3, {parsePolynomial("x^2 - y", xyz, lex),
                        parsePolynomial("x^3 - z", xyz, lex)},
                    lex));
    DimensionReport report = crossCheck(basis);
    CHECK(report.dimension == 1);
    CHECK(report.hilbertDegree == 1);
    CHECK(report.agreement);
    CHECK(report.witness == std::vector<std::size_t>{2});

    GroebnerBasis unit = buchberger(
        Ideal::make(2, {parsePolynomial("x", {"x", "y"}, lex),
                        parsePolynomial("x - 1", {"x", "y"}, lex)},
                    lex));
    report = crossCheck(unit);
    CHECK(report.dimension == -1);
    CHECK(report.agreement);

    GroebnerBasis zero = buchberger(Ideal::make(4, {}, lex));
    report = crossCheck(zero);
    CHECK(report.dimension == 4);
    CHECK(report.agreement);
}
