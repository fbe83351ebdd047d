#include "spherec/groebner.hpp"
#include "spherec/poly_text.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace spherec;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial parseQ(const std::string& text, const std::vector<std::string>& names,
                  const MonomialOrder& ord) {
    return parsePolynomial(text, names, ord);
}

Ideal idealOf(const std::vector<std::string>& polys, const std::vector<std::string>& names,
              const MonomialOrder& ord) {
    std::vector<Polynomial> gens;
    for (const std::string& s : polys)
        gens.push_back(parsePolynomial(s, names, ord));
    return Ideal::make(names.size(), std::move(gens), ord);
}

} // namespace

TEST_CASE("s-polynomial frozen examples") {
    MonomialOrder lex = MonomialOrder::lex();
    // Monomial pair: S(x^2, x y) = 0.
    CHECK(sPolynomial(parseQ("x^2", xy, lex), parseQ("x*y", xy, lex), lex).isZero());
    // S(x^2 - y, x y - z) = x z - y^2 under lex x > y > z.
    CHECK(sPolynomial(parseQ("x^2 - y", xyz, lex), parseQ("x*y - z", xyz, lex), lex) ==
          parseQ("x*z - y^2", xyz, lex));
    Polynomial f = parseQ("x^2 + 3*y - 1", xy, lex);
    CHECK(sPolynomial(f, f, lex).isZero());
}

TEST_CASE("buchberger twisted cubic under lex") {
    MonomialOrder lex = MonomialOrder::lex();
    Ideal ideal = idealOf({"x^2 - y", "x^3 - z"}, xyz, lex);
    GroebnerBasis basis = testutil::computeCheckedBasis(ideal);
    REQUIRE(basis.elements.size() == 4);
    // Reduced basis sorted ascending by leading monomial.
    CHECK(basis.elements[0] == parseQ("y^3 - z^2", xyz, lex));
    CHECK(basis.elements[1] == parseQ("x*z - y^2", xyz, lex));
    CHECK(basis.elements[2] == parseQ("x*y - z", xyz, lex));
    CHECK(basis.elements[3] == parseQ("x^2 - y", xyz, lex));
}

TEST_CASE("buchberger small cases") {
    MonomialOrder ord = MonomialOrder::grevlex();

    // Already reduced.
    Ideal ideal = idealOf({"x - 1"}, xy, ord);
    GroebnerBasis basis = testutil::computeCheckedBasis(ideal);
    REQUIRE(basis.elements.size() == 1);
    CHECK(basis.elements[0] == parseQ("x - 1", xy, ord));

    // Unit ideal: x and x - 1 together give 1.
    ideal = idealOf({"x", "x - 1"}, xy, ord);
    basis = testutil::computeCheckedBasis(ideal);
    REQUIRE(basis.elements.size() == 1);
    CHECK(basis.elements[0] == parseQ("1", xy, ord));

    // Zero ideal.
    ideal = Ideal::make(2, {}, ord);
    basis = testutil::computeCheckedBasis(ideal);
    CHECK(basis.elements.empty());

    // Zero generators are purged, not members.
    ideal = Ideal::make(2, {Polynomial::zero(2), parseQ("y", xy, ord)}, ord);
    CHECK(ideal.generators.size() == 1);
}

TEST_CASE("normal form examples") {
    MonomialOrder lex = MonomialOrder::lex();
    Ideal ideal = idealOf({"x^2 - y", "x^3 - z"}, xyz, lex);
    GroebnerBasis basis = buchberger(ideal);

    CHECK(normalForm(parseQ("x^2 - y", xyz, lex), basis).isZero());
    CHECK(normalForm(parseQ("x^3", xyz, lex), basis) == parseQ("z", xyz, lex));

    // One reduction step against a single-element basis.
    GroebnerBasis xx = buchberger(idealOf({"x^2 - y"}, xyz, lex));
    CHECK(normalForm(parseQ("x^3", xyz, lex), xx) == parseQ("x*y", xyz, lex));

    GroebnerBasis unit = buchberger(idealOf({"x", "x - 1"}, xyz, lex));
    CHECK(normalForm(parseQ("1", xyz, lex), buchberger(idealOf({"x - 1"}, xyz, lex))) ==
          parseQ("1", xyz, lex));
    CHECK(normalForm(parseQ("x^17 + y", xyz, lex), unit).isZero());
}

TEST_CASE("buchberger on random small ideals satisfies the contract") {
    std::mt19937_64 rng(60601);
    std::uniform_int_distribution<int> genCount(1, 3);
    std::uniform_int_distribution<int> termCount(1, 3);
    std::uniform_int_distribution<std::uint32_t> expDist(0, 2);
    std::uniform_int_distribution<long> coeffDist(-4, 4);

    const MonomialOrder orders[] = {MonomialOrder::grevlex(), MonomialOrder::grlex(),
                                    MonomialOrder::lex()};
    for (int trial = 0; trial < 60; ++trial) {
        const MonomialOrder& ord = orders[trial % 3];
        std::vector<Polynomial> gens;
        int k = genCount(rng);
        for (int i = 0; i < k; ++i) {
            std::vector<Term> terms;
            int t = termCount(rng);
            for (int j = 0; j < t; ++j) {
                std::vector<std::uint32_t> exps(3);
                for (auto& e : exps)
                    e = expDist(rng);
                terms.push_back(Term{Monomial(std::move(exps)), Rat(coeffDist(rng))});
            }
            gens.push_back(Polynomial::fromTerms(3, std::move(terms), ord));
        }
        Ideal ideal = Ideal::make(3, std::move(gens), ord);
        testutil::computeCheckedBasis(ideal);
    }
}

TEST_CASE("budget exhaustion carries partial statistics") {
    MonomialOrder ord = MonomialOrder::grevlex();
    // Katsura-3: nontrivial enough that a one-pair budget cannot finish.
    std::vector<std::string> names{"a", "b", "c", "d"};
    Ideal ideal = idealOf({"a + 2*b + 2*c + 2*d - 1",
                           "a^2 + 2*b^2 + 2*c^2 + 2*d^2 - a",
                           "2*a*b + 2*b*c + 2*c*d - b",
                           "b^2 + 2*a*c + 2*b*d - c"},
                          names, ord);
    Budget tiny{1, 600.0};
    CHECK_THROWS_AS(buchberger(ideal, tiny), BudgetExhausted);
    try {
        buchberger(ideal, tiny);
    } catch (const BudgetExhausted& e) {
        CHECK(e.stats().pairsProcessed >= 1);
    }
    // The same ideal finishes under the default budget.
    GroebnerBasis basis = testutil::computeCheckedBasis(ideal);
    CHECK(basis.elements.size() >= 4);
}

TEST_CASE("leading terms of the basis cover the input generators") {
    // Monotonicity sanity: LT(G) contains every input generator's LT.
    MonomialOrder ord = MonomialOrder::grlex();
    Ideal ideal = idealOf({"x^2*y - 1", "x*y^2 - x"}, xy, ord);
    GroebnerBasis basis = testutil::computeCheckedBasis(ideal);
    MonomialIdeal lt = leadingTermIdeal(basis);
    for (const Polynomial& g : ideal.generators)
        CHECK(lt.contains(g.leadingMonomial()));
}
