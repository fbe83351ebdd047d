#include "spherec/errors.hpp"
#include "spherec/presentation.hpp"

#include <doctest.h>

#include <random>

using namespace spherec;

namespace {

Word wordOf(std::initializer_list<std::pair<std::size_t, int>> letters) {
    std::vector<Letter> ls;
    for (auto [g, s] : letters)
        ls.push_back(Letter{g, s});
    return Word(std::move(ls));
}

Word randomWord(std::mt19937_64& rng, std::size_t generators, std::size_t maxLen) {
    std::uniform_int_distribution<std::size_t> len(0, maxLen);
    std::uniform_int_distribution<std::size_t> gen(0, generators - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> ls;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i)
        ls.push_back(Letter{gen(rng), sign(rng) ? +1 : -1});
    return Word(std::move(ls));
}

} // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
    CHECK(freeReduce(wordOf({{0, +1}, {0, -1}, {1, +1}})) == wordOf({{1, +1}}));
    CHECK(freeReduce(Word{}) == Word{});
    CHECK(freeReduce(wordOf({{0, +1}, {1, +1}, {1, -1}, {0, -1}})) == Word{});
}

TEST_CASE("free reduction is idempotent and kills w * w^-1 (random words)") {
    std::mt19937_64 rng(20230817);
    for (int trial = 0; trial < 500; ++trial) {
        Word w = randomWord(rng, 4, 12);
        Word r = freeReduce(w);
        CHECK(r.isFreelyReduced());
        CHECK(freeReduce(r) == r);

        std::vector<Letter> cat = w.letters();
        Word inv = inverse(w);
        cat.insert(cat.end(), inv.letters().begin(), inv.letters().end());
        CHECK(freeReduce(Word(cat)) == Word{});
    }
}

TEST_CASE("parsePresentation handles the basic grammar") {
    GroupPresentation p = parsePresentation("gens: a ; rels: a");
    CHECK(p.generatorCount() == 1);
    CHECK(p.relatorCount() == 1);
    CHECK(p.relators[0] == wordOf({{0, +1}}));

    p = parsePresentation("gens: a b ; rels: a b a^-1 b^-1");
    CHECK(p.generatorCount() == 2);
    CHECK(p.relatorCount() == 1);
    CHECK(p.relators[0].length() == 4);
    CHECK(p.relators[0] == wordOf({{0, +1}, {1, +1}, {0, -1}, {1, -1}}));

    // Free cancellation at parse time; the empty relator is retained.
    p = parsePresentation("gens: a ; rels: a a^-1");
    CHECK(p.relatorCount() == 1);
    CHECK(p.relators[0].empty());
}

TEST_CASE("parsePresentation power expansion and the empty word") {
    GroupPresentation p = parsePresentation("gens: a b ; rels: a^3, b^-2, 1");
    CHECK(p.relators[0] == wordOf({{0, +1}, {0, +1}, {0, +1}}));
    CHECK(p.relators[1] == wordOf({{1, -1}, {1, -1}}));
    CHECK(p.relators[2].empty());

    // m = 0 presentations: no relators at all.
    p = parsePresentation("gens: a ; rels:");
    CHECK(p.generatorCount() == 1);
    CHECK(p.relatorCount() == 0);
}

TEST_CASE("parsePresentation rejects bad input with positions") {
    CHECK_THROWS_AS(parsePresentation("gens: a ; rels: b"), ParseError);
    CHECK_THROWS_AS(parsePresentation("gens: a a ; rels: a"), ParseError);
    CHECK_THROWS_AS(parsePresentation("gens: a rels: a"), ParseError);
    CHECK_THROWS_AS(parsePresentation("gens: a ; rels: a,"), ParseError);
    CHECK_THROWS_AS(parsePresentation(""), ParseError);

    try {
        parsePresentation("gens: a ;\nrels: q");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 1);
    }
}

TEST_CASE("parse/print round-trip is structurally identical") {
    const char* inputs[] = {
        "gens: a ; rels: a",
        "gens: a b ; rels: a b a^-1 b^-1",
        "gens: a b ; rels: a b a b a^-3, a b a b b^-5",
        "gens: a ; rels: 1",
        "gens: x y_2 Z ; rels: x^2 y_2^-1, Z",
        "gens: a ; rels:",
    };
    for (const char* text : inputs) {
        GroupPresentation p = parsePresentation(text);
        GroupPresentation q = parsePresentation(printPresentation(p));
        CHECK(p.generators.size() == q.generators.size());
        for (std::size_t i = 0; i < p.generators.size(); ++i) {
            CHECK(p.generators[i].name == q.generators[i].name);
            CHECK(p.generators[i].index == q.generators[i].index);
        }
        CHECK(p.relators == q.relators);
    }
}

TEST_CASE("heegaard parsing and conversion") {
    HeegaardDiagram d = parseHeegaard("genus: 1 ; curves: h1");
    CHECK(d.genus == 1);
    GroupPresentation p = presentationFromHeegaard(d);
    CHECK(p.generatorCount() == 1);
    CHECK(p.relators[0] == wordOf({{0, +1}}));

    d = parseHeegaard("genus: 2 ; curves: h1, h2");
    p = presentationFromHeegaard(d);
    CHECK(p.generatorCount() == 2);
    CHECK(p.relatorCount() == 2);

    // Non-closed diagram: accepted, produces <h1 | >.
    d = parseHeegaard("genus: 1 ; curves:");
    p = presentationFromHeegaard(d);
    CHECK(p.generatorCount() == 1);
    CHECK(p.relatorCount() == 0);

    CHECK_THROWS_AS(parseHeegaard("genus: 1 ; curves: h2"), ParseError);

    // Presentation length <= g + k.
    d = parseHeegaard("genus: 2 ; curves: h1 h2 h1^-1 h2^-1, h2^3");
    p = presentationFromHeegaard(d);
    std::size_t totalLetters = 0;
    for (const Word& w : p.relators)
        totalLetters += w.length();
    CHECK(p.generatorCount() + totalLetters <= 2 + 4 + 3);
}
