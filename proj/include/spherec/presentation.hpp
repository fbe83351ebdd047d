#ifndef SPHEREC_PRESENTATION_HPP
#define SPHEREC_PRESENTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace spherec {

/// A generator of a finite presentation. Names are unique within a
/// presentation and index equals the position in the generator list.
struct Generator {
    std::size_t index = 0;
    std::string name;
};

/// One letter of a word: a generator index and an exponent sign.
/// Inverses are carried as sign -1, not as separate alphabet symbols.
struct Letter {
    std::size_t generator = 0;
    int sign = +1; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group on the presentation's generators.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool isFreelyReduced() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Cancels adjacent (g,+1)(g,-1) pairs until none remain. Idempotent and
/// equal to the input in the free group.
Word freeReduce(const Word& w);

/// Reverses the letters and flips every sign.
Word inverse(const Word& w);

struct GroupPresentation {
    std::vector<Generator> generators;
    std::vector<Word> relators; // every relator freely reduced

    std::size_t generatorCount() const { return generators.size(); }
    std::size_t relatorCount() const { return relators.size(); }
};

/// A genus-g Heegaard diagram reduced to its combinatorics: the attaching
/// curves as words in the g handle generators.
struct HeegaardDiagram {
    std::size_t genus = 0;
    std::vector<Word> attachingCurves;
};

/// Parses the presentation grammar
///   file := "gens:" name* ";" "rels:" (word ("," word)*)?
///   word := (name ("^" signed-int)?)+ | "1"
///   name := [A-Za-z][A-Za-z0-9_]*
/// Powers are expanded to repeated letters and relators are freely reduced.
/// Throws ParseError with line/column on syntax errors or undeclared names.
GroupPresentation parsePresentation(const std::string& text);

/// Canonical text form; parsePresentation(printPresentation(p)) is
/// structurally identical to p.
std::string printPresentation(const GroupPresentation& p);

/// Parses `genus: <int> ; curves: <word> ("," <word>)*` with implicit
/// generators h1..hg.
HeegaardDiagram parseHeegaard(const std::string& text);

std::string printHeegaard(const HeegaardDiagram& d);

/// Reads off the fundamental-group presentation: g handle generators, one
/// relator per attaching curve. Presentation length is genus + total letter
/// count of the curves.
GroupPresentation presentationFromHeegaard(const HeegaardDiagram& d);

std::string printWord(const Word& w, const std::vector<Generator>& generators);

} // namespace spherec

#endif
