#include "spherec/presentation.hpp"

#include "spherec/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace spherec {

bool Word::isFreelyReduced() const {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
        if (letters_[i].generator == letters_[i + 1].generator &&
            letters_[i].sign == -letters_[i + 1].sign)
            return false;
    }
    return true;
}

Word freeReduce(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (const Letter& l : w.letters()) {
        if (!out.empty() && out.back().generator == l.generator &&
            out.back().sign == -l.sign) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word(std::move(out));
}

Word inverse(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(Letter{it->generator, -it->sign});
    return Word(std::move(out));
}

namespace {

// Shared cursor for both text grammars. Tracks 1-based line/column.
class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool atEnd() {
        skipSpace();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool tryConsume(char c) {
        skipSpace();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!tryConsume(c))
            fail("expected '" + std::string(1, c) + "' " + what);
    }

    // keyword like "gens:" -- letters followed by a colon
    void expectKeyword(const std::string& kw) {
        skipSpace();
        for (char c : kw) {
            if (peek() != c)
                fail("expected '" + kw + "'");
            advance();
        }
    }

    bool peekName() {
        skipSpace();
        return std::isalpha(static_cast<unsigned char>(peek()));
    }

    std::string parseName() {
        skipSpace();
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            fail("expected a name");
        std::string name;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name.push_back(c);
                advance();
            } else {
                break;
            }
        }
        return name;
    }

    long parseSignedInt() {
        skipSpace();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000)
                fail("exponent too large");
            advance();
        }
        return neg ? -v : v;
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(message, line_, col_);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

Word parseWord(Cursor& cur, const std::map<std::string, std::size_t>& names) {
    if (cur.tryConsume('1'))
        return Word{}; // "1" denotes the empty word
    std::vector<Letter> letters;
    bool any = false;
    while (cur.peekName()) {
        any = true;
        std::string name = cur.parseName();
        auto it = names.find(name);
        if (it == names.end())
            cur.fail("undeclared generator '" + name + "'");
        long exp = 1;
        if (cur.tryConsume('^'))
            exp = cur.parseSignedInt();
        int sign = exp >= 0 ? +1 : -1;
        for (long k = 0; k < (exp >= 0 ? exp : -exp); ++k)
            letters.push_back(Letter{it->second, sign});
    }
    if (!any)
        cur.fail("expected a word");
    return freeReduce(Word(std::move(letters)));
}

} // namespace

GroupPresentation parsePresentation(const std::string& text) {
    Cursor cur(text);
    cur.expectKeyword("gens:");

    GroupPresentation p;
    std::map<std::string, std::size_t> names;
    while (cur.peekName()) {
        std::string name = cur.parseName();
        if (names.count(name))
            cur.fail("duplicate generator '" + name + "'");
        names[name] = p.generators.size();
        p.generators.push_back(Generator{p.generators.size(), name});
    }

    cur.expect(';', "between gens and rels");
    cur.expectKeyword("rels:");
    if (!cur.atEnd()) {
        p.relators.push_back(parseWord(cur, names));
        while (cur.tryConsume(','))
            p.relators.push_back(parseWord(cur, names));
    }
    if (!cur.atEnd())
        cur.fail("trailing input after relators");
    return p;
}

std::string printWord(const Word& w, const std::vector<Generator>& generators) {
    if (w.empty())
        return "1";
    std::ostringstream out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i])
            ++j;
        long run = static_cast<long>(j - i) * ls[i].sign;
        if (i > 0)
            out << ' ';
        out << generators.at(ls[i].generator).name;
        if (run != 1)
            out << '^' << run;
        i = j;
    }
    return out.str();
}

std::string printPresentation(const GroupPresentation& p) {
    std::ostringstream out;
    out << "gens:";
    for (const Generator& g : p.generators)
        out << ' ' << g.name;
    out << " ; rels:";
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        out << (i == 0 ? " " : ", ") << printWord(p.relators[i], p.generators);
    return out.str();
}

HeegaardDiagram parseHeegaard(const std::string& text) {
    Cursor cur(text);
    cur.expectKeyword("genus:");
    long genus = cur.parseSignedInt();
    if (genus < 0)
        cur.fail("genus must be nonnegative");

    std::map<std::string, std::size_t> names;
    for (long i = 0; i < genus; ++i)
        names["h" + std::to_string(i + 1)] = static_cast<std::size_t>(i);

    cur.expect(';', "between genus and curves");
    cur.expectKeyword("curves:");
    HeegaardDiagram d;
    d.genus = static_cast<std::size_t>(genus);
    if (!cur.atEnd()) {
        d.attachingCurves.push_back(parseWord(cur, names));
        while (cur.tryConsume(','))
            d.attachingCurves.push_back(parseWord(cur, names));
    }
    if (!cur.atEnd())
        cur.fail("trailing input after curves");
    return d;
}

std::string printHeegaard(const HeegaardDiagram& d) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < d.genus; ++i)
        gens.push_back(Generator{i, "h" + std::to_string(i + 1)});
    std::ostringstream out;
    out << "genus: " << d.genus << " ; curves:";
    for (std::size_t i = 0; i < d.attachingCurves.size(); ++i)
        out << (i == 0 ? " " : ", ") << printWord(d.attachingCurves[i], gens);
    return out.str();
}

GroupPresentation presentationFromHeegaard(const HeegaardDiagram& d) {
    GroupPresentation p;
    for (std::size_t i = 0; i < d.genus; ++i)
        p.generators.push_back(Generator{i, "h" + std::to_string(i + 1)});
    for (const Word& curve : d.attachingCurves)
        p.relators.push_back(freeReduce(curve));
    return p;
}

} // namespace spherec
