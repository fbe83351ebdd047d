#include "spherec/poly_text.hpp"

#include "spherec/errors.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace spherec {

std::vector<std::string> defaultVariableNames(std::size_t varCount) {
    std::vector<std::string> names;
    names.reserve(varCount);
    for (std::size_t i = 0; i < varCount; ++i)
        names.push_back("x" + std::to_string(i + 1));
    return names;
}

std::string printPolynomial(const Polynomial& f, const std::vector<std::string>& names,
                            const MonomialOrder& ord) {
    if (names.size() != f.varCount())
        throw std::invalid_argument("variable name count mismatch");
    if (f.isZero())
        return "0";

    Polynomial p = Polynomial::fromTerms(f.varCount(), f.terms(), ord);
    std::ostringstream out;
    bool first = true;
    for (const Term& t : p.terms()) {
        Rat c = t.coefficient;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;

        bool wroteCoeff = false;
        if (c != 1 || t.monomial.isUnit()) {
            out << c.get_num().get_str();
            if (c.get_den() != 1)
                out << "/" << c.get_den().get_str();
            wroteCoeff = true;
        }
        bool firstVar = true;
        for (std::size_t i = 0; i < f.varCount(); ++i) {
            std::uint32_t e = t.monomial.exponent(i);
            if (e == 0)
                continue;
            if (wroteCoeff || !firstVar)
                out << "*";
            out << names[i];
            if (e > 1)
                out << "^" << e;
            firstVar = false;
        }
    }
    return out.str();
}

namespace {

class PolyCursor {
public:
    PolyCursor(const std::string& text, std::size_t line) : text_(text), line_(line) {}

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool atEnd() {
        skipSpace();
        return pos_ >= text_.size();
    }

    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool tryConsume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    mpz_class parseUnsigned() {
        skipSpace();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a number");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits.push_back(text_[pos_++]);
        return mpz_class(digits);
    }

    std::string parseName() {
        skipSpace();
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            fail("expected a variable name");
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name.push_back(text_[pos_++]);
        return name;
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(message, line_, pos_ + 1);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

Term parseTerm(PolyCursor& cur, const std::map<std::string, std::size_t>& vars,
               std::size_t varCount, bool negative) {
    Rat coeff(negative ? -1 : 1);
    std::vector<std::uint32_t> exps(varCount, 0);
    bool expectFactor = true;
    while (expectFactor) {
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            mpz_class num = cur.parseUnsigned();
            mpz_class den(1);
            if (cur.tryConsume('/'))
                den = cur.parseUnsigned();
            if (den == 0)
                cur.fail("zero denominator");
            coeff *= makeRational(num, den);
        } else if (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
            std::string name = cur.parseName();
            auto it = vars.find(name);
            if (it == vars.end())
                cur.fail("unknown variable '" + name + "'");
            std::uint32_t e = 1;
            if (cur.tryConsume('^')) {
                mpz_class ev = cur.parseUnsigned();
                if (ev > 100000)
                    cur.fail("exponent too large");
                e = static_cast<std::uint32_t>(ev.get_ui());
            }
            exps[it->second] += e;
        } else {
            cur.fail("expected a coefficient or a variable");
        }
        expectFactor = cur.tryConsume('*');
    }
    return Term{Monomial(std::move(exps)), coeff};
}

} // namespace

Polynomial parsePolynomial(const std::string& text, const std::vector<std::string>& names,
                           const MonomialOrder& ord) {
    return [&] {
        std::map<std::string, std::size_t> vars;
        for (std::size_t i = 0; i < names.size(); ++i)
            vars[names[i]] = i;

        PolyCursor cur(text, 1);
        std::vector<Term> terms;
        bool negative = cur.tryConsume('-');
        if (!negative)
            cur.tryConsume('+');
        terms.push_back(parseTerm(cur, vars, names.size(), negative));
        while (!cur.atEnd()) {
            if (cur.tryConsume('+'))
                negative = false;
            else if (cur.tryConsume('-'))
                negative = true;
            else
                cur.fail("expected '+' or '-' between terms");
            terms.push_back(parseTerm(cur, vars, names.size(), negative));
        }
        return Polynomial::fromTerms(names.size(), std::move(terms), ord);
    }();
}

IdealFile readIdealFile(std::istream& in, const MonomialOrder& ord) {
    std::string line;
    IdealFile file;
    std::size_t lineNo = 0;
    bool sawHeader = false;
    std::map<std::string, std::size_t> vars;

    while (std::getline(in, line)) {
        ++lineNo;
        std::string trimmed = line;
        auto hash = trimmed.find('#');
        if (hash != std::string::npos)
            trimmed.resize(hash);
        bool blank = true;
        for (char c : trimmed)
            if (!std::isspace(static_cast<unsigned char>(c)))
                blank = false;
        if (blank)
            continue;

        if (!sawHeader) {
            PolyCursor cur(trimmed, lineNo);
            std::string kw = cur.parseName();
            if (kw != "vars" || !cur.tryConsume(':'))
                throw ParseError("ideal file must start with 'vars: <name>...'", lineNo, 1);
            while (!cur.atEnd()) {
                std::string name = cur.parseName();
                if (vars.count(name))
                    cur.fail("duplicate variable '" + name + "'");
                vars[name] = file.variableNames.size();
                file.variableNames.push_back(name);
            }
            sawHeader = true;
            continue;
        }

        try {
            file.polynomials.push_back(parsePolynomial(trimmed, file.variableNames, ord));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), lineNo, e.column());
        }
    }
    if (!sawHeader)
        throw ParseError("ideal file must start with 'vars: <name>...'", 1, 1);
    return file;
}

IdealFile readIdealFileFromString(const std::string& text, const MonomialOrder& ord) {
    std::istringstream in(text);
    return readIdealFile(in, ord);
}

void writeIdealFile(std::ostream& out, const IdealFile& file, const MonomialOrder& ord) {
    out << "vars:";
    for (const std::string& n : file.variableNames)
        out << ' ' << n;
    out << '\n';
    for (const Polynomial& p : file.polynomials)
        out << printPolynomial(primitivePart(p), file.variableNames, ord) << '\n';
}

} // namespace spherec
