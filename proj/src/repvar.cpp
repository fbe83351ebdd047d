#include "spherec/repvar.hpp"

namespace spherec {

PolyMatrix PolyMatrix::identity(std::size_t varCount) {
    return PolyMatrix{Polynomial::constant(varCount, Rat(1)),
                      Polynomial::zero(varCount),
                      Polynomial::zero(varCount),
                      Polynomial::constant(varCount, Rat(1))};
}

PolyMatrix generatorMatrix(std::size_t i, std::size_t n) {
    if (i >= n)
        throw std::invalid_argument("generator index out of range");
    std::size_t varCount = 4 * n;
    return PolyMatrix{Polynomial::variable(4 * i + 0, varCount),
                      Polynomial::variable(4 * i + 1, varCount),
                      Polynomial::variable(4 * i + 2, varCount),
                      Polynomial::variable(4 * i + 3, varCount)};
}

PolyMatrix inverseMatrix(const PolyMatrix& m) {
    return PolyMatrix{m.d, negate(m.b), negate(m.c), m.a};
}

PolyMatrix multiply(const PolyMatrix& x, const PolyMatrix& y, const MonomialOrder& ord) {
    return PolyMatrix{
        add(mul(x.a, y.a, ord), mul(x.b, y.c, ord), ord),
        add(mul(x.a, y.b, ord), mul(x.b, y.d, ord), ord),
        add(mul(x.c, y.a, ord), mul(x.d, y.c, ord), ord),
        add(mul(x.c, y.b, ord), mul(x.d, y.d, ord), ord),
    };
}

PolyMatrix evaluateRelator(const Word& w, std::size_t n, const MonomialOrder& ord) {
    PolyMatrix acc = PolyMatrix::identity(4 * n);
    for (const Letter& l : w.letters()) {
        PolyMatrix g = generatorMatrix(l.generator, n);
        acc = multiply(acc, l.sign > 0 ? g : inverseMatrix(g), ord);
    }
    return acc;
}

std::string EquationTag::describe() const {
    std::string s;
    if (kind == Kind::RelatorEntry)
        s = "relator " + std::to_string(index) + " entry " + std::string(1, entry);
    else
        s = "det(generator " + std::to_string(index) + ") - 1";
    if (purged)
        s += " [tautology, purged]";
    return s;
}

RepresentationIdeal representationIdeal(const GroupPresentation& p, const MonomialOrder& ord) {
    const std::size_t n = p.generatorCount();
    const std::size_t varCount = 4 * n;
    const Polynomial one = Polynomial::constant(varCount, Rat(1));

    std::vector<Polynomial> equations;
    std::vector<EquationTag> tags;

    for (std::size_t j = 0; j < p.relators.size(); ++j) {
        PolyMatrix m = evaluateRelator(p.relators[j], n, ord);
        const Polynomial entries[4] = {sub(m.a, one, ord), m.b, m.c, sub(m.d, one, ord)};
        const char names[4] = {'a', 'b', 'c', 'd'};
        for (int e = 0; e < 4; ++e) {
            EquationTag tag;
            tag.kind = EquationTag::Kind::RelatorEntry;
            tag.index = j;
            tag.entry = names[e];
            equations.push_back(entries[e]);
            tags.push_back(tag);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        PolyMatrix g = generatorMatrix(i, n);
        Polynomial det = sub(sub(mul(g.a, g.d, ord), mul(g.b, g.c, ord), ord), one, ord);
        EquationTag tag;
        tag.kind = EquationTag::Kind::Determinant;
        tag.index = i;
        equations.push_back(std::move(det));
        tags.push_back(tag);
    }

    RepresentationIdeal out;
    out.equationCount = equations.size(); // 4m + n by construction
    std::vector<Polynomial> kept;
    for (std::size_t k = 0; k < equations.size(); ++k) {
        if (equations[k].isZero()) {
            tags[k].purged = true;
        } else {
            tags[k].generatorIndex = kept.size();
            kept.push_back(std::move(equations[k]));
        }
    }
    out.tags = std::move(tags);
    out.ideal = Ideal::make(varCount, std::move(kept), ord);
    return out;
}

} // namespace spherec
