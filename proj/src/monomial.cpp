#include "spherec/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spherec {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t index, std::size_t varCount) {
    if (index >= varCount)
        throw std::invalid_argument("variable index out of range");
    Monomial m(varCount);
    m.exps_[index] = 1;
    m.degree_ = 1;
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    if (other.varCount() != varCount())
        throw std::invalid_argument("monomial ambient mismatch");
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] += other.exps_[i];
    out.degree_ = degree_ + other.degree_;
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    if (other.varCount() != varCount())
        throw std::invalid_argument("monomial ambient mismatch");
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::dividedBy(const Monomial& divisor) const {
    if (divisor.varCount() != varCount())
        throw std::invalid_argument("monomial ambient mismatch");
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (divisor.exps_[i] > exps_[i])
            throw std::invalid_argument("monomial quotient is not exact");
        out.exps_[i] -= divisor.exps_[i];
    }
    out.degree_ = degree_ - divisor.degree_;
    return out;
}

bool Monomial::coprime(const Monomial& other) const {
    if (other.varCount() != varCount())
        throw std::invalid_argument("monomial ambient mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0)
            return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.varCount() != b.varCount())
        throw std::invalid_argument("monomial ambient mismatch");
    Monomial out(a.varCount());
    for (std::size_t i = 0; i < out.exps_.size(); ++i)
        out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    out.degree_ = std::accumulate(out.exps_.begin(), out.exps_.end(), std::uint32_t{0});
    return out;
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0)
            s.push_back(i);
    return s;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.varCount() != b.varCount())
        throw std::invalid_argument("monomial ambient mismatch");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    switch (kind) {
    case OrderKind::Lex:
        for (std::size_t i = 0; i < ea.size(); ++i)
            if (ea[i] != eb[i])
                return ea[i] <=> eb[i];
        return std::strong_ordering::equal;
    case OrderKind::Grlex:
        if (a.degree() != b.degree())
            return a.degree() <=> b.degree();
        for (std::size_t i = 0; i < ea.size(); ++i)
            if (ea[i] != eb[i])
                return ea[i] <=> eb[i];
        return std::strong_ordering::equal;
    case OrderKind::Grevlex:
        if (a.degree() != b.degree())
            return a.degree() <=> b.degree();
        // Equal degree: smaller last distinct exponent wins.
        for (std::size_t i = ea.size(); i-- > 0;)
            if (ea[i] != eb[i])
                return eb[i] <=> ea[i];
        return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal; // unreachable
}

std::string MonomialOrder::name() const {
    switch (kind) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Grlex:   return "grlex";
    case OrderKind::Lex:     return "lex";
    }
    return "grevlex";
}

MonomialOrder MonomialOrder::fromName(const std::string& name) {
    if (name == "grevlex") return grevlex();
    if (name == "grlex")   return grlex();
    if (name == "lex")     return lex();
    throw std::invalid_argument("unknown monomial order '" + name + "'");
}

} // namespace spherec
