#ifndef SPHEREC_MONOMIAL_HPP
#define SPHEREC_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace spherec {

/// Power product in a fixed ambient ring C[x_1..x_N]; exponent vector of
/// length N with the total degree cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t varCount) : exps_(varCount, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t index, std::size_t varCount);

    std::size_t varCount() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t degree() const { return degree_; }
    bool isUnit() const { return degree_ == 0; }

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// Componentwise difference; requires divides(other) of the argument.
    Monomial dividedBy(const Monomial& divisor) const;
    bool coprime(const Monomial& other) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// Indices of variables with positive exponent, ascending.
    std::vector<std::size_t> support() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

enum class OrderKind { Grevlex, Grlex, Lex };

/// Total, multiplicative, well-founded monomial order. Grevlex and grlex are
/// graded (total degree compared first); lex is not.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;

    static MonomialOrder grevlex() { return {OrderKind::Grevlex}; }
    static MonomialOrder grlex() { return {OrderKind::Grlex}; }
    static MonomialOrder lex() { return {OrderKind::Lex}; }

    bool isGraded() const { return kind != OrderKind::Lex; }

    /// Throws std::invalid_argument on ambient mismatch.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    std::string name() const;
    static MonomialOrder fromName(const std::string& name);
};

} // namespace spherec

#endif
