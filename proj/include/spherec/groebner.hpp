#ifndef SPHEREC_GROEBNER_HPP
#define SPHEREC_GROEBNER_HPP

#include "spherec/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spherec {

/// Finitely generated ideal of Q[x_1..x_N] with the order its Groebner
/// computations will use.
struct Ideal {
    std::size_t varCount = 0;
    std::vector<Polynomial> generators; // nonzero, normalized under order
    MonomialOrder order;

    /// Purges zero generators and renormalizes the rest under ord.
    static Ideal make(std::size_t varCount, std::vector<Polynomial> generators,
                      const MonomialOrder& ord);
};

struct GbStats {
    std::uint64_t pairsProcessed = 0;
    std::uint64_t pairsSkipped = 0;    // dropped by the coprime or chain criterion
    std::uint64_t reductionsToZero = 0;
    std::uint64_t reductionSteps = 0;  // leading-term eliminations performed
};

/// Buchberger runs until done or until either limit trips.
struct Budget {
    std::uint64_t maxPairs = 1'000'000;
    double maxSeconds = 600.0;
};

/// The computation is complete in theory but may exceed practical budgets;
/// carries the statistics gathered so far.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& what, GbStats stats)
        : std::runtime_error(what), stats_(stats) {}
    const GbStats& stats() const { return stats_; }

private:
    GbStats stats_;
};

/// Pair selection. Both strategies yield the same reduced basis; the normal
/// strategy (minimal lcm, ties by insertion) is the default and reference.
enum class PairStrategy { NormalMinimalLcm, FirstCome };

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by
/// leading monomial. Unique for a given (ideal, order).
struct GroebnerBasis {
    std::size_t varCount = 0;
    std::vector<Polynomial> elements;
    MonomialOrder order;
    GbStats stats;
};

/// S(f,g) = (lcm/LT(f)) f - (lcm/LT(g)) g; the leading terms cancel.
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Buchberger's algorithm; returns the reduced basis. Throws BudgetExhausted
/// when a limit trips.
GroebnerBasis buchberger(const Ideal& ideal, const Budget& budget = {},
                         PairStrategy strategy = PairStrategy::NormalMinimalLcm);

/// Unique remainder of f modulo the basis; zero iff f lies in the ideal.
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis);

} // namespace spherec

#endif
