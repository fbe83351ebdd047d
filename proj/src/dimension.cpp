#include "spherec/dimension.hpp"

#include "spherec/errors.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace spherec {

namespace {

// Keep only generators no other generator divides (dedupe included).
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    // A unit generator swallows everything.
    for (const Monomial& g : gens)
        if (g.isUnit())
            return {g};
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.exponents() < b.exponents();
    });
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& kept : out)
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(g);
    }
    return out;
}

} // namespace

MonomialIdeal MonomialIdeal::make(std::size_t varCount, std::vector<Monomial> generators) {
    for (const Monomial& g : generators)
        if (g.varCount() != varCount)
            throw std::invalid_argument("monomial ambient mismatch");
    MonomialIdeal m;
    m.varCount_ = varCount;
    m.gens_ = minimalize(std::move(generators));
    return m;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m))
            return true;
    return false;
}

MonomialIdeal leadingTermIdeal(const GroebnerBasis& basis) {
    std::vector<Monomial> lms;
    lms.reserve(basis.elements.size());
    for (const Polynomial& p : basis.elements)
        lms.push_back(p.leadingMonomial());
    return MonomialIdeal::make(basis.varCount, std::move(lms));
}

namespace {

constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

// Exact minimum hitting set over the generator supports, exponential-time
// branch and bound with memoization on the set of unhit supports. Variables
// listed in `forbidden` may not be used.
class HittingSetSolver {
public:
    HittingSetSolver(const std::vector<std::vector<std::size_t>>& supports,
                     std::size_t varCount, const std::vector<char>& forbidden)
        : supports_(supports), forbidden_(forbidden) {
        words_ = (supports.size() + 63) / 64;
        coverMask_.assign(varCount, std::vector<std::uint64_t>(words_, 0));
        for (std::size_t s = 0; s < supports.size(); ++s)
            for (std::size_t v : supports[s])
                coverMask_[v][s / 64] |= std::uint64_t(1) << (s % 64);
    }

    int solve() {
        std::vector<std::uint64_t> unhit(words_, 0);
        for (std::size_t s = 0; s < supports_.size(); ++s)
            unhit[s / 64] |= std::uint64_t(1) << (s % 64);
        return rec(unhit);
    }

private:
    struct VecHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (std::uint64_t w : v) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    int rec(const std::vector<std::uint64_t>& unhit) {
        bool empty = true;
        for (std::uint64_t w : unhit)
            if (w) {
                empty = false;
                break;
            }
        if (empty)
            return 0;
        auto it = memo_.find(unhit);
        if (it != memo_.end())
            return it->second;

        // Branch on the unhit support with the fewest usable variables.
        std::size_t branch = supports_.size();
        std::size_t branchChoices = std::numeric_limits<std::size_t>::max();
        for (std::size_t s = 0; s < supports_.size(); ++s) {
            if (!(unhit[s / 64] >> (s % 64) & 1))
                continue;
            std::size_t choices = 0;
            for (std::size_t v : supports_[s])
                if (!forbidden_[v])
                    ++choices;
            if (choices < branchChoices) {
                branchChoices = choices;
                branch = s;
            }
        }
        int best = kInfeasible;
        if (branchChoices == 0) {
            memo_.emplace(unhit, best);
            return best;
        }
        for (std::size_t v : supports_[branch]) {
            if (forbidden_[v])
                continue;
            std::vector<std::uint64_t> next(unhit);
            for (std::size_t w = 0; w < words_; ++w)
                next[w] &= ~coverMask_[v][w];
            best = std::min(best, 1 + rec(next));
        }
        memo_.emplace(unhit, best);
        return best;
    }

    const std::vector<std::vector<std::size_t>>& supports_;
    const std::vector<char>& forbidden_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> coverMask_;
    std::unordered_map<std::vector<std::uint64_t>, int, VecHash> memo_;
};

// Inclusion-minimal, deduplicated supports. A hitting set for these hits
// every generator support.
std::vector<std::vector<std::size_t>> minimalSupports(const MonomialIdeal& m) {
    std::vector<std::vector<std::size_t>> supports;
    for (const Monomial& g : m.generators())
        supports.push_back(g.support());
    std::sort(supports.begin(), supports.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });
    std::vector<std::vector<std::size_t>> out;
    for (auto& s : supports) {
        bool redundant = false;
        for (const auto& kept : out)
            if (std::includes(s.begin(), s.end(), kept.begin(), kept.end())) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(std::move(s));
    }
    return out;
}

int minimumHittingSet(const std::vector<std::vector<std::size_t>>& supports,
                      std::size_t varCount, const std::vector<char>& forbidden) {
    HittingSetSolver solver(supports, varCount, forbidden);
    return solver.solve();
}

} // namespace

KrullResult krullDimension(const MonomialIdeal& m) {
    if (m.isUnit())
        return KrullResult{-1, {}};
    const std::size_t n = m.varCount();
    if (m.isZeroIdeal()) {
        KrullResult r;
        r.dimension = static_cast<int>(n);
        for (std::size_t v = 0; v < n; ++v)
            r.witness.push_back(v);
        return r;
    }

    auto supports = minimalSupports(m);
    std::vector<char> forbidden(n, 0);
    int k = minimumHittingSet(supports, n, forbidden);
    if (k >= kInfeasible)
        throw InternalError("unhittable support set for a non-unit monomial ideal");
    KrullResult r;
    r.dimension = static_cast<int>(n) - k;

    // Greedy lexicographically smallest maximum independent set: take v
    // whenever a minimum hitting set avoiding the chosen set still has size k.
    std::vector<char> excluded(n, 0);
    for (std::size_t v = 0; v < n && r.witness.size() < static_cast<std::size_t>(r.dimension); ++v) {
        excluded[v] = 1;
        if (minimumHittingSet(supports, n, excluded) == k)
            r.witness.push_back(v);
        else
            excluded[v] = 0;
    }
    return r;
}

KrullResult krullDimensionBruteForce(const MonomialIdeal& m) {
    if (m.isUnit())
        return KrullResult{-1, {}};
    const std::size_t n = m.varCount();
    if (n > 24)
        throw std::invalid_argument("brute-force dimension limited to 24 variables");

    std::vector<std::uint32_t> supportMasks;
    for (const Monomial& g : m.generators()) {
        std::uint32_t mask = 0;
        for (std::size_t v : g.support())
            mask |= std::uint32_t(1) << v;
        supportMasks.push_back(mask);
    }

    int bestSize = -1;
    std::vector<std::size_t> bestWitness;
    for (std::uint32_t subset = 0; subset < (std::uint32_t(1) << n); ++subset) {
        bool independent = true;
        for (std::uint32_t sm : supportMasks)
            if ((sm & subset) == sm) {
                independent = false;
                break;
            }
        if (!independent)
            continue;
        std::vector<std::size_t> witness;
        for (std::size_t v = 0; v < n; ++v)
            if (subset >> v & 1)
                witness.push_back(v);
        int size = static_cast<int>(witness.size());
        if (size > bestSize || (size == bestSize && witness < bestWitness)) {
            bestSize = size;
            bestWitness = std::move(witness);
        }
    }
    return KrullResult{bestSize, std::move(bestWitness)};
}

namespace {

using Coeffs = std::vector<Int>;

void trim(Coeffs& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Coeffs addShifted(const Coeffs& a, const Coeffs& b, std::size_t shift) {
    Coeffs out(std::max(a.size(), b.size() + shift));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i + shift] += b[i];
    trim(out);
    return out;
}

// Multiply by (1 - t^d).
Coeffs mulOneMinusPower(const Coeffs& a, std::uint32_t d) {
    Coeffs out(a.size() + d);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
        out[i + d] -= a[i];
    }
    trim(out);
    return out;
}

// Numerator of the Hilbert series of R/<gens> over (1-t)^N; gens minimal.
Coeffs hilbertNumerator(const std::vector<Monomial>& gens) {
    if (gens.empty())
        return {Int(1)};
    if (gens.size() == 1 && gens[0].isUnit())
        return {};

    bool allPure = true;
    for (const Monomial& g : gens)
        if (g.support().size() > 1) {
            allPure = false;
            break;
        }
    if (allPure) {
        Coeffs out{Int(1)};
        for (const Monomial& g : gens)
            out = mulOneMinusPower(out, g.degree());
        return out;
    }

    // Split on the most frequent variable among generators, restricted to
    // variables occurring in a mixed (support >= 2) generator so that both
    // branches strictly shrink. Ties go to the lowest index.
    const std::size_t n = gens[0].varCount();
    std::vector<std::size_t> freq(n, 0);
    std::vector<char> inMixed(n, 0);
    for (const Monomial& g : gens) {
        auto supp = g.support();
        for (std::size_t v : supp) {
            ++freq[v];
            if (supp.size() >= 2)
                inMixed[v] = 1;
        }
    }
    std::size_t pivot = n;
    for (std::size_t v = 0; v < n; ++v)
        if (inMixed[v] && (pivot == n || freq[v] > freq[pivot]))
            pivot = v;

    // M + <x>: x plus the generators not involving x (already minimal).
    std::vector<Monomial> plus;
    plus.push_back(Monomial::variable(pivot, n));
    for (const Monomial& g : gens)
        if (g.exponent(pivot) == 0)
            plus.push_back(g);

    // M : x, reminimalized.
    std::vector<Monomial> colon;
    for (const Monomial& g : gens) {
        if (g.exponent(pivot) == 0) {
            colon.push_back(g);
        } else {
            auto exps = g.exponents();
            --exps[pivot];
            colon.push_back(Monomial(std::move(exps)));
        }
    }
    colon = minimalize(std::move(colon));

    return addShifted(hilbertNumerator(plus), hilbertNumerator(colon), 1);
}

Int evalAtOne(const Coeffs& p) {
    Int sum = 0;
    for (const Int& c : p)
        sum += c;
    return sum;
}

// Exact division by (1 - t); requires p(1) == 0.
Coeffs divideByOneMinusT(const Coeffs& p) {
    Coeffs q(p.size());
    Int acc = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        q[i] = acc;
    }
    trim(q);
    return q;
}

} // namespace

HilbertData hilbertSeries(const MonomialIdeal& m) {
    HilbertData data;
    data.numerator = hilbertNumerator(m.generators());
    if (data.numerator.empty()) {
        data.degree = -1; // series identically zero: empty variety
        return data;
    }
    // Pole order of numerator/(1-t)^N at t=1 is the affine dimension; the
    // convention is pinned by dim C^N = N.
    Coeffs reduced = data.numerator;
    std::size_t vanishing = 0;
    while (evalAtOne(reduced) == 0) {
        reduced = divideByOneMinusT(reduced);
        ++vanishing;
    }
    if (vanishing > m.varCount())
        throw InternalError("Hilbert numerator vanishes to order above the ambient");
    data.degree = static_cast<int>(m.varCount() - vanishing);
    return data;
}

DimensionReport crossCheck(const GroebnerBasis& basis) {
    MonomialIdeal lt = leadingTermIdeal(basis);
    KrullResult kr = krullDimension(lt);
    HilbertData hd = hilbertSeries(lt);
    if (kr.dimension != hd.degree)
        throw InternalError("combinatorial dimension " + std::to_string(kr.dimension) +
                            " disagrees with Hilbert degree " + std::to_string(hd.degree));
    DimensionReport report;
    report.dimension = kr.dimension;
    report.witness = std::move(kr.witness);
    report.hilbertDegree = hd.degree;
    report.agreement = true;
    return report;
}

} // namespace spherec
