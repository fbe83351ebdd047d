#ifndef SPHEREC_RECOGNIZE_HPP
#define SPHEREC_RECOGNIZE_HPP

#include "spherec/abelian.hpp"
#include "spherec/dimension.hpp"
#include "spherec/groebner.hpp"
#include "spherec/presentation.hpp"
#include "spherec/repvar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spherec {

enum class Decision { TrivialGroup, NontrivialGroup, InconclusiveBudget };
enum class Stage { Abelianization, Groebner, Dimension, Done };

std::string decisionName(Decision d);
std::string stageName(Stage s);

struct StageTimings {
    std::int64_t abelianizationMs = 0;
    std::int64_t groebnerMs = 0;
    std::int64_t dimensionMs = 0;
    std::int64_t totalMs = 0;
};

/// Structured outcome of one recognition run. The decision invariants are:
/// TrivialGroup iff the abelianization is trivial and the dimension is 0;
/// NontrivialGroup iff the abelianization is nontrivial or the dimension is
/// positive. For a genuine 3-manifold group with trivial abelianization the
/// dimension is 0 or >= 3; values 1 and 2 are flagged as anomalies.
struct Verdict {
    std::string input;
    AbelianizationResult abelianization;
    Stage stageReached = Stage::Abelianization;
    std::optional<std::size_t> equationCount; // 4m + n
    std::optional<std::size_t> basisSize;
    std::optional<int> dimension;
    Decision decision = Decision::NontrivialGroup;
    std::vector<std::string> anomalies;
    StageTimings timings;
};

struct RecognizeConfig {
    MonomialOrder order = MonomialOrder::grevlex();
    Budget budget;
};

/// The full pipeline: abelianization gate, representation-variety ideal,
/// Groebner basis, Krull dimension, decision. The caller asserts that p
/// presents a 3-manifold group; the tool cannot verify this.
Verdict recognize(const GroupPresentation& p, const RecognizeConfig& config = {},
                  std::vector<std::string> diagnostics = {});

/// Heegaard entry point: reads off the presentation and runs recognize.
/// A genus-g diagram of a closed manifold has g attaching curves; other
/// counts are accepted and flagged.
Verdict recognizeHeegaard(const HeegaardDiagram& d, const RecognizeConfig& config = {});

std::string verdictToText(const Verdict& v);

/// Versioned JSON (schema 1); toJson(fromJson(x)) is byte-identical.
std::string verdictToJson(const Verdict& v);
Verdict verdictFromJson(const std::string& text);

} // namespace spherec

#endif
