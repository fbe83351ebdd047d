#include "spherec/recognize.hpp"

#include "spherec/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace spherec {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t msSince(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

} // namespace

std::string decisionName(Decision d) {
    switch (d) {
    case Decision::TrivialGroup:       return "TRIVIAL_GROUP";
    case Decision::NontrivialGroup:    return "NONTRIVIAL_GROUP";
    case Decision::InconclusiveBudget: return "INCONCLUSIVE_BUDGET";
    }
    return "NONTRIVIAL_GROUP";
}

std::string stageName(Stage s) {
    switch (s) {
    case Stage::Abelianization: return "abelianization";
    case Stage::Groebner:       return "groebner";
    case Stage::Dimension:      return "dimension";
    case Stage::Done:           return "done";
    }
    return "abelianization";
}

Verdict recognize(const GroupPresentation& p, const RecognizeConfig& config,
                  std::vector<std::string> diagnostics) {
    Verdict v;
    v.input = printPresentation(p);
    v.anomalies = std::move(diagnostics);
    const auto startTotal = Clock::now();

    auto t0 = Clock::now();
    v.abelianization = abelianization(p);
    v.timings.abelianizationMs = msSince(t0);

    if (!v.abelianization.isTrivial) {
        v.stageReached = Stage::Abelianization;
        v.decision = Decision::NontrivialGroup;
        v.timings.totalMs = msSince(startTotal);
        return v;
    }

    if (!config.order.isGraded())
        v.anomalies.push_back("non-graded order " + config.order.name() +
                              ": the dimension extraction assumes a graded order");

    t0 = Clock::now();
    RepresentationIdeal rep = representationIdeal(p, config.order);
    v.equationCount = rep.equationCount;

    GroebnerBasis basis;
    try {
        basis = buchberger(rep.ideal, config.budget);
    } catch (const BudgetExhausted& e) {
        v.timings.groebnerMs = msSince(t0);
        v.timings.totalMs = msSince(startTotal);
        v.stageReached = Stage::Groebner;
        v.decision = Decision::InconclusiveBudget;
        v.anomalies.push_back(std::string("budget exhausted: ") + e.what() + " after " +
                              std::to_string(e.stats().pairsProcessed) + " pairs");
        return v;
    }
    v.timings.groebnerMs = msSince(t0);
    v.basisSize = basis.elements.size();

    t0 = Clock::now();
    DimensionReport report = crossCheck(basis);
    v.timings.dimensionMs = msSince(t0);
    v.timings.totalMs = msSince(startTotal);

    if (report.dimension == -1)
        throw InternalError("representation variety computed empty, yet it always "
                            "contains the trivial representation");
    v.dimension = report.dimension;
    v.stageReached = Stage::Done;
    v.decision = report.dimension == 0 ? Decision::TrivialGroup : Decision::NontrivialGroup;
    if (report.dimension == 1 || report.dimension == 2)
        v.anomalies.push_back("dimension " + std::to_string(report.dimension) +
                              " with trivial abelianization: a 3-manifold group "
                              "gives 0 or >= 3; input or implementation suspect");
    return v;
}

Verdict recognizeHeegaard(const HeegaardDiagram& d, const RecognizeConfig& config) {
    std::vector<std::string> diagnostics;
    if (d.attachingCurves.size() != d.genus)
        diagnostics.push_back("heegaard diagram has genus " + std::to_string(d.genus) +
                              " but " + std::to_string(d.attachingCurves.size()) +
                              " attaching curves; not a closed-manifold diagram");
    Verdict v = recognize(presentationFromHeegaard(d), config, std::move(diagnostics));
    v.input = printHeegaard(d);
    return v;
}

std::string verdictToText(const Verdict& v) {
    std::ostringstream out;
    out << "input:          " << v.input << "\n";
    out << "abelianization: free rank " << v.abelianization.freeRank << ", torsion [";
    for (std::size_t i = 0; i < v.abelianization.torsion.size(); ++i)
        out << (i ? ", " : "") << v.abelianization.torsion[i].get_str();
    out << "]" << (v.abelianization.isTrivial ? " (trivial)" : " (nontrivial)") << "\n";
    out << "stage reached:  " << stageName(v.stageReached) << "\n";
    if (v.equationCount)
        out << "equations:      " << *v.equationCount << "\n";
    if (v.basisSize)
        out << "basis size:     " << *v.basisSize << "\n";
    if (v.dimension)
        out << "dimension:      " << *v.dimension << "\n";
    out << "decision:       " << decisionName(v.decision) << "\n";
    for (const std::string& a : v.anomalies)
        out << "anomaly:        " << a << "\n";
    out << "timing ms:      abelianization " << v.timings.abelianizationMs
        << ", groebner " << v.timings.groebnerMs
        << ", dimension " << v.timings.dimensionMs
        << ", total " << v.timings.totalMs << "\n";
    return out.str();
}

std::string verdictToJson(const Verdict& v) {
    nlohmann::json j;
    j["schema"] = 1;
    j["input"] = v.input;
    nlohmann::json ab;
    ab["free_rank"] = v.abelianization.freeRank;
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& t : v.abelianization.torsion)
        torsion.push_back(t.get_str());
    ab["torsion"] = torsion;
    ab["trivial"] = v.abelianization.isTrivial;
    j["abelianization"] = ab;
    j["stage"] = stageName(v.stageReached);
    j["equation_count"] =
        v.equationCount ? nlohmann::json(*v.equationCount) : nlohmann::json(nullptr);
    j["basis_size"] = v.basisSize ? nlohmann::json(*v.basisSize) : nlohmann::json(nullptr);
    j["dimension"] = v.dimension ? nlohmann::json(*v.dimension) : nlohmann::json(nullptr);
    j["decision"] = decisionName(v.decision);
    j["anomalies"] = v.anomalies;
    nlohmann::json timings;
    timings["abelianization"] = v.timings.abelianizationMs;
    timings["groebner"] = v.timings.groebnerMs;
    timings["dimension"] = v.timings.dimensionMs;
    timings["total"] = v.timings.totalMs;
    j["timings_ms"] = timings;
    return j.dump(2) + "\n";
}

Verdict verdictFromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw std::invalid_argument("unsupported verdict schema");
    Verdict v;
    v.input = j.at("input").get<std::string>();
    const auto& ab = j.at("abelianization");
    v.abelianization.freeRank = ab.at("free_rank").get<std::size_t>();
    for (const auto& t : ab.at("torsion"))
        v.abelianization.torsion.push_back(Int(t.get<std::string>()));
    v.abelianization.isTrivial = ab.at("trivial").get<bool>();

    std::string stage = j.at("stage").get<std::string>();
    for (Stage s : {Stage::Abelianization, Stage::Groebner, Stage::Dimension, Stage::Done})
        if (stageName(s) == stage)
            v.stageReached = s;
    std::string decision = j.at("decision").get<std::string>();
    for (Decision d : {Decision::TrivialGroup, Decision::NontrivialGroup,
                       Decision::InconclusiveBudget})
        if (decisionName(d) == decision)
            v.decision = d;

    if (!j.at("equation_count").is_null())
        v.equationCount = j["equation_count"].get<std::size_t>();
    if (!j.at("basis_size").is_null())
        v.basisSize = j["basis_size"].get<std::size_t>();
    if (!j.at("dimension").is_null())
        v.dimension = j["dimension"].get<int>();
    for (const auto& a : j.at("anomalies"))
        v.anomalies.push_back(a.get<std::string>());
    const auto& timings = j.at("timings_ms");
    v.timings.abelianizationMs = timings.at("abelianization").get<std::int64_t>();
    v.timings.groebnerMs = timings.at("groebner").get<std::int64_t>();
    v.timings.dimensionMs = timings.at("dimension").get<std::int64_t>();
    v.timings.totalMs = timings.at("total").get<std::int64_t>();
    return v;
}

} // namespace spherec
