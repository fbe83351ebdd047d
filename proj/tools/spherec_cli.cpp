#include "spherec/errors.hpp"
#include "spherec/poly_text.hpp"
#include "spherec/recognize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace spherec;

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

GroupPresentation loadPresentation(const std::string& path, bool heegaard,
                                   std::vector<std::string>* diagnostics) {
    std::string text = readFile(path);
    if (!heegaard)
        return parsePresentation(text);
    HeegaardDiagram d = parseHeegaard(text);
    if (diagnostics && d.attachingCurves.size() != d.genus)
        diagnostics->push_back("heegaard diagram has genus " + std::to_string(d.genus) +
                               " but " + std::to_string(d.attachingCurves.size()) +
                               " attaching curves; not a closed-manifold diagram");
    return presentationFromHeegaard(d);
}

struct CommonOptions {
    std::string file;
    bool heegaard = false;
    std::string order = "grevlex";
    std::uint64_t maxPairs = Budget{}.maxPairs;
    double maxSeconds = Budget{}.maxSeconds;
    bool json = false;
    std::string output;
};

int runRecognize(const CommonOptions& opt) {
    RecognizeConfig config;
    config.order = MonomialOrder::fromName(opt.order);
    config.budget = Budget{opt.maxPairs, opt.maxSeconds};

    std::string text = readFile(opt.file);
    Verdict v = opt.heegaard ? recognizeHeegaard(parseHeegaard(text), config)
                             : recognize(parsePresentation(text), config);
    std::cout << (opt.json ? verdictToJson(v) : verdictToText(v));
    return v.decision == Decision::InconclusiveBudget ? 2 : 0;
}

int runAbelianize(const CommonOptions& opt) {
    GroupPresentation p = loadPresentation(opt.file, opt.heegaard, nullptr);
    AbelianizationResult r = abelianization(p);
    std::cout << "free rank: " << r.freeRank << "\ntorsion: [";
    for (std::size_t i = 0; i < r.torsion.size(); ++i)
        std::cout << (i ? ", " : "") << r.torsion[i].get_str();
    std::cout << "]\ntrivial: " << (r.isTrivial ? "yes" : "no") << "\n";
    return 0;
}

int runEmitIdeal(const CommonOptions& opt) {
    MonomialOrder ord = MonomialOrder::fromName(opt.order);
    std::vector<std::string> diagnostics;
    GroupPresentation p = loadPresentation(opt.file, opt.heegaard, &diagnostics);
    for (const std::string& d : diagnostics)
        std::cerr << "note: " << d << "\n";

    RepresentationIdeal rep = representationIdeal(p, ord);
    IdealFile file;
    file.variableNames = defaultVariableNames(rep.ideal.varCount);
    file.polynomials = rep.ideal.generators;

    std::ostream* out = &std::cout;
    std::ofstream fileOut;
    if (!opt.output.empty()) {
        fileOut.open(opt.output);
        if (!fileOut)
            throw std::runtime_error("cannot write '" + opt.output + "'");
        out = &fileOut;
    }
    *out << "# " << rep.equationCount << " equations (4m+n) for " << printPresentation(p)
         << "\n";
    for (const EquationTag& tag : rep.tags)
        if (tag.purged)
            *out << "# " << tag.describe() << "\n";
    writeIdealFile(*out, file, ord);
    return 0;
}

int runGroebner(const CommonOptions& opt) {
    MonomialOrder ord = MonomialOrder::fromName(opt.order);
    IdealFile file = readIdealFileFromString(readFile(opt.file), ord);
    Ideal ideal = Ideal::make(file.variableNames.size(), file.polynomials, ord);
    try {
        GroebnerBasis basis = buchberger(ideal, Budget{opt.maxPairs, opt.maxSeconds});
        std::cout << "reduced groebner basis (" << basis.elements.size() << " elements, "
                  << ord.name() << "):\n";
        for (const Polynomial& p : basis.elements)
            std::cout << "  " << printPolynomial(p, file.variableNames, ord) << "\n";
        std::cout << "pairs processed: " << basis.stats.pairsProcessed
                  << ", skipped by criteria: " << basis.stats.pairsSkipped
                  << ", reductions to zero: " << basis.stats.reductionsToZero << "\n";
        if (!opt.output.empty()) {
            std::ofstream fileOut(opt.output);
            if (!fileOut)
                throw std::runtime_error("cannot write '" + opt.output + "'");
            IdealFile outFile{file.variableNames, basis.elements};
            writeIdealFile(fileOut, outFile, ord);
        }
        return 0;
    } catch (const BudgetExhausted& e) {
        std::cerr << "inconclusive: " << e.what() << " (" << e.stats().pairsProcessed
                  << " pairs processed)\n";
        return 2;
    }
}

int runDim(const CommonOptions& opt) {
    MonomialOrder ord = MonomialOrder::fromName(opt.order);
    if (!ord.isGraded())
        std::cerr << "note: dimension extraction assumes a graded order; "
                  << ord.name() << " is not graded\n";
    IdealFile file = readIdealFileFromString(readFile(opt.file), ord);
    Ideal ideal = Ideal::make(file.variableNames.size(), file.polynomials, ord);
    try {
        GroebnerBasis basis = buchberger(ideal, Budget{opt.maxPairs, opt.maxSeconds});
        DimensionReport report = crossCheck(basis);
        std::cout << report.dimension << "\n";
        if (report.dimension >= 0) {
            std::cout << "witness: {";
            for (std::size_t i = 0; i < report.witness.size(); ++i)
                std::cout << (i ? ", " : "") << file.variableNames[report.witness[i]];
            std::cout << "}\n";
        }
        return 0;
    } catch (const BudgetExhausted& e) {
        std::cerr << "inconclusive: " << e.what() << " (" << e.stats().pairsProcessed
                  << " pairs processed)\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-sphere recognizer: decides triviality of 3-manifold group "
                 "presentations via the dimension of the SL(2,C) representation variety"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto addInput = [&](CLI::App* cmd, bool withHeegaard) {
        cmd->add_option("file", opt.file, "input file")->required();
        if (withHeegaard)
            cmd->add_flag("--heegaard", opt.heegaard,
                          "input is a heegaard diagram (genus/curves grammar)");
    };
    auto addOrder = [&](CLI::App* cmd) {
        cmd->add_option("--order", opt.order, "monomial order")
            ->check(CLI::IsMember({"grevlex", "grlex", "lex"}))
            ->capture_default_str();
    };
    auto addBudget = [&](CLI::App* cmd) {
        cmd->add_option("--max-pairs", opt.maxPairs, "pair budget")->capture_default_str();
        cmd->add_option("--max-seconds", opt.maxSeconds, "wall-clock budget")
            ->capture_default_str();
    };

    CLI::App* recognizeCmd =
        app.add_subcommand("recognize", "full pipeline: abelianize, groebner, dimension");
    addInput(recognizeCmd, true);
    addOrder(recognizeCmd);
    addBudget(recognizeCmd);
    recognizeCmd->add_flag("--json", opt.json, "emit the JSON verdict");

    CLI::App* abelianizeCmd =
        app.add_subcommand("abelianize", "smith normal form of the relation matrix");
    addInput(abelianizeCmd, true);

    CLI::App* emitCmd =
        app.add_subcommand("emit-ideal", "write the representation-variety ideal");
    addInput(emitCmd, true);
    addOrder(emitCmd);
    emitCmd->add_option("-o,--output", opt.output, "output ideal file");

    CLI::App* groebnerCmd =
        app.add_subcommand("groebner", "reduced groebner basis of an ideal file");
    addInput(groebnerCmd, false);
    addOrder(groebnerCmd);
    addBudget(groebnerCmd);
    groebnerCmd->add_option("-o,--output", opt.output, "write the basis as an ideal file");

    CLI::App* dimCmd =
        app.add_subcommand("dim", "krull dimension of the variety of an ideal file");
    addInput(dimCmd, false);
    addOrder(dimCmd);
    addBudget(dimCmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (recognizeCmd->parsed())
            return runRecognize(opt);
        if (abelianizeCmd->parsed())
            return runAbelianize(opt);
        if (emitCmd->parsed())
            return runEmitIdeal(opt);
        if (groebnerCmd->parsed())
            return runGroebner(opt);
        if (dimCmd->parsed())
            return runDim(opt);
    } catch (const spherec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
