// latorus: construct coordinate tori and type-A matrix Lie tori, synthesize
// and verify Chevalley involutions, and decide whether one exists.
//
// Every subcommand prints a JSON report to stdout and exits with
//   0  all checks passed / the involution exists
//   1  a check failed / no involution exists
//   2  malformed input or an unusable flag combination

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "latorus/json_io.hpp"
#include "latorus/verify.hpp"

using namespace latorus;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int report_exit(const CheckReport& report) { return report.passed() ? kExitPass : kExitFail; }

CoordinateDescriptor load_coordinates(const std::string& path, int octonion_rank) {
    if (!path.empty() && octonion_rank > 0)
        throw ParseError("give either a coordinate file or --octonion, not both");
    if (octonion_rank > 0) {
        if (octonion_rank < 3) throw ParseError("--octonion needs n >= 3");
        return CoordinateDescriptor::octonion(octonion_rank);
    }
    if (path.empty()) throw ParseError("missing coordinate input (file or --octonion)");
    return coordinate_from_json(read_file(path));
}

int cmd_check_matrix(const std::string& path) {
    const nlohmann::json doc = [&] {
        try {
            return nlohmann::json::parse(read_file(path));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("json: ") + e.what());
        }
    }();
    if (!doc.contains("n") || !doc.contains("q")) throw ParseError("matrix document needs 'n' and 'q'");
    const int n = doc["n"].get<int>();
    const auto& rows = doc["q"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("matrix document needs n rows");
    std::vector<Rational> e;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("matrix document needs n columns per row");
        for (const auto& cell : row)
            e.push_back(cell.is_number_integer()
                            ? Rational(static_cast<long long>(cell.get<std::int64_t>()))
                            : Rational::parse(cell.get<std::string>()));
    }
    auto at = [&](int i, int j) -> const Rational& { return e[static_cast<size_t>(i) * n + j]; };

    CheckReport report;
    report.suite = "check-matrix";
    {
        bool ok = true;
        std::string cex;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (at(i, j).is_zero()) {
                    ok = false;
                    cex = "q_" + std::to_string(i + 1) + std::to_string(j + 1);
                }
        report.add("entries-nonzero", ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        for (int i = 0; i < n && ok; ++i)
            if (!at(i, i).is_one()) {
                ok = false;
                cex = "q_" + std::to_string(i + 1) + std::to_string(i + 1) + " = " + at(i, i).str();
            }
        report.add("diagonal-ones", ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (i != j && !at(i, j).is_zero() && !at(j, i).is_zero() &&
                    !(at(i, j) * at(j, i)).is_one()) {
                    ok = false;
                    cex = "q_" + std::to_string(i + 1) + std::to_string(j + 1) + " * q_" +
                          std::to_string(j + 1) + std::to_string(i + 1) + " = " +
                          (at(i, j) * at(j, i)).str();
                }
        report.add("inverse-pairs", ok, cex);
    }
    {
        bool ok = true;
        std::string cex;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (!(at(i, j) == Rational(1) || at(i, j) == Rational(-1))) {
                    ok = false;
                    cex = "q_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + at(i, j).str();
                }
        report.add("elementary", ok, cex);
    }

    std::cout << to_json(report) << "\n";
    return report_exit(report);
}

int cmd_decide(const std::string& path, int octonion_rank, int ell) {
    const CoordinateDescriptor coord = load_coordinates(path, octonion_rank);
    if (ell > 0) {
        if (ell < 2) throw ParseError("--ell must be at least 2");
        if (coord.kind == TorusKind::Octonion && ell != 2)
            throw ParseError("octonion coordinates only arise at --ell 2");
    }
    const DecisionResult decision = decide_chevalley_existence(coord);
    std::cout << decision_json(decision) << "\n";
    return decision.exists ? kExitPass : kExitFail;
}

int cmd_synthesize(const std::string& path, int ell, const std::string& out_path) {
    const CoordinateDescriptor coord = load_coordinates(path, 0);
    if (coord.kind != TorusKind::Quantum)
        throw ParseError("synthesize needs quantum coordinates (a quantum-matrix file)");
    try {
        const ChevalleyInvolutionDescriptor desc = synthesize_chevalley(ell, *coord.q);
        CheckReport report;
        report.suite = "synthesize";
        report.add("elementary-coordinates", true);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw ParseError("cannot write '" + out_path + "'");
            out << to_json(desc) << "\n";
            report.add("descriptor-written", true, "", out_path);
            std::cout << involution_report_json(true, "synthesized x -> -transpose(bar(x))", report)
                      << "\n";
        } else {
            nlohmann::json j = nlohmann::json::parse(involution_report_json(
                true, "synthesized x -> -transpose(bar(x))", report));
            j["descriptor"] = nlohmann::json::parse(to_json(desc));
            std::cout << j.dump(2) << "\n";
        }
        return kExitPass;
    } catch (const NotElementary& e) {
        CheckReport report;
        report.suite = "synthesize";
        report.add("elementary-coordinates", false, e.what());
        std::cout << involution_report_json(false, e.what(), report) << "\n";
        return kExitFail;
    }
}

int cmd_verify_involution(const std::string& path, int window, std::uint64_t seed, int workers) {
    const ChevalleyInvolutionDescriptor desc = involution_from_json(read_file(path));
    VerifyOptions opts;
    opts.seed = seed;
    opts.workers = workers;
    const CheckReport report = verify_chevalley(desc, window, opts);
    std::cout << involution_report_json(report.passed(),
                                        report.passed() ? "verified Chevalley involution"
                                                        : "verification failed",
                                        report)
              << "\n";
    return report_exit(report);
}

int cmd_verify_axioms(const std::string& path, int octonion_rank, int ell, int window, int rg_window,
                      const std::string& suite, std::uint64_t seed, int workers) {
    const CoordinateDescriptor coord = load_coordinates(path, octonion_rank);
    VerifyOptions opts;
    opts.seed = seed;
    opts.workers = workers;

    if (coord.kind == TorusKind::Octonion && (suite == "rg" || suite == "div"))
        throw ParseError("the matrix Lie torus suites need quantum coordinates");
    if (suite != "rg" && suite != "div" && suite != "torus" && suite != "all")
        throw ParseError("unknown suite '" + suite + "'");

    std::vector<CheckReport> reports;
    if (coord.kind == TorusKind::Quantum) {
        if (ell < 2) throw ParseError("--ell must be at least 2");
        if (suite == "rg" || suite == "all")
            reports.push_back(verify_root_grading(ell, *coord.q, rg_window, opts));
        if (suite == "div" || suite == "all")
            reports.push_back(verify_division(ell, *coord.q, window, opts));
    }
    if (suite == "torus" || suite == "all") reports.push_back(verify_torus_axioms(coord, window, opts));

    bool pass = true;
    for (const auto& r : reports) pass = pass && r.passed();

    if (reports.size() == 1) {
        std::cout << to_json(reports[0]) << "\n";
    } else {
        nlohmann::json j;
        j["suite"] = "all";
        j["pass"] = pass;
        j["suites"] = nlohmann::json::array();
        for (const auto& r : reports) j["suites"].push_back(nlohmann::json::parse(to_json(r)));
        std::cout << j.dump(2) << "\n";
    }
    return pass ? kExitPass : kExitFail;
}

int cmd_extract_coordinates(const std::string& path, int ell, int window, std::uint64_t seed,
                            int samples) {
    const CoordinateDescriptor coord = load_coordinates(path, 0);
    if (coord.kind != TorusKind::Quantum)
        throw ParseError("extract-coordinates needs quantum coordinates");
    if (ell < 3)
        throw ParseError("--ell must be at least 3 (the canonical and reversed pair need eps_1..eps_3)");
    const QuantumMatrix& q = *coord.q;
    const MatrixLieTorus torus(ell, q);
    const Root beta = Root::pair(1, 2), gamma = Root::pair(2, 3);

    CheckReport report;
    report.suite = "extract-coordinates";
    report.window = window;
    report.seed = seed;

    {
        const QTElement one = QTElement::one(q.rank());
        report.add("unit-recovery", torus.extract_coordinate_mul(beta, gamma, one, one) == one);
    }
    {
        bool ok = true;
        std::string cex;
        SampleRng rng(seed);
        const auto degrees = degree_window(q.rank(), window);
        for (int t = 0; t < samples && ok; ++t) {
            const QTElement a = QTElement::monomial(degrees[rng.pick(0, degrees.size() - 1)],
                                                    Rational(rng.pick_nonzero(-5, 5), rng.pick(1, 4)));
            const QTElement b = QTElement::monomial(degrees[rng.pick(0, degrees.size() - 1)],
                                                    Rational(rng.pick_nonzero(-5, 5), rng.pick(1, 4)));
            if (!(torus.extract_coordinate_mul(beta, gamma, a, b) == qt_mul(q, a, b))) {
                ok = false;
                cex = a.str() + " ; " + b.str();
            } else if (!(torus.extract_coordinate_mul(gamma, beta, a, b) == qt_mul(q, b, a))) {
                ok = false;
                cex = "(reversed) " + a.str() + " ; " + b.str();
            }
        }
        report.add("bracket-recovers-multiplication", ok, cex,
                   std::to_string(samples) + " seeded monomial pairs, both pair orders");
    }
    if (is_elementary(q)) {
        bool ok = true;
        std::string cex;
        const ChevalleyInvolutionDescriptor desc = synthesize_chevalley(ell, q);
        const AntiInvolutionTable bar = synthesize_pre_chevalley_qt(q);
        for (const Degree& lam : degree_window(q.rank(), window)) {
            const QTElement m = QTElement::monomial(lam, Rational(1));
            if (!(extract_anti_involution(torus, desc, m) == bar.apply(m))) {
                ok = false;
                cex = "degree " + lam.str();
                break;
            }
        }
        report.add("anti-involution-round-trip", ok, cex);
    }

    std::cout << to_json(report) << "\n";
    return report_exit(report);
}

int cmd_oracle(const std::string& path, int window) {
    const CoordinateDescriptor coord = load_coordinates(path, 0);
    if (coord.kind != TorusKind::Quantum) throw ParseError("oracle needs quantum coordinates");
    const QuantumMatrix& q = *coord.q;

    const auto found = oracle_search_pre_chevalley(q, window);
    const bool elementary = is_elementary(q);

    CheckReport report;
    report.suite = "oracle";
    report.window = window;
    report.add("agrees-with-elementarity", found.has_value() == elementary,
               found.has_value() == elementary ? "" : "oracle and elementarity disagree",
               found ? "sign assignment solved on the window"
                     : "constraint system certified unsolvable on the window");
    std::cout << to_json(report) << "\n";
    return report_exit(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for coordinate tori, type-A matrix Lie tori, and their "
                 "Chevalley involutions"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    int octonion_rank = 0;
    int ell = 0;
    int window = 2;
    int samples = 50;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string suite = "all";

    auto* check = app.add_subcommand("check-matrix", "validate a quantum-matrix file and report elementarity");
    check->add_option("file", in_path)->required();

    auto* decide = app.add_subcommand("decide", "decide whether a Chevalley involution exists");
    decide->add_option("file", in_path);
    decide->add_option("--octonion", octonion_rank, "use the octonion torus of this rank");
    decide->add_option("--ell", ell, "root-system rank (optional; octonion requires 2)");

    auto* synth = app.add_subcommand("synthesize", "synthesize the involution descriptor");
    synth->add_option("file", in_path)->required();
    synth->add_option("--ell", ell, "root-system rank")->required();
    synth->add_option("-o,--output", out_path, "write the descriptor JSON here");

    auto* verify_inv = app.add_subcommand("verify-involution", "run the involution axiom checks");
    verify_inv->add_option("file", in_path)->required();
    verify_inv->add_option("--window", window);
    verify_inv->add_option("--seed", seed);
    verify_inv->add_option("--workers", workers);

    int rg_window = 1;
    auto* axioms = app.add_subcommand("verify-axioms", "run the grading/division/torus axiom suites");
    axioms->add_option("file", in_path);
    axioms->add_option("--octonion", octonion_rank);
    axioms->add_option("--ell", ell);
    axioms->add_option("--window", window, "window for the division and torus suites");
    axioms->add_option("--rg-window", rg_window, "window for the grading suite (cost (2w+1)^n)");
    axioms->add_option("--suite", suite, "rg | div | torus | all");
    axioms->add_option("--seed", seed);
    axioms->add_option("--workers", workers);

    auto* extract = app.add_subcommand("extract-coordinates", "recover coordinate data from brackets");
    extract->add_option("file", in_path)->required();
    extract->add_option("--ell", ell)->required();
    extract->add_option("--window", window);
    extract->add_option("--seed", seed);
    extract->add_option("--samples", samples);

    auto* oracle = app.add_subcommand("oracle", "brute-force anti-involution search on a window");
    oracle->add_option("file", in_path)->required();
    oracle->add_option("--window", window);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;  // --help stays a success
    }

    try {
        if (check->parsed()) return cmd_check_matrix(in_path);
        if (decide->parsed()) return cmd_decide(in_path, octonion_rank, ell);
        if (synth->parsed()) return cmd_synthesize(in_path, ell, out_path);
        if (verify_inv->parsed()) return cmd_verify_involution(in_path, window, seed, workers);
        if (axioms->parsed())
            return cmd_verify_axioms(in_path, octonion_rank, ell, window, rg_window, suite, seed, workers);
        if (extract->parsed()) return cmd_extract_coordinates(in_path, ell, window, seed, samples);
        if (oracle->parsed()) return cmd_oracle(in_path, window);
    } catch (const ParseError& e) {
        std::cout << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
        return kExitInput;
    } catch (const OctonionRankBelow3& e) {
        std::cout << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
        return kExitInput;
    } catch (const AlgebraError& e) {
        std::cout << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
        return kExitInput;
    }
    return kExitInput;
}
