// hpfold command-line front end.
//
// Exit codes: 0 success, 2 parse/malformed input, 3 infeasible routing or
// invalid conformation, 4 search budget exhausted, 5 I/O failure, 6 bound or
// census violation in `verify`.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpfold/analysis.hpp"
#include "hpfold/conformation.hpp"
#include "hpfold/folding.hpp"
#include "hpfold/sequence.hpp"

namespace {

using json = nlohmann::json;
using namespace hpfold;

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;
constexpr int kExitIo = 5;
constexpr int kExitBound = 6;

struct CliExit {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliExit{kExitIo, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty() || out_path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliExit{kExitIo, "cannot write " + out_path};
    out << data;
}

HPSequence parse_input(const std::string& inline_text, const std::string& file) {
    std::string text = inline_text;
    if (!file.empty()) text = read_file(file);
    try {
        return parse_hp(text);
    } catch (const ParseError& e) {
        throw CliExit{kExitParse, e.what()};
    }
}

std::string format_ratio(const std::optional<Rational>& r) {
    return r ? r->str() : "inf";
}

json report_json(const FoldReport& rep) {
    json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["algorithm"] = algorithm_name(rep.algorithm);
    j["contacts"] = rep.contacts;
    j["contact_endpoints"] = rep.contact_endpoints;
    j["lower_bound"] = rep.lower_bound;
    j["upper_bound_num"] = rep.upper_bound.num;
    j["upper_bound_den"] = rep.upper_bound.den;
    j["formula_ratio"] = format_ratio(rep.formula_ratio);
    j["measured_ratio"] = format_ratio(rep.measured_ratio);
    if (rep.algorithm == Algorithm::Layer) {
        j["r"] = rep.r;
        j["s"] = rep.s;
    }
    j["thresholds"] = {{"helix_regime", rep.helix_regime},
                       {"layer_regime", rep.layer_regime},
                       {"aspect_condition", rep.aspect_condition}};
    return j;
}

std::string xyz_export(const Conformation& c) {
    std::string out = std::to_string(c.length()) + "\nhpfold conformation\n";
    char line[128];
    for (int i = 0; i < c.length(); ++i) {
        const Point3 p = cartesian(c.at(i));
        std::snprintf(line, sizeof(line), "%c %.6f %.6f %.6f\n",
                      c.sequence().is_h(i) ? 'C' : 'O', p.x, p.y, p.z);
        out += line;
    }
    return out;
}

int cmd_fold(const std::string& input, const std::string& input_file,
             const std::string& algorithm, const std::string& output_format,
             const std::string& out_path, long long budget) {
    const HPSequence seq = parse_input(input, input_file);
    std::optional<Conformation> c;
    Algorithm algo;
    bool budget_hit = false;
    try {
        if (algorithm == "helix") {
            algo = Algorithm::Helix;
            c = helix_arrangement(seq);
        } else if (algorithm == "layer") {
            algo = Algorithm::Layer;
            c = layer_arrangement(seq);
        } else {
            algo = Algorithm::BruteForce;
            auto res = brute_force_max(seq, budget);
            budget_hit = !res.exhausted;
            if (!res.best) throw CliExit{kExitBudget, "budget exhausted before any placement"};
            c = std::move(*res.best);
        }
    } catch (const DomainError& e) {
        throw CliExit{kExitParse, e.what()};
    } catch (const RoutingError& e) {
        throw CliExit{kExitInfeasible, e.what()};
    }

    const FoldReport rep = fold_report(seq, *c, algo);
    std::string payload;
    if (output_format == "xyz") {
        payload = xyz_export(*c);
    } else if (output_format == "table") {
        std::ostringstream out;
        out << "n\t" << rep.n << "\nk\t" << rep.k << "\nalgorithm\t"
            << algorithm_name(rep.algorithm) << "\ncontacts\t" << rep.contacts
            << "\ncontact_endpoints\t" << rep.contact_endpoints << "\nlower_bound\t"
            << rep.lower_bound << "\nupper_bound\t" << rep.upper_bound.str()
            << "\nformula_ratio\t" << format_ratio(rep.formula_ratio) << "\nmeasured_ratio\t"
            << format_ratio(rep.measured_ratio) << "\n";
        payload = out.str();
    } else {
        json doc = json::parse(serialize_conformation(*c));
        doc["report"] = report_json(rep);
        if (budget_hit) doc["report"]["budget_exhausted"] = true;
        payload = doc.dump(2) + "\n";
    }
    write_output(out_path, payload);
    if (budget_hit) {
        std::cerr << "warning: node budget exhausted; contacts are a lower bound\n";
        return kExitBudget;
    }
    return 0;
}

int cmd_analyze(const std::string& input, const std::string& input_file,
                const std::string& out_path) {
    const HPSequence seq = parse_input(input, input_file);
    json doc;
    doc["n"] = seq.n;
    doc["k"] = seq.k;
    doc["length"] = seq.length();
    const Rational ub = upper_bound(seq);
    doc["upper_bound_num"] = ub.num;
    doc["upper_bound_den"] = ub.den;
    if (seq.n >= 1) doc["expected_runs_for_n"] = expected_runs(seq.n);
    doc["helix_lower_bound"] = 9L * seq.n - 36 + 2L * seq.k;
    if (seq.n >= 2) {
        const auto [r, s] = chain_factorization(seq.n / 2);
        doc["layer_lower_bound"] = 14L * seq.n + 24L * r - 22L * s - 314 + 2L * seq.k;
        doc["r"] = r;
        doc["s"] = s;
        doc["aspect_condition"] = 11L * s == 12L * r;
    }
    doc["thresholds"] = {{"helix_regime", seq.k > 13}, {"layer_regime", seq.k > 132}};
    write_output(out_path, doc.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& path) {
    ParsedDocument doc;
    try {
        doc = parse_conformation_document(read_file(path));
    } catch (const DocumentError& e) {
        throw CliExit{kExitParse, e.what()};
    } catch (const ParseError& e) {
        throw CliExit{kExitParse, e.what()};
    }
    std::optional<Conformation> c;
    try {
        c = build_conformation(doc.seq, doc.placement);
    } catch (const ConformationError& e) {
        throw CliExit{kExitInfeasible, std::string("invalid conformation: ") + e.what()};
    }
    const EdgeCensus census = c->census();
    if (census.binding != doc.stored_census.binding ||
        census.contacts != doc.stored_census.contacts ||
        census.alternating != doc.stored_census.alternating ||
        census.loss != doc.stored_census.loss) {
        std::ostringstream out;
        out << "census mismatch: stored (binding " << doc.stored_census.binding << ", contacts "
            << doc.stored_census.contacts << ", alternating " << doc.stored_census.alternating
            << ", loss " << doc.stored_census.loss << ") recounted (binding " << census.binding
            << ", contacts " << census.contacts << ", alternating " << census.alternating
            << ", loss " << census.loss << ")";
        throw CliExit{kExitBound, out.str()};
    }
    const Rational ub = upper_bound(c->sequence());
    if (Rational(2 * census.contacts) > ub) {
        throw CliExit{kExitBound, "contact endpoints exceed the 18n - k/2 bound"};
    }
    const LossNeighborhoodReport loss_report = check_loss_neighborhoods(*c);
    if (loss_report.violations > 0) {
        throw CliExit{kExitBound, "a loss edge has more than 4 alternating edges in N(e)"};
    }
    std::cout << "ok: " << c->length() << " residues, " << census.contacts << " contacts, "
              << census.alternating << " alternating, " << census.loss
              << " loss; upper bound " << ub.str() << "\n";
    return 0;
}

int cmd_export(const std::string& path, const std::string& out_path) {
    ParsedDocument doc;
    try {
        doc = parse_conformation_document(read_file(path));
    } catch (const DocumentError& e) {
        throw CliExit{kExitParse, e.what()};
    } catch (const ParseError& e) {
        throw CliExit{kExitParse, e.what()};
    }
    std::optional<Conformation> c;
    try {
        c = build_conformation(doc.seq, doc.placement);
    } catch (const ConformationError& e) {
        throw CliExit{kExitInfeasible, std::string("invalid conformation: ") + e.what()};
    }
    write_output(out_path, xyz_export(*c));
    return 0;
}

int cmd_bench(int count, int n_min, int n_max, int k_min, int k_max, std::uint64_t seed,
              const std::string& algorithms, const std::string& output_format,
              const std::string& out_path, long long budget) {
    BenchConfig config;
    config.count = count;
    config.n_min = n_min;
    config.n_max = n_max;
    config.k_min = k_min;
    config.k_max = k_max;
    config.seed = seed;
    config.budget = budget;
    std::stringstream names(algorithms);
    std::string name;
    while (std::getline(names, name, ',')) {
        if (name == "helix") config.algorithms.push_back(Algorithm::Helix);
        else if (name == "layer") config.algorithms.push_back(Algorithm::Layer);
        else if (name == "brute") config.algorithms.push_back(Algorithm::BruteForce);
        else throw CliExit{kExitParse, "unknown algorithm '" + name + "'"};
    }
    if (config.algorithms.empty()) throw CliExit{kExitParse, "no algorithms selected"};
    if (n_min < 1 || n_max < n_min || k_min < 1 || k_max < k_min) {
        throw CliExit{kExitParse, "bad n/k range"};
    }
    const BenchResult result = bench(config);
    write_output(out_path, output_format == "structured" ? bench_json(result)
                                                         : bench_table(result));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HP-model folding on the layered honeycomb lattice with diagonals"};
    app.require_subcommand(1);

    std::string input, input_file, out_path;
    std::string algorithm = "helix";
    std::string output_format = "structured";
    long long budget = 10'000'000;
    std::uint64_t seed = 1;

    auto* fold = app.add_subcommand("fold", "fold an HP string and report bounds");
    fold->add_option("input", input, "HP string (plain or compact exponent form)");
    fold->add_option("--input-file", input_file, "read the HP string from a file");
    fold->add_option("--algorithm", algorithm, "helix|layer|brute")
        ->check(CLI::IsMember({"helix", "layer", "brute"}));
    fold->add_option("--output", output_format, "structured|table|xyz")
        ->check(CLI::IsMember({"structured", "table", "xyz"}));
    fold->add_option("--out", out_path, "output file (default stdout)");
    fold->add_option("--budget", budget, "node budget for brute-force search");

    std::string doc_path;
    auto* analyze = app.add_subcommand("analyze", "bounds and ratios without folding");
    analyze->add_option("input", input, "HP string");
    analyze->add_option("--input-file", input_file, "read the HP string from a file");
    analyze->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "re-validate a conformation document");
    verify->add_option("path", doc_path, "conformation document")->required();

    auto* exp = app.add_subcommand("export", "convert a conformation document to xyz");
    exp->add_option("path", doc_path, "conformation document")->required();
    exp->add_option("--out", out_path, "output file (default stdout)");
    std::string export_format = "xyz";
    exp->add_option("--format", export_format, "xyz")->check(CLI::IsMember({"xyz"}));

    int count = 10, n_min = 18, n_max = 60, k_min = 1, k_max = 8;
    std::string algorithms = "helix,layer";
    auto* bench_cmd = app.add_subcommand("bench", "fold random instances and tabulate");
    bench_cmd->add_option("--count", count, "number of instances");
    bench_cmd->add_option("--n-min", n_min, "minimum H count");
    bench_cmd->add_option("--n-max", n_max, "maximum H count");
    bench_cmd->add_option("--k-min", k_min, "minimum H-run count");
    bench_cmd->add_option("--k-max", k_max, "maximum H-run count");
    bench_cmd->add_option("--seed", seed, "suite seed");
    bench_cmd->add_option("--algorithms", algorithms, "comma list: helix,layer,brute");
    bench_cmd->add_option("--output", output_format, "table|structured")
        ->check(CLI::IsMember({"table", "structured"}));
    bench_cmd->add_option("--out", out_path, "output file (default stdout)");
    bench_cmd->add_option("--budget", budget, "node budget for brute rows");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fold->parsed()) {
            if (input.empty() && input_file.empty()) {
                std::cerr << "error: no input string\n";
                return kExitParse;
            }
            return cmd_fold(input, input_file, algorithm, output_format, out_path, budget);
        }
        if (analyze->parsed()) {
            if (input.empty() && input_file.empty()) {
                std::cerr << "error: no input string\n";
                return kExitParse;
            }
            return cmd_analyze(input, input_file, out_path);
        }
        if (verify->parsed()) return cmd_verify(doc_path);
        if (exp->parsed()) return cmd_export(doc_path, out_path);
        if (bench_cmd->parsed()) {
            return cmd_bench(count, n_min, n_max, k_min, k_max, seed, algorithms, output_format,
                             out_path, budget);
        }
    } catch (const CliExit& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
