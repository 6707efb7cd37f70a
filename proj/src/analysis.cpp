#include "hpfold/analysis.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hpfold/folding.hpp"

namespace hpfold {

using json = nlohmann::json;

namespace {

// Implementation-independent bounded draw (std::uniform_int_distribution is
// not portable across standard libraries).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

int draw_in(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

std::string format_ratio(const std::optional<Rational>& r) {
    if (!r) return "inf";
    return r->str();
}

}  // namespace

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Helix: return "helix";
        case Algorithm::Layer: return "layer";
        case Algorithm::BruteForce: return "brute";
    }
    return "?";
}

FoldReport fold_report(const HPSequence& seq, const Conformation& c, Algorithm algorithm) {
    FoldReport rep;
    rep.n = seq.n;
    rep.k = seq.k;
    rep.algorithm = algorithm;
    rep.contacts = c.census().contacts;
    rep.contact_endpoints = 2 * rep.contacts;
    rep.upper_bound = upper_bound(seq);

    if (algorithm == Algorithm::Layer) {
        const auto [r, s] = chain_factorization(std::max(1, seq.n / 2));
        rep.r = r;
        rep.s = s;
        rep.lower_bound = 14L * seq.n + 24L * r - 22L * s - 314 + 2L * seq.k;
    } else if (algorithm == Algorithm::Helix) {
        rep.lower_bound = 9L * seq.n - 36 + 2L * seq.k;
    } else {
        rep.lower_bound = 0;
    }

    if (rep.lower_bound > 0) {
        rep.formula_ratio = rep.upper_bound / Rational(rep.lower_bound);
    }
    if (rep.contact_endpoints > 0) {
        rep.measured_ratio = rep.upper_bound / Rational(rep.contact_endpoints);
    }
    rep.helix_regime = seq.k > 13;
    rep.layer_regime = seq.k > 132;
    rep.aspect_condition = algorithm == Algorithm::Layer && 11L * rep.s == 12L * rep.r;
    return rep;
}

TheoremVerdicts theorem_check(const FoldReport& report) {
    TheoremVerdicts out;
    if (report.algorithm == Algorithm::Helix) {
        out.helix_ratio_2.applicable = report.helix_regime;
        out.helix_ratio_2.satisfied =
            report.formula_ratio && *report.formula_ratio <= Rational(2);
    }
    if (report.algorithm == Algorithm::Layer) {
        out.layer_ratio_97.applicable = report.layer_regime && report.aspect_condition;
        out.layer_ratio_97.satisfied =
            report.formula_ratio && *report.formula_ratio <= Rational(9, 7);
    }
    return out;
}

HPSequence random_hp(int n, int k, std::uint64_t seed) {
    if (k < 1 || k > n) throw DomainError("random_hp requires 1 <= k <= n");
    std::mt19937_64 rng(seed);

    // Uniform composition of n into k parts: choose k-1 distinct cut points
    // out of the n-1 gaps.
    std::vector<int> cuts;
    if (k > 1) {
        // Floyd's sampling keeps the draw count at k-1 regardless of n.
        std::vector<char> taken(static_cast<std::size_t>(n), 0);
        for (int j = n - k + 1; j <= n - 1; ++j) {
            const int t = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(j)));
            if (taken[static_cast<std::size_t>(t)]) {
                taken[static_cast<std::size_t>(j)] = 1;
            } else {
                taken[static_cast<std::size_t>(t)] = 1;
            }
        }
        for (int g = 1; g <= n - 1; ++g) {
            if (taken[static_cast<std::size_t>(g)]) cuts.push_back(g);
        }
    }
    cuts.push_back(n);

    std::string text;
    if (draw_below(rng, 2) == 0) text.append(static_cast<std::size_t>(draw_in(rng, 1, 2)), 'P');
    int prev = 0;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (i > 0) text.append(static_cast<std::size_t>(draw_in(rng, 1, 3)), 'P');
        text.append(static_cast<std::size_t>(cuts[i] - prev), 'H');
        prev = cuts[i];
    }
    if (draw_below(rng, 2) == 0) text.append(static_cast<std::size_t>(draw_in(rng, 1, 2)), 'P');

    HPSequence seq = parse_hp(text);
    if (seq.n != n || seq.k != k) {
        throw std::logic_error("random_hp produced a string with wrong (n, k)");
    }
    return seq;
}

BenchResult bench(const BenchConfig& config) {
    BenchResult result;
    std::mt19937_64 meta(config.seed);
    std::vector<Rational> ratios;

    for (int row_idx = 0; row_idx < config.count; ++row_idx) {
        const std::uint64_t row_seed = meta();
        std::mt19937_64 row_rng(row_seed);
        const int n = draw_in(row_rng, config.n_min, config.n_max);
        const int k_hi = std::min(config.k_max, n);
        const int k = std::min(std::max(draw_in(row_rng, config.k_min, std::max(config.k_min, k_hi)), 1), n);
        const HPSequence seq = random_hp(n, k, row_seed ^ 0x5bd1e995U);

        for (const Algorithm algo : config.algorithms) {
            BenchRow row;
            row.seed = row_seed;
            row.n = n;
            row.k = k;
            row.algorithm = algo;
            try {
                std::optional<Conformation> c;
                switch (algo) {
                    case Algorithm::Helix: c = helix_arrangement(seq); break;
                    case Algorithm::Layer: c = layer_arrangement(seq); break;
                    case Algorithm::BruteForce: {
                        auto res = brute_force_max(seq, config.budget);
                        if (!res.best) throw RoutingError("budget exhausted before a result");
                        c = std::move(*res.best);
                        break;
                    }
                }
                row.report = fold_report(seq, *c, algo);
                row.ok = true;
                row.bound_violation =
                    Rational(row.report.contact_endpoints) > row.report.upper_bound;
                if (row.bound_violation) ++result.bound_violations;
                if (row.report.measured_ratio) ratios.push_back(*row.report.measured_ratio);
            } catch (const std::exception& e) {
                row.ok = false;
                row.error = e.what();
            }
            result.rows.push_back(std::move(row));
        }
    }

    if (!ratios.empty()) {
        std::sort(ratios.begin(), ratios.end(),
                  [](const Rational& a, const Rational& b) { return a < b; });
        result.min_measured_ratio = ratios.front();
        result.median_measured_ratio = ratios[ratios.size() / 2];
        result.max_measured_ratio = ratios.back();
    }
    return result;
}

std::string bench_table(const BenchResult& result) {
    std::ostringstream out;
    out << "seed\tn\tk\talgorithm\tcontacts\tlower_bound\tupper_bound_num\tupper_bound_den"
           "\tformula_ratio\tmeasured_ratio\tthresholds\n";
    for (const auto& row : result.rows) {
        out << row.seed << '\t' << row.n << '\t' << row.k << '\t' << algorithm_name(row.algorithm)
            << '\t';
        if (!row.ok) {
            out << "error\t-\t-\t-\t-\t-\t" << row.error << '\n';
            continue;
        }
        const auto& rep = row.report;
        out << rep.contacts << '\t' << rep.lower_bound << '\t' << rep.upper_bound.num
            << '\t' << rep.upper_bound.den << '\t' << format_ratio(rep.formula_ratio) << '\t'
            << format_ratio(rep.measured_ratio) << '\t' << "helix_regime=" << rep.helix_regime
            << ",layer_regime=" << rep.layer_regime << ",aspect=" << rep.aspect_condition << '\n';
    }
    return out.str();
}

std::string bench_json(const BenchResult& result) {
    json doc;
    doc["format_version"] = 1;
    json rows = json::array();
    for (const auto& row : result.rows) {
        json r;
        r["seed"] = row.seed;
        r["n"] = row.n;
        r["k"] = row.k;
        r["algorithm"] = algorithm_name(row.algorithm);
        if (!row.ok) {
            r["error"] = row.error;
        } else {
            const auto& rep = row.report;
            r["contacts"] = rep.contacts;
            r["contact_endpoints"] = rep.contact_endpoints;
            r["lower_bound"] = rep.lower_bound;
            r["upper_bound_num"] = rep.upper_bound.num;
            r["upper_bound_den"] = rep.upper_bound.den;
            r["formula_ratio"] = format_ratio(rep.formula_ratio);
            r["measured_ratio"] = format_ratio(rep.measured_ratio);
            r["thresholds"] = {{"helix_regime", rep.helix_regime},
                               {"layer_regime", rep.layer_regime},
                               {"aspect_condition", rep.aspect_condition}};
            r["bound_violation"] = row.bound_violation;
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    doc["bound_violations"] = result.bound_violations;
    if (result.min_measured_ratio) {
        doc["measured_ratio_min"] = result.min_measured_ratio->str();
        doc["measured_ratio_median"] = result.median_measured_ratio->str();
        doc["measured_ratio_max"] = result.max_measured_ratio->str();
    }
    return doc.dump(2) + "\n";
}

}  // namespace hpfold
