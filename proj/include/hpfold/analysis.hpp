#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpfold/conformation.hpp"
#include "hpfold/rational.hpp"

namespace hpfold {

enum class Algorithm { Helix, Layer, BruteForce };

const char* algorithm_name(Algorithm a);

// Bound/ratio report for one folded instance.
//
// `contacts` counts contact edges. The reference bounds count contact
// incidences per H (each contact edge has two H endpoints), so bound checks
// and the measured ratio use contact_endpoints = 2 * contacts.
struct FoldReport {
    int n = 0;
    int k = 0;
    Algorithm algorithm = Algorithm::Helix;
    long contacts = 0;
    long contact_endpoints = 0;
    // Formula lower bound in endpoint units; 0 for the brute-force oracle,
    // which proves its own optimum instead.
    long lower_bound = 0;
    Rational upper_bound;            // 18n - k/2, endpoint units
    std::optional<Rational> formula_ratio;   // upper_bound / lower_bound
    std::optional<Rational> measured_ratio;  // upper_bound / contact_endpoints
    int r = 0;  // Layer only
    int s = 0;  // Layer only
    bool helix_regime = false;      // k > 13
    bool layer_regime = false;      // k > 132
    bool aspect_condition = false;  // 11s == 12r
};

FoldReport fold_report(const HPSequence& seq, const Conformation& c, Algorithm algorithm);

struct TheoremVerdict {
    bool applicable = false;
    bool satisfied = false;
};

struct TheoremVerdicts {
    TheoremVerdict helix_ratio_2;   // k > 13 => A1 <= 2
    TheoremVerdict layer_ratio_97;  // k > 132 and 11s = 12r => A2 <= 9/7
};

// Exact-rational checks of the two ratio theorems on a report's formula
// ratio. Verdicts report applicability and satisfaction separately; the
// helix claim in fact fails for k in {14, 15} (A1 <= 2 holds iff k >= 16),
// which callers can observe through `satisfied`.
TheoremVerdicts theorem_check(const FoldReport& report);

// Deterministic HP string with exactly n H's in exactly k runs. The split of
// n into k run lengths is sampled uniformly over compositions; separating
// P-runs have length in [1, 3]; flanking P-runs appear with probability 1/2
// each (length 1 or 2).
HPSequence random_hp(int n, int k, std::uint64_t seed);

struct BenchConfig {
    int count = 0;
    int n_min = 18;
    int n_max = 60;
    int k_min = 1;
    int k_max = 8;
    std::uint64_t seed = 1;
    std::vector<Algorithm> algorithms;
    std::int64_t budget = 10'000'000;  // brute-force rows only
};

struct BenchRow {
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;
    Algorithm algorithm = Algorithm::Helix;
    bool ok = false;
    std::string error;  // populated when ok == false
    FoldReport report;
    bool bound_violation = false;  // contact_endpoints > upper_bound, exact
};

struct BenchResult {
    std::vector<BenchRow> rows;
    long bound_violations = 0;
    std::optional<Rational> min_measured_ratio;
    std::optional<Rational> median_measured_ratio;
    std::optional<Rational> max_measured_ratio;
};

BenchResult bench(const BenchConfig& config);

// Fixed column set: seed, n, k, algorithm, contacts, lower_bound,
// upper_bound_num, upper_bound_den, formula_ratio, measured_ratio,
// thresholds. Tab-separated, one row per fold, deterministic.
std::string bench_table(const BenchResult& result);

std::string bench_json(const BenchResult& result);

}  // namespace hpfold
