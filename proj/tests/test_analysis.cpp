#include <doctest.h>

#include "hpfold/analysis.hpp"
#include "hpfold/folding.hpp"

using namespace hpfold;

TEST_CASE("fold report for the three-run helix instance") {
    const auto seq = parse_hp("H14P2H8P1H11");
    const auto c = helix_arrangement(seq);
    const auto rep = fold_report(seq, c, Algorithm::Helix);
    CHECK(rep.n == 33);
    CHECK(rep.k == 3);
    CHECK(rep.lower_bound == 267);
    CHECK(rep.upper_bound == Rational(1185, 2));
    CHECK(rep.contact_endpoints == 2 * rep.contacts);
    REQUIRE(rep.formula_ratio.has_value());
    CHECK(*rep.formula_ratio == Rational(1185, 2) / Rational(267));
    CHECK(!rep.helix_regime);
}

TEST_CASE("ratio is undefined for contact-free folds") {
    const auto seq = parse_hp("HPPPH");
    const auto res = brute_force_max(seq, 100'000);
    REQUIRE(res.best.has_value());
    const auto rep = fold_report(seq, *res.best, Algorithm::BruteForce);
    if (rep.contacts == 0) {
        CHECK(!rep.measured_ratio.has_value());
    }
    const auto all_p_like = parse_hp("PHP");
    const auto c = helix_arrangement(all_p_like);
    const auto rep2 = fold_report(all_p_like, c, Algorithm::Helix);
    CHECK(rep2.contacts == 0);
    CHECK(!rep2.measured_ratio.has_value());
}

TEST_CASE("helix ratio theorem holds exactly from k = 16 and fails below") {
    // A1 <= 2  <=>  18n - k/2 <= 18n - 72 + 4k  <=>  9k/2 >= 72  <=>  k >= 16,
    // independent of n. The claimed k > 13 regime therefore misses at
    // k = 14 and k = 15.
    for (int n = 20; n <= 2000; n += 97) {
        for (int k = 1; k <= std::min(n, 60); ++k) {
            const Rational a1(36LL * n - k, 2 * (9LL * n - 36 + 2 * k));
            CAPTURE(n);
            CAPTURE(k);
            CHECK((a1 <= Rational(2)) == (k >= 16));
        }
    }

    // The k = 14, n = 100 case in exact terms: 1793/892 > 2.
    const Rational a1_14(36LL * 100 - 14, 2 * (9LL * 100 - 36 + 2 * 14));
    CHECK(a1_14 == Rational(1793, 892));
    CHECK(a1_14 > Rational(2));

    // k = 16 reaches the bound with equality.
    const Rational a1_16(36LL * 100 - 16, 2 * (9LL * 100 - 36 + 2 * 16));
    CHECK(a1_16 == Rational(2));
}

TEST_CASE("theorem verdicts") {
    FoldReport rep;
    rep.algorithm = Algorithm::Helix;
    rep.n = 100;

    rep.k = 13;
    rep.helix_regime = rep.k > 13;
    rep.lower_bound = 9L * rep.n - 36 + 2L * rep.k;
    rep.upper_bound = Rational(36LL * rep.n - rep.k, 2);
    rep.formula_ratio = rep.upper_bound / Rational(rep.lower_bound);
    CHECK(!theorem_check(rep).helix_ratio_2.applicable);

    rep.k = 14;
    rep.helix_regime = rep.k > 13;
    rep.lower_bound = 9L * rep.n - 36 + 2L * rep.k;
    rep.formula_ratio = Rational(36LL * rep.n - rep.k, 2) / Rational(rep.lower_bound);
    const auto v14 = theorem_check(rep);
    CHECK(v14.helix_ratio_2.applicable);
    CHECK(!v14.helix_ratio_2.satisfied);

    rep.k = 17;
    rep.helix_regime = rep.k > 13;
    rep.lower_bound = 9L * rep.n - 36 + 2L * rep.k;
    rep.formula_ratio = Rational(36LL * rep.n - rep.k, 2) / Rational(rep.lower_bound);
    const auto v17 = theorem_check(rep);
    CHECK(v17.helix_ratio_2.applicable);
    CHECK(v17.helix_ratio_2.satisfied);
}

TEST_CASE("layer ratio theorem at the reference configuration") {
    FoldReport rep;
    rep.algorithm = Algorithm::Layer;
    rep.n = 1056;
    rep.k = 133;
    rep.r = 22;
    rep.s = 24;
    rep.layer_regime = rep.k > 132;
    rep.aspect_condition = 11 * rep.s == 12 * rep.r;
    rep.lower_bound = 14L * 1056 + 24L * 22 - 22L * 24 - 314 + 2L * 133;
    CHECK(rep.lower_bound == 14736);
    rep.upper_bound = Rational(36LL * 1056 - 133, 2);
    CHECK(rep.upper_bound == Rational(37883, 2));  // 18941.5
    rep.formula_ratio = rep.upper_bound / Rational(rep.lower_bound);
    const auto verdicts = theorem_check(rep);
    CHECK(verdicts.layer_ratio_97.applicable);
    CHECK(verdicts.layer_ratio_97.satisfied);
    CHECK(*rep.formula_ratio <= Rational(9, 7));

    // k = 132 sits outside the strict regime.
    rep.k = 132;
    rep.layer_regime = rep.k > 132;
    CHECK(!theorem_check(rep).layer_ratio_97.applicable);
}

TEST_CASE("random_hp hits the requested run profile") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{
             {5, 5}, {5, 1}, {36, 7}, {100, 13}, {18, 1}, {40, 40}}) {
        const auto seq = random_hp(n, k, 42);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(seq.n == n);
        CHECK(seq.k == k);
        for (std::size_t i = 1; i + 1 < seq.p_runs.size(); ++i) {
            CHECK(seq.p_runs[i].length >= 1);
        }
    }
    CHECK_THROWS_AS(random_hp(5, 6, 1), DomainError);
    CHECK_THROWS_AS(random_hp(5, 0, 1), DomainError);
}

TEST_CASE("random_hp is seed-deterministic") {
    const auto a = random_hp(36, 7, 1234);
    const auto b = random_hp(36, 7, 1234);
    CHECK(a.residues == b.residues);
    const auto c = random_hp(36, 7, 1235);
    CHECK(a.residues != c.residues);  // overwhelmingly likely; fixed seeds
}

TEST_CASE("forced run profiles") {
    // n = k forces all runs to length 1.
    const auto singles = random_hp(5, 5, 9);
    for (const auto& run : singles.h_runs) CHECK(run.length == 1);
    // k = 1 forces a single run.
    const auto one = random_hp(5, 1, 9);
    CHECK(one.h_runs.size() == 1);
    CHECK(one.h_runs[0].length == 5);
}

TEST_CASE("bench basics") {
    BenchConfig config;
    config.count = 0;
    config.algorithms = {Algorithm::Helix};
    const auto empty = bench(config);
    CHECK(empty.rows.empty());
    CHECK(bench_table(empty).find("seed\tn\tk") == 0);

    config.count = 6;
    config.n_min = 18;
    config.n_max = 40;
    config.k_min = 1;
    config.k_max = 6;
    config.seed = 77;
    config.algorithms = {Algorithm::Helix, Algorithm::Layer};
    const auto run1 = bench(config);
    CHECK(run1.rows.size() == 12);
    CHECK(run1.bound_violations == 0);
    for (const auto& row : run1.rows) {
        CAPTURE(row.error);
        CHECK(row.ok);
        CHECK(!row.bound_violation);
    }
    const auto run2 = bench(config);
    CHECK(bench_table(run1) == bench_table(run2));
    CHECK(bench_json(run1) == bench_json(run2));
}
