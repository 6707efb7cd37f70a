#include <doctest.h>

#include <cmath>
#include <random>

#include "hpfold/sequence.hpp"

using namespace hpfold;

TEST_CASE("parse plain HP strings") {
    const auto seq = parse_hp("PHPHHHPHPHPHPHPHHH");
    CHECK(seq.n == 11);
    CHECK(seq.k == 7);
    CHECK(seq.length() == 18);
    CHECK(seq.p_runs.size() == 7);
}

TEST_CASE("parse compact exponent form") {
    const auto seq = parse_hp("H3P6H2P2H4P7H13P5H5P6H4P2H5");
    CHECK(seq.n == 36);
    CHECK(seq.k == 7);
    CHECK(seq.length() == 36 + 6 + 2 + 7 + 5 + 6 + 2);

    const auto fig55 = parse_hp("H14P2H8P1H11");
    CHECK(fig55.n == 33);
    CHECK(fig55.k == 3);
}

TEST_CASE("compact and expanded forms parse identically") {
    CHECK(parse_hp("H3P2H1").residues == parse_hp("HHHPPH").residues);
    CHECK(parse_hp("h2p2").residues == "HHPP");  // case-insensitive
    CHECK(parse_hp("H H\nPP").residues == "HHPP");  // whitespace ignored
}

TEST_CASE("all-P strings have n = k = 0") {
    const auto seq = parse_hp("PPPP");
    CHECK(seq.n == 0);
    CHECK(seq.k == 0);
    CHECK(seq.p_runs.size() == 1);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_hp("XYZ"), ParseError);
    CHECK_THROWS_AS(parse_hp(""), EmptyInputError);
    CHECK_THROWS_AS(parse_hp("   "), EmptyInputError);
    CHECK_THROWS_AS(parse_hp("H0P"), ParseError);
    CHECK_THROWS_AS(parse_hp("3H"), ParseError);
}

TEST_CASE("run structure invariants on random strings") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        std::string text;
        const int len = 1 + static_cast<int>(rng() % 40);
        for (int i = 0; i < len; ++i) text.push_back(rng() % 2 ? 'H' : 'P');
        const auto seq = parse_hp(text);
        CHECK(seq.residues == text);

        int n = 0, runs = 0;
        bool in_h = false;
        for (const char c : text) {
            if (c == 'H') {
                ++n;
                if (!in_h) ++runs;
                in_h = true;
            } else {
                in_h = false;
            }
        }
        CHECK(seq.n == n);
        CHECK(seq.k == runs);
        CHECK(seq.k <= (seq.length() + 1) / 2);
        CHECK(seq.n <= seq.length());
        CHECK((seq.k == 0) == (seq.n == 0));

        // Expanding the stored runs reproduces the residue list.
        std::string rebuilt(static_cast<std::size_t>(seq.length()), 'P');
        for (const auto& run : seq.h_runs) {
            for (int i = 0; i < run.length; ++i) {
                rebuilt[static_cast<std::size_t>(run.start + i)] = 'H';
            }
        }
        CHECK(rebuilt == text);
    }
}

TEST_CASE("expected_runs reference values") {
    CHECK(expected_runs(500) == doctest::Approx(123.8551).epsilon(1e-4));
    CHECK(expected_runs(1) == doctest::Approx(1.2447867).epsilon(1e-6));
    CHECK(expected_runs(1) > 0.0);
    CHECK_THROWS_AS(expected_runs(0), DomainError);
}

TEST_CASE("expected_runs is strictly increasing") {
    double prev = expected_runs(1);
    for (int n = 2; n <= 2000; ++n) {
        const double cur = expected_runs(n);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("expected_runs vs sqrt(n) ln n") {
    // The comparison bound sqrt(n) * ln(n) overtakes the expected-run count
    // exactly at n = 57 and stays above through 10^6.
    for (int n = 5; n <= 56; ++n) {
        CHECK(expected_runs(n) > std::sqrt(n) * std::log(n));
    }
    for (int n = 57; n <= 4000; ++n) {
        CHECK(expected_runs(n) <= std::sqrt(n) * std::log(n));
    }
    for (const int n : {10'000, 100'000, 1'000'000}) {
        CHECK(expected_runs(n) <= std::sqrt(n) * std::log(n));
    }
}
