#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hpfold {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyInputError : ParseError {
    EmptyInputError() : ParseError("empty input string") {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct Run {
    int start = 0;   // index into residues
    int length = 0;
};

// Parsed HP string. residues holds 'H'/'P'; n is the total H count and k the
// number of maximal H-runs.
struct HPSequence {
    std::string residues;
    std::vector<Run> h_runs;
    std::vector<Run> p_runs;
    int n = 0;
    int k = 0;

    int length() const { return static_cast<int>(residues.size()); }
    bool is_h(int i) const { return residues[static_cast<std::size_t>(i)] == 'H'; }
};

// Accepts plain residue strings over {H, P} (case-insensitive) and the
// compact exponent form "H3P6H2". Whitespace is ignored. Exponent 0 is
// rejected.
HPSequence parse_hp(const std::string& text);

// Kessler-Livingston expected number of parts of a random partition of n,
// used as the expected H-run count: sqrt(6/pi) * sqrt(n) * (ln(n)/2 + gamma
// - ln(sqrt(pi/6))). Natural logarithm throughout.
double expected_runs(int n);

}  // namespace hpfold
