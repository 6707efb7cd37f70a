#include "hpfold/sequence.hpp"

#include <cctype>
#include <cmath>

namespace hpfold {

namespace {

void scan_runs(HPSequence& seq) {
    const int len = seq.length();
    int i = 0;
    while (i < len) {
        const char c = seq.residues[static_cast<std::size_t>(i)];
        int j = i;
        while (j < len && seq.residues[static_cast<std::size_t>(j)] == c) ++j;
        if (c == 'H') {
            seq.h_runs.push_back({i, j - i});
            seq.n += j - i;
        } else {
            seq.p_runs.push_back({i, j - i});
        }
        i = j;
    }
    seq.k = static_cast<int>(seq.h_runs.size());
}

}  // namespace

HPSequence parse_hp(const std::string& text) {
    std::string expanded;
    expanded.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const char raw = text[i];
        if (std::isspace(static_cast<unsigned char>(raw))) {
            ++i;
            continue;
        }
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
        if (c != 'H' && c != 'P') {
            throw ParseError("invalid character '" + std::string(1, raw) + "' at position " +
                             std::to_string(i));
        }
        ++i;
        // Optional exponent.
        long count = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            count = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                count = count * 10 + (text[i] - '0');
                if (count > 1000000) throw ParseError("exponent too large");
                ++i;
            }
            if (count == 0) throw ParseError("exponent 0 is not allowed");
        }
        expanded.append(static_cast<std::size_t>(count), c);
    }
    if (expanded.empty()) throw EmptyInputError();

    HPSequence seq;
    seq.residues = std::move(expanded);
    scan_runs(seq);
    return seq;
}

double expected_runs(int n) {
    if (n < 1) throw DomainError("expected_runs requires n >= 1");
    constexpr double kGamma = 0.57721566490153286;
    constexpr double kPi = 3.141592653589793;
    const double nn = static_cast<double>(n);
    const double scale = std::sqrt(6.0 / kPi) * std::sqrt(nn);
    return scale * (0.5 * std::log(nn) + kGamma - std::log(std::sqrt(kPi / 6.0)));
}

}  // namespace hpfold
