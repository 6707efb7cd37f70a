#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hpfold {

// Exact rational on 64-bit numerator/denominator. All bound and ratio
// comparisons in this project go through this type; no floating point is
// allowed to decide a pass/fail question.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }

    // Exact comparison via 128-bit cross multiplication; denominators are
    // positive after normalization.
    friend int cmp(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num) * b.den;
        const __int128 rhs = static_cast<__int128>(b.num) * a.den;
        if (lhs < rhs) return -1;
        if (lhs > rhs) return 1;
        return 0;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }
};

}  // namespace hpfold
