#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmono {

// Small exact fraction for exponents of q. Exponents stay tiny (denominators
// are bounded by 4n at rank n), so 64-bit components with eager reduction are
// exact for everything the engine produces.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Frac() = default;
    Frac(std::int64_t n) : num(n), den(1) {}
    Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num * b.num, a.den * b.den);
    }
    Frac operator-() const { Frac r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace qmono
