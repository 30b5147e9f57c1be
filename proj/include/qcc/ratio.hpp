#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcc {

/// Exact rational time point / duration. Native plans live on the integer
/// clock-cycle grid (den == 1); plans parsed from external planners may carry
/// fractional start times (epsilon-separated decimals), which must compare
/// exactly, so no floating point anywhere in the validator.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den <
               static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

    static Ratio max(const Ratio& a, const Ratio& b) { return a < b ? b : a; }

    /// Nearest integer (ties round up); used for the epsilon snap.
    std::int64_t nearest_int() const {
        std::int64_t q = num / den;
        std::int64_t r = num % den;
        if (r < 0) { q -= 1; r += den; }
        return (2 * r >= den) ? q + 1 : q;
    }

    /// Decimal rendering. Exact when the denominator divides a power of ten
    /// (always true for values parsed from decimal text); integer grid values
    /// render with three places, e.g. "12.000".
    std::string to_decimal() const;

    /// Parses a non-negative decimal literal ("7", "10.5", "0.0001").
    static Ratio from_decimal(const std::string& text);
};

}  // namespace qcc
