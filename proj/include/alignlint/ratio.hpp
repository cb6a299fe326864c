#pragma once

#include <cstdint>
#include <numeric>

namespace alignlint {

/// Exact nonnegative rational. Keeps alignment ratios like 19/21 free of
/// floating-point drift; converted to double only at render time.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Ratio() = default;
    constexpr Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    constexpr void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    constexpr friend Ratio operator+(Ratio a, Ratio b) {
        return Ratio{a.num * b.den + b.num * a.den, a.den * b.den};
    }
    constexpr friend Ratio operator-(Ratio a, Ratio b) {
        return Ratio{a.num * b.den - b.num * a.den, a.den * b.den};
    }
    constexpr friend Ratio operator/(Ratio a, std::int64_t k) { return Ratio{a.num, a.den * k}; }

    constexpr bool operator==(const Ratio& other) const {
        return num == other.num && den == other.den;
    }
    constexpr bool operator<(const Ratio& other) const {
        return num * other.den < other.num * den;
    }
    constexpr bool operator<=(const Ratio& other) const {
        return num * other.den <= other.num * den;
    }
    constexpr bool operator>=(const Ratio& other) const { return other <= *this; }
    constexpr bool operator>(const Ratio& other) const { return other < *this; }

    constexpr double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace alignlint
