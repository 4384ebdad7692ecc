#ifndef ELNITSKY_RATIONAL_HPP
#define ELNITSKY_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

namespace elnitsky {

// Exact rational in lowest terms with positive denominator. Tile frequencies
// are counts over tiling counts, so 64-bit components are ample.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(std::int64_t numerator, std::int64_t denominator)
        : num(numerator), den(denominator) {
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

    bool is_zero() const { return num == 0; }
    bool is_one() const { return num == 1 && den == 1; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace elnitsky

#endif
