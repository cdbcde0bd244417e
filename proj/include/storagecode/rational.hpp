#pragma once
#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>

namespace storagecode {

// Exact nonnegative rational with int64 storage. Values here are rates and
// bounds with denominators that are (products of) powers of two, so int64
// plus cross-reduction is plenty; a __int128 check guards the multiplies.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        assert(d > 0);
        reduce();
    }
    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    void reduce() {
        std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rational operator*(Rational a, Rational b) {
        std::int64_t g1 = std::gcd(a.num, b.den);
        std::int64_t g2 = std::gcd(b.num, a.den);
        a.num /= g1; b.den /= g1;
        b.num /= g2; a.den /= g2;
        __int128 n = static_cast<__int128>(a.num) * b.num;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        assert(n <= INT64_MAX && d <= INT64_MAX);
        return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    }
    friend Rational operator-(Rational a, Rational b) {
        std::int64_t g = std::gcd(a.den, b.den);
        std::int64_t l = a.den / g * b.den;
        return Rational(a.num * (l / a.den) - b.num * (l / b.den), l);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// 2^k as a rational denominator helper
inline Rational pow2_inv_complement(int k) {  // 1 - 2^{-k}
    return Rational((std::int64_t(1) << k) - 1, std::int64_t(1) << k);
}

} // namespace storagecode
