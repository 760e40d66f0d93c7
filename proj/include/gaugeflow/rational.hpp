#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "gaugeflow/errors.hpp"

namespace gaugeflow {

// Exact rational coefficient. Numerator and denominator are kept reduced
// with denominator > 0; intermediate products go through 128-bit arithmetic
// and overflow raises RationalOverflow instead of wrapping.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    // Integer power with negative exponents allowed.
    Rational pow(int e) const {
        Rational base = *this;
        if (e < 0) {
            base = Rational(1) / base;
            e = -e;
        }
        Rational out(1);
        while (e > 0) {
            if (e & 1) out *= base;
            base = (e > 1) ? base * base : base;
            e >>= 1;
        }
        return out;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    using i128 = __int128;

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw Error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw RationalOverflow();
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void reduce() { *this = from128(num_, den_); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace gaugeflow
