#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cdlab {

/**
 * Exact rational arithmetic on 64-bit words.
 *
 * Every operation runs through 128-bit intermediates and throws
 * std::overflow_error instead of wrapping. Structure constants here are all
 * +-1, so coefficients stay tiny in practice; the checks are a safety net,
 * not a bignum substitute.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        *this = from128(n, d);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return from128(-static_cast<__int128>(num_), den_); }

    Rational operator+(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ +
                     static_cast<__int128>(o.num_) * den_;
        return from128(n, static_cast<__int128>(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        return from128(static_cast<__int128>(num_) * o.num_,
                       static_cast<__int128>(den_) * o.den_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    static Rational from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = checked(n);
        r.den_ = checked(d);
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    static long long checked(__int128 v) {
        if (v > std::numeric_limits<long long>::max() ||
            v < std::numeric_limits<long long>::min())
            throw std::overflow_error("rational overflow");
        return static_cast<long long>(v);
    }

    long long num_, den_;
};

}  // namespace cdlab
