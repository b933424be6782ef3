#pragma once

#include "reals/natural.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace reals {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact rational as a canonical pair: den > 0, gcd(|num|, den) = 1,
/// zero represented as 0/1. Two pairs (a,b), (c,d) name the same rational
/// iff a*d = b*c; canonicalization makes that structural equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    explicit Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw DivisionByZero();
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DivisionByZero();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // cross-multiplication; denominators are positive
        const BigInt l = a.num_ * b.den_;
        const BigInt r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    /// floor(x * 10^k) as an integer, k >= 0.
    BigInt floor_scaled(unsigned k) const {
        BigInt n = num_ * pow10_int(k);
        if (n >= 0) return n / den_;
        // round toward negative infinity
        return -((-n + den_ - 1) / den_);
    }

    /// 10^e for any integer e.
    static Rational pow10(int e) {
        if (e >= 0) return Rational(pow10_int(static_cast<unsigned>(e)));
        return Rational(BigInt(1), pow10_int(static_cast<unsigned>(-e)));
    }

    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Accepts "p", "-p", "p/q" with optional sign on p.
    static Rational parse(const std::string& text);

    /// Fixed-point decimal with up to `digits` fractional digits
    /// (truncated toward zero); exact representations drop trailing zeros
    /// only when `trim` is set.
    std::string to_decimal_string(unsigned digits, bool trim = false) const;

private:
    BigInt num_;
    BigInt den_;
};

/// Minimal n in N with x < n*y; requires x > 0, y > 0.
Natural archimedean_witness(const Rational& x, const Rational& y);

}  // namespace reals
