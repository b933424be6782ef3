#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace reals {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative arbitrary-size integer; the base of the number tower.
/// Addition and multiplication agree with the recursive definitions
/// m+0:=m, m+(n+1):=(m+n)+1 and m*1:=m, m*(n+1):=m*n+m (checked in tests);
/// the production path is positional big-integer arithmetic.
class Natural {
public:
    Natural() = default;
    Natural(unsigned long long v) : v_(v) {}
    explicit Natural(BigInt v) : v_(std::move(v)) {
        if (v_ < 0) throw std::domain_error("Natural: negative value");
    }

    const BigInt& value() const { return v_; }

    friend Natural operator+(const Natural& a, const Natural& b) {
        return Natural(a.v_ + b.v_);
    }
    friend Natural operator*(const Natural& a, const Natural& b) {
        return Natural(a.v_ * b.v_);
    }
    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const { return v_.str(); }

    static Natural parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("Natural::parse: empty string");
        for (char c : text)
            if (c < '0' || c > '9')
                throw std::invalid_argument("Natural::parse: not a digit string: " + text);
        return Natural(BigInt(text));
    }

private:
    BigInt v_;
};

/// 10^e for e >= 0.
inline BigInt pow10_int(unsigned e) {
    BigInt r = 1;
    BigInt ten = 10;
    while (e) {
        if (e & 1) r *= ten;
        ten *= ten;
        e >>= 1;
    }
    return r;
}

/// floor(sqrt(n)) for n >= 0, by Newton iteration on integers.
BigInt isqrt(const BigInt& n);

/// floor(n^(1/k)) for n >= 0, k >= 1.
BigInt iroot(const BigInt& n, unsigned k);

}  // namespace reals
