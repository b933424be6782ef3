#pragma once

#include "reals/natural.hpp"

namespace reals {

/// An integer as the equivalence class [(a,b)] of a pair of naturals,
/// representing a-b. Two pairs (a,b), (c,d) are equivalent iff a+d = b+c.
/// The canonical representative has min(a,b) = 0, so structural equality
/// coincides with class equality.
class IntegerPair {
public:
    IntegerPair() : a_(0), b_(0) {}
    IntegerPair(Natural a, Natural b) {
        // canonicalize: subtract min(a,b) from both components
        if (a.value() >= b.value()) {
            a_ = Natural(a.value() - b.value());
            b_ = Natural(0);
        } else {
            a_ = Natural(0);
            b_ = Natural(b.value() - a.value());
        }
    }
    explicit IntegerPair(const BigInt& v)
        : IntegerPair(v >= 0 ? Natural(v) : Natural(0), v >= 0 ? Natural(0) : Natural(-v)) {}

    const Natural& pos() const { return a_; }
    const Natural& neg() const { return b_; }

    /// The represented integer a - b.
    BigInt value() const { return a_.value() - b_.value(); }

    static bool equivalent(const IntegerPair& p, const IntegerPair& q) {
        return p.a_.value() + q.b_.value() == p.b_.value() + q.a_.value();
    }

    /// [(a,b)] + [(c,d)] := [(a+c, b+d)]
    friend IntegerPair operator+(const IntegerPair& p, const IntegerPair& q) {
        return IntegerPair(p.a_ + q.a_, p.b_ + q.b_);
    }
    /// [(a,b)] * [(c,d)] := [(ac+bd, ad+bc)]
    friend IntegerPair operator*(const IntegerPair& p, const IntegerPair& q) {
        return IntegerPair(p.a_ * q.a_ + p.b_ * q.b_, p.a_ * q.b_ + p.b_ * q.a_);
    }
    friend bool operator==(const IntegerPair& p, const IntegerPair& q) {
        return p.a_ == q.a_ && p.b_ == q.b_;
    }
    friend std::strong_ordering operator<=>(const IntegerPair& p, const IntegerPair& q) {
        // (a,b) < (c,d) iff a+d < b+c
        const BigInt l = p.a_.value() + q.b_.value();
        const BigInt r = p.b_.value() + q.a_.value();
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Natural a_, b_;
};

}  // namespace reals
