#pragma once

#include "reals/arithmetic.hpp"
#include "reals/enclosure.hpp"

namespace reals {

/// A real with the star extension: a non-negative magnitude plus a flag
/// marking the formal additive inverse x*. When an addition of opposite
/// signs cannot be resolved at the precision cap, the result is flagged
/// zero_within_cap and its magnitude encloses 0 at every precision.
class SignedReal {
public:
    SignedReal(Enclosure magnitude, bool starred)
        : mag_(std::move(magnitude)), starred_(starred) {}

    const Enclosure& magnitude() const { return mag_; }
    bool starred() const { return starred_; }
    bool zero_within_cap() const { return zero_within_cap_; }

    SignedReal star() const {
        SignedReal r(mag_, !starred_);
        r.zero_within_cap_ = zero_within_cap_;
        return r;
    }

    static SignedReal from_rational(const Rational& r) {
        return SignedReal(Enclosure::from_rational(r.abs()), r.is_negative());
    }

private:
    friend SignedReal signed_add(const SignedReal&, const SignedReal&, int);
    Enclosure mag_;
    bool starred_;
    bool zero_within_cap_ = false;
};

/// The three-case formula: x + y* is x - y if y < x, 0 if y = x, and
/// (y - x)* if y > x; magnitude comparison is resolved by escalating
/// precision up to cap.
SignedReal signed_add(const SignedReal& x, const SignedReal& y,
                      int cap = kDefaultPrecisionCap);

/// Rule of signs: x*y* := x*y and x*(y*) := (x*y)*.
SignedReal signed_mul(const SignedReal& x, const SignedReal& y);

}  // namespace reals
