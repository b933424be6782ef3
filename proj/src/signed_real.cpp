#include "reals/signed_real.hpp"

#include <algorithm>

namespace reals {

namespace {

// Magnitude of the difference big - small (as reals: big >= small is not
// assumed; the result is an enclosure of |big - small|). The width of the
// abs interval never exceeds the width of the difference interval.
Enclosure abs_difference(const Enclosure& big, const Enclosure& small) {
    return Enclosure([big, small](int m) {
        const Interval bb = big.bounds(m + 1);
        const Interval bs = small.bounds(m + 1);
        const Rational lo = bb.lo - bs.hi;
        const Rational hi = bb.hi - bs.lo;
        if (!lo.is_negative()) return Interval{lo, hi};
        if (!(hi > Rational(0))) return Interval{-hi, -lo};
        // straddles zero; the folded width max(-lo, hi) <= hi - lo
        return Interval{Rational(0), std::max(-lo, hi)};
    });
}

}  // namespace

SignedReal signed_add(const SignedReal& x, const SignedReal& y, int cap) {
    if (x.starred() == y.starred())
        return SignedReal(interval_add(x.magnitude(), y.magnitude()), x.starred());

    // opposite signs: resolve |x| vs |y| at escalating precision
    int m = 0;
    while (true) {
        const Ordering ord = compare_at(x.magnitude(), y.magnitude(), m);
        if (ord == Ordering::Less)
            return SignedReal(abs_difference(y.magnitude(), x.magnitude()), y.starred());
        if (ord == Ordering::Greater)
            return SignedReal(abs_difference(x.magnitude(), y.magnitude()), x.starred());
        if (m >= cap) break;
        m = std::min(cap, m == 0 ? 1 : m * 2);
    }
    // magnitudes indistinguishable at the cap: zero within cap
    SignedReal r(abs_difference(x.magnitude(), y.magnitude()), false);
    r.zero_within_cap_ = true;
    return r;
}

SignedReal signed_mul(const SignedReal& x, const SignedReal& y) {
    return SignedReal(interval_mul(x.magnitude(), y.magnitude()),
                      x.starred() != y.starred());
}

}  // namespace reals
