#pragma once

#include "reals/enclosure.hpp"
#include "reals/expansion.hpp"
#include "reals/sup_engine.hpp"

#include <stdexcept>

namespace reals {

inline constexpr int kDefaultPrecisionCap = 120;

/// a+b := sup over m of { a_(m) + b_(m) }, run through the supremum engine.
/// The bound oracle decides by bracketing: a_(m)+b_(m) <= a+b <=
/// a_(m)+b_(m)+2*10^-m; queries still undecided at the cap are answered
/// "upper bound", so grid boundaries surface as nines streaks.
SupremumResult add_sup(const DecimalExpansion& a, const DecimalExpansion& b,
                       int cap = kDefaultPrecisionCap);

/// a*b := sup over m of { a_(m) * b_(m) }, bracketed by
/// a_(m)b_(m) <= ab <= (a_(m)+10^-m)(b_(m)+10^-m).
SupremumResult mul_sup(const DecimalExpansion& a, const DecimalExpansion& b,
                       int cap = kDefaultPrecisionCap);

/// Outward-rounded exact rational interval operations, computed at a
/// higher working precision and renormalized to the 10^-m width contract.
Enclosure interval_add(const Enclosure& x, const Enclosure& y);
Enclosure interval_mul(const Enclosure& x, const Enclosure& y);

/// The enclosure still contains 0 at the precision cap; its sign (and so
/// its inverse) cannot be determined.
struct SignUnknown : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Enclosure interval_inv(const Enclosure& x, int cap = kDefaultPrecisionCap);

/// Enclosure of the k-th root of a non-negative enclosure, via integer
/// k-th roots of scaled endpoint bounds.
Enclosure interval_root(const Enclosure& x, unsigned k);
Enclosure root_of_rational(const Rational& r, unsigned k);

}  // namespace reals
