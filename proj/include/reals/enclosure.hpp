#pragma once

#include "reals/expansion.hpp"
#include "reals/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace reals {

struct Interval {
    Rational lo, hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool intersects(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
};

/// A computed real presented as a precision-indexed nested rational
/// interval query: bounds(m) has width <= 10^-m and bounds(m+1) is
/// contained in bounds(m). Nesting is enforced by intersecting each level
/// with the previous one (all levels contain the same real, so the
/// intersection is never empty).
class Enclosure {
public:
    /// raw(m) must return an interval containing the represented real
    /// with width <= 10^-m.
    explicit Enclosure(std::function<Interval(int)> raw);

    Interval bounds(int m) const;

    /// Degenerate-width interval around r, widened to the grid contract.
    static Enclosure from_rational(const Rational& r);

    /// [truncate(m), truncate(m) + 10^-m].
    static Enclosure from_expansion(const DecimalExpansion& a);

private:
    struct State {
        std::function<Interval(int)> raw;
        mutable std::map<int, Interval> memo;
        mutable std::mutex mu;
    };
    std::shared_ptr<State> st_;
};

enum class Ordering { Less, Greater, Indistinguishable };

/// Less if hi_x(m) < lo_y(m), Greater symmetrically; otherwise the two
/// reals are within 2*10^-m of each other and the verdict is
/// Indistinguishable (a value, not an error).
Ordering compare_at(const Enclosure& x, const Enclosure& y, int m);

const char* to_string(Ordering o);

struct DigitResult {
    /// "a0.d1...dn" when every digit is certified; digits up to the
    /// undecided position otherwise.
    std::string digits;
    /// Position k (1-based decimal place; 0 = integer part) at which the
    /// enclosure still straddles a grid point at precision cap.
    std::optional<std::int64_t> indeterminate_at;
    int precision_used = 0;
};

/// Emits n decimal digits that are provably correct for every real in the
/// enclosure, probing at escalating precision up to cap. Requires a
/// non-negative enclosure (signed values are handled by SignedReal).
DigitResult digits_from_enclosure(const Enclosure& x, std::int64_t n, int cap);

}  // namespace reals
