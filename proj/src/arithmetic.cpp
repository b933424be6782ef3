#include "reals/arithmetic.hpp"

#include <algorithm>

namespace reals {

namespace {

// Bracket decision for "q is an upper bound of { f(a_(m), b_(m)) : m }"
// where lo_fn(m) <= sup <= hi_fn(m) and the bracket shrinks with m.
// Undecided at cap answers "upper bound": the supremum recursion then
// under-shoots by one digit and continues with nines, which is exactly
// the grid-boundary behavior the engine reports.
bool bracket_upper_bound(const Rational& q, int cap,
                         const std::function<Rational(int)>& lo_fn,
                         const std::function<Rational(int)>& hi_fn) {
    int m = 1;
    while (true) {
        if (q < lo_fn(m)) return false;
        if (q >= hi_fn(m)) return true;
        if (m >= cap) return true;  // undecided at cap
        m = std::min(cap, m < 16 ? m * 2 : m + 16);
    }
}

}  // namespace

SupremumResult add_sup(const DecimalExpansion& a, const DecimalExpansion& b, int cap) {
    BoundOracle o{
        "sum of truncations",
        [a, b, cap](const Rational& q) {
            return bracket_upper_bound(
                q, cap, [&](int m) { return a.truncate(m) + b.truncate(m); },
                [&](int m) {
                    return a.truncate(m) + b.truncate(m) + Rational(2) * Rational::pow10(-m);
                });
        }};
    return supremum(o);
}

SupremumResult mul_sup(const DecimalExpansion& a, const DecimalExpansion& b, int cap) {
    BoundOracle o{
        "product of truncations",
        [a, b, cap](const Rational& q) {
            return bracket_upper_bound(
                q, cap, [&](int m) { return a.truncate(m) * b.truncate(m); },
                [&](int m) {
                    const Rational ulp = Rational::pow10(-m);
                    return (a.truncate(m) + ulp) * (b.truncate(m) + ulp);
                });
        }};
    return supremum(o);
}

Enclosure interval_add(const Enclosure& x, const Enclosure& y) {
    return Enclosure([x, y](int m) {
        const Interval bx = x.bounds(m + 1);
        const Interval by = y.bounds(m + 1);
        return Interval{bx.lo + by.lo, bx.hi + by.hi};
    });
}

Enclosure interval_mul(const Enclosure& x, const Enclosure& y) {
    return Enclosure([x, y](int m) {
        const Rational target = Rational::pow10(-m);
        for (int w = m + 1;; w += 8) {
            const Interval bx = x.bounds(w);
            const Interval by = y.bounds(w);
            const Rational p1 = bx.lo * by.lo, p2 = bx.lo * by.hi;
            const Rational p3 = bx.hi * by.lo, p4 = bx.hi * by.hi;
            Interval r{std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4))};
            if (r.width() <= target) return r;
        }
    });
}

Enclosure interval_inv(const Enclosure& x, int cap) {
    // locate a precision at which the enclosure excludes 0
    int sep = -1;
    int probe = 0;
    while (true) {
        const Interval b = x.bounds(probe);
        if (b.lo > Rational(0) || b.hi < Rational(0)) {
            sep = probe;
            break;
        }
        if (probe >= cap) break;
        probe = std::min(cap, probe == 0 ? 1 : probe * 2);
    }
    if (sep < 0)
        throw SignUnknown("interval_inv: enclosure contains 0 at precision cap " +
                          std::to_string(cap));
    const int sep_level = sep;
    return Enclosure([x, sep_level](int m) {
        const Rational target = Rational::pow10(-m);
        for (int w = std::max(m, sep_level);; w += 8) {
            const Interval b = x.bounds(w);
            // endpoints share a sign once w >= sep_level
            Interval r{Rational(1) / b.hi, Rational(1) / b.lo};
            if (r.width() <= target) return r;
        }
    });
}

namespace {

// floor(r^(1/k) * 10^m) for r >= 0: the greatest s with s^k <= r * 10^(km).
BigInt root_floor_scaled(const Rational& r, unsigned k, unsigned m) {
    // s^k * den <= num * 10^(km)  <=>  s <= floor((num * 10^(km) / den)^(1/k))
    const BigInt scaled = r.num() * pow10_int(k * m) / r.den();
    BigInt s = iroot(scaled, k);
    // division truncation can overshoot by one; verify against the exact inequality
    while (true) {
        BigInt p = 1;
        for (unsigned i = 0; i < k; ++i) p *= s;
        if (p * r.den() <= r.num() * pow10_int(k * m)) break;
        --s;
    }
    return s;
}

}  // namespace

Enclosure root_of_rational(const Rational& r, unsigned k) {
    if (r.is_negative()) throw std::domain_error("root_of_rational: negative radicand");
    if (k == 0) throw std::domain_error("root_of_rational: zero degree");
    return Enclosure([r, k](int m) {
        const unsigned um = static_cast<unsigned>(m);
        const BigInt s = root_floor_scaled(r, k, um);
        const BigInt scale = pow10_int(um);
        return Interval{Rational(s, scale), Rational(s + 1, scale)};
    });
}

Enclosure interval_root(const Enclosure& x, unsigned k) {
    if (k == 0) throw std::domain_error("interval_root: zero degree");
    return Enclosure([x, k](int m) {
        const Rational target = Rational::pow10(-m);
        for (int w = m;; w += 8) {
            const Interval b = x.bounds(w);
            if (b.hi.is_negative())
                throw std::domain_error("interval_root: negative operand");
            const Rational lo = b.lo.is_negative() ? Rational(0) : b.lo;
            const unsigned um = static_cast<unsigned>(w);
            const BigInt scale = pow10_int(um);
            Interval r{Rational(root_floor_scaled(lo, k, um), scale),
                       Rational(root_floor_scaled(b.hi, k, um) + 1, scale)};
            if (r.width() <= target) return r;
        }
    });
}

}  // namespace reals
