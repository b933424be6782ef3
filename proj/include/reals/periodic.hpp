#pragma once

#include "reals/natural.hpp"
#include "reals/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace reals {

struct NinesTail : std::invalid_argument {
    explicit NinesTail(const std::string& hint)
        : std::invalid_argument("nines tail is not a canonical expansion; normalize to " + hint) {}
};

/// A periodic decimal expansion: sign, integer part, preperiod digits and
/// period digits (empty period = terminating decimal). Canonical forms never
/// carry a nines tail and round-trip exactly with Rational.
struct PeriodicDecimal {
    bool negative = false;
    Natural integer_part;
    std::vector<int> preperiod;
    std::vector<int> period;

    bool has_nines_tail() const {
        if (period.empty()) return false;
        for (int d : period)
            if (d != 9) return false;
        return true;
    }

    std::string to_string() const;

    /// Accepts "[-]i", "[-]i.d...", "[-]i.d...(d...)".
    static PeriodicDecimal parse(const std::string& text);
};

/// Long division with remainder-cycle detection; the first repeated
/// remainder closes the cycle, so the period is minimal.
PeriodicDecimal rat_to_periodic(const Rational& r);

/// Geometric-series evaluation; rejects nines tails with a normalization
/// hint (use normalize_nines first).
Rational periodic_to_rat(const PeriodicDecimal& d);

/// Identifies d with its finite form when the period is a nines tail
/// (e.g. 1.4(9) -> 1.5); otherwise returns d unchanged.
PeriodicDecimal normalize_nines(const PeriodicDecimal& d);

}  // namespace reals
