#pragma once

#include "reals/natural.hpp"
#include "reals/periodic.hpp"
#include "reals/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace reals {

/// A non-negative decimal expansion (a0, (an)n>=1): integer part plus a
/// digit function producing digits in {0..9}. Digits are memoized; the
/// memo is idempotent, so concurrent queries are safe and agree.
class DecimalExpansion {
public:
    DecimalExpansion(Natural a0, std::function<int(std::int64_t)> digit_fn);

    const Natural& integer_part() const { return st_->a0; }

    /// n-th decimal digit, n >= 1.
    int digit(std::int64_t n) const;

    /// The truncation a_(m) = sum_{k=0..m} a_k / 10^k, exact.
    Rational truncate(std::int64_t m) const;

    /// "a0.d1d2...dn"
    std::string digit_string(std::int64_t n) const;

    /// Replays the preperiod then cycles; d must be normalized and non-negative.
    static DecimalExpansion from_periodic(const PeriodicDecimal& d);

    /// Expansion of a non-negative rational (via its periodic form).
    static DecimalExpansion from_rational(const Rational& r);

private:
    struct State {
        Natural a0;
        std::function<int(std::int64_t)> fn;
        mutable std::vector<int> memo;
        mutable std::mutex mu;
    };
    std::shared_ptr<State> st_;
};

}  // namespace reals
