#pragma once

#include "reals/expansion.hpp"
#include "reals/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace reals {

/// Decidable monotone predicate "q is an upper bound of the set":
/// q <= q' and is_upper_bound(q) imply is_upper_bound(q').
struct BoundOracle {
    std::string name;
    std::function<bool(const Rational&)> is_upper_bound;
};

/// Decidable monotone predicate "the object lies strictly below q units":
/// exceeds(q) means x < q*u.
struct CutOracle {
    std::string name;
    std::function<bool(const Rational&)> exceeds;
};

/// Non-monotone answers were observed on queried points.
struct OracleInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No upper bound found below the search ceiling; the set is presumably
/// unbounded (or the oracle broken).
struct UnboundedSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The decimal expansion produced by the constructive supremum recursion:
/// the n-th digit is the greatest digit whose truncation is still not an
/// upper bound. Every truncation is not an upper bound and
/// truncation + 10^-m is one.
class SupremumResult {
public:
    const DecimalExpansion& expansion() const { return expansion_; }

    Rational truncation(std::int64_t m) const { return expansion_.truncate(m); }

    /// The nondecreasing truncation sequence a_(0), a_(1), ..., a_(upto).
    std::vector<Rational> approach_sequence(std::int64_t upto) const;

    /// True when digits [from, from+len) are all 9, the observable shadow
    /// of an attained bound sitting on a decimal grid point.
    bool nines_streak(std::int64_t from, std::int64_t len) const;

    std::string digits(std::int64_t n) const { return expansion_.digit_string(n); }

private:
    friend SupremumResult supremum(const BoundOracle&);
    explicit SupremumResult(DecimalExpansion e) : expansion_(std::move(e)) {}
    DecimalExpansion expansion_;
};

/// Computes the supremum digit by digit: a0 is the greatest natural that is
/// not an upper bound (doubling search for an upper bound, then binary
/// search down), and each following digit is the greatest in {0..9} whose
/// truncation is not an upper bound. Digits are produced lazily.
SupremumResult supremum(const BoundOracle& o);

/// The measurement map: digit n is the greatest digit d with
/// not(x < truncation*u). Agrees with supremum on the induced bound oracle
/// is_upper_bound(q) := exceeds(q).
SupremumResult measure(const CutOracle& o);

/// is_upper_bound(q) iff q >= 0 and q^k >= r; its supremum is r^(1/k).
BoundOracle nth_root_oracle(const Rational& r, unsigned k);

/// Built-in oracles addressable from the CLI:
///   sqrt:<r>, root:<k>:<r>, set:x^2<2, below:<q>, singleton:<q>, e
BoundOracle named_oracle(const std::string& spec);
CutOracle named_cut_oracle(const std::string& spec);

struct UnknownOracle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace reals
