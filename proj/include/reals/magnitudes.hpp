#pragma once

#include "reals/natural.hpp"
#include "reals/rational.hpp"

#include <any>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace reals {

/// A finite sample of an extensive comparative system: objects compared
/// by decidable relations ~ (equiv) and < (precedes) and combined by a
/// composition law. The nine axioms are checked on the sample; reports
/// say "no counterexample found", never "proved". Neutral elements are
/// excluded from carriers (the axioms are incompatible with them).
struct ComparativeSystem {
    using Obj = std::any;

    std::string name;
    std::vector<Obj> carrier;
    std::function<bool(const Obj&, const Obj&)> equiv;
    std::function<bool(const Obj&, const Obj&)> precedes;
    std::function<Obj(const Obj&, const Obj&)> compose;
    /// structural identity, used for the "x != y" premise of axiom 8
    std::function<bool(const Obj&, const Obj&)> equal;
    std::function<std::string(const Obj&)> describe;
};

/// mu: carrier -> number, expected to satisfy
///   (1) x ~ y  <=>  mu(x) = mu(y)
///   (2) x < y  <=>  mu(x) < mu(y)
///   (3) mu(x o y) = mu(x) + mu(y)
struct MeasureMap {
    std::string name;
    std::function<Rational(const ComparativeSystem::Obj&)> mu;
};

struct CheckLine {
    std::string label;
    bool pass = false;
    bool harness_error = false;  // a relation failed to decide
    std::string witness;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    /// largest n used to witness the Archimedean axiom, when checked
    std::optional<std::int64_t> max_archimedean_witness;

    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    /// Line-oriented "AXIOM <k>: PASS | FAIL <witness>" text.
    std::string to_text() const;
};

CheckReport check_axioms(const ComparativeSystem& s, std::int64_t archimedean_cap = 100000);
CheckReport check_measure_map(const ComparativeSystem& s, const MeasureMap& m);

struct NonArchimedean : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimal n with x < n*y, by iterated composition; throws NonArchimedean
/// past the iteration cap.
Natural archimedean_witness_obj(const ComparativeSystem& s,
                                const ComparativeSystem::Obj& x,
                                const ComparativeSystem::Obj& y,
                                std::int64_t cap = 100000);

/// Finite token sets; ~ is direct pairing (a bijection exists), o is
/// disjoint union. Carrier: `size` random non-empty sets.
ComparativeSystem make_cardinality_system(int size, std::uint64_t seed);
MeasureMap cardinality_measure();

/// Formal segments of exact positive rational length; o is concatenation.
ComparativeSystem make_length_system(int size, std::uint64_t seed);
MeasureMap length_measure();

/// Length instance with precedes := <= ; axiom 3 fails with witness x = y.
ComparativeSystem make_broken_system(int size, std::uint64_t seed);

/// Finite refutation of a rational measure for the diagonal of the unit
/// square: no p/q with q <= max_den satisfies p^2 = 2 q^2, so no
/// RationalPair-valued mu can satisfy (1)-(3) on {unit, diagonal}.
/// Returns a line-oriented report; `refuted` is true when no solution
/// exists at the searched scale.
struct IncommensurabilityReport {
    bool refuted = false;
    std::string text;
};
IncommensurabilityReport diagonal_incommensurability(unsigned max_den);

}  // namespace reals
