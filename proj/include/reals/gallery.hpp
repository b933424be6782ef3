#pragma once

#include "reals/enclosure.hpp"
#include "reals/rational.hpp"
#include "reals/sup_engine.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace reals {

/// A named rational sequence with a deterministic, total term function up
/// to a stated horizon.
struct RationalSequence {
    std::string name;
    std::function<Rational(int)> term;
};

/// p_n / 10^n where p_n = max { a in N | a^2 < 2*10^(2n) }.
Rational sqrt2_seq(int n);

RationalSequence sqrt2_sequence();
RationalSequence harmonic_sequence();      // H_n = 1 + 1/2 + ... + 1/n, n >= 1
RationalSequence e_partial_sums();         // S_n = 1 + 1/1! + ... + 1/n!
RationalSequence constant_sequence(const Rational& r);

/// Finite Cauchy audit: searches for N with 2N <= horizon such that all
/// pairs i,j in [N, horizon] satisfy |t_i - t_j| < eps. Requiring
/// 2N <= horizon keeps the doubling pair (N, 2N) inside the audited range;
/// otherwise N = horizon would pass vacuously for every sequence.
struct CauchyVerdict {
    bool cauchy_up_to_horizon = false;
    int n = 0;                      // valid N when cauchy, else first audited N
    std::optional<std::pair<int, int>> violating_pair;
    Rational violating_gap;
    std::string to_text() const;
};
CauchyVerdict cauchy_check(const RationalSequence& s, const Rational& eps, int horizon);

/// H_2n - H_n, exact; always >= 1/2.
Rational harmonic_gap(int n);

/// Finds the minimal n0 such that |t_{n+1} - t_n| < eps for all n in
/// [n0, horizon); a finite audit, not a proof.
struct GapVerdict {
    bool found = false;
    int n0 = 0;
    std::string to_text() const;
};
GapVerdict consecutive_gap_check(const RationalSequence& s, const Rational& eps, int horizon);

/// [S_n, S_n + 1/(n*n!)]; the tail 1/(n+1)! + 1/(n+2)! + ... is below
/// (1/(n+1)!) * (1/(1 - 1/(n+2))) <= 1/(n*n!) by geometric comparison.
Interval e_enclosure(int n);

/// Lazy enclosure of e, refining e_enclosure(n) until the width contract
/// is met.
Enclosure e_real();

/// [H_n - ln(n+1), H_n - ln n] with ln as a rational interval from the
/// telescoped atanh series ln k = sum_{j=2..k} 2*atanh(1/(2j-1)).
Interval gamma_enclosure(int n);

struct MonotoneLimitReport {
    bool monotone_ok = false;
    bool bounded_ok = false;
    std::string sup_digits;
    /// for each m <= neighborhood_depth, some term exceeds truncation(m)
    bool neighborhood_audit_ok = false;
    std::string to_text() const;
};

/// Audits monotonicity and the bound on [1, horizon], feeds the sequence
/// range to the supremum engine, and checks the sequence enters every
/// 10^-m neighborhood of the computed sup for m <= depth.
MonotoneLimitReport monotone_bounded_limit(const RationalSequence& s, const Rational& bound,
                                           int horizon, int digits, int depth = 10);

/// Floating-point partial sum of sum_{n=1..N} (-1)^(n+1) sin(n x)/n.
/// The only non-exact computation in the library; demo quality, labeled
/// as such in its report.
double abel_partial_sum(double x, long n_terms);

/// 30-digit decimal literal of pi (OEIS A000796); feeds only the Abel demo.
extern const char* const kPiLiteral;

/// Named, reproducible demo reports for the CLI.
std::vector<std::string> gallery_names();
std::string run_gallery_demo(const std::string& name, int n);

}  // namespace reals
