#include "reals/gallery.hpp"

#include "reals/arithmetic.hpp"
#include "reals/magnitudes.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

namespace reals {

Rational sqrt2_seq(int n) {
    if (n < 0) throw std::out_of_range("sqrt2_seq: n must be >= 0");
    const BigInt target = 2 * pow10_int(2 * static_cast<unsigned>(n));
    BigInt p = isqrt(target);
    if (p * p == target) --p;  // strict inequality a^2 < 2*10^(2n)
    return Rational(p, pow10_int(static_cast<unsigned>(n)));
}

RationalSequence sqrt2_sequence() {
    return RationalSequence{"sqrt2-truncations", [](int n) { return sqrt2_seq(n); }};
}

namespace {

// memoized partial sums shared by all copies of the sequence
struct PartialSums {
    std::vector<Rational> sums{Rational(0)};
    std::mutex mu;
};

}  // namespace

RationalSequence harmonic_sequence() {
    auto st = std::make_shared<PartialSums>();
    return RationalSequence{"harmonic partial sums", [st](int n) {
        if (n < 0) throw std::out_of_range("harmonic term index");
        std::lock_guard<std::mutex> lock(st->mu);
        while (static_cast<int>(st->sums.size()) <= n) {
            const long long k = static_cast<long long>(st->sums.size());
            st->sums.push_back(st->sums.back() + Rational(1, k));
        }
        return st->sums[static_cast<std::size_t>(n)];
    }};
}

RationalSequence e_partial_sums() {
    auto st = std::make_shared<PartialSums>();
    st->sums[0] = Rational(1);  // S_0 = 1
    auto fact = std::make_shared<BigInt>(1);
    return RationalSequence{"e partial sums", [st, fact](int n) {
        if (n < 0) throw std::out_of_range("e partial sum index");
        std::lock_guard<std::mutex> lock(st->mu);
        while (static_cast<int>(st->sums.size()) <= n) {
            const long long k = static_cast<long long>(st->sums.size());
            *fact *= k;
            st->sums.push_back(st->sums.back() + Rational(BigInt(1), *fact));
        }
        return st->sums[static_cast<std::size_t>(n)];
    }};
}

RationalSequence constant_sequence(const Rational& r) {
    return RationalSequence{"constant " + r.to_string(), [r](int) { return r; }};
}

std::string CauchyVerdict::to_text() const {
    std::ostringstream out;
    if (cauchy_up_to_horizon) {
        out << "N = " << n << " works: all pairs beyond N agree within eps (finite audit, not a proof)";
    } else {
        out << "violation: |t(" << violating_pair->first << ") - t(" << violating_pair->second
            << ")| = " << violating_gap.to_string() << " >= eps";
    }
    return out.str();
}

CauchyVerdict cauchy_check(const RationalSequence& s, const Rational& eps, int horizon) {
    if (!(eps > Rational(0))) throw std::domain_error("cauchy_check: eps must be positive");
    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int i = 0; i <= horizon; ++i) t.push_back(s.term(i));

    // suffix extrema with positions
    std::vector<int> argmax(t.size()), argmin(t.size());
    argmax[t.size() - 1] = argmin[t.size() - 1] = horizon;
    for (int i = horizon - 1; i >= 0; --i) {
        argmax[i] = t[i] > t[argmax[i + 1]] ? i : argmax[i + 1];
        argmin[i] = t[i] < t[argmin[i + 1]] ? i : argmin[i + 1];
    }

    // only N with 2N <= horizon qualify: that keeps the doubling pair
    // (N, 2N) inside the audited range, so N = horizon cannot pass vacuously
    CauchyVerdict v;
    for (int N = 0; 2 * N <= horizon; ++N) {
        if (t[argmax[N]] - t[argmin[N]] < eps) {
            v.cauchy_up_to_horizon = true;
            v.n = N;
            return v;
        }
    }
    const int N = horizon / 2;
    v.cauchy_up_to_horizon = false;
    v.n = N;
    v.violating_pair = {argmin[N], argmax[N]};
    v.violating_gap = t[argmax[N]] - t[argmin[N]];
    return v;
}

Rational harmonic_gap(int n) {
    if (n < 1) throw std::out_of_range("harmonic_gap: n must be >= 1");
    Rational sum(0);
    for (long long k = n + 1; k <= 2LL * n; ++k) sum = sum + Rational(1, k);
    return sum;
}

std::string GapVerdict::to_text() const {
    std::ostringstream out;
    if (found)
        out << "n0 = " << n0 << ": consecutive gaps stay below eps up to the horizon (finite audit)";
    else
        out << "no n0 below the horizon keeps consecutive gaps under eps";
    return out.str();
}

GapVerdict consecutive_gap_check(const RationalSequence& s, const Rational& eps, int horizon) {
    if (!(eps > Rational(0))) throw std::domain_error("consecutive_gap_check: eps must be positive");
    int last_violation = -1;
    Rational prev = s.term(0);
    for (int n = 0; n < horizon; ++n) {
        const Rational next = s.term(n + 1);
        if (!((next - prev).abs() < eps)) last_violation = n;
        prev = next;
    }
    GapVerdict v;
    v.found = last_violation < horizon - 1;
    v.n0 = last_violation + 1;
    return v;
}

Interval e_enclosure(int n) {
    if (n < 1) throw std::out_of_range("e_enclosure: n must be >= 1");
    Rational sum(1);
    BigInt fact = 1;
    for (int k = 1; k <= n; ++k) {
        fact *= k;
        sum = sum + Rational(BigInt(1), fact);
    }
    return Interval{sum, sum + Rational(BigInt(1), fact * n)};
}

Enclosure e_real() {
    return Enclosure([](int m) {
        const Rational target = Rational::pow10(-m);
        Rational sum(1);
        BigInt fact = 1;
        for (int k = 1;; ++k) {
            fact *= k;
            sum = sum + Rational(BigInt(1), fact);
            const Rational tail(BigInt(1), fact * k);
            if (tail <= target) return Interval{sum, sum + tail};
        }
    });
}

namespace {

// 2*atanh(1/t) as a rational interval: sum of x^(2j+1)/(2j+1) with the
// geometric tail bound x^(2J+1)/((2J+1)(1-x^2)).
Interval atanh2_interval(long long t, const Rational& term_eps) {
    const Rational x(1, t);
    const Rational x2 = x * x;
    Rational sum(0);
    Rational power = x;
    for (long long j = 1;; j += 2) {
        sum = sum + power / Rational(j);
        power = power * x2;
        const Rational tail = power / (Rational(j + 2) * (Rational(1) - x2));
        if (tail <= term_eps) {
            const Rational two(2);
            return Interval{two * sum, two * (sum + tail)};
        }
    }
}

// ln(k) = sum_{j=2..k} 2*atanh(1/(2j-1)); cumulative cache.
Interval ln_interval(int k) {
    static std::vector<Interval> cache{Interval{Rational(0), Rational(0)},
                                       Interval{Rational(0), Rational(0)}};  // ln 0 unused, ln 1 = 0
    static std::mutex mu;
    if (k < 1) throw std::out_of_range("ln_interval: k must be >= 1");
    std::lock_guard<std::mutex> lock(mu);
    const Rational term_eps(BigInt(1), pow10_int(14));
    while (static_cast<int>(cache.size()) <= k) {
        const long long j = static_cast<long long>(cache.size());
        const Interval step = atanh2_interval(2 * j - 1, term_eps);
        cache.push_back(Interval{cache.back().lo + step.lo, cache.back().hi + step.hi});
    }
    return cache[static_cast<std::size_t>(k)];
}

}  // namespace

Interval gamma_enclosure(int n) {
    if (n < 2) throw std::out_of_range("gamma_enclosure: n must be >= 2");
    static RationalSequence harmonic = harmonic_sequence();
    const Rational h = harmonic.term(n);
    const Interval ln_hi = ln_interval(n + 1);
    const Interval ln_lo = ln_interval(n);
    // H_n - ln(n+1) < gamma < H_n - ln(n); outward-round with the ln widths
    return Interval{h - ln_hi.hi, h - ln_lo.lo};
}

std::string MonotoneLimitReport::to_text() const {
    std::ostringstream out;
    out << "monotone audit: " << (monotone_ok ? "PASS" : "FAIL") << "\n";
    out << "bound audit: " << (bounded_ok ? "PASS" : "FAIL") << "\n";
    out << "sup = " << sup_digits << "\n";
    out << "neighborhood audit: " << (neighborhood_audit_ok ? "PASS" : "FAIL") << "\n";
    return out.str();
}

MonotoneLimitReport monotone_bounded_limit(const RationalSequence& s, const Rational& bound,
                                           int horizon, int digits, int depth) {
    MonotoneLimitReport rep;
    rep.monotone_ok = true;
    rep.bounded_ok = true;
    Rational prev = s.term(0);
    for (int n = 1; n <= horizon; ++n) {
        const Rational cur = s.term(n);
        if (cur < prev) rep.monotone_ok = false;
        prev = cur;
    }
    if (!(prev <= bound)) rep.bounded_ok = false;
    if (!rep.monotone_ok || !rep.bounded_ok) return rep;

    BoundOracle o{
        s.name + " range",
        [s, bound, horizon](const Rational& q) {
            if (q >= bound) return true;
            for (int n = 0; n <= horizon; ++n)
                if (s.term(n) > q) return false;
            return true;
        }};
    const SupremumResult sup = supremum(o);
    rep.sup_digits = sup.digits(digits);

    rep.neighborhood_audit_ok = true;
    for (int m = 1; m <= depth; ++m) {
        const Rational t = sup.truncation(m);
        bool entered = false;
        for (int n = 0; n <= horizon && !entered; ++n)
            if (s.term(n) > t) entered = true;  // within 10^-m of the sup
        if (!entered) rep.neighborhood_audit_ok = false;
    }
    return rep;
}

const char* const kPiLiteral = "3.141592653589793238462643383279";  // 30 digits, OEIS A000796

double abel_partial_sum(double x, long n_terms) {
    double sum = 0.0;
    for (long n = 1; n <= n_terms; ++n) {
        const double term = std::sin(n * x) / static_cast<double>(n);
        sum += (n % 2 == 1) ? term : -term;
    }
    return sum;
}

std::vector<std::string> gallery_names() {
    return {"sqrt2-seq",    "cauchy-sqrt2", "harmonic-gap", "harmonic-contrast",
            "e-enclosure",  "gamma-enclosure", "monotone-limit", "abel-jump",
            "incommensurability"};
}

std::string run_gallery_demo(const std::string& name, int n) {
    std::ostringstream out;
    if (name == "sqrt2-seq") {
        const int count = n > 0 ? n : 8;
        for (int k = 0; k <= count; ++k)
            out << "p_" << k << "/10^" << k << " = " << sqrt2_seq(k).to_string() << "\n";
        return out.str();
    }
    if (name == "cauchy-sqrt2") {
        const int horizon = n > 0 ? n : 50;
        const auto v = cauchy_check(sqrt2_sequence(), Rational(BigInt(1), pow10_int(6)), horizon);
        out << "eps = 10^-6, horizon = " << horizon << "\n" << v.to_text() << "\n";
        return out.str();
    }
    if (name == "harmonic-gap") {
        const int k = n > 0 ? n : 1;
        out << harmonic_gap(k).to_string() << "\n";
        return out.str();
    }
    if (name == "harmonic-contrast") {
        const int horizon = n > 0 ? n : 256;
        const auto gaps = consecutive_gap_check(harmonic_sequence(), Rational(1, 100), horizon);
        out << "consecutive gaps (eps = 1/100, horizon = " << horizon << "): " << gaps.to_text()
            << "\n";
        out << "yet H_2n - H_n stays >= 1/2:\n";
        for (int k = 1; k <= 8; ++k)
            out << "  n = " << k << ": " << harmonic_gap(k).to_string() << "\n";
        return out.str();
    }
    if (name == "e-enclosure") {
        const int k = n > 0 ? n : 10;
        const Interval iv = e_enclosure(k);
        out << "[" << iv.lo.to_string() << ", " << iv.hi.to_string() << "]\n";
        out << "decimal: [" << iv.lo.to_decimal_string(20) << ", " << iv.hi.to_decimal_string(20)
            << "]\n";
        return out.str();
    }
    if (name == "gamma-enclosure") {
        const int k = n > 1 ? n : 50;
        const Interval iv = gamma_enclosure(k);
        out << "n = " << k << ": gamma in [" << iv.lo.to_decimal_string(10) << ", "
            << iv.hi.to_decimal_string(10) << "], width " << iv.width().to_decimal_string(10)
            << " (enclosure certified by the monotone bracket H_n - ln(n+1) < gamma < H_n - ln n)\n";
        return out.str();
    }
    if (name == "monotone-limit") {
        const int digits = n > 0 ? n : 10;
        const auto rep = monotone_bounded_limit(sqrt2_sequence(), Rational(2), 40, digits);
        return rep.to_text();
    }
    if (name == "abel-jump") {
        const long terms = n > 0 ? n : 100000;
        const double pi = std::strtod(kPiLiteral, nullptr);
        const double left = abel_partial_sum(pi - 0.01, terms);
        const double right = abel_partial_sum(pi + 0.01, terms);
        out << "demo, not exact (floating point)\n";
        out << "sum at pi - 0.01 with N = " << terms << ": " << left << " (expect ~ +"
            << (pi - 0.01) / 2 << ")\n";
        out << "sum at pi + 0.01 with N = " << terms << ": " << right << " (expect ~ -"
            << (pi - 0.01) / 2 << ")\n";
        return out.str();
    }
    if (name == "incommensurability") {
        const unsigned max_den = n > 0 ? static_cast<unsigned>(n) : 100;
        return diagonal_incommensurability(max_den).text;
    }
    throw std::invalid_argument("unknown gallery demo: " + name);
}

}  // namespace reals
