// Acceptance suite: one line per criterion, "CRITERION <k>: PASS|FAIL".
// Exits nonzero when any criterion fails.

#include "reals/arithmetic.hpp"
#include "reals/expr.hpp"
#include "reals/gallery.hpp"
#include "reals/magnitudes.hpp"
#include "reals/signed_real.hpp"
#include "reals/sup_engine.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace reals;

namespace {

int failures = 0;

void report(int k, bool pass, const std::string& detail = "") {
    std::cout << "CRITERION " << k << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational random_positive(std::mt19937_64& rng, long long bound) {
    std::uniform_int_distribution<long long> num(1, bound);
    std::uniform_int_distribution<long long> den(1, bound);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

std::string eval_digits(const std::string& text, int n) {
    const EvalConfig cfg;
    return render_digits(evaluate(parse_expression(text), cfg), n, cfg).text;
}

// 1. measurement anchor: sqrt:2 measured to 4 digits is exactly 1.4142, < 1 s
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string got = measure(named_cut_oracle("sqrt:2")).digits(4);
    const double dt = seconds_since(t0);
    report(1, got == "1.4142" && dt < 1.0, got + ", " + std::to_string(dt) + "s");
}

// 2. Dedekind identity: sqrt(2)*sqrt(3) and root(2,6) share 30 digits, < 5 s
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string lhs = eval_digits("sqrt(2)*sqrt(3)", 30);
    const std::string rhs = eval_digits("root(2,6)", 30);
    const double dt = seconds_since(t0);
    report(2, lhs == rhs && lhs.size() > 30 && dt < 5.0, lhs + " vs " + rhs);
}

// 3. Theorem 1 bracketing on the oracle fixture set, m <= 30
void criterion_3() {
    int bad = 0;
    for (const std::string& spec :
         {"sqrt:2", "sqrt:3", "root:3:5", "below:7/8", "singleton:1/2"}) {
        const BoundOracle o = named_oracle(spec);
        const SupremumResult s = supremum(o);
        for (int m = 0; m <= 30; ++m) {
            if (o.is_upper_bound(s.truncation(m))) ++bad;
            if (!o.is_upper_bound(s.truncation(m) + Rational::pow10(-m))) ++bad;
        }
    }
    report(3, bad == 0, std::to_string(bad) + " bracket failures");
}

// 4. sup-of-truncations arithmetic vs interval arithmetic on 1000 seeded
// pairs at 20 digits; indeterminacy only at grid points, certified exactly
void criterion_4() {
    std::mt19937_64 rng(20240815);
    int bad = 0;
    const Rational ulp = Rational::pow10(-20);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = random_positive(rng, 500);
        const Rational b = random_positive(rng, 500);
        const bool mul = i % 2 == 1;
        const Rational exact = mul ? a * b : a + b;
        const DecimalExpansion ea = DecimalExpansion::from_rational(a);
        const DecimalExpansion eb = DecimalExpansion::from_rational(b);
        const SupremumResult s = mul ? mul_sup(ea, eb) : add_sup(ea, eb);
        const Enclosure enc = mul
            ? interval_mul(Enclosure::from_rational(a), Enclosure::from_rational(b))
            : interval_add(Enclosure::from_rational(a), Enclosure::from_rational(b));

        // sup truncation brackets the exact result
        const Rational t = s.truncation(20);
        if (!(t <= exact && exact <= t + ulp)) ++bad;
        // interval bounds contain it within the width contract
        if (!enc.bounds(20).contains(exact)) ++bad;

        // digit extraction: agreement, or an indeterminate flag exactly at
        // a grid boundary (exact * 10^k is an integer there)
        const DigitResult d = digits_from_enclosure(enc, 20, 120);
        if (d.indeterminate_at) {
            const Rational scaled = exact * Rational::pow10(
                static_cast<int>(*d.indeterminate_at));
            if (!scaled.is_integer()) ++bad;
        } else {
            const std::string true_digits =
                DecimalExpansion::from_rational(exact).digit_string(20);
            if (d.digits != true_digits) ++bad;
        }
    }
    report(4, bad == 0, std::to_string(bad) + " contradictions in 1000 pairs");
}

// 5. field and order laws at precision 30 on 500 seeded triples
void criterion_5() {
    std::mt19937_64 rng(117);
    int bad = 0;
    auto holds = [](const Enclosure& e, const Rational& witness) {
        return e.bounds(30).contains(witness);
    };
    for (int i = 0; i < 500; ++i) {
        const Rational qa = random_positive(rng, 300);
        const Rational qb = random_positive(rng, 300);
        const Rational qc = random_positive(rng, 300);
        const Enclosure a = Enclosure::from_rational(qa);
        const Enclosure b = Enclosure::from_rational(qb);
        const Enclosure c = Enclosure::from_rational(qc);
        if (!holds(interval_add(interval_add(a, b), c), qa + qb + qc)) ++bad;
        if (!holds(interval_add(a, interval_add(b, c)), qa + qb + qc)) ++bad;
        if (!holds(interval_add(b, a), qa + qb)) ++bad;
        if (!holds(interval_mul(interval_mul(a, b), c), qa * qb * qc)) ++bad;
        if (!holds(interval_mul(a, interval_mul(b, c)), qa * qb * qc)) ++bad;
        if (!holds(interval_mul(b, a), qa * qb)) ++bad;
        if (!holds(interval_mul(a, interval_add(b, c)), qa * (qb + qc))) ++bad;
        if (!holds(interval_add(a, Enclosure::from_rational(Rational(0))), qa)) ++bad;
        if (!holds(interval_mul(a, Enclosure::from_rational(Rational(1))), qa)) ++bad;
        if (!holds(interval_mul(a, interval_inv(a)), Rational(1))) ++bad;
        // order-translation compatibility through signed arithmetic
        if (qa != qb) {
            const SignedReal diff =
                signed_add(SignedReal::from_rational(qa + qc),
                           SignedReal::from_rational(qb + qc).star());
            if (diff.zero_within_cap() || diff.starred() != (qa < qb)) ++bad;
        }
    }
    report(5, bad == 0, std::to_string(bad) + " violations in 500 triples");
}

// 6. Q-incompleteness: the defining inequalities of p_n, no rational
// sqrt(2) with q <= 1000, and a Cauchy audit of the approximants
void criterion_6() {
    int bad = 0;
    for (int n = 0; n <= 40; ++n) {
        const Rational t = sqrt2_seq(n);
        const BigInt p = t.num() * (pow10_int(static_cast<unsigned>(n)) / t.den());
        const BigInt two_pow = 2 * pow10_int(static_cast<unsigned>(2 * n));
        if (!(p * p < two_pow && (p + 1) * (p + 1) >= two_pow)) ++bad;
    }
    for (BigInt q = 1; q <= 1000; ++q) {
        const BigInt p = isqrt(2 * q * q);
        if (p * p == 2 * q * q) ++bad;
    }
    const CauchyVerdict v = cauchy_check(sqrt2_sequence(), Rational::pow10(-6), 50);
    if (!v.cauchy_up_to_horizon || 2 * v.n > 50) ++bad;
    report(6, bad == 0, std::to_string(bad) + " failures");
}

// 7. harmonic contrast: vanishing consecutive gaps for eps down to 10^-4,
// while H_2n - H_n >= 1/2 exactly for n = 1..256
void criterion_7() {
    int bad = 0;
    const RationalSequence h = harmonic_sequence();
    const int horizons[] = {15, 105, 1005, 10002};
    for (int k = 1; k <= 4; ++k) {
        const GapVerdict v = consecutive_gap_check(h, Rational::pow10(-k), horizons[k - 1]);
        if (!v.found) ++bad;
    }
    for (int n = 1; n <= 256; ++n)
        if (!(harmonic_gap(n) >= Rational(1, 2))) ++bad;
    report(7, bad == 0, std::to_string(bad) + " failures");
}

// 8. enclosure width/nesting laws for every constructor; e_enclosure(30)
void criterion_8() {
    int bad = 0;
    std::vector<Enclosure> fixtures;
    fixtures.push_back(Enclosure::from_rational(Rational(1, 3)));
    fixtures.push_back(Enclosure::from_rational(Rational(355, 113)));
    fixtures.push_back(Enclosure::from_expansion(DecimalExpansion::from_rational(Rational(1, 7))));
    fixtures.push_back(root_of_rational(Rational(2), 2));
    fixtures.push_back(e_real());
    fixtures.push_back(interval_add(root_of_rational(Rational(2), 2),
                                    Enclosure::from_rational(Rational(1, 3))));
    fixtures.push_back(interval_mul(root_of_rational(Rational(2), 2),
                                    root_of_rational(Rational(3), 2)));
    fixtures.push_back(interval_inv(root_of_rational(Rational(2), 2)));
    for (const Enclosure& x : fixtures) {
        Interval prev = x.bounds(0);
        for (int m = 1; m <= 60; ++m) {
            const Interval cur = x.bounds(m);
            if (!(cur.width() <= Rational::pow10(-m) && prev.contains(cur))) ++bad;
            prev = cur;
        }
    }
    const Interval e30 = e_enclosure(30);
    if (!(e30.width() < Rational::pow10(-30))) ++bad;
    // the enclosure sits inside the decimal cell of e truncated to 15 digits
    const Rational cell = Rational(BigInt("2718281828459045"), pow10_int(15));
    if (!(cell <= e30.lo && e30.hi < cell + Rational::pow10(-15))) ++bad;
    report(8, bad == 0, std::to_string(bad) + " failures");
}

// 9. gamma enclosure: width < 0.02 at n = 50, contains 0.5772, nested
void criterion_9() {
    int bad = 0;
    const Interval g50 = gamma_enclosure(50);
    if (!(g50.width() < Rational(2, 100))) ++bad;
    if (!g50.contains(Rational(5772, 10000))) ++bad;
    Interval prev = gamma_enclosure(2);
    for (int n = 3; n <= 100; ++n) {
        const Interval cur = gamma_enclosure(n);
        if (!prev.contains(cur)) ++bad;
        prev = cur;
    }
    report(9, bad == 0, std::to_string(bad) + " failures");
}

// 10. axiom harness on seeded size-50 samples; broken instance fails with
// a reported witness
void criterion_10() {
    int bad = 0;
    {
        const ComparativeSystem s = make_cardinality_system(50, 2024);
        if (!check_axioms(s).all_pass()) ++bad;
        if (!check_measure_map(s, cardinality_measure()).all_pass()) ++bad;
    }
    {
        const ComparativeSystem s = make_length_system(50, 77);
        if (!check_axioms(s).all_pass()) ++bad;
        if (!check_measure_map(s, length_measure()).all_pass()) ++bad;
    }
    const CheckReport broken = check_axioms(make_broken_system(20, 9));
    bool witnessed = false;
    for (const CheckLine& l : broken.lines)
        if (!l.pass && !l.witness.empty()) witnessed = true;
    if (broken.all_pass() || !witnessed) ++bad;
    report(10, bad == 0, std::to_string(bad) + " failures");
}

// 11. nines identification: 0.(9) vs 1 indistinguishable at m = 50, and
// 1.4(9) parses to exactly 3/2
void criterion_11() {
    const EvalConfig cfg;
    const EvalResult a = evaluate(parse_expression("0.(9)"), cfg);
    const EvalResult b = evaluate(parse_expression("1"), cfg);
    const SignedReal diff = signed_add(a.value, b.value.star());
    bool ok = diff.zero_within_cap();
    if (!ok) {
        const Interval at50 = diff.magnitude().bounds(50);
        ok = !(at50.lo > Rational(0));
    }
    const ExprPtr lit = parse_expression("1.4(9)");
    ok = ok && lit->kind == Expr::Kind::Literal && lit->literal == Rational(3, 2);
    report(11, ok);
}

// 12. Abel jump (demo precision): partial sums at pi -/+ 0.01 differ in
// sign and sit within 0.01 of +/-(pi - 0.01)/2
void criterion_12() {
    const double pi = 3.14159265358979323846;
    const double below = abel_partial_sum(pi - 0.01, 100000);
    const double above = abel_partial_sum(pi + 0.01, 100000);
    const double expect = (pi - 0.01) / 2;
    const bool ok = below > 0 && above < 0 && std::fabs(below - expect) < 0.01 &&
                    std::fabs(above + expect) < 0.01;
    report(12, ok);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    return failures == 0 ? 0 : 1;
}
