#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reals/arithmetic.hpp"
#include "reals/enclosure.hpp"
#include "reals/expansion.hpp"
#include "reals/gallery.hpp"

#include <random>
#include <vector>

using namespace reals;

TEST_CASE("truncations are nondecreasing and bracket the expansion") {
    const DecimalExpansion x = DecimalExpansion::from_rational(Rational(22, 7));
    for (int m = 0; m < 60; ++m) {
        const Rational lo = x.truncate(m);
        const Rational lo_next = x.truncate(m + 1);
        CHECK(lo <= lo_next);
        // a_(m) <= 22/7 < a_(m) + 10^-m
        CHECK(lo <= Rational(22, 7));
        CHECK(Rational(22, 7) < lo + Rational::pow10(-m));
    }
}

TEST_CASE("expansion digits and strings") {
    const DecimalExpansion x = DecimalExpansion::from_periodic(PeriodicDecimal::parse("0.1(6)"));
    CHECK(x.digit(1) == 1);
    CHECK(x.digit(2) == 6);
    CHECK(x.digit(100) == 6);
    CHECK(x.digit_string(5) == "0.16666");
    CHECK(x.truncate(3) == Rational(166, 1000));

    const DecimalExpansion y = DecimalExpansion::from_rational(Rational(3));
    CHECK(y.digit_string(3) == "3.000");

    // digit functions returning out-of-range values are rejected
    const DecimalExpansion bad(Natural(0), [](std::int64_t) { return 12; });
    CHECK_THROWS_AS(bad.digit(1), std::logic_error);
}

TEST_CASE("from_periodic rejects non-canonical input") {
    CHECK_THROWS_AS(DecimalExpansion::from_periodic(PeriodicDecimal::parse("0.(9)")),
                    std::invalid_argument);
    CHECK_THROWS_AS(DecimalExpansion::from_periodic(PeriodicDecimal::parse("-1.5")),
                    std::domain_error);
}

TEST_CASE("enclosure width and nesting laws on the fixture set") {
    std::vector<Enclosure> fixtures;
    fixtures.push_back(Enclosure::from_rational(Rational(1, 3)));
    fixtures.push_back(Enclosure::from_rational(Rational(0)));
    fixtures.push_back(Enclosure::from_rational(Rational(355, 113)));
    fixtures.push_back(Enclosure::from_expansion(DecimalExpansion::from_rational(Rational(1, 7))));
    fixtures.push_back(root_of_rational(Rational(2), 2));
    fixtures.push_back(root_of_rational(Rational(5), 3));
    fixtures.push_back(e_real());
    fixtures.push_back(interval_add(root_of_rational(Rational(2), 2),
                                    Enclosure::from_rational(Rational(1, 3))));
    fixtures.push_back(interval_mul(root_of_rational(Rational(2), 2),
                                    root_of_rational(Rational(3), 2)));

    for (const Enclosure& x : fixtures) {
        Interval prev = x.bounds(0);
        CHECK(prev.width() <= Rational(1));
        for (int m = 1; m <= 60; ++m) {
            const Interval cur = x.bounds(m);
            CHECK(cur.width() <= Rational::pow10(-m));
            CHECK(prev.contains(cur));
            prev = cur;
        }
    }
}

TEST_CASE("a raw function violating the width contract is rejected") {
    const Enclosure bad([](int) { return Interval{Rational(0), Rational(1)}; });
    CHECK_NOTHROW(bad.bounds(0));
    CHECK_THROWS_AS(bad.bounds(2), std::logic_error);
}

TEST_CASE("compare_at verdicts") {
    const Enclosure half = Enclosure::from_rational(Rational(1, 2));
    const Enclosure third = Enclosure::from_rational(Rational(1, 3));
    CHECK(compare_at(third, half, 3) == Ordering::Less);
    CHECK(compare_at(half, third, 3) == Ordering::Greater);
    CHECK(compare_at(half, half, 50) == Ordering::Indistinguishable);

    // closer than the precision grid: indistinguishable, not an error
    const Enclosure close = Enclosure::from_rational(Rational(1, 2) + Rational::pow10(-10));
    CHECK(compare_at(half, close, 3) == Ordering::Indistinguishable);
    CHECK(compare_at(half, close, 12) == Ordering::Less);

    CHECK(std::string(to_string(Ordering::Less)) == "LESS");
    CHECK(std::string(to_string(Ordering::Greater)) == "GREATER");
    CHECK(std::string(to_string(Ordering::Indistinguishable)) == "INDISTINGUISHABLE");
}

TEST_CASE("digits from an enclosure are certified against the exact value") {
    const Enclosure r2 = root_of_rational(Rational(2), 2);
    const DigitResult d = digits_from_enclosure(r2, 30, 120);
    REQUIRE(!d.indeterminate_at);
    CHECK(d.digits.size() == 32);  // "1." + 30 digits

    // independent refutation check: t <= sqrt(2) < t + 10^-30 via squaring
    const Rational lo = Rational(BigInt(d.digits[0] - '0')) +
                        Rational(BigInt(d.digits.substr(2)), pow10_int(30));
    CHECK(lo * lo < Rational(2));
    const Rational hi = lo + Rational::pow10(-30);
    CHECK(hi * hi > Rational(2));
}

TEST_CASE("digit extraction marks grid boundaries as indeterminate") {
    // from_rational(1/2) straddles the 0.500 grid point at every precision
    const Enclosure half = Enclosure::from_rational(Rational(1, 2));
    const DigitResult d = digits_from_enclosure(half, 3, 60);
    REQUIRE(d.indeterminate_at.has_value());
    CHECK(*d.indeterminate_at >= 1);

    // a value off the grid resolves
    const Enclosure third = Enclosure::from_rational(Rational(1, 3));
    const DigitResult d3 = digits_from_enclosure(third, 10, 60);
    REQUIRE(!d3.indeterminate_at);
    CHECK(d3.digits == "0.3333333333");
}

TEST_CASE("expansion -> enclosure -> digits round-trip on random rationals") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long long> num(0, 100000);
    std::uniform_int_distribution<long long> den(1, 100000);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        const Rational r(BigInt(num(rng)), BigInt(den(rng)));
        const PeriodicDecimal p = rat_to_periodic(r);
        if (p.period.empty()) continue;  // terminating decimals sit on the grid
        const DecimalExpansion x = DecimalExpansion::from_periodic(p);
        const DigitResult d = digits_from_enclosure(Enclosure::from_expansion(x), 20, 120);
        REQUIRE(!d.indeterminate_at);
        CHECK(d.digits == x.digit_string(20));
        ++checked;
    }
    CHECK(checked > 300);
}
