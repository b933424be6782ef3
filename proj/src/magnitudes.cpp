#include "reals/magnitudes.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace reals {

namespace {

using Obj = ComparativeSystem::Obj;

struct Harness {
    const ComparativeSystem& s;
    CheckLine run(const std::string& label, const std::function<std::optional<std::string>()>& body) {
        CheckLine line;
        line.label = label;
        try {
            auto witness = body();
            line.pass = !witness.has_value();
            if (witness) line.witness = *witness;
        } catch (const std::exception& e) {
            line.pass = false;
            line.harness_error = true;
            line.witness = std::string("relation failed to decide: ") + e.what();
        }
        return line;
    }
};

std::string pair_witness(const ComparativeSystem& s, const Obj& x, const Obj& y) {
    return "(" + s.describe(x) + ", " + s.describe(y) + ")";
}

std::string triple_witness(const ComparativeSystem& s, const Obj& x, const Obj& y, const Obj& z) {
    return "(" + s.describe(x) + ", " + s.describe(y) + ", " + s.describe(z) + ")";
}

}  // namespace

std::string CheckReport::to_text() const {
    std::ostringstream out;
    for (const auto& l : lines) {
        out << l.label << ": ";
        if (l.harness_error)
            out << "HARNESS ERROR " << l.witness;
        else if (l.pass)
            out << "PASS";
        else
            out << "FAIL " << l.witness;
        out << "\n";
    }
    if (max_archimedean_witness)
        out << "max archimedean witness n = " << *max_archimedean_witness << "\n";
    return out.str();
}

CheckReport check_axioms(const ComparativeSystem& s, std::int64_t archimedean_cap) {
    CheckReport rep;
    Harness h{s};
    const auto& c = s.carrier;

    rep.lines.push_back(h.run("AXIOM 1", [&]() -> std::optional<std::string> {
        // ~ is an equivalence relation
        for (const auto& x : c)
            if (!s.equiv(x, x)) return "not reflexive at " + s.describe(x);
        for (const auto& x : c)
            for (const auto& y : c)
                if (s.equiv(x, y) != s.equiv(y, x)) return "not symmetric at " + pair_witness(s, x, y);
        for (const auto& x : c)
            for (const auto& y : c) {
                if (!s.equiv(x, y)) continue;
                for (const auto& z : c)
                    if (s.equiv(y, z) && !s.equiv(x, z))
                        return "not transitive at " + triple_witness(s, x, y, z);
            }
        return std::nullopt;
    }));

    rep.lines.push_back(h.run("AXIOM 2", [&]() -> std::optional<std::string> {
        // transitivity of <
        for (const auto& x : c)
            for (const auto& y : c) {
                if (!s.precedes(x, y)) continue;
                for (const auto& z : c)
                    if (s.precedes(y, z) && !s.precedes(x, z))
                        return triple_witness(s, x, y, z);
            }
        return std::nullopt;
    }));

    rep.lines.push_back(h.run("AXIOM 3", [&]() -> std::optional<std::string> {
        // (x < y) => not (y < x)
        for (const auto& x : c)
            for (const auto& y : c)
                if (s.precedes(x, y) && s.precedes(y, x)) return pair_witness(s, x, y);
        return std::nullopt;
    }));

    rep.lines.push_back(h.run("AXIOM 4", [&]() -> std::optional<std::string> {
        // totality: (x < y) or (y < x) or (x ~ y)
        for (const auto& x : c)
            for (const auto& y : c)
                if (!s.precedes(x, y) && !s.precedes(y, x) && !s.equiv(x, y))
                    return pair_witness(s, x, y);
        return std::nullopt;
    }));

    rep.lines.push_back(h.run("AXIOM 5", [&]() -> std::optional<std::string> {
        // associativity of o up to ~
        for (const auto& x : c)
            for (const auto& y : c)
                for (const auto& z : c)
                    if (!s.equiv(s.compose(x, s.compose(y, z)), s.compose(s.compose(x, y), z)))
                        return triple_witness(s, x, y, z);
        return std::nullopt;
    }));

    rep.lines.push_back(h.run("AXIOM 6", [&]() -> std::optional<std::string> {
        // commutativity of o up to ~
        for (const auto& x : c)
            for (const auto& y : c)
                if (!s.equiv(s.compose(x, y), s.compose(y, x))) return pair_witness(s, x, y);
        return std::nullopt;
    }));

    rep.lines.push_back(h.run("AXIOM 7", [&]() -> std::optional<std::string> {
        // x < y <=> x o z < y o z
        for (const auto& x : c)
            for (const auto& y : c)
                for (const auto& z : c)
                    if (s.precedes(x, y) != s.precedes(s.compose(x, z), s.compose(y, z)))
                        return triple_witness(s, x, y, z);
        return std::nullopt;
    }));

    rep.lines.push_back(h.run("AXIOM 8", [&]() -> std::optional<std::string> {
        // x != y => x < x o y
        for (const auto& x : c)
            for (const auto& y : c)
                if (!s.equal(x, y) && !s.precedes(x, s.compose(x, y)))
                    return pair_witness(s, x, y);
        return std::nullopt;
    }));

    std::int64_t max_witness = 0;
    rep.lines.push_back(h.run("AXIOM 9", [&]() -> std::optional<std::string> {
        // Archimedean: for all x,y there is n with x < n*y
        for (const auto& x : c)
            for (const auto& y : c) {
                Obj ny = y;
                std::int64_t n = 1;
                while (!s.precedes(x, ny)) {
                    if (++n > archimedean_cap)
                        return "no witness below cap for " + pair_witness(s, x, y);
                    ny = s.compose(ny, y);
                }
                max_witness = std::max(max_witness, n);
            }
        return std::nullopt;
    }));
    rep.max_archimedean_witness = max_witness;

    return rep;
}

CheckReport check_measure_map(const ComparativeSystem& s, const MeasureMap& m) {
    CheckReport rep;
    Harness h{s};
    const auto& c = s.carrier;

    rep.lines.push_back(h.run("MEASURE (1)", [&]() -> std::optional<std::string> {
        for (const auto& x : c)
            for (const auto& y : c)
                if (s.equiv(x, y) != (m.mu(x) == m.mu(y))) return pair_witness(s, x, y);
        return std::nullopt;
    }));
    rep.lines.push_back(h.run("MEASURE (2)", [&]() -> std::optional<std::string> {
        for (const auto& x : c)
            for (const auto& y : c)
                if (s.precedes(x, y) != (m.mu(x) < m.mu(y))) return pair_witness(s, x, y);
        return std::nullopt;
    }));
    rep.lines.push_back(h.run("MEASURE (3)", [&]() -> std::optional<std::string> {
        for (const auto& x : c)
            for (const auto& y : c)
                if (m.mu(s.compose(x, y)) != m.mu(x) + m.mu(y)) return pair_witness(s, x, y);
        return std::nullopt;
    }));
    return rep;
}

Natural archimedean_witness_obj(const ComparativeSystem& s, const Obj& x, const Obj& y,
                                std::int64_t cap) {
    Obj ny = y;
    std::int64_t n = 1;
    while (!s.precedes(x, ny)) {
        if (++n > cap)
            throw NonArchimedean("no n <= " + std::to_string(cap) + " with x < n*y; instance '" +
                                 s.name + "' is suspect");
        ny = s.compose(ny, y);
    }
    return Natural(static_cast<unsigned long long>(n));
}

// ---------------------------------------------------------------------------
// instances

namespace {

using TokenSet = std::set<long long>;

std::string describe_tokens(const Obj& o) {
    const auto& t = std::any_cast<const TokenSet&>(o);
    std::string s = "{";
    bool first = true;
    for (long long v : t) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

// ~ by direct pairing: walk both sets matching one element of x with one
// of y; equivalent iff both run out together.
bool paired(const TokenSet& x, const TokenSet& y) {
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() && iy != y.end()) {
        ++ix;
        ++iy;
    }
    return ix == x.end() && iy == y.end();
}

bool pairs_short(const TokenSet& x, const TokenSet& y) {
    // x runs out strictly first
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() && iy != y.end()) {
        ++ix;
        ++iy;
    }
    return ix == x.end() && iy != y.end();
}

}  // namespace

ComparativeSystem make_cardinality_system(int size, std::uint64_t seed) {
    ComparativeSystem s;
    s.name = "cardinality";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> card(1, 8);
    std::uniform_int_distribution<long long> token(0, 1000000);
    for (int i = 0; i < size; ++i) {
        TokenSet t;
        const int want = card(rng);
        while (static_cast<int>(t.size()) < want) t.insert(token(rng));
        s.carrier.emplace_back(std::move(t));
    }
    s.equiv = [](const Obj& a, const Obj& b) {
        return paired(std::any_cast<const TokenSet&>(a), std::any_cast<const TokenSet&>(b));
    };
    s.precedes = [](const Obj& a, const Obj& b) {
        return pairs_short(std::any_cast<const TokenSet&>(a), std::any_cast<const TokenSet&>(b));
    };
    s.compose = [](const Obj& a, const Obj& b) -> Obj {
        // disjoint union: shift the second set's tokens past the first's
        const auto& x = std::any_cast<const TokenSet&>(a);
        const auto& y = std::any_cast<const TokenSet&>(b);
        TokenSet u = x;
        const long long offset = (x.empty() ? 0 : *x.rbegin()) + 1;
        long long k = 0;
        for (long long v : y) {
            (void)v;
            u.insert(offset + k++);
        }
        return u;
    };
    s.equal = [](const Obj& a, const Obj& b) {
        return std::any_cast<const TokenSet&>(a) == std::any_cast<const TokenSet&>(b);
    };
    s.describe = describe_tokens;
    return s;
}

MeasureMap cardinality_measure() {
    return MeasureMap{"element count", [](const Obj& o) {
                          return Rational(static_cast<long long>(
                              std::any_cast<const TokenSet&>(o).size()));
                      }};
}

namespace {

ComparativeSystem length_system_base(const std::string& name, int size, std::uint64_t seed) {
    ComparativeSystem s;
    s.name = name;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(1, 60);
    std::uniform_int_distribution<long long> den(1, 12);
    for (int i = 0; i < size; ++i) s.carrier.emplace_back(Rational(num(rng), den(rng)));
    s.equiv = [](const Obj& a, const Obj& b) {
        return std::any_cast<const Rational&>(a) == std::any_cast<const Rational&>(b);
    };
    s.precedes = [](const Obj& a, const Obj& b) {
        return std::any_cast<const Rational&>(a) < std::any_cast<const Rational&>(b);
    };
    s.compose = [](const Obj& a, const Obj& b) -> Obj {
        return std::any_cast<const Rational&>(a) + std::any_cast<const Rational&>(b);
    };
    s.equal = [](const Obj& a, const Obj& b) {
        return std::any_cast<const Rational&>(a) == std::any_cast<const Rational&>(b);
    };
    s.describe = [](const Obj& o) { return std::any_cast<const Rational&>(o).to_string(); };
    return s;
}

}  // namespace

ComparativeSystem make_length_system(int size, std::uint64_t seed) {
    return length_system_base("length", size, seed);
}

MeasureMap length_measure() {
    return MeasureMap{"rational length",
                      [](const Obj& o) { return std::any_cast<const Rational&>(o); }};
}

ComparativeSystem make_broken_system(int size, std::uint64_t seed) {
    ComparativeSystem s = length_system_base("broken (precedes := <=)", size, seed);
    s.precedes = [](const Obj& a, const Obj& b) {
        return std::any_cast<const Rational&>(a) <= std::any_cast<const Rational&>(b);
    };
    return s;
}

IncommensurabilityReport diagonal_incommensurability(unsigned max_den) {
    // A rational mu(diag) = p/q would force mu(q copies of diag) = p
    // = mu(p copies of unit), yet the comparison oracle (diag < r*unit iff
    // 2 < r^2) orders them strictly whenever p^2 != 2 q^2, contradicting
    // properties (1)-(2). So it suffices that p^2 = 2 q^2 has no solution.
    std::ostringstream out;
    for (BigInt q = 1; q <= max_den; ++q) {
        const BigInt target = 2 * q * q;
        const BigInt p = isqrt(target);
        if (p * p == target) {
            out << "counterexample: (" << p.str() << "/" << q.str() << ")^2 = 2\n";
            return {false, out.str()};
        }
    }
    out << "no rational p/q with q <= " << max_den
        << " satisfies p^2 = 2 q^2; no rational-valued measure map can cover "
           "{unit, diagonal} (finite refutation, not a proof)\n";
    return {true, out.str()};
}

}  // namespace reals
