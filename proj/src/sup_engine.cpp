#include "reals/sup_engine.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace reals {

namespace {

constexpr long long kUpperBoundCeiling = 1000000000000000000LL;  // 10^18

// Wraps the oracle with a monotonicity spot-check over queried points:
// some q answered true at or below a q answered false is a contradiction.
struct CheckedOracle {
    explicit CheckedOracle(BoundOracle o) : oracle(std::move(o)) {}

    bool operator()(const Rational& q) {
        const bool ans = oracle.is_upper_bound(q);
        std::lock_guard<std::mutex> lock(mu);
        if (ans) {
            if (!min_true || q < *min_true) min_true = q;
        } else {
            if (!max_false || q > *max_false) max_false = q;
        }
        if (min_true && max_false && *min_true <= *max_false)
            throw OracleInconsistency("oracle '" + oracle.name +
                                      "' is not monotone: is_upper_bound(" +
                                      min_true->to_string() + ") = true but is_upper_bound(" +
                                      max_false->to_string() + ") = false");
        return ans;
    }

    BoundOracle oracle;
    std::mutex mu;
    std::optional<Rational> min_true, max_false;
};

struct SupState {
    explicit SupState(BoundOracle o) : query(std::move(o)) {}
    CheckedOracle query;
    std::mutex mu;
    BigInt a0 = 0;
    bool a0_done = false;
    std::vector<int> digits;
    BigInt prefix = 0;  // integer value of a0 followed by the known digits

    void find_a0() {
        if (a0_done) return;
        if (query(Rational(0))) {
            // sup <= 0: no natural fails to be an upper bound; the
            // expansion is identically zero.
            a0 = 0;
        } else {
            BigInt hi = 1;
            while (!query(Rational(hi))) {
                hi <<= 1;
                if (hi > kUpperBoundCeiling)
                    throw UnboundedSet("no upper bound of '" + query.oracle.name +
                                       "' found below 10^18; the set is presumably unbounded");
            }
            BigInt lo = 0;  // known not an upper bound
            while (hi - lo > 1) {
                const BigInt mid = (lo + hi) / 2;
                if (query(Rational(mid)))
                    hi = mid;
                else
                    lo = mid;
            }
            a0 = lo;
        }
        prefix = a0;
        a0_done = true;
    }

    int digit(std::int64_t n) {
        std::lock_guard<std::mutex> lock(mu);
        find_a0();
        if (n <= 0) return 0;
        while (static_cast<std::int64_t>(digits.size()) < n) {
            const unsigned level = static_cast<unsigned>(digits.size()) + 1;
            const BigInt scale = pow10_int(level);
            int chosen = 0;
            // greatest digit whose truncation is not an upper bound;
            // d = 0 reproduces the previous truncation, already known non-UB
            for (int d = 9; d >= 1; --d) {
                if (!query(Rational(prefix * 10 + d, scale))) {
                    chosen = d;
                    break;
                }
            }
            digits.push_back(chosen);
            prefix = prefix * 10 + chosen;
        }
        return digits[static_cast<std::size_t>(n - 1)];
    }
};

}  // namespace

SupremumResult supremum(const BoundOracle& o) {
    auto st = std::make_shared<SupState>(o);
    st->digit(0);  // forces the a0 search so precondition failures surface early
    DecimalExpansion e(Natural(st->a0),
                       [st](std::int64_t n) { return st->digit(n); });
    return SupremumResult(std::move(e));
}

SupremumResult measure(const CutOracle& o) {
    return supremum(BoundOracle{o.name, o.exceeds});
}

std::vector<Rational> SupremumResult::approach_sequence(std::int64_t upto) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(upto) + 1);
    for (std::int64_t m = 0; m <= upto; ++m) out.push_back(expansion_.truncate(m));
    return out;
}

bool SupremumResult::nines_streak(std::int64_t from, std::int64_t len) const {
    for (std::int64_t k = from; k < from + len; ++k)
        if (expansion_.digit(k) != 9) return false;
    return true;
}

BoundOracle nth_root_oracle(const Rational& r, unsigned k) {
    if (r.is_negative()) throw std::domain_error("nth_root_oracle: negative radicand");
    if (k == 0) throw std::domain_error("nth_root_oracle: zero degree");
    return BoundOracle{
        "root:" + std::to_string(k) + ":" + r.to_string(),
        [r, k](const Rational& q) {
            if (q.is_negative()) return false;
            Rational p(1);
            for (unsigned i = 0; i < k; ++i) p = p * q;
            return p >= r;
        }};
}

namespace {

// Decides "q is an upper bound of the partial sums of e" by escalating the
// bracket S_n <= e <= S_n + 1/(n*n!).
bool e_upper_bound(const Rational& q) {
    Rational sum(1);
    BigInt fact = 1;
    for (int n = 1; n <= 500; ++n) {
        fact *= n;
        sum = sum + Rational(BigInt(1), fact);
        const Rational tail(BigInt(1), fact * n);
        if (q < sum) return false;
        if (q >= sum + tail) return true;
    }
    // unreachable for rational q: e is irrational, so the bracket decides
    throw std::logic_error("e oracle: bracket failed to decide");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

}  // namespace

BoundOracle named_oracle(const std::string& spec) {
    const auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    try {
        if (kind == "sqrt" && parts.size() == 2)
            return nth_root_oracle(Rational::parse(parts[1]), 2);
        if (kind == "root" && parts.size() == 3)
            return nth_root_oracle(Rational::parse(parts[2]),
                                   static_cast<unsigned>(std::stoul(parts[1])));
        if (spec == "set:x^2<2") return nth_root_oracle(Rational(2), 2);
        if (kind == "below" && parts.size() == 2) {
            const Rational q = Rational::parse(parts[1]);
            return BoundOracle{spec, [q](const Rational& p) { return p >= q; }};
        }
        if (kind == "singleton" && parts.size() == 2) {
            // strict, so the attained maximum is emitted digit-exactly
            const Rational q = Rational::parse(parts[1]);
            return BoundOracle{spec, [q](const Rational& p) { return p > q; }};
        }
        if (spec == "e") return BoundOracle{"e", e_upper_bound};
    } catch (const std::invalid_argument&) {
        throw UnknownOracle("malformed oracle spec: " + spec);
    }
    throw UnknownOracle("unknown oracle: " + spec);
}

CutOracle named_cut_oracle(const std::string& spec) {
    const BoundOracle b = named_oracle(spec);
    return CutOracle{b.name, b.is_upper_bound};
}

}  // namespace reals
