#include "reals/enclosure.hpp"

#include <stdexcept>

namespace reals {

Enclosure::Enclosure(std::function<Interval(int)> raw) : st_(std::make_shared<State>()) {
    st_->raw = std::move(raw);
}

Interval Enclosure::bounds(int m) const {
    if (m < 0) throw std::out_of_range("Enclosure::bounds: m must be >= 0");
    std::lock_guard<std::mutex> lock(st_->mu);
    // refine from level 0 upward so nesting holds by construction
    Interval prev;
    bool have_prev = false;
    for (int k = 0; k <= m; ++k) {
        auto it = st_->memo.find(k);
        if (it != st_->memo.end()) {
            prev = it->second;
            have_prev = true;
            continue;
        }
        Interval v = st_->raw(k);
        if (v.width() > Rational::pow10(-k))
            throw std::logic_error("Enclosure: width contract violated at m=" + std::to_string(k));
        if (have_prev) {
            if (prev.lo > v.lo) v.lo = prev.lo;
            if (prev.hi < v.hi) v.hi = prev.hi;
            if (v.lo > v.hi)
                throw std::logic_error("Enclosure: inconsistent levels (empty intersection)");
        }
        st_->memo.emplace(k, v);
        prev = v;
        have_prev = true;
    }
    return prev;
}

Enclosure Enclosure::from_rational(const Rational& r) {
    return Enclosure([r](int m) {
        const Rational half = Rational::pow10(-(m + 1));
        return Interval{r - half, r + half};
    });
}

Enclosure Enclosure::from_expansion(const DecimalExpansion& a) {
    return Enclosure([a](int m) {
        const Rational t = a.truncate(m);
        return Interval{t, t + Rational::pow10(-m)};
    });
}

Ordering compare_at(const Enclosure& x, const Enclosure& y, int m) {
    const Interval bx = x.bounds(m);
    const Interval by = y.bounds(m);
    if (bx.hi < by.lo) return Ordering::Less;
    if (by.hi < bx.lo) return Ordering::Greater;
    return Ordering::Indistinguishable;
}

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "LESS";
        case Ordering::Greater: return "GREATER";
        case Ordering::Indistinguishable: return "INDISTINGUISHABLE";
    }
    return "?";
}

namespace {

std::string digits_text(const BigInt& scaled, std::int64_t n) {
    std::string s = scaled.str();
    if (static_cast<std::int64_t>(s.size()) <= n)
        s.insert(0, static_cast<std::size_t>(n + 1 - static_cast<std::int64_t>(s.size())), '0');
    std::string out = s.substr(0, s.size() - static_cast<std::size_t>(n));
    if (n > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(n));
    return out;
}

}  // namespace

DigitResult digits_from_enclosure(const Enclosure& x, std::int64_t n, int cap) {
    if (n < 0) throw std::out_of_range("digits_from_enclosure: n must be >= 0");
    if (cap < n) throw std::out_of_range("digits_from_enclosure: cap must be >= n");
    int p = static_cast<int>(n) + 2;
    while (true) {
        if (p > cap) p = cap;
        const Interval b = x.bounds(p);
        if (b.lo.is_negative())
            throw std::domain_error("digits_from_enclosure: enclosure must be non-negative");
        const BigInt a = b.lo.floor_scaled(static_cast<unsigned>(n));
        const BigInt c = b.hi.floor_scaled(static_cast<unsigned>(n));
        if (a == c) return DigitResult{digits_text(a, n), std::nullopt, p};
        if (p >= cap) {
            // find the coarsest straddled grid position
            std::int64_t k = 0;
            for (; k <= n; ++k) {
                if (b.lo.floor_scaled(static_cast<unsigned>(k)) !=
                    b.hi.floor_scaled(static_cast<unsigned>(k)))
                    break;
            }
            const std::int64_t good = k - 1;
            std::string partial =
                good >= 0 ? digits_text(b.lo.floor_scaled(static_cast<unsigned>(good)), good) : "";
            return DigitResult{partial, k, p};
        }
        p = p * 2 > cap ? cap : p * 2;
    }
}

}  // namespace reals
