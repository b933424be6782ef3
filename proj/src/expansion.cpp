#include "reals/expansion.hpp"

#include <stdexcept>

namespace reals {

DecimalExpansion::DecimalExpansion(Natural a0, std::function<int(std::int64_t)> digit_fn)
    : st_(std::make_shared<State>()) {
    st_->a0 = std::move(a0);
    st_->fn = std::move(digit_fn);
}

int DecimalExpansion::digit(std::int64_t n) const {
    if (n < 1) throw std::out_of_range("DecimalExpansion::digit: n must be >= 1");
    std::lock_guard<std::mutex> lock(st_->mu);
    while (static_cast<std::int64_t>(st_->memo.size()) < n) {
        const int d = st_->fn(static_cast<std::int64_t>(st_->memo.size()) + 1);
        if (d < 0 || d > 9) throw std::logic_error("DecimalExpansion: digit out of {0..9}");
        st_->memo.push_back(d);
    }
    return st_->memo[static_cast<std::size_t>(n - 1)];
}

Rational DecimalExpansion::truncate(std::int64_t m) const {
    if (m < 0) throw std::out_of_range("DecimalExpansion::truncate: m must be >= 0");
    BigInt scaled = st_->a0.value();
    for (std::int64_t k = 1; k <= m; ++k) scaled = scaled * 10 + digit(k);
    return Rational(scaled, pow10_int(static_cast<unsigned>(m)));
}

std::string DecimalExpansion::digit_string(std::int64_t n) const {
    std::string out = st_->a0.to_string();
    if (n > 0) {
        out += ".";
        for (std::int64_t k = 1; k <= n; ++k) out += static_cast<char>('0' + digit(k));
    }
    return out;
}

DecimalExpansion DecimalExpansion::from_periodic(const PeriodicDecimal& d) {
    if (d.negative) throw std::domain_error("from_periodic: expansion carries no sign");
    if (d.has_nines_tail()) throw NinesTail(normalize_nines(d).to_string());
    const auto pre = d.preperiod;
    const auto per = d.period;
    return DecimalExpansion(d.integer_part, [pre, per](std::int64_t n) -> int {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        if (i < pre.size()) return pre[i];
        if (per.empty()) return 0;
        return per[(i - pre.size()) % per.size()];
    });
}

DecimalExpansion DecimalExpansion::from_rational(const Rational& r) {
    if (r.is_negative()) throw std::domain_error("from_rational: expansion carries no sign");
    return from_periodic(rat_to_periodic(r));
}

}  // namespace reals
