#include "reals/periodic.hpp"

#include <map>

namespace reals {

std::string PeriodicDecimal::to_string() const {
    std::string out;
    if (negative) out += "-";
    out += integer_part.to_string();
    if (!preperiod.empty() || !period.empty()) {
        out += ".";
        for (int d : preperiod) out += static_cast<char>('0' + d);
        if (!period.empty()) {
            out += "(";
            for (int d : period) out += static_cast<char>('0' + d);
            out += ")";
        }
    }
    return out;
}

PeriodicDecimal PeriodicDecimal::parse(const std::string& text) {
    PeriodicDecimal d;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        d.negative = text[i] == '-';
        ++i;
    }
    const std::size_t int_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == int_start) throw std::invalid_argument("PeriodicDecimal::parse: missing integer part");
    d.integer_part = Natural::parse(text.substr(int_start, i - int_start));
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') d.preperiod.push_back(text[i++] - '0');
        if (i < text.size() && text[i] == '(') {
            ++i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') d.period.push_back(text[i++] - '0');
            if (i >= text.size() || text[i] != ')')
                throw std::invalid_argument("PeriodicDecimal::parse: unterminated period");
            if (d.period.empty())
                throw std::invalid_argument("PeriodicDecimal::parse: empty period");
            ++i;
        }
        if (d.preperiod.empty() && d.period.empty())
            throw std::invalid_argument("PeriodicDecimal::parse: '.' without digits");
    }
    if (i != text.size()) throw std::invalid_argument("PeriodicDecimal::parse: trailing characters");
    return d;
}

PeriodicDecimal rat_to_periodic(const Rational& r) {
    PeriodicDecimal d;
    d.negative = r.is_negative();
    const BigInt num = r.is_negative() ? BigInt(-r.num()) : r.num();
    const BigInt& den = r.den();
    d.integer_part = Natural(num / den);
    BigInt rem = num % den;
    std::vector<int> digits;
    std::map<BigInt, std::size_t> seen;  // remainder -> position of the digit it produces
    std::size_t cycle_start = 0;
    bool cyclic = false;
    while (rem != 0) {
        auto it = seen.find(rem);
        if (it != seen.end()) {
            cycle_start = it->second;
            cyclic = true;
            break;
        }
        seen.emplace(rem, digits.size());
        rem *= 10;
        digits.push_back(static_cast<int>(rem / den));
        rem %= den;
    }
    if (cyclic) {
        d.preperiod.assign(digits.begin(), digits.begin() + static_cast<long>(cycle_start));
        d.period.assign(digits.begin() + static_cast<long>(cycle_start), digits.end());
    } else {
        d.preperiod = std::move(digits);
    }
    return d;
}

PeriodicDecimal normalize_nines(const PeriodicDecimal& d) {
    if (!d.has_nines_tail()) return d;
    PeriodicDecimal out;
    out.negative = d.negative;
    out.integer_part = d.integer_part;
    out.preperiod = d.preperiod;
    out.period.clear();
    // increment the last preperiod digit, carrying into the integer part
    int i = static_cast<int>(out.preperiod.size()) - 1;
    for (; i >= 0; --i) {
        if (out.preperiod[static_cast<std::size_t>(i)] < 9) {
            out.preperiod[static_cast<std::size_t>(i)]++;
            out.preperiod.resize(static_cast<std::size_t>(i) + 1);
            break;
        }
    }
    if (i < 0) {
        out.preperiod.clear();
        out.integer_part = out.integer_part + Natural(1);
    }
    while (!out.preperiod.empty() && out.preperiod.back() == 0) out.preperiod.pop_back();
    return out;
}

Rational periodic_to_rat(const PeriodicDecimal& d) {
    if (d.has_nines_tail()) throw NinesTail(normalize_nines(d).to_string());
    // value = I + pre/10^p + per/(10^p * (10^s - 1))
    const unsigned p = static_cast<unsigned>(d.preperiod.size());
    Rational value(BigInt(d.integer_part.value()));
    if (p) {
        BigInt pre = 0;
        for (int dig : d.preperiod) pre = pre * 10 + dig;
        value = value + Rational(pre, pow10_int(p));
    }
    if (!d.period.empty()) {
        const unsigned s = static_cast<unsigned>(d.period.size());
        BigInt per = 0;
        for (int dig : d.period) per = per * 10 + dig;
        value = value + Rational(per, pow10_int(p) * (pow10_int(s) - 1));
    }
    return d.negative ? -value : value;
}

}  // namespace reals
