#include "reals/rational.hpp"

namespace reals {

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("Rational::parse: sign without digits");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational::parse: bad integer: " + s);
        return BigInt(s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::to_decimal_string(unsigned digits, bool trim) const {
    const bool neg = num_ < 0;
    BigInt n = neg ? BigInt(-num_) : num_;
    BigInt scaled = n * pow10_int(digits) / den_;  // truncated toward zero
    std::string s = scaled.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = s.substr(0, s.size() - digits);
    std::string frac = digits ? s.substr(s.size() - digits) : "";
    if (trim) {
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
    }
    if (!frac.empty()) out += "." + frac;
    if (neg && (scaled != 0)) out.insert(0, "-");
    return out;
}

Natural archimedean_witness(const Rational& x, const Rational& y) {
    if (!(x > Rational(0)) || !(y > Rational(0)))
        throw std::domain_error("archimedean_witness: arguments must be positive");
    // minimal n with x < n*y is floor(x/y) + 1
    const Rational ratio = x / y;
    BigInt n = ratio.num() / ratio.den() + 1;
    return Natural(n);
}

}  // namespace reals
