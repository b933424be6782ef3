#include "reals/natural.hpp"

namespace reals {

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n < 2) return n;
    // Newton iteration with an initial guess from the bit length.
    BigInt x = BigInt(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / 2 + 1);
    while (true) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    return x;
}

BigInt iroot(const BigInt& n, unsigned k) {
    if (n < 0) throw std::domain_error("iroot: negative argument");
    if (k == 0) throw std::domain_error("iroot: zero degree");
    if (k == 1 || n < 2) return n;
    if (k == 2) return isqrt(n);
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    BigInt x = BigInt(1) << (bits / k + 1);
    while (true) {
        BigInt xk1 = 1;
        for (unsigned i = 0; i + 1 < k; ++i) xk1 *= x;
        BigInt y = ((k - 1) * x + n / xk1) / k;
        if (y >= x) break;
        x = y;
    }
    // Newton can land one above; correct downward.
    while (true) {
        BigInt p = 1;
        for (unsigned i = 0; i < k; ++i) p *= x;
        if (p <= n) break;
        --x;
    }
    return x;
}

}  // namespace reals
