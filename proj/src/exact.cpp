#include "qlrc/exact.hpp"

#include "qlrc/errors.hpp"

namespace qlrc {

BigInt binom(int64_t n, int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

BigInt ipow(const BigInt& base, unsigned e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

bool is_integer(const BigRat& x) { return boost::multiprecision::denominator(x) == 1; }

BigInt to_integer(const BigRat& x) {
    if (!is_integer(x))
        throw ParameterError("expected integer value, got " + x.str());
    return boost::multiprecision::numerator(x);
}

std::string decimal(const BigRat& x, int digits) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = ipow(10, static_cast<unsigned>(digits));
    BigInt scaled = num * scale;
    BigInt q = scaled / den, rem = scaled % den;
    if (rem * 2 >= den) ++q;  // round half away from zero
    BigInt ip = q / scale, fp = q % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = (neg && q != 0 ? "-" : "") + ip.str();
    if (digits > 0) out += "." + frac;
    return out;
}

}  // namespace qlrc
