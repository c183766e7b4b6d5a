#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qlrc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k), exact; zero outside 0 <= k <= n.
BigInt binom(int64_t n, int64_t k);

BigInt ipow(const BigInt& base, unsigned e);

bool is_integer(const BigRat& x);

// Throws ParameterError if x has a nontrivial denominator.
BigInt to_integer(const BigRat& x);

// Fixed-point decimal rendering, round-half-away-from-zero.
std::string decimal(const BigRat& x, int digits);

inline int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

}  // namespace qlrc
