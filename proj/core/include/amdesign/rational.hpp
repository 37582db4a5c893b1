#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace amdesign {

using Rational = mpq_class;
using Integer = mpz_class;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Machine-sized binomial for subset indexing (n <= 64). Saturates at UINT64_MAX.
std::uint64_t binomial_u64(int n, int k);

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace amdesign
