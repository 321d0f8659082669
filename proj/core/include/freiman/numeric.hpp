#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace freiman {

/// Arbitrary-precision integer used for binomial coefficients and
/// closed-form invariants.  Exponent arithmetic stays in machine words
/// with overflow checks; everything combinatorial goes through BigInt.
using BigInt = boost::multiprecision::cpp_int;

/// Exponent of a single variable in a monomial.  Non-negative by
/// construction; arithmetic on exponents throws on overflow instead of
/// wrapping.
using Exponent = std::int64_t;

/// Exact binomial coefficient C(n, k).  Returns 0 for k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// base^exp for exp >= 0.
BigInt int_pow(const BigInt& base, std::int64_t exp);

/// Narrow to int64, throwing std::overflow_error if out of range.
std::int64_t to_int64(const BigInt& v);

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/// Rank over the rationals of an integer matrix, by fraction-free
/// Bareiss elimination.  Consumes its argument.
int matrix_rank(std::vector<std::vector<BigInt>> m);

}  // namespace freiman
