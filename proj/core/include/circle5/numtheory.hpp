#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace circle5 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Nonnegative gcd; gcd(0, 0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);
/// Nonnegative lcm; lcm(0, x) = 0.
BigInt lcm(const BigInt& a, const BigInt& b);

/// Representative of a in [0, |m|). Requires m != 0.
BigInt floor_mod(const BigInt& a, const BigInt& m);

/// Inverse of a modulo m in [0, m), or nullopt when gcd(a, m) != 1.
/// Requires m >= 1.
std::optional<BigInt> inverse_mod(const BigInt& a, const BigInt& m);

/// Floor of the square root. Requires n >= 0.
BigInt isqrt(const BigInt& n);

/// True when n is a perfect square (n >= 0).
bool is_square(const BigInt& n);

/// Deterministic primality test.
///
/// Strong Miller-Rabin with the first thirteen prime bases, which is a proof
/// of primality below 3.3e24. Larger inputs are checked against the first
/// twenty-five prime bases; the answer is reproducible but only probabilistic
/// in that range.
bool is_prime(const BigInt& n);

/// Prime factorization of n >= 1 as (prime, exponent) pairs sorted by prime.
/// Trial division removes small factors; Brent's variant of Pollard rho with
/// fixed seeds splits the rest, so the result is deterministic.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

/// Decimal representation.
std::string to_string(const BigInt& n);
std::string to_string(const Rational& q);

/// Parses an optionally signed decimal integer. Throws InputError.
BigInt parse_bigint(std::string_view text);

/// True when the value fits in a signed 64-bit integer.
bool fits_int64(const BigInt& n);

}  // namespace circle5
