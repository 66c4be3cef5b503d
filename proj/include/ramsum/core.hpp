#pragma once

/**
 * @file core.hpp
 * @brief Exact integer number theory primitives.
 *
 * Arguments of arithmetic functions are 64-bit positive integers; every
 * value that can grow (powers, products, sums of function values) is an
 * arbitrary-precision GMP integer or rational.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ramsum {

using Integer = mpz_class;
/// Exact rational. gmpxx keeps results of arithmetic canonical (lowest
/// terms, positive denominator); values built by hand go through make_rat.
using Rat = mpq_class;

struct PrimePower {
    std::int64_t prime;
    int exponent;

    bool operator==(const PrimePower&) const = default;
};

struct Factorization {
    std::int64_t value = 1;
    /// Strictly increasing primes; empty iff value == 1.
    std::vector<PrimePower> factors;
};

Factorization factorize(std::int64_t n);
int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
/// Ascending list of all positive divisors.
const std::vector<std::int64_t>& divisors(std::int64_t n);

std::int64_t gcd_many(std::span<const std::int64_t> ns);
std::int64_t lcm_many(std::span<const std::int64_t> ns);

/// d with d^gamma == n, if it exists.
std::optional<std::int64_t> gamma_root(std::int64_t n, std::int64_t gamma);
/// Indicator of perfect gamma-th powers (1 if n = d^gamma for some d).
inline bool is_gamma_power(std::int64_t n, std::int64_t gamma) { return gamma_root(n, gamma).has_value(); }

/// base^exp, or nullopt when the result does not fit in int64.
std::optional<std::int64_t> checked_pow(std::int64_t base, std::int64_t exp);
/// Exact n^a for integer a (negative a gives 1/n^|a|).
Rat rat_pow(std::int64_t n, std::int64_t a);

Rat make_rat(const Integer& num, const Integer& den);
/// "p/q" without whitespace, or "p" for integers.
std::string to_string(const Rat& q);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view text);

}  // namespace ramsum
