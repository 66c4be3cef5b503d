#pragma once

/**
 * @file fourier.hpp
 * @brief Finite Fourier expansions of periodic and even arithmetic functions.
 *
 * A function F(r; n_1..n_k) is even (mod r) when it only depends on
 * gcd(n_i, r). Such functions expand over the Ramanujan-sum kernel
 *
 *   F(r; n) = sum over d_i | r of alpha_r(d_1..d_k) c(d_1, n_1) ... c(d_k, n_k)
 *
 * with rational coefficients. The generalized form groups the variables in
 * blocks of sizes k_1..k_m, block j being even modulo its own r_j. Periodic
 * functions expand over exponentials; that path is floating point and is
 * only used for cross-checks.
 */

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ramsum/core.hpp"
#include "ramsum/multisum.hpp"

namespace ramsum {

/// Ramanujan sum c(k, n) by the divisor formula sum_{d | gcd(k,n)} mu(k/d) d.
Integer ramanujan_c(std::int64_t k, std::int64_t n);
/// c(k, n) as the exponential sum over reduced residues l mod k of e(k, nl).
std::complex<double> ramanujan_c_expsum(std::int64_t k, std::int64_t n);

/// sum over e | delta | n of c(n/delta, n/d). Requires e | n and d | n.
Integer c_interval_sum(std::int64_t n, std::int64_t e, std::int64_t d);

/// Function of a flat argument tuple (the blocks concatenated).
using MultiFn = std::function<Rat(std::span<const std::int64_t>)>;

/// Even finite Fourier coefficients. Keys are concatenated divisor tuples
/// (block 1 first), each entry dividing its block modulus. std::map keeps
/// them in lexicographic order.
struct EvenCoeffTable {
    std::vector<std::int64_t> moduli;  ///< r_1..r_m
    std::vector<std::size_t> arities;  ///< k_1..k_m
    std::map<std::vector<std::int64_t>, Rat> coeffs;

    std::size_t total_arity() const;
    /// Coefficient for a divisor tuple; zero when the key is absent.
    Rat at(std::span<const std::int64_t> ds) const;
};

/// Throws precondition_error unless F(n) == F(gcd(n, r)) for every tuple
/// n in prod {1..2 r_j}^{k_j}; the second period catches non-periodic F.
void require_even(const MultiFn& F, std::span<const std::int64_t> moduli, std::span<const std::size_t> arities);

/// Coefficients of an m-variable function even mod r.
EvenCoeffTable even_coeffs(const MultiFn& F, std::int64_t r, std::size_t m);
/// Coefficients for the block form (moduli r_j, block sizes k_j).
EvenCoeffTable general_even_coeffs(const MultiFn& F, std::span<const std::int64_t> moduli,
                                   std::span<const std::size_t> arities);
/// One coefficient of the block form, without the evenness check.
Rat general_even_coeff_at(const MultiFn& F, std::span<const std::int64_t> moduli, std::span<const std::size_t> arities,
                          std::span<const std::int64_t> ds);

/// sum over the table of alpha(d) prod c(d_i, n_i).
Rat reconstruct_even(const EvenCoeffTable& table, std::span<const std::int64_t> ns);

using ComplexMultiFn = std::function<std::complex<double>(std::span<const std::int64_t>)>;

struct PeriodicCoeffTable {
    std::int64_t modulus = 1;
    std::size_t arity = 0;
    /// Keyed by residue tuples (l_1..l_k) in {1..r}^k.
    std::map<std::vector<std::int64_t>, std::complex<double>> coeffs;
};

PeriodicCoeffTable periodic_coeffs(const ComplexMultiFn& F, std::int64_t r, std::size_t m);
std::complex<double> reconstruct_periodic(const PeriodicCoeffTable& table, std::span<const std::int64_t> ns);

/// e(r, n) = exp(2 pi i n / r).
std::complex<double> unit_root(std::int64_t r, std::int64_t n);

/// Even coefficients of n -> S^{gamma,xi}_f(n1, n) modulo n1 by the closed
/// form n1^{-m} S'(n1, n1/d_{m+1}, ..., n1/d_2), S' the transposed sum.
EvenCoeffTable ffc_of_S(const MultiSumSpec& spec, std::int64_t n1);
/// The same table computed from the defining coefficient formula applied to
/// the values of S, for cross-checking.
EvenCoeffTable ffc_of_S_direct(const MultiSumSpec& spec, std::int64_t n1);
/// Exponential coefficients a(l_2..l_{m+1}) = n1^{-m} S'(n1, l_{m+1}, ..., l_2).
PeriodicCoeffTable periodic_ffc_of_S(const MultiSumSpec& spec, std::int64_t n1);

/// Every tuple of divisors of the block moduli, lexicographic.
std::vector<std::vector<std::int64_t>> divisor_tuples(std::span<const std::int64_t> moduli,
                                                      std::span<const std::size_t> arities);

}  // namespace ramsum
