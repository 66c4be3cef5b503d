#pragma once

/**
 * @file dseries.hpp
 * @brief Formal multivariable Dirichlet series truncated at a per-variable bound.
 *
 * A TruncatedMDS of arity v and bound N stores the coefficient of
 * n_1^{-s_1} ... n_v^{-s_v} for every index with 1 <= n_i <= N. The
 * variables s_i never take numeric values: a series like
 * L(s_1 + s_2; f) is the embedding of f on the {1,2}-diagonal, a shift
 * s -> s - a multiplies coefficients by n^a, and L(2s; f) is the
 * embedding of inflate(f, 2).
 *
 * Products truncate per coordinate. Every factor is supported on indices
 * >= 1, so coefficients up to N are exactly the untruncated ones and
 * identities can be compared coefficient by coefficient. Identities with
 * a series in the denominator are checked after multiplying it across.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsum/arithfn.hpp"
#include "ramsum/core.hpp"
#include "ramsum/multisum.hpp"

namespace ramsum {

/// Nonempty subset of the variable positions {1..v}, stored sorted.
class VarMask {
public:
    explicit VarMask(std::vector<std::size_t> positions);
    /// Positions first..last inclusive.
    static VarMask range(std::size_t first, std::size_t last);

    const std::vector<std::size_t>& positions() const { return positions_; }

private:
    std::vector<std::size_t> positions_;
};

class TruncatedMDS {
public:
    TruncatedMDS(std::size_t arity, std::int64_t bound);

    std::size_t arity() const { return arity_; }
    std::int64_t bound() const { return bound_; }

    /// Coefficient at a 1-based multi-index; zero outside the bound.
    Rat at(std::span<const std::int64_t> index) const;
    void set(std::span<const std::int64_t> index, Rat value);
    void add(std::span<const std::int64_t> index, const Rat& value);

    std::size_t slot_count() const { return coeffs_.size(); }
    const Rat& at_slot(std::size_t slot) const { return coeffs_[slot]; }
    Rat& at_slot(std::size_t slot) { return coeffs_[slot]; }
    /// Multi-index of a flat slot; slots run in lexicographic index order.
    std::vector<std::int64_t> index_of(std::size_t slot) const;
    std::size_t slot_of(std::span<const std::int64_t> index) const;

    bool operator==(const TruncatedMDS& other) const;

private:
    std::size_t arity_;
    std::int64_t bound_;
    std::vector<Rat> coeffs_;
};

/// Default ceiling on the number of coefficient slots of a series.
inline constexpr std::size_t default_slot_ceiling = 1'000'000;

/// sum_n f(n) n^{-(sum of s_i over the mask)}.
TruncatedMDS embed(const ArithFn& f, const VarMask& mask, std::size_t arity, std::int64_t bound);
/// Multiplicative identity: coefficient 1 at (1..1).
TruncatedMDS unit_series(std::size_t arity, std::int64_t bound);

/// Dirichlet product, truncated per coordinate.
TruncatedMDS mul(const TruncatedMDS& a, const TruncatedMDS& b);
TruncatedMDS mul_all(std::span<const TruncatedMDS> factors);

/// Coefficients a_{gamma0}(n_1) S(n_1..n_{m+1}); no gamma0 means gamma0 = 1.
TruncatedMDS from_multisum(const MultiSumSpec& spec, std::int64_t bound, std::optional<std::int64_t> gamma0 = std::nullopt,
                           std::size_t slot_ceiling = default_slot_ceiling);

/// Single-variable series n -> A(n, ..., n).
TruncatedMDS diagonal(const TruncatedMDS& a);

struct Mismatch {
    std::vector<std::int64_t> index;
    Rat lhs;
    Rat rhs;
};

struct VerificationReport {
    std::string identity;
    std::int64_t bound = 0;
    /// Lexicographically first differing coefficient, if any.
    std::optional<Mismatch> first_mismatch;

    bool ok() const { return !first_mismatch; }
};

/// Two truncated series that an identity claims are equal.
struct IdentitySides {
    std::string identity;
    TruncatedMDS lhs;
    TruncatedMDS rhs;
};

VerificationReport compare(const IdentitySides& sides);

// Each *_sides builder assembles both sides of one identity; the matching
// verify_* runs compare() on them.

/// L(s; f_{m+1} *_{g_m} ... *_{g_1} f_1) = prod_j L(s; f_j^[g_{j-1}]), g_0 = 1.
/// Requires 1 | g_1 | ... | g_m.
IdentitySides gamma_chain_sides(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas, std::int64_t bound);
VerificationReport verify_prop_gamma_chain(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas,
                                           std::int64_t bound);

/// L(s; a_{g0} S) = prod_{j>=2} zeta(s_j) prod_{j>=1} L(s_1+..+s_j; f_j^[g_{j-1}]).
/// Requires g_0 | g_1 | ... | g_m.
IdentitySides multivariable_L_sides(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas,
                                    std::int64_t gamma0, std::int64_t bound);
VerificationReport verify_multivariable_L(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas,
                                          std::int64_t gamma0, std::int64_t bound);

/// zeta(s_1) L(s; c) = zeta(s_2) zeta(s_1 + s_2 - 1) for the classical sum.
IdentitySides classical_c_sides(std::int64_t bound);
/// L(s; sigma_a) = zeta(s_1) prod_{j>=2} zeta(s_j) zeta(s_1+..+s_j - a_1-..-a_{j-1}), all gammas 1.
IdentitySides divisor_L_sides(std::span<const std::int64_t> as, std::int64_t bound);

/// Series in the running variable n_j (1-based j) with the other arguments
/// fixed, against L(s; f_1) F_1 (j = 1) or zeta(s) S(..F_j) (j >= 2).
/// `fixed` lists the m remaining arguments in order.
IdentitySides phi_series_sides(const MultiSumSpec& spec, std::span<const std::int64_t> fixed, std::size_t j,
                               std::int64_t bound);
VerificationReport verify_phi_series(const MultiSumSpec& spec, std::span<const std::int64_t> fixed, std::size_t j,
                                     std::int64_t bound);

/// L((s1,s2); S_{f1,f2} S_{g1,g2}) L(2(s1+s2); (f1f2g1g2)^[g])
///   = zeta(s2) L(s1; f1g1) L(s1+s2; (f2g1)^[g]) L(s1+s2; (f1g2)^[g]) L(s1+s2; (f2g2)^[g]).
/// All four functions must be completely multiplicative.
IdentitySides double_series_sides(const ArithFn& f1, const ArithFn& f2, const ArithFn& g1, const ArithFn& g2,
                                  std::int64_t gamma, std::int64_t bound);
VerificationReport verify_double_series(const ArithFn& f1, const ArithFn& f2, const ArithFn& g1, const ArithFn& g2,
                                        std::int64_t gamma, std::int64_t bound);
/// Diagonal (single-variable) form of the same identity.
IdentitySides double_series_diagonal_sides(const ArithFn& f1, const ArithFn& f2, const ArithFn& g1, const ArithFn& g2,
                                           std::int64_t gamma, std::int64_t bound);

/// prod_{j=1..k} zeta(s_1+..+s_j) * sum_{n_1..n_k} c^a_{m+1,k}(n) n^{-s}
///   = prod_{j=2..k} zeta(s_j) * sum_{d | n_{k+1}} d^{a_1 - (s_1+..+s_k)} sigma_{a~}(d, n_{k+2}, ..).
/// `fixed` holds n_{k+1}..n_{m+1}. Requires 1 <= k <= m.
IdentitySides gen_ramanujan_series_sides(std::size_t m, std::size_t k, std::span<const std::int64_t> as,
                                         std::span<const std::int64_t> fixed, std::int64_t bound);
VerificationReport verify_gen_ramanujan_series(std::size_t m, std::size_t k, std::span<const std::int64_t> as,
                                               std::span<const std::int64_t> fixed, std::int64_t bound);

/// sum_{n_j} f(gcd(n)) n_j^{-s} = zeta(s) sum_{d | g} (f*mu)(d) d^{-s}, g = gcd of the fixed arguments.
IdentitySides f_gcd_series_sides(const ArithFn& f, std::span<const std::int64_t> fixed, std::int64_t bound);
/// zeta(s_1+..+s_v) L(s; f o gcd) = zeta(s_1)..zeta(s_v) L(s_1+..+s_v; f).
IdentitySides f_gcd_full_series_sides(const ArithFn& f, std::size_t arity, std::int64_t bound);
VerificationReport verify_f_gcd_series(const ArithFn& f, std::span<const std::int64_t> fixed, std::int64_t bound);
VerificationReport verify_f_gcd_full_series(const ArithFn& f, std::size_t arity, std::int64_t bound);

}  // namespace ramsum
