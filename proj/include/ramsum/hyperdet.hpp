#pragma once

/**
 * @file hyperdet.hpp
 * @brief Cayley hyperdeterminants and the Smith-type determinant identities.
 *
 * For a k-dimensional hypermatrix A of order n and a signature I in {1..k},
 *
 *   det_I A = (1/n!) sum over (s_1..s_k) in S_n^k of
 *             prod_{j in I} sgn(s_j) * prod_{v=1..n} A(s_1(v), ..., s_k(v)).
 *
 * For k = 2 and I = {1,2} this is the ordinary determinant. Axes and
 * indices are 1-based throughout.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "ramsum/core.hpp"
#include "ramsum/multisum.hpp"

namespace ramsum {

class Hypermatrix {
public:
    /// Zero hypermatrix of dimension k and order n.
    Hypermatrix(std::size_t dim, std::size_t order);
    Hypermatrix(std::size_t dim, std::size_t order, std::vector<Rat> entries);
    /// Entries from f(i_1..i_k) in row-major order.
    static Hypermatrix generate(std::size_t dim, std::size_t order,
                                const std::function<Rat(std::span<const std::size_t>)>& f);

    std::size_t dim() const { return dim_; }
    std::size_t order() const { return order_; }
    const std::vector<Rat>& entries() const { return entries_; }

    const Rat& at(std::span<const std::size_t> index) const { return entries_[offset(index)]; }
    Rat& at(std::span<const std::size_t> index) { return entries_[offset(index)]; }
    /// Row-major position of a 1-based index tuple.
    std::size_t offset(std::span<const std::size_t> index) const;
    /// Inverse of offset.
    std::vector<std::size_t> index_of(std::size_t offset) const;

    bool operator==(const Hypermatrix& other) const = default;

private:
    std::size_t dim_;
    std::size_t order_;
    std::vector<Rat> entries_;
};

/// Set of 1-based axes with sign weight.
using Signature = std::set<std::size_t>;

/// Default ceiling on the (n!)^{k-1} permutation tuples enumerated.
inline constexpr std::uint64_t default_permutation_ceiling = 10'000'000;

/// det_I A. With |I| even the sum is taken with s_1 fixed to the identity,
/// which equals the full definition. With |I| odd and n >= 2 the value is 0.
/// Throws resource_error when (n!)^{k-1} exceeds the ceiling.
Rat hyperdet(const Hypermatrix& a, const Signature& signature,
             std::uint64_t ceiling = default_permutation_ceiling);

/// Ordinary determinant of a dimension-2 hypermatrix by fraction-free
/// elimination over the rationals.
Rat matrix_determinant(const Hypermatrix& a);

/// (AB)(i_1..i_{k+l-2}) = sum_j A(i_1..i_{k-1}, j) B(j, i_k..i_{k+l-2}).
Hypermatrix cayley_product(const Hypermatrix& a, const Hypermatrix& b);

/// A^{(l)}_C by the recursion A^{(l)}(i_1..i_k) = (A^{(l-1)} C)(i_2..i_k, i_1).
Hypermatrix iterate_AC(const Hypermatrix& a, const Hypermatrix& c, std::size_t l);
/// A^{(l)}_C by the closed form sum_j A(i_{l+1}..i_k, j_1..j_l) prod_h C(j_h, i_h).
Hypermatrix iterate_AC_closed(const Hypermatrix& a, const Hypermatrix& c, std::size_t l);

/// B(i_1..i_k) = A(p(i_1), ..., p(i_k)); p is a 1-based permutation of {1..n}.
/// det_I B = det_I A.
Hypermatrix permute_order(const Hypermatrix& a, std::span<const std::size_t> p);
/// B(i_1..i_k) = A(i_{p(1)}, ..., i_{p(k)}); p is a 1-based permutation of
/// {1..k}. det_I B = det_{p^{-1}(I)} A.
Hypermatrix permute_axes(const Hypermatrix& a, std::span<const std::size_t> p);
/// p^{-1}(I) for a 1-based permutation p.
Signature preimage(const Signature& signature, std::span<const std::size_t> p);

/// Strictly increasing positive integers containing every divisor of each member.
class FactorClosedSet {
public:
    /// Throws precondition_error unless xs is factor-closed (any order, no duplicates).
    explicit FactorClosedSet(std::vector<std::int64_t> xs);

    const std::vector<std::int64_t>& elements() const { return xs_; }
    std::size_t size() const { return xs_.size(); }

private:
    std::vector<std::int64_t> xs_;
};

/// True when xs contains every divisor of each member. Throws
/// precondition_error for duplicates or non-positive entries.
bool is_factor_closed(std::span<const std::int64_t> xs);
/// Smallest factor-closed superset of xs.
FactorClosedSet factor_closure(std::span<const std::int64_t> xs);

/// Entry (i_1..i_{m+1}) = S(x_{i_1}, ..., x_{i_{m+1}}).
Hypermatrix build_S_hypermatrix(const MultiSumSpec& spec, const FactorClosedSet& s);

/// {2..m+1} for even m, {1..m+1} for odd m.
Signature smith_signature(std::size_t m);

/// (det_I of the S hypermatrix,
///  (f_1(1)..f_m(1))^n prod_v xi(x_v..x_v) f_{m+1}^[lcm(gammas)](x_v)).
/// A supplied signature must equal smith_signature(m).
std::pair<Rat, Rat> smith_hyperdet_check(const MultiSumSpec& spec, const FactorClosedSet& s,
                                         const std::optional<Signature>& signature = std::nullopt);

/// F(r_1..r_m; n) with the arguments in blocks of sizes k_1..k_m, block j
/// even modulo r_j.
using BlockEvenFn = std::function<Rat(std::span<const std::int64_t> moduli, std::span<const std::int64_t> args)>;

/// Both sides of the block-even determinant identity:
///   det_I B = (x_1..x_n)^{|k|} det_{I~} alpha,
/// with B(i) = F(x_{i_1..i_m}; x_{i_{m+1}}, ...), alpha(i_1..i_m) the
/// coefficient at (x_{i_1} repeated k_1 times, ...), and j in I~ iff
/// [j in I] + k_j is odd. Requires {m+1..m+|k|} in I and |I| even; F is
/// checked to be even for every tuple of moduli drawn from S.
std::pair<Rat, Rat> even_hyperdet_check(const BlockEvenFn& f, std::span<const std::size_t> ks,
                                        const FactorClosedSet& s, const Signature& signature);

/// I~ of the block-even identity.
Signature reduced_signature(std::span<const std::size_t> ks, const Signature& signature);

}  // namespace ramsum
