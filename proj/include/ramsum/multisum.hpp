#pragma once

/**
 * @file multisum.hpp
 * @brief The multiple Ramanujan sum S^{gamma,xi}_f and its relatives.
 *
 * For gamma = (g_1..g_m), f = (f_1..f_{m+1}) and an optional m-variable
 * weight xi,
 *
 *   S(n_1..n_{m+1}) = sum xi(D_1..D_m) f_1(n_1/D_1) f_2(D_1/D_2) ... f_{m+1}(D_m)
 *
 * over D_j = d_j^{g_j} dividing gcd(n_1..n_{j+1}). Terms with a
 * non-integral ratio vanish, so only chains D_m | ... | D_1 | n_1
 * contribute. With m = 0, S(n) = f_1(n).
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramsum/arithfn.hpp"
#include "ramsum/core.hpp"

namespace ramsum {

/// Arithmetic function of a fixed number of variables.
class WeightFn {
public:
    using Evaluator = std::function<Rat(std::span<const std::int64_t>)>;

    WeightFn(std::string label, std::size_t arity, Evaluator evaluator, bool multiplicative = false);

    Rat operator()(std::span<const std::int64_t> args) const;

    std::size_t arity() const { return arity_; }
    bool is_multiplicative() const { return multiplicative_; }
    const std::string& label() const { return label_; }

private:
    std::string label_;
    std::size_t arity_;
    Evaluator evaluator_;
    bool multiplicative_;
};

namespace weight {

/// The constant weight 1_m.
WeightFn unit(std::size_t arity);
/// xi(x_1..x_k) = h_1(x_1) ... h_k(x_k); multiplicative when every h_i is.
WeightFn product(std::vector<ArithFn> factors);
/// xi(x_1..x_k) = h(gcd(x_1..x_k)); multiplicative when h is.
WeightFn of_gcd(ArithFn h, std::size_t arity);

}  // namespace weight

struct MultiSumSpec {
    std::vector<std::int64_t> gammas;
    std::vector<ArithFn> fns;
    /// Absent means xi == 1.
    std::optional<WeightFn> weight;

    std::size_t m() const { return gammas.size(); }
    /// Throws arity_error / precondition_error for malformed specs.
    void validate() const;
    std::string label() const;
};

MultiSumSpec make_spec(std::vector<ArithFn> fns, std::vector<std::int64_t> gammas,
                       std::optional<WeightFn> weight = std::nullopt);

/// Direct evaluation by chain enumeration with divisibility pruning.
Rat eval(const MultiSumSpec& spec, std::span<const std::int64_t> ns);

/// True when every function (and the weight, if any) carries a
/// multiplicativity flag, so eval_euler applies.
bool is_multiplicative(const MultiSumSpec& spec);

/// Product over primes p | n_1...n_{m+1} of S at the p-parts of the
/// arguments. Throws precondition_error unless is_multiplicative(spec).
Rat eval_euler(const MultiSumSpec& spec, std::span<const std::int64_t> ns);

/// Spec of the multiple divisor function sigma^gamma_a:
/// f_j = delta^{a_0 + ... + a_{j-1}}, a_0 = 0.
MultiSumSpec sigma_spec(std::span<const std::int64_t> gammas, std::span<const std::int64_t> as);
Rat sigma_multi(std::span<const std::int64_t> gammas, std::span<const std::int64_t> as,
                std::span<const std::int64_t> ns);

/// Spec of c^a_{m+1,k}: k copies of mu followed by delta^{a_1}..delta^{a_{m+1-k}},
/// all gammas 1.
MultiSumSpec gen_ramanujan_spec(std::size_t m, std::size_t k, std::span<const std::int64_t> as);
Rat gen_ramanujan(std::size_t m, std::size_t k, std::span<const std::int64_t> as, std::span<const std::int64_t> ns);

/// (f o gcd) as a multiple sum of the given arity:
/// f_1 = delta^0, f_2..f_m = eps, f_{m+1} = f * mu (arity 1 gives the spec (f)).
MultiSumSpec f_of_gcd_spec(const ArithFn& f, std::size_t arity);

struct TwoRoutes {
    Rat direct;
    Rat via_sum;
};
/// f(gcd(ns)) computed directly and through f_of_gcd_spec.
TwoRoutes f_of_gcd(const ArithFn& f, std::span<const std::int64_t> ns);

enum class Degeneracy {
    recursion,        ///< (i): peel the tail into an inner sum, j in [1, m+1]
    unit_slot,        ///< (ii): n_j = 1, j in [1, m+1]
    eps_slot,         ///< (iii): f_j = eps collapses slots j, j+1, j in [2, m+1]
    divisible_first,  ///< (iv): n_1 | n_j for all j gives the chain convolution at n_1
};

/// Both sides (lhs, rhs) of a degeneracy identity. The spec must be
/// unweighted. For eps_slot the f_j of the spec is replaced by eps, and
/// the merged slot uses gamma lcm(g_{j-1}, g_j). j is ignored for
/// divisible_first.
std::pair<Rat, Rat> degeneracy_check(const MultiSumSpec& spec, std::span<const std::int64_t> ns, Degeneracy kind,
                                     std::size_t j);

/// Spec with function vector (delta^0 f_{m+1}, delta^1 f_m, ..., delta^m f_1),
/// all gammas 1, and weight
///   W(D_1..D_m) = prod_j a_{g_j}(n_1/D_{m+1-j}) * xi(n_1/D_m, ..., n_1/D_1).
/// Its values at (n_1, n_1/d_{m+1}, ..., n_1/d_2), scaled by n_1^{-m}, are the
/// even finite Fourier coefficients of the original sum modulo n_1.
MultiSumSpec transpose_data(const MultiSumSpec& spec, std::int64_t n1);

/// Alternative form of transpose_data valid when 1 | g_1 | ... | g_m: the
/// power restrictions move from the weight onto the functions,
/// (delta^0 f_{m+1}^[g_m], delta^1 f_m^[g_{m-1}], ..., delta^m f_1^[1]).
MultiSumSpec transpose_data_restricted(const MultiSumSpec& spec, std::int64_t n1);

/// True when gammas form a divisibility chain starting from gamma0.
bool is_dividing_chain(std::span<const std::int64_t> gammas, std::int64_t gamma0 = 1);

}  // namespace ramsum
