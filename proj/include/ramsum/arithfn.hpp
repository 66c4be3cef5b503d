#pragma once

/**
 * @file arithfn.hpp
 * @brief Single-variable arithmetic functions over exact rationals.
 *
 * An ArithFn is an immutable handle: copies share one evaluator and one
 * memo table. Multiplicativity flags are set by the constructor that built
 * the function and are never inferred from sampled values; the Euler-product
 * evaluation path trusts them.
 */

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ramsum/core.hpp"

namespace ramsum {

enum class Multiplicativity {
    none,
    multiplicative,            ///< f(mn) = f(m)f(n) for coprime m, n; f(1) = 1
    completely_multiplicative  ///< f(mn) = f(m)f(n) for all m, n
};

/// Meet of two flags: the strongest property both operands have.
Multiplicativity weakest(Multiplicativity a, Multiplicativity b);

class ArithFn {
public:
    using Evaluator = std::function<Rat(std::int64_t)>;

    ArithFn(std::string label, Evaluator evaluator, Multiplicativity kind = Multiplicativity::none);

    /// Value at n >= 1. Throws precondition_error for n <= 0.
    Rat operator()(std::int64_t n) const;

    const std::string& label() const;
    Multiplicativity kind() const;
    bool is_multiplicative() const { return kind() != Multiplicativity::none; }
    bool is_completely_multiplicative() const { return kind() == Multiplicativity::completely_multiplicative; }

private:
    struct State;
    std::shared_ptr<State> state_;
};

namespace fn {

ArithFn mu();
ArithFn eps();
/// delta^0, the constant function 1.
ArithFn one();
ArithFn phi();
/// delta^a(n) = n^a for integer a.
ArithFn power(std::int64_t a);
/// Indicator of perfect gamma-th powers.
ArithFn a_gamma(std::int64_t gamma);

/// Named constructor: "mu", "eps", "one", "phi" take no parameters,
/// "pow" and "agamma" take one. Throws std::invalid_argument otherwise.
ArithFn builtin(const std::string& name, std::span<const std::int64_t> params = {});

}  // namespace fn

/// (fg)(n) = f(n) g(n).
ArithFn pointwise_mul(const ArithFn& f, const ArithFn& g);
/// (f*g)(n) = sum over d | n of f(d) g(n/d).
ArithFn dirichlet(const ArithFn& f, const ArithFn& g);
/// f^[gamma] = a_gamma * f (pointwise).
ArithFn restrict_gamma(const ArithFn& f, std::int64_t gamma);
/// f^<gamma>(n) = f(n^gamma).
ArithFn dilate(const ArithFn& f, std::int64_t gamma);
/// n -> f(d) when n = d^gamma, else 0. Shifts a Dirichlet series from
/// L(gamma s; f) to L(s; inflate(f, gamma)).
ArithFn inflate(const ArithFn& f, std::int64_t gamma);

/// (g *_gamma f)(n) = sum over d^gamma | n of f(n/d^gamma) g(d^gamma).
ArithFn gamma_convolve(const ArithFn& g, const ArithFn& f, std::int64_t gamma);

/// f_{m+1} *_{gamma_m} ... *_{gamma_1} f_1, folded as
/// (f_{m+1} *_{gamma_m} ... *_{gamma_2} f_2) *_{gamma_1} f_1.
/// fs has one more element than gammas; for empty gammas returns fs[0].
ArithFn chain_gamma_convolve(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas);

}  // namespace ramsum
