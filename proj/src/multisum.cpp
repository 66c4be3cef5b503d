#include "ramsum/multisum.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "ramsum/errors.hpp"

namespace ramsum {

WeightFn::WeightFn(std::string label, std::size_t arity, Evaluator evaluator, bool multiplicative)
    : label_(std::move(label)), arity_(arity), evaluator_(std::move(evaluator)), multiplicative_(multiplicative) {
    if (arity_ == 0) throw precondition_error("weight function must have positive arity");
}

Rat WeightFn::operator()(std::span<const std::int64_t> args) const {
    if (args.size() != arity_) {
        throw arity_error("weight " + label_ + ": expected " + std::to_string(arity_) + " arguments, got " +
                          std::to_string(args.size()));
    }
    return evaluator_(args);
}

namespace weight {

WeightFn unit(std::size_t arity) {
    return WeightFn("1", arity, [](std::span<const std::int64_t>) { return Rat(1); }, true);
}

WeightFn product(std::vector<ArithFn> factors) {
    bool mult = true;
    std::string label = "prod(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        mult = mult && factors[i].is_multiplicative();
        label += (i ? "," : "") + factors[i].label();
    }
    label += ")";
    const std::size_t arity = factors.size();
    return WeightFn(label, arity,
                    [hs = std::move(factors)](std::span<const std::int64_t> xs) {
                        Rat v = 1;
                        for (std::size_t i = 0; i < hs.size(); ++i) v *= hs[i](xs[i]);
                        return v;
                    },
                    mult);
}

WeightFn of_gcd(ArithFn h, std::size_t arity) {
    const bool mult = h.is_multiplicative();
    std::string label = h.label() + "(gcd)";
    return WeightFn(std::move(label), arity,
                    [h = std::move(h)](std::span<const std::int64_t> xs) { return h(gcd_many(xs)); }, mult);
}

}  // namespace weight

void MultiSumSpec::validate() const {
    if (fns.size() != gammas.size() + 1) {
        throw arity_error("multiple sum needs m+1 functions for m gammas (got " + std::to_string(fns.size()) +
                          " functions, " + std::to_string(gammas.size()) + " gammas)");
    }
    for (auto g : gammas) {
        if (g < 1) throw precondition_error("gamma components must be >= 1");
    }
    if (weight && weight->arity() != gammas.size()) {
        throw arity_error("weight arity must equal m = " + std::to_string(gammas.size()));
    }
}

std::string MultiSumSpec::label() const {
    std::ostringstream out;
    out << "S[gammas=(";
    for (std::size_t i = 0; i < gammas.size(); ++i) out << (i ? "," : "") << gammas[i];
    out << "); fns=(";
    for (std::size_t i = 0; i < fns.size(); ++i) out << (i ? "," : "") << fns[i].label();
    out << ")";
    if (weight) out << "; weight=" << weight->label();
    out << "]";
    return out.str();
}

MultiSumSpec make_spec(std::vector<ArithFn> fns, std::vector<std::int64_t> gammas, std::optional<WeightFn> weight) {
    MultiSumSpec spec{std::move(gammas), std::move(fns), std::move(weight)};
    spec.validate();
    return spec;
}

namespace {

void check_arguments(const MultiSumSpec& spec, std::span<const std::int64_t> ns) {
    spec.validate();
    if (ns.size() != spec.m() + 1) {
        throw arity_error("multiple sum with m = " + std::to_string(spec.m()) + " takes " +
                          std::to_string(spec.m() + 1) + " arguments, got " + std::to_string(ns.size()));
    }
    for (auto n : ns) {
        if (n < 1) throw precondition_error("multiple sum arguments must be positive");
    }
}

// Depth-first walk over chains D_m | ... | D_1 | n_1. At depth j the next
// power D_{j+1} must divide both the previous link and n_{j+2}; every other
// constraint from the gcd condition is implied by the chain.
class ChainWalk {
public:
    ChainWalk(const MultiSumSpec& spec, std::span<const std::int64_t> ns)
        : spec_(spec), ns_(ns), powers_(spec.m()) {}

    Rat run() {
        walk(0, ns_[0], Rat(1));
        return total_;
    }

private:
    void walk(std::size_t j, std::int64_t prev, const Rat& acc) {
        const std::size_t m = spec_.m();
        if (j == m) {
            Rat term = acc * spec_.fns[m](prev);
            if (spec_.weight && term != 0) term *= (*spec_.weight)(powers_);
            total_ += term;
            return;
        }
        const std::int64_t bound = std::gcd(prev, ns_[j + 1]);
        for (auto d : divisors(bound)) {
            if (!is_gamma_power(d, spec_.gammas[j])) continue;
            Rat v = spec_.fns[j](prev / d);
            if (v == 0) continue;
            powers_[j] = d;
            walk(j + 1, d, acc * v);
        }
    }

    const MultiSumSpec& spec_;
    std::span<const std::int64_t> ns_;
    std::vector<std::int64_t> powers_;
    Rat total_ = 0;
};

std::vector<std::int64_t> head(std::span<const std::int64_t> v, std::size_t count) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<ArithFn> head(std::span<const ArithFn> v, std::size_t count) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace

Rat eval(const MultiSumSpec& spec, std::span<const std::int64_t> ns) {
    check_arguments(spec, ns);
    return ChainWalk(spec, ns).run();
}

bool is_multiplicative(const MultiSumSpec& spec) {
    for (const auto& f : spec.fns) {
        if (!f.is_multiplicative()) return false;
    }
    return !spec.weight || spec.weight->is_multiplicative();
}

Rat eval_euler(const MultiSumSpec& spec, std::span<const std::int64_t> ns) {
    check_arguments(spec, ns);
    if (!is_multiplicative(spec)) {
        throw precondition_error("Euler product evaluation needs multiplicative functions and weight");
    }
    std::map<std::int64_t, std::vector<std::int64_t>> prime_parts;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        for (const auto& pp : factorize(ns[i]).factors) {
            auto& parts = prime_parts.try_emplace(pp.prime, ns.size(), 1).first->second;
            parts[i] = *checked_pow(pp.prime, pp.exponent);
        }
    }
    Rat result = 1;
    for (const auto& [p, parts] : prime_parts) {
        result *= ChainWalk(spec, parts).run();
        if (result == 0) break;
    }
    return result;
}

MultiSumSpec sigma_spec(std::span<const std::int64_t> gammas, std::span<const std::int64_t> as) {
    if (as.size() != gammas.size()) throw arity_error("sigma: need one exponent per gamma");
    std::vector<ArithFn> fns;
    std::int64_t cumulative = 0;
    fns.push_back(fn::power(0));
    for (auto a : as) {
        cumulative += a;
        fns.push_back(fn::power(cumulative));
    }
    return make_spec(std::move(fns), {gammas.begin(), gammas.end()});
}

Rat sigma_multi(std::span<const std::int64_t> gammas, std::span<const std::int64_t> as,
                std::span<const std::int64_t> ns) {
    return eval(sigma_spec(gammas, as), ns);
}

MultiSumSpec gen_ramanujan_spec(std::size_t m, std::size_t k, std::span<const std::int64_t> as) {
    if (k > m + 1) throw precondition_error("c^a_{m+1,k} needs 0 <= k <= m+1");
    if (as.size() != m + 1 - k) throw arity_error("c^a_{m+1,k} needs m+1-k exponents");
    std::vector<ArithFn> fns(k, fn::mu());
    for (auto a : as) fns.push_back(fn::power(a));
    return make_spec(std::move(fns), std::vector<std::int64_t>(m, 1));
}

Rat gen_ramanujan(std::size_t m, std::size_t k, std::span<const std::int64_t> as, std::span<const std::int64_t> ns) {
    return eval(gen_ramanujan_spec(m, k, as), ns);
}

MultiSumSpec f_of_gcd_spec(const ArithFn& f, std::size_t arity) {
    if (arity == 0) throw arity_error("f o gcd needs at least one argument");
    if (arity == 1) return make_spec({f}, {});
    std::vector<ArithFn> fns{fn::one()};
    for (std::size_t i = 0; i + 2 < arity; ++i) fns.push_back(fn::eps());
    fns.push_back(dirichlet(f, fn::mu()));
    return make_spec(std::move(fns), std::vector<std::int64_t>(arity - 1, 1));
}

TwoRoutes f_of_gcd(const ArithFn& f, std::span<const std::int64_t> ns) {
    return {f(gcd_many(ns)), eval(f_of_gcd_spec(f, ns.size()), ns)};
}

std::pair<Rat, Rat> degeneracy_check(const MultiSumSpec& spec, std::span<const std::int64_t> ns, Degeneracy kind,
                                     std::size_t j) {
    check_arguments(spec, ns);
    if (spec.weight) throw precondition_error("degeneracy identities are stated for unweighted sums");
    const std::size_t m = spec.m();
    std::span<const ArithFn> fns(spec.fns);
    std::span<const std::int64_t> gammas(spec.gammas);

    switch (kind) {
    case Degeneracy::recursion: {
        if (j < 1 || j > m + 1) throw precondition_error("recursion identity needs 1 <= j <= m+1");
        MultiSumSpec inner = make_spec({fns.begin() + static_cast<std::ptrdiff_t>(j - 1), fns.end()},
                                       {gammas.begin() + static_cast<std::ptrdiff_t>(j - 1), gammas.end()});
        std::vector<std::int64_t> tail(ns.begin() + static_cast<std::ptrdiff_t>(j), ns.end());
        ArithFn folded("inner", [inner, tail](std::int64_t x) {
            std::vector<std::int64_t> args{x};
            args.insert(args.end(), tail.begin(), tail.end());
            return eval(inner, args);
        });
        auto outer_fns = head(fns, j - 1);
        outer_fns.push_back(folded);
        MultiSumSpec outer = make_spec(std::move(outer_fns), head(gammas, j - 1));
        return {eval(spec, ns), eval(outer, head(ns, j))};
    }
    case Degeneracy::unit_slot: {
        if (j < 1 || j > m + 1) throw precondition_error("unit-slot identity needs 1 <= j <= m+1");
        std::vector<std::int64_t> args(ns.begin(), ns.end());
        args[j - 1] = 1;
        Rat rhs = 1;
        for (std::size_t i = j - 1; i <= m; ++i) rhs *= fns[i](1);
        if (j >= 2) rhs *= eval(make_spec(head(fns, j - 1), head(gammas, j - 2)), head(ns, j - 1));
        return {eval(spec, args), rhs};
    }
    case Degeneracy::eps_slot: {
        if (j < 2 || j > m + 1) throw precondition_error("eps-slot identity needs 2 <= j <= m+1");
        MultiSumSpec with_eps = spec;
        with_eps.fns[j - 1] = fn::eps();
        Rat lhs = eval(with_eps, ns);
        if (j == m + 1) return {lhs, eval(make_spec(head(fns, m), head(gammas, m - 1)), head(ns, m))};
        std::vector<ArithFn> reduced_fns = head(fns, j - 1);
        reduced_fns.insert(reduced_fns.end(), fns.begin() + static_cast<std::ptrdiff_t>(j), fns.end());
        std::vector<std::int64_t> reduced_gammas = head(gammas, j - 1);
        reduced_gammas.back() = std::lcm(gammas[j - 2], gammas[j - 1]);
        reduced_gammas.insert(reduced_gammas.end(), gammas.begin() + static_cast<std::ptrdiff_t>(j), gammas.end());
        std::vector<std::int64_t> args = head(ns, j - 1);
        args.push_back(std::gcd(ns[j - 1], ns[j]));
        args.insert(args.end(), ns.begin() + static_cast<std::ptrdiff_t>(j + 1), ns.end());
        return {lhs, eval(make_spec(std::move(reduced_fns), std::move(reduced_gammas)), args)};
    }
    case Degeneracy::divisible_first: {
        for (auto n : ns) {
            if (n % ns[0] != 0) throw precondition_error("divisible-first identity needs n_1 | n_j for all j");
        }
        return {eval(spec, ns), chain_gamma_convolve(fns, gammas)(ns[0])};
    }
    }
    throw precondition_error("unknown degeneracy identity");
}

namespace {

std::vector<ArithFn> transposed_functions(const MultiSumSpec& spec, bool restricted) {
    const std::size_t m = spec.m();
    std::vector<ArithFn> out;
    for (std::size_t i = 0; i <= m; ++i) {
        ArithFn f = spec.fns[m - i];
        if (restricted && m - i >= 1) f = restrict_gamma(f, spec.gammas[m - i - 1]);
        out.push_back(i == 0 ? f : pointwise_mul(fn::power(static_cast<std::int64_t>(i)), f));
    }
    return out;
}

std::int64_t exact_quotient(std::int64_t n, std::int64_t d) {
    if (d <= 0 || n % d != 0) throw precondition_error("transposed weight evaluated off the divisors of n_1");
    return n / d;
}

}  // namespace

MultiSumSpec transpose_data(const MultiSumSpec& spec, std::int64_t n1) {
    spec.validate();
    if (n1 < 1) throw precondition_error("transpose_data needs n_1 >= 1");
    const std::size_t m = spec.m();
    if (m == 0) return make_spec(transposed_functions(spec, false), {});

    WeightFn w("t" + (spec.weight ? spec.weight->label() : std::string("1")) + "@" + std::to_string(n1), m,
               [gammas = spec.gammas, xi = spec.weight, n1, m](std::span<const std::int64_t> ds) {
                   for (std::size_t j = 1; j <= m; ++j) {
                       if (!is_gamma_power(exact_quotient(n1, ds[m - j]), gammas[j - 1])) return Rat(0);
                   }
                   if (!xi) return Rat(1);
                   std::vector<std::int64_t> args(m);
                   for (std::size_t i = 0; i < m; ++i) args[i] = exact_quotient(n1, ds[m - 1 - i]);
                   return (*xi)(args);
               });
    return make_spec(transposed_functions(spec, false), std::vector<std::int64_t>(m, 1), std::move(w));
}

MultiSumSpec transpose_data_restricted(const MultiSumSpec& spec, std::int64_t n1) {
    spec.validate();
    if (n1 < 1) throw precondition_error("transpose_data needs n_1 >= 1");
    if (!is_dividing_chain(spec.gammas)) {
        throw precondition_error("restricted transpose needs 1 | gamma_1 | ... | gamma_m");
    }
    const std::size_t m = spec.m();
    if (m == 0) return make_spec(transposed_functions(spec, true), {});
    std::optional<WeightFn> w;
    if (spec.weight) {
        w = WeightFn("t" + spec.weight->label() + "@" + std::to_string(n1), m,
                     [xi = *spec.weight, n1, m](std::span<const std::int64_t> ds) {
                         std::vector<std::int64_t> args(m);
                         for (std::size_t i = 0; i < m; ++i) args[i] = exact_quotient(n1, ds[m - 1 - i]);
                         return xi(args);
                     });
    }
    return make_spec(transposed_functions(spec, true), std::vector<std::int64_t>(m, 1), std::move(w));
}

bool is_dividing_chain(std::span<const std::int64_t> gammas, std::int64_t gamma0) {
    std::int64_t prev = gamma0;
    for (auto g : gammas) {
        if (prev < 1 || g % prev != 0) return false;
        prev = g;
    }
    return true;
}

}  // namespace ramsum
