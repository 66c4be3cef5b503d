#include "ramsum/arithfn.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "ramsum/errors.hpp"

namespace ramsum {

struct ArithFn::State {
    std::string label;
    Evaluator evaluator;
    Multiplicativity kind;
    mutable std::mutex mu;
    mutable std::unordered_map<std::int64_t, Rat> memo;
};

Multiplicativity weakest(Multiplicativity a, Multiplicativity b) {
    return static_cast<int>(a) < static_cast<int>(b) ? a : b;
}

namespace {

Multiplicativity at_most_multiplicative(Multiplicativity k) {
    return weakest(k, Multiplicativity::multiplicative);
}

void require_gamma(std::int64_t gamma, const char* what) {
    if (gamma < 1) throw precondition_error(std::string(what) + ": gamma must be >= 1");
}

}  // namespace

ArithFn::ArithFn(std::string label, Evaluator evaluator, Multiplicativity kind)
    : state_(std::make_shared<State>()) {
    state_->label = std::move(label);
    state_->evaluator = std::move(evaluator);
    state_->kind = kind;
}

const std::string& ArithFn::label() const { return state_->label; }

Multiplicativity ArithFn::kind() const { return state_->kind; }

Rat ArithFn::operator()(std::int64_t n) const {
    if (n <= 0) {
        throw precondition_error(state_->label + ": evaluated at nonpositive argument " + std::to_string(n));
    }
    {
        std::lock_guard lock(state_->mu);
        if (auto it = state_->memo.find(n); it != state_->memo.end()) return it->second;
    }
    // Evaluate without holding the lock: evaluators call other functions.
    Rat value = state_->evaluator(n);
    std::lock_guard lock(state_->mu);
    state_->memo.try_emplace(n, value);
    return value;
}

namespace fn {

ArithFn mu() {
    return ArithFn("mu", [](std::int64_t n) { return Rat(mobius(n)); }, Multiplicativity::multiplicative);
}

ArithFn eps() {
    return ArithFn("eps", [](std::int64_t n) { return Rat(n == 1 ? 1 : 0); },
                   Multiplicativity::completely_multiplicative);
}

ArithFn one() {
    return ArithFn("one", [](std::int64_t) { return Rat(1); }, Multiplicativity::completely_multiplicative);
}

ArithFn phi() {
    return ArithFn("phi", [](std::int64_t n) { return Rat(static_cast<long>(euler_phi(n))); },
                   Multiplicativity::multiplicative);
}

ArithFn power(std::int64_t a) {
    return ArithFn("pow:" + std::to_string(a), [a](std::int64_t n) { return rat_pow(n, a); },
                   Multiplicativity::completely_multiplicative);
}

// n and m coprime: mn is a gamma-th power iff both are, by unique
// factorization, so a_gamma is multiplicative. It is not completely
// multiplicative (a_2(2) a_2(2) = 0 but a_2(4) = 1).
ArithFn a_gamma(std::int64_t gamma) {
    require_gamma(gamma, "agamma");
    return ArithFn("agamma:" + std::to_string(gamma),
                   [gamma](std::int64_t n) { return Rat(is_gamma_power(n, gamma) ? 1 : 0); },
                   gamma == 1 ? Multiplicativity::completely_multiplicative : Multiplicativity::multiplicative);
}

ArithFn builtin(const std::string& name, std::span<const std::int64_t> params) {
    auto expect = [&](std::size_t count) {
        if (params.size() != count) {
            throw std::invalid_argument("builtin '" + name + "' expects " + std::to_string(count) + " parameter(s)");
        }
    };
    if (name == "mu") return expect(0), mu();
    if (name == "eps") return expect(0), eps();
    if (name == "one") return expect(0), one();
    if (name == "phi") return expect(0), phi();
    if (name == "pow") return expect(1), power(params[0]);
    if (name == "agamma") return expect(1), a_gamma(params[0]);
    throw std::invalid_argument("unknown arithmetic function '" + name + "'");
}

}  // namespace fn

ArithFn pointwise_mul(const ArithFn& f, const ArithFn& g) {
    return ArithFn("(" + f.label() + "." + g.label() + ")", [f, g](std::int64_t n) { return Rat(f(n) * g(n)); },
                   weakest(f.kind(), g.kind()));
}

ArithFn dirichlet(const ArithFn& f, const ArithFn& g) {
    return ArithFn("dirichlet(" + f.label() + "," + g.label() + ")",
                   [f, g](std::int64_t n) {
                       Rat sum = 0;
                       for (auto d : divisors(n)) sum += f(d) * g(n / d);
                       return sum;
                   },
                   at_most_multiplicative(weakest(f.kind(), g.kind())));
}

ArithFn restrict_gamma(const ArithFn& f, std::int64_t gamma) {
    require_gamma(gamma, "restrict");
    if (gamma == 1) return f;
    return ArithFn("restrict:" + std::to_string(gamma) + "(" + f.label() + ")",
                   [f, gamma](std::int64_t n) { return is_gamma_power(n, gamma) ? f(n) : Rat(0); },
                   at_most_multiplicative(f.kind()));
}

ArithFn dilate(const ArithFn& f, std::int64_t gamma) {
    require_gamma(gamma, "dilate");
    if (gamma == 1) return f;
    return ArithFn("dilate:" + std::to_string(gamma) + "(" + f.label() + ")",
                   [f, gamma](std::int64_t n) {
                       auto p = checked_pow(n, gamma);
                       if (!p) throw std::overflow_error("dilate: argument power exceeds 64 bits");
                       return f(*p);
                   },
                   f.kind());
}

ArithFn inflate(const ArithFn& f, std::int64_t gamma) {
    require_gamma(gamma, "inflate");
    if (gamma == 1) return f;
    return ArithFn("inflate:" + std::to_string(gamma) + "(" + f.label() + ")",
                   [f, gamma](std::int64_t n) {
                       auto root = gamma_root(n, gamma);
                       return root ? f(*root) : Rat(0);
                   },
                   at_most_multiplicative(f.kind()));
}

ArithFn gamma_convolve(const ArithFn& g, const ArithFn& f, std::int64_t gamma) {
    require_gamma(gamma, "gconv");
    return ArithFn("gconv:" + std::to_string(gamma) + "(" + g.label() + "," + f.label() + ")",
                   [g, f, gamma](std::int64_t n) {
                       Rat sum = 0;
                       for (auto q : divisors(n)) {
                           if (is_gamma_power(q, gamma)) sum += f(n / q) * g(q);
                       }
                       return sum;
                   },
                   at_most_multiplicative(weakest(f.kind(), g.kind())));
}

ArithFn chain_gamma_convolve(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas) {
    if (fs.size() != gammas.size() + 1) {
        throw arity_error("chain_gamma_convolve: need exactly one more function than gammas");
    }
    ArithFn acc = fs.back();
    for (std::size_t j = gammas.size(); j-- > 0;) acc = gamma_convolve(acc, fs[j], gammas[j]);
    return acc;
}

}  // namespace ramsum
