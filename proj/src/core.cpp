#include "ramsum/core.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ramsum/errors.hpp"

namespace ramsum {

namespace {

void require_positive(std::int64_t n, const char* what) {
    if (n <= 0) {
        throw precondition_error(std::string(what) + ": argument must be positive, got " + std::to_string(n));
    }
}

// Divisor lists are pure functions of n, so the cache only saves repeated
// trial division. Entries are never erased (unordered_map nodes are stable),
// which keeps returned references valid for the life of the process.
struct DivisorCache {
    std::mutex mu;
    std::unordered_map<std::int64_t, std::vector<std::int64_t>> divisors;
};

DivisorCache& cache() {
    static DivisorCache c;
    return c;
}

Factorization trial_division(std::int64_t n) {
    Factorization f;
    f.value = n;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

}  // namespace

Factorization factorize(std::int64_t n) {
    require_positive(n, "factorize");
    return trial_division(n);
}

int mobius(std::int64_t n) {
    require_positive(n, "mobius");
    auto f = trial_division(n);
    for (const auto& pp : f.factors) {
        if (pp.exponent > 1) return 0;
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::int64_t euler_phi(std::int64_t n) {
    require_positive(n, "euler_phi");
    std::int64_t result = n;
    for (const auto& pp : trial_division(n).factors) {
        result = result / pp.prime * (pp.prime - 1);
    }
    return result;
}

const std::vector<std::int64_t>& divisors(std::int64_t n) {
    require_positive(n, "divisors");
    auto& c = cache();
    {
        std::lock_guard lock(c.mu);
        if (auto it = c.divisors.find(n); it != c.divisors.end()) return it->second;
    }
    std::vector<std::int64_t> ds{1};
    for (const auto& pp : trial_division(n).factors) {
        const std::size_t count = ds.size();
        std::int64_t pk = 1;
        for (int e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < count; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());

    std::lock_guard lock(c.mu);
    auto [it, inserted] = c.divisors.emplace(n, std::move(ds));
    return it->second;
}

std::int64_t gcd_many(std::span<const std::int64_t> ns) {
    if (ns.empty()) throw precondition_error("gcd_many: empty list");
    std::int64_t g = 0;
    for (auto n : ns) {
        require_positive(n, "gcd_many");
        g = std::gcd(g, n);
    }
    return g;
}

std::int64_t lcm_many(std::span<const std::int64_t> ns) {
    if (ns.empty()) throw precondition_error("lcm_many: empty list");
    std::int64_t l = 1;
    for (auto n : ns) {
        require_positive(n, "lcm_many");
        l = std::lcm(l, n);
    }
    return l;
}

std::optional<std::int64_t> checked_pow(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw precondition_error("checked_pow: negative exponent");
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(result, base, &result)) return std::nullopt;
        if (result == 1 || result == 0) return result;  // base is 0 or 1
    }
    return result;
}

std::optional<std::int64_t> gamma_root(std::int64_t n, std::int64_t gamma) {
    require_positive(n, "gamma_root");
    if (gamma <= 0) throw precondition_error("gamma_root: exponent must be positive");
    if (gamma == 1 || n == 1) return n;
    if (gamma >= 63) return std::nullopt;  // 2^63 already overflows
    auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(gamma))));
    for (std::int64_t d = std::max<std::int64_t>(1, guess - 1); d <= guess + 1; ++d) {
        auto p = checked_pow(d, gamma);
        if (p && *p == n) return d;
    }
    return std::nullopt;
}

Rat rat_pow(std::int64_t n, std::int64_t a) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(a < 0 ? -a : a));
    if (a >= 0) return Rat(p);
    return make_rat(Integer(1), p);
}

Rat make_rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(10); }

Rat parse_rat(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    auto parse_int = [](const std::string& part) {
        if (part.empty()) throw std::invalid_argument("malformed rational");
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw std::invalid_argument("malformed rational");
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + part);
        }
        return Integer(part[0] == '+' ? part.substr(1) : part);
    };
    if (slash == std::string::npos) return Rat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace ramsum
