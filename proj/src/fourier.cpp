#include "ramsum/fourier.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <utility>

#include "ramsum/errors.hpp"

namespace ramsum {

Integer ramanujan_c(std::int64_t k, std::int64_t n) {
    if (k < 1 || n < 1) throw precondition_error("ramanujan_c: arguments must be positive");
    Integer sum = 0;
    for (auto d : divisors(std::gcd(k, n))) {
        const int mu = mobius(k / d);
        if (mu != 0) sum += Integer(static_cast<long>(d)) * mu;
    }
    return sum;
}

std::complex<double> unit_root(std::int64_t r, std::int64_t n) {
    const std::int64_t residue = ((n % r) + r) % r;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(residue) / static_cast<double>(r);
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> ramanujan_c_expsum(std::int64_t k, std::int64_t n) {
    if (k < 1 || n < 1) throw precondition_error("ramanujan_c_expsum: arguments must be positive");
    std::complex<double> sum = 0.0;
    const std::int64_t nk = n % k;
    for (std::int64_t l = 1; l <= k; ++l) {
        if (std::gcd(l, k) == 1) sum += unit_root(k, nk * l);
    }
    return sum;
}

Integer c_interval_sum(std::int64_t n, std::int64_t e, std::int64_t d) {
    if (n < 1 || e < 1 || d < 1) throw precondition_error("c_interval_sum: arguments must be positive");
    if (n % e != 0 || n % d != 0) throw precondition_error("c_interval_sum: needs e | n and d | n");
    Integer sum = 0;
    for (auto delta : divisors(n)) {
        if (delta % e == 0) sum += ramanujan_c(n / delta, n / d);
    }
    return sum;
}

std::size_t EvenCoeffTable::total_arity() const { return std::accumulate(arities.begin(), arities.end(), std::size_t{0}); }

Rat EvenCoeffTable::at(std::span<const std::int64_t> ds) const {
    auto it = coeffs.find(std::vector<std::int64_t>(ds.begin(), ds.end()));
    return it == coeffs.end() ? Rat(0) : it->second;
}

namespace {

void check_blocks(std::span<const std::int64_t> moduli, std::span<const std::size_t> arities) {
    if (moduli.size() != arities.size()) throw arity_error("need one block size per modulus");
    for (auto r : moduli) {
        if (r < 1) throw precondition_error("moduli must be positive");
    }
}

// Modulus of each flat position.
std::vector<std::int64_t> position_moduli(std::span<const std::int64_t> moduli, std::span<const std::size_t> arities) {
    std::vector<std::int64_t> out;
    for (std::size_t j = 0; j < moduli.size(); ++j) out.insert(out.end(), arities[j], moduli[j]);
    return out;
}

// Calls visit(tuple) for every tuple with entry i drawn from choices[i],
// in lexicographic order.
template <typename Visit>
void for_each_tuple(const std::vector<std::vector<std::int64_t>>& choices, Visit&& visit) {
    std::vector<std::size_t> idx(choices.size(), 0);
    std::vector<std::int64_t> tuple(choices.size());
    for (const auto& c : choices) {
        if (c.empty()) return;
    }
    while (true) {
        for (std::size_t i = 0; i < choices.size(); ++i) tuple[i] = choices[i][idx[i]];
        visit(std::as_const(tuple));
        std::size_t pos = choices.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < choices[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (choices.empty()) return;
    }
}

std::vector<std::int64_t> range_1_to(std::int64_t r) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

Rat scale_inverse(std::span<const std::int64_t> position_mods) {
    Integer denom = 1;
    for (auto r : position_mods) denom *= static_cast<long>(r);
    return make_rat(Integer(1), denom);
}

}  // namespace

std::vector<std::vector<std::int64_t>> divisor_tuples(std::span<const std::int64_t> moduli,
                                                      std::span<const std::size_t> arities) {
    check_blocks(moduli, arities);
    std::vector<std::vector<std::int64_t>> choices;
    for (auto r : position_moduli(moduli, arities)) choices.push_back(divisors(r));
    std::vector<std::vector<std::int64_t>> out;
    for_each_tuple(choices, [&](const std::vector<std::int64_t>& t) { out.push_back(t); });
    return out;
}

void require_even(const MultiFn& F, std::span<const std::int64_t> moduli, std::span<const std::size_t> arities) {
    check_blocks(moduli, arities);
    const auto mods = position_moduli(moduli, arities);
    std::vector<std::vector<std::int64_t>> choices;
    for (auto r : mods) choices.push_back(range_1_to(2 * r));
    std::vector<std::int64_t> reduced(mods.size());
    for_each_tuple(choices, [&](const std::vector<std::int64_t>& ns) {
        for (std::size_t i = 0; i < ns.size(); ++i) reduced[i] = std::gcd(ns[i], mods[i]);
        if (F(ns) != F(reduced)) throw precondition_error("function is not even modulo the given moduli");
    });
}

Rat general_even_coeff_at(const MultiFn& F, std::span<const std::int64_t> moduli, std::span<const std::size_t> arities,
                          std::span<const std::int64_t> ds) {
    check_blocks(moduli, arities);
    const auto mods = position_moduli(moduli, arities);
    if (ds.size() != mods.size()) throw arity_error("coefficient index has the wrong length");
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (ds[i] < 1 || mods[i] % ds[i] != 0) throw precondition_error("coefficient index must divide its modulus");
    }
    Rat sum = 0;
    for (const auto& deltas : divisor_tuples(moduli, arities)) {
        Integer kernel = 1;
        for (std::size_t i = 0; i < deltas.size() && kernel != 0; ++i) {
            kernel *= ramanujan_c(mods[i] / deltas[i], mods[i] / ds[i]);
        }
        if (kernel != 0) sum += F(deltas) * kernel;
    }
    return sum * scale_inverse(mods);
}

EvenCoeffTable general_even_coeffs(const MultiFn& F, std::span<const std::int64_t> moduli,
                                   std::span<const std::size_t> arities) {
    require_even(F, moduli, arities);
    const auto mods = position_moduli(moduli, arities);
    const auto tuples = divisor_tuples(moduli, arities);

    std::map<std::pair<std::int64_t, std::int64_t>, Integer> c_memo;
    auto c = [&c_memo](std::int64_t k, std::int64_t n) -> const Integer& {
        auto it = c_memo.find({k, n});
        if (it == c_memo.end()) it = c_memo.emplace(std::pair{k, n}, ramanujan_c(k, n)).first;
        return it->second;
    };

    std::vector<Rat> values;
    values.reserve(tuples.size());
    for (const auto& t : tuples) values.push_back(F(t));

    EvenCoeffTable table{{moduli.begin(), moduli.end()}, {arities.begin(), arities.end()}, {}};
    const Rat scale = scale_inverse(mods);
    for (const auto& ds : tuples) {
        Rat sum = 0;
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            if (values[t] == 0) continue;
            Integer kernel = 1;
            for (std::size_t i = 0; i < ds.size() && kernel != 0; ++i) {
                kernel *= c(mods[i] / tuples[t][i], mods[i] / ds[i]);
            }
            if (kernel != 0) sum += values[t] * kernel;
        }
        table.coeffs.emplace(ds, sum * scale);
    }
    return table;
}

EvenCoeffTable even_coeffs(const MultiFn& F, std::int64_t r, std::size_t m) {
    const std::int64_t moduli[] = {r};
    const std::size_t arities[] = {m};
    return general_even_coeffs(F, moduli, arities);
}

Rat reconstruct_even(const EvenCoeffTable& table, std::span<const std::int64_t> ns) {
    if (ns.size() != table.total_arity()) throw arity_error("reconstruct_even: argument count mismatch");
    Rat sum = 0;
    for (const auto& [ds, alpha] : table.coeffs) {
        if (alpha == 0) continue;
        Integer kernel = 1;
        for (std::size_t i = 0; i < ds.size() && kernel != 0; ++i) kernel *= ramanujan_c(ds[i], ns[i]);
        if (kernel != 0) sum += alpha * kernel;
    }
    return sum;
}

PeriodicCoeffTable periodic_coeffs(const ComplexMultiFn& F, std::int64_t r, std::size_t m) {
    if (r < 1) throw precondition_error("periodic_coeffs: modulus must be positive");
    std::vector<std::vector<std::int64_t>> choices(m, range_1_to(r));
    std::vector<std::pair<std::vector<std::int64_t>, std::complex<double>>> samples;
    for_each_tuple(choices, [&](const std::vector<std::int64_t>& ns) { samples.emplace_back(ns, F(ns)); });

    PeriodicCoeffTable table{r, m, {}};
    const double scale = 1.0 / std::pow(static_cast<double>(r), static_cast<double>(m));
    for_each_tuple(choices, [&](const std::vector<std::int64_t>& ls) {
        std::complex<double> sum = 0.0;
        for (const auto& [ns, value] : samples) {
            std::int64_t phase = 0;
            for (std::size_t i = 0; i < m; ++i) phase = (phase + ns[i] * ls[i]) % r;
            sum += value * unit_root(r, -phase);
        }
        table.coeffs.emplace(ls, sum * scale);
    });
    return table;
}

std::complex<double> reconstruct_periodic(const PeriodicCoeffTable& table, std::span<const std::int64_t> ns) {
    if (ns.size() != table.arity) throw arity_error("reconstruct_periodic: argument count mismatch");
    std::complex<double> sum = 0.0;
    for (const auto& [ls, a] : table.coeffs) {
        std::int64_t phase = 0;
        for (std::size_t i = 0; i < ls.size(); ++i) phase = (phase + (ns[i] % table.modulus) * ls[i]) % table.modulus;
        sum += a * unit_root(table.modulus, phase);
    }
    return sum;
}

namespace {

Rat inverse_power(std::int64_t n, std::size_t m) { return rat_pow(n, -static_cast<std::int64_t>(m)); }

}  // namespace

EvenCoeffTable ffc_of_S(const MultiSumSpec& spec, std::int64_t n1) {
    const MultiSumSpec transposed = transpose_data(spec, n1);
    const std::size_t m = spec.m();
    const std::int64_t moduli[] = {n1};
    const std::size_t arities[] = {m};
    EvenCoeffTable table{{n1}, {m}, {}};
    const Rat scale = inverse_power(n1, m);
    std::vector<std::int64_t> args(m + 1);
    args[0] = n1;
    for (const auto& ds : divisor_tuples(moduli, arities)) {
        for (std::size_t i = 0; i < m; ++i) args[1 + i] = n1 / ds[m - 1 - i];
        table.coeffs.emplace(ds, eval(transposed, args) * scale);
    }
    return table;
}

EvenCoeffTable ffc_of_S_direct(const MultiSumSpec& spec, std::int64_t n1) {
    spec.validate();
    const std::size_t m = spec.m();
    MultiFn F = [&spec, n1](std::span<const std::int64_t> rest) {
        std::vector<std::int64_t> args{n1};
        args.insert(args.end(), rest.begin(), rest.end());
        return eval(spec, args);
    };
    return even_coeffs(F, n1, m);
}

PeriodicCoeffTable periodic_ffc_of_S(const MultiSumSpec& spec, std::int64_t n1) {
    const MultiSumSpec transposed = transpose_data(spec, n1);
    const std::size_t m = spec.m();
    PeriodicCoeffTable table{n1, m, {}};
    const Rat scale = inverse_power(n1, m);
    std::vector<std::vector<std::int64_t>> choices(m, range_1_to(n1));
    std::vector<std::int64_t> args(m + 1);
    args[0] = n1;
    for_each_tuple(choices, [&](const std::vector<std::int64_t>& ls) {
        for (std::size_t i = 0; i < m; ++i) args[1 + i] = ls[m - 1 - i];
        const Rat value = eval(transposed, args) * scale;
        table.coeffs.emplace(ls, std::complex<double>(value.get_d(), 0.0));
    });
    return table;
}

}  // namespace ramsum
