#include "ramsum/dseries.hpp"

#include <algorithm>
#include <numeric>

#include "ramsum/errors.hpp"

namespace ramsum {

VarMask::VarMask(std::vector<std::size_t> positions) : positions_(std::move(positions)) {
    if (positions_.empty()) throw precondition_error("variable mask must be nonempty");
    std::sort(positions_.begin(), positions_.end());
    positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
    if (positions_.front() < 1) throw precondition_error("variable positions are 1-based");
}

VarMask VarMask::range(std::size_t first, std::size_t last) {
    if (first < 1 || last < first) throw precondition_error("invalid variable range");
    std::vector<std::size_t> positions(last - first + 1);
    std::iota(positions.begin(), positions.end(), first);
    return VarMask(std::move(positions));
}

namespace {

// Hard limit independent of the configurable ceilings; keeps slot
// arithmetic far from overflow.
constexpr std::int64_t absolute_slot_limit = 50'000'000;

std::size_t slot_count_for(std::size_t arity, std::int64_t bound) {
    auto count = checked_pow(bound, static_cast<std::int64_t>(arity));
    if (!count || *count > absolute_slot_limit) {
        throw resource_error("series with arity " + std::to_string(arity) + " and bound " + std::to_string(bound) +
                             " has too many coefficients");
    }
    return static_cast<std::size_t>(*count);
}

void require_slot_ceiling(std::size_t arity, std::int64_t bound, std::size_t ceiling) {
    auto count = checked_pow(bound, static_cast<std::int64_t>(arity));
    if (!count || static_cast<std::uint64_t>(*count) > ceiling) {
        throw resource_error("N^arity = " + std::to_string(bound) + "^" + std::to_string(arity) +
                             " exceeds the coefficient ceiling " + std::to_string(ceiling));
    }
}

}  // namespace

TruncatedMDS::TruncatedMDS(std::size_t arity, std::int64_t bound) : arity_(arity), bound_(bound) {
    if (arity_ == 0) throw arity_error("series arity must be positive");
    if (bound_ < 1) throw precondition_error("truncation bound must be >= 1");
    coeffs_.assign(slot_count_for(arity_, bound_), Rat(0));
}

std::size_t TruncatedMDS::slot_of(std::span<const std::int64_t> index) const {
    if (index.size() != arity_) {
        throw arity_error("multi-index of length " + std::to_string(index.size()) + " for a series of arity " +
                          std::to_string(arity_));
    }
    std::size_t slot = 0;
    for (auto n : index) {
        if (n < 1 || n > bound_) throw precondition_error("multi-index outside the truncation bound");
        slot = slot * static_cast<std::size_t>(bound_) + static_cast<std::size_t>(n - 1);
    }
    return slot;
}

std::vector<std::int64_t> TruncatedMDS::index_of(std::size_t slot) const {
    std::vector<std::int64_t> index(arity_);
    for (std::size_t i = arity_; i-- > 0;) {
        index[i] = static_cast<std::int64_t>(slot % static_cast<std::size_t>(bound_)) + 1;
        slot /= static_cast<std::size_t>(bound_);
    }
    return index;
}

Rat TruncatedMDS::at(std::span<const std::int64_t> index) const {
    if (index.size() != arity_) throw arity_error("multi-index length does not match series arity");
    for (auto n : index) {
        if (n < 1) throw precondition_error("multi-index entries must be positive");
        if (n > bound_) return 0;
    }
    return coeffs_[slot_of(index)];
}

void TruncatedMDS::set(std::span<const std::int64_t> index, Rat value) { coeffs_[slot_of(index)] = std::move(value); }

void TruncatedMDS::add(std::span<const std::int64_t> index, const Rat& value) { coeffs_[slot_of(index)] += value; }

bool TruncatedMDS::operator==(const TruncatedMDS& other) const {
    return arity_ == other.arity_ && bound_ == other.bound_ && coeffs_ == other.coeffs_;
}

TruncatedMDS embed(const ArithFn& f, const VarMask& mask, std::size_t arity, std::int64_t bound) {
    if (mask.positions().back() > arity) throw arity_error("mask position beyond the series arity");
    TruncatedMDS out(arity, bound);
    std::vector<std::int64_t> index(arity, 1);
    for (std::int64_t n = 1; n <= bound; ++n) {
        for (auto p : mask.positions()) index[p - 1] = n;
        out.set(index, f(n));
    }
    return out;
}

TruncatedMDS unit_series(std::size_t arity, std::int64_t bound) {
    TruncatedMDS out(arity, bound);
    out.at_slot(0) = 1;
    return out;
}

namespace {

struct Term {
    std::vector<std::int64_t> index;
    const Rat* value;
};

// Nonzero terms in slot order, so first coordinates never decrease.
std::vector<Term> nonzero_terms(const TruncatedMDS& a) {
    std::vector<Term> terms;
    for (std::size_t s = 0; s < a.slot_count(); ++s) {
        if (a.at_slot(s) != 0) terms.push_back({a.index_of(s), &a.at_slot(s)});
    }
    return terms;
}

}  // namespace

TruncatedMDS mul(const TruncatedMDS& a, const TruncatedMDS& b) {
    if (a.arity() != b.arity()) throw arity_error("cannot multiply series of different arity");
    if (a.bound() != b.bound()) throw precondition_error("cannot multiply series with different bounds");
    const std::int64_t bound = a.bound();
    const std::size_t arity = a.arity();
    TruncatedMDS out(arity, bound);
    const auto ta = nonzero_terms(a);
    const auto tb = nonzero_terms(b);
    std::vector<std::int64_t> index(arity);
    for (const auto& x : ta) {
        for (const auto& y : tb) {
            if (x.index[0] * y.index[0] > bound) break;
            bool inside = true;
            for (std::size_t i = 0; i < arity; ++i) {
                index[i] = x.index[i] * y.index[i];
                if (index[i] > bound) {
                    inside = false;
                    break;
                }
            }
            if (inside) out.at_slot(out.slot_of(index)) += *x.value * *y.value;
        }
    }
    return out;
}

TruncatedMDS mul_all(std::span<const TruncatedMDS> factors) {
    if (factors.empty()) throw precondition_error("mul_all needs at least one factor");
    TruncatedMDS acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(acc, factors[i]);
    return acc;
}

TruncatedMDS from_multisum(const MultiSumSpec& spec, std::int64_t bound, std::optional<std::int64_t> gamma0,
                           std::size_t slot_ceiling) {
    spec.validate();
    if (gamma0 && *gamma0 < 1) throw precondition_error("gamma0 must be >= 1");
    const std::size_t arity = spec.m() + 1;
    require_slot_ceiling(arity, bound, slot_ceiling);
    TruncatedMDS out(arity, bound);
    for (std::size_t s = 0; s < out.slot_count(); ++s) {
        const auto index = out.index_of(s);
        if (gamma0 && !is_gamma_power(index[0], *gamma0)) continue;
        out.at_slot(s) = eval(spec, index);
    }
    return out;
}

TruncatedMDS diagonal(const TruncatedMDS& a) {
    TruncatedMDS out(1, a.bound());
    for (std::int64_t n = 1; n <= a.bound(); ++n) {
        std::vector<std::int64_t> index(a.arity(), n);
        out.at_slot(static_cast<std::size_t>(n - 1)) = a.at(index);
    }
    return out;
}

VerificationReport compare(const IdentitySides& sides) {
    const auto& lhs = sides.lhs;
    const auto& rhs = sides.rhs;
    if (lhs.arity() != rhs.arity()) throw arity_error("identity sides have different arity");
    if (lhs.bound() != rhs.bound()) throw precondition_error("identity sides have different bounds");
    VerificationReport report{sides.identity, lhs.bound(), std::nullopt};
    for (std::size_t s = 0; s < lhs.slot_count(); ++s) {
        if (lhs.at_slot(s) != rhs.at_slot(s)) {
            report.first_mismatch = Mismatch{lhs.index_of(s), lhs.at_slot(s), rhs.at_slot(s)};
            break;
        }
    }
    return report;
}

namespace {

ArithFn restricted(const ArithFn& f, std::int64_t gamma) { return restrict_gamma(f, gamma); }

TruncatedMDS zeta_at(std::size_t position, std::size_t arity, std::int64_t bound) {
    return embed(fn::one(), VarMask({position}), arity, bound);
}

void require_bound(std::int64_t bound) {
    if (bound < 1) throw precondition_error("truncation bound must be >= 1");
}

void require_function_count(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas) {
    if (fs.size() != gammas.size() + 1) throw arity_error("need m+1 functions for m gammas");
}

}  // namespace

IdentitySides gamma_chain_sides(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas,
                                std::int64_t bound) {
    require_bound(bound);
    require_function_count(fs, gammas);
    if (!is_dividing_chain(gammas, 1)) {
        throw precondition_error("gamma-chain product formula needs 1 | gamma_1 | ... | gamma_m");
    }
    TruncatedMDS lhs = embed(chain_gamma_convolve(fs, gammas), VarMask({1}), 1, bound);
    std::vector<TruncatedMDS> factors;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        const std::int64_t g = j == 0 ? 1 : gammas[j - 1];
        factors.push_back(embed(restricted(fs[j], g), VarMask({1}), 1, bound));
    }
    return {"gamma-chain", std::move(lhs), mul_all(factors)};
}

VerificationReport verify_prop_gamma_chain(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas,
                                           std::int64_t bound) {
    return compare(gamma_chain_sides(fs, gammas, bound));
}

IdentitySides multivariable_L_sides(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas,
                                    std::int64_t gamma0, std::int64_t bound) {
    require_bound(bound);
    require_function_count(fs, gammas);
    if (gamma0 < 1 || !is_dividing_chain(gammas, gamma0)) {
        throw precondition_error("multivariable L formula needs gamma_0 | gamma_1 | ... | gamma_m");
    }
    const std::size_t arity = fs.size();
    MultiSumSpec spec = make_spec({fs.begin(), fs.end()}, {gammas.begin(), gammas.end()});
    TruncatedMDS lhs = from_multisum(spec, bound, gamma0);
    std::vector<TruncatedMDS> factors;
    for (std::size_t j = 1; j <= arity; ++j) {
        const std::int64_t g = j == 1 ? gamma0 : gammas[j - 2];
        factors.push_back(embed(restricted(fs[j - 1], g), VarMask::range(1, j), arity, bound));
        if (j >= 2) factors.push_back(zeta_at(j, arity, bound));
    }
    return {"multivariable-L", std::move(lhs), mul_all(factors)};
}

VerificationReport verify_multivariable_L(std::span<const ArithFn> fs, std::span<const std::int64_t> gammas,
                                          std::int64_t gamma0, std::int64_t bound) {
    return compare(multivariable_L_sides(fs, gammas, gamma0, bound));
}

IdentitySides classical_c_sides(std::int64_t bound) {
    require_bound(bound);
    MultiSumSpec c = make_spec({fn::mu(), fn::power(1)}, {1});
    TruncatedMDS lhs = mul(zeta_at(1, 2, bound), from_multisum(c, bound));
    TruncatedMDS rhs = mul(zeta_at(2, 2, bound), embed(fn::power(1), VarMask({1, 2}), 2, bound));
    return {"classical-c", std::move(lhs), std::move(rhs)};
}

IdentitySides divisor_L_sides(std::span<const std::int64_t> as, std::int64_t bound) {
    require_bound(bound);
    const std::size_t arity = as.size() + 1;
    std::vector<std::int64_t> gammas(as.size(), 1);
    TruncatedMDS lhs = from_multisum(sigma_spec(gammas, as), bound);
    std::vector<TruncatedMDS> factors{zeta_at(1, arity, bound)};
    std::int64_t shift = 0;
    for (std::size_t j = 2; j <= arity; ++j) {
        shift += as[j - 2];
        factors.push_back(zeta_at(j, arity, bound));
        factors.push_back(embed(fn::power(shift), VarMask::range(1, j), arity, bound));
    }
    return {"divisor-L", std::move(lhs), mul_all(factors)};
}

namespace {

std::vector<std::int64_t> with_inserted(std::span<const std::int64_t> fixed, std::size_t position, std::int64_t k) {
    std::vector<std::int64_t> ns(fixed.begin(), fixed.end());
    ns.insert(ns.begin() + static_cast<std::ptrdiff_t>(position), k);
    return ns;
}

// S^{(g_from..g_m)}_{f_from..f_{m+1}}(x, tail), 0-based `from` into the
// function vector.
Rat tail_sum(const MultiSumSpec& spec, std::size_t from, std::int64_t x, std::span<const std::int64_t> tail) {
    MultiSumSpec inner = make_spec({spec.fns.begin() + static_cast<std::ptrdiff_t>(from), spec.fns.end()},
                                   {spec.gammas.begin() + static_cast<std::ptrdiff_t>(from), spec.gammas.end()});
    std::vector<std::int64_t> args{x};
    args.insert(args.end(), tail.begin(), tail.end());
    return eval(inner, args);
}

}  // namespace

IdentitySides phi_series_sides(const MultiSumSpec& spec, std::span<const std::int64_t> fixed, std::size_t j,
                               std::int64_t bound) {
    require_bound(bound);
    spec.validate();
    if (spec.weight) throw precondition_error("series in one argument is stated for unweighted sums");
    const std::size_t m = spec.m();
    if (j < 1 || j > m + 1) throw precondition_error("running variable index must satisfy 1 <= j <= m+1");
    if (fixed.size() != m) throw arity_error("need m fixed arguments besides the running one");
    for (auto n : fixed) {
        if (n < 1) throw precondition_error("fixed arguments must be positive");
    }

    TruncatedMDS lhs(1, bound);
    for (std::int64_t k = 1; k <= bound; ++k) {
        lhs.at_slot(static_cast<std::size_t>(k - 1)) = eval(spec, with_inserted(fixed, j - 1, k));
    }

    // Finite Dirichlet polynomial P with coefficient P(e) at e^{-s}; the
    // right-hand side is L(s; f_1) P for j = 1 and zeta(s) P otherwise.
    TruncatedMDS poly(1, bound);
    if (j == 1) {
        if (m == 0) {
            poly.at_slot(0) = 1;
        } else {
            const std::int64_t n2 = fixed[0];
            for (auto e : divisors(n2)) {
                if (e > bound || !is_gamma_power(e, spec.gammas[0])) continue;
                poly.at_slot(static_cast<std::size_t>(e - 1)) = tail_sum(spec, 1, e, fixed.subspan(1));
            }
        }
        TruncatedMDS rhs = mul(embed(spec.fns[0], VarMask({1}), 1, bound), poly);
        return {"phi-series", std::move(lhs), std::move(rhs)};
    }

    // j >= 2: fixed = (n_1..n_{j-1}, n_{j+1}..n_{m+1}).
    std::span<const std::int64_t> prefix = fixed.subspan(0, j - 1);
    std::span<const std::int64_t> suffix = fixed.subspan(j - 1);
    const std::int64_t gamma = spec.gammas[j - 2];
    const ArithFn& f_prev = spec.fns[j - 2];
    std::vector<ArithFn> outer_fns(spec.fns.begin(), spec.fns.begin() + static_cast<std::ptrdiff_t>(j - 2));
    std::vector<std::int64_t> outer_gammas(spec.gammas.begin(),
                                           spec.gammas.begin() + static_cast<std::ptrdiff_t>(j - 2));
    for (auto e : divisors(prefix[0])) {
        if (e > bound || !is_gamma_power(e, gamma)) continue;
        const Rat g = tail_sum(spec, j - 1, e, suffix);
        if (g == 0) continue;
        ArithFn last("F@" + std::to_string(e), [e, f_prev, g](std::int64_t y) {
            return y % e == 0 ? Rat(f_prev(y / e) * g) : Rat(0);
        });
        auto fns = outer_fns;
        fns.push_back(std::move(last));
        poly.at_slot(static_cast<std::size_t>(e - 1)) = eval(make_spec(std::move(fns), outer_gammas), prefix);
    }
    TruncatedMDS rhs = mul(zeta_at(1, 1, bound), poly);
    return {"phi-series", std::move(lhs), std::move(rhs)};
}

VerificationReport verify_phi_series(const MultiSumSpec& spec, std::span<const std::int64_t> fixed, std::size_t j,
                                     std::int64_t bound) {
    return compare(phi_series_sides(spec, fixed, j, bound));
}

namespace {

void require_completely_multiplicative(std::initializer_list<const ArithFn*> fs) {
    for (const auto* f : fs) {
        if (!f->is_completely_multiplicative()) {
            throw precondition_error("function " + f->label() + " is not flagged completely multiplicative");
        }
    }
}

ArithFn product4(const ArithFn& a, const ArithFn& b, const ArithFn& c, const ArithFn& d) {
    return pointwise_mul(pointwise_mul(a, b), pointwise_mul(c, d));
}

}  // namespace

IdentitySides double_series_sides(const ArithFn& f1, const ArithFn& f2, const ArithFn& g1, const ArithFn& g2,
                                  std::int64_t gamma, std::int64_t bound) {
    require_bound(bound);
    require_completely_multiplicative({&f1, &f2, &g1, &g2});
    if (gamma < 1) throw precondition_error("gamma must be >= 1");
    TruncatedMDS sf = from_multisum(make_spec({f1, f2}, {gamma}), bound);
    TruncatedMDS sg = from_multisum(make_spec({g1, g2}, {gamma}), bound);
    TruncatedMDS product(2, bound);
    for (std::size_t s = 0; s < product.slot_count(); ++s) product.at_slot(s) = sf.at_slot(s) * sg.at_slot(s);

    const VarMask both({1, 2});
    ArithFn square_factor = inflate(restricted(product4(f1, f2, g1, g2), gamma), 2);
    TruncatedMDS lhs = mul(product, embed(square_factor, both, 2, bound));
    std::vector<TruncatedMDS> factors{
        zeta_at(2, 2, bound),
        embed(pointwise_mul(f1, g1), VarMask({1}), 2, bound),
        embed(restricted(pointwise_mul(f2, g1), gamma), both, 2, bound),
        embed(restricted(pointwise_mul(f1, g2), gamma), both, 2, bound),
        embed(restricted(pointwise_mul(f2, g2), gamma), both, 2, bound),
    };
    return {"double-series", std::move(lhs), mul_all(factors)};
}

VerificationReport verify_double_series(const ArithFn& f1, const ArithFn& f2, const ArithFn& g1, const ArithFn& g2,
                                        std::int64_t gamma, std::int64_t bound) {
    return compare(double_series_sides(f1, f2, g1, g2, gamma, bound));
}

IdentitySides double_series_diagonal_sides(const ArithFn& f1, const ArithFn& f2, const ArithFn& g1, const ArithFn& g2,
                                           std::int64_t gamma, std::int64_t bound) {
    require_bound(bound);
    require_completely_multiplicative({&f1, &f2, &g1, &g2});
    if (gamma < 1) throw precondition_error("gamma must be >= 1");
    const VarMask first({1});
    ArithFn diag = pointwise_mul(gamma_convolve(f2, f1, gamma), gamma_convolve(g2, g1, gamma));
    ArithFn square_factor = inflate(restricted(product4(f1, f2, g1, g2), gamma), 2);
    TruncatedMDS lhs = mul(embed(diag, first, 1, bound), embed(square_factor, first, 1, bound));
    std::vector<TruncatedMDS> factors{
        embed(pointwise_mul(f1, g1), first, 1, bound),
        embed(restricted(pointwise_mul(f2, g1), gamma), first, 1, bound),
        embed(restricted(pointwise_mul(f1, g2), gamma), first, 1, bound),
        embed(restricted(pointwise_mul(f2, g2), gamma), first, 1, bound),
    };
    return {"double-series-diagonal", std::move(lhs), mul_all(factors)};
}

IdentitySides gen_ramanujan_series_sides(std::size_t m, std::size_t k, std::span<const std::int64_t> as,
                                         std::span<const std::int64_t> fixed, std::int64_t bound) {
    require_bound(bound);
    if (k < 1 || k > m) throw precondition_error("generalized Ramanujan series needs 1 <= k <= m");
    if (as.size() != m + 1 - k) throw arity_error("need m+1-k exponents");
    if (fixed.size() != m + 1 - k) throw arity_error("need the m+1-k arguments n_{k+1}..n_{m+1}");
    for (auto n : fixed) {
        if (n < 1) throw precondition_error("fixed arguments must be positive");
    }
    require_slot_ceiling(k, bound, default_slot_ceiling);
    MultiSumSpec spec = gen_ramanujan_spec(m, k, as);

    TruncatedMDS sums(k, bound);
    for (std::size_t s = 0; s < sums.slot_count(); ++s) {
        auto ns = sums.index_of(s);
        ns.insert(ns.end(), fixed.begin(), fixed.end());
        sums.at_slot(s) = eval(spec, ns);
    }
    std::vector<TruncatedMDS> left{sums};
    for (std::size_t j = 1; j <= k; ++j) left.push_back(embed(fn::one(), VarMask::range(1, j), k, bound));

    std::vector<std::int64_t> shifted;
    for (std::size_t i = 1; i < as.size(); ++i) shifted.push_back(as[i] - as[i - 1]);
    const std::vector<std::int64_t> gammas(shifted.size(), 1);
    TruncatedMDS finite(k, bound);
    for (auto d : divisors(fixed[0])) {
        if (d > bound) break;
        std::vector<std::int64_t> args{d};
        args.insert(args.end(), fixed.begin() + 1, fixed.end());
        finite.set(std::vector<std::int64_t>(k, d), rat_pow(d, as[0]) * sigma_multi(gammas, shifted, args));
    }
    std::vector<TruncatedMDS> right{finite};
    for (std::size_t j = 2; j <= k; ++j) right.push_back(zeta_at(j, k, bound));
    return {"gen-ramanujan", mul_all(left), mul_all(right)};
}

VerificationReport verify_gen_ramanujan_series(std::size_t m, std::size_t k, std::span<const std::int64_t> as,
                                               std::span<const std::int64_t> fixed, std::int64_t bound) {
    return compare(gen_ramanujan_series_sides(m, k, as, fixed, bound));
}

IdentitySides f_gcd_series_sides(const ArithFn& f, std::span<const std::int64_t> fixed, std::int64_t bound) {
    require_bound(bound);
    if (fixed.empty()) throw arity_error("f o gcd series needs at least one fixed argument");
    const std::int64_t g = gcd_many(fixed);
    MultiSumSpec spec = f_of_gcd_spec(f, fixed.size() + 1);
    TruncatedMDS lhs(1, bound);
    for (std::int64_t n = 1; n <= bound; ++n) {
        lhs.at_slot(static_cast<std::size_t>(n - 1)) = eval(spec, with_inserted(fixed, 0, n));
    }
    ArithFn h = dirichlet(f, fn::mu());
    TruncatedMDS poly(1, bound);
    for (auto d : divisors(g)) {
        if (d > bound) break;
        poly.at_slot(static_cast<std::size_t>(d - 1)) = h(d);
    }
    return {"f-gcd-series", std::move(lhs), mul(zeta_at(1, 1, bound), poly)};
}

IdentitySides f_gcd_full_series_sides(const ArithFn& f, std::size_t arity, std::int64_t bound) {
    require_bound(bound);
    if (arity < 2) throw arity_error("f o gcd tensor identity needs arity >= 2");
    const VarMask all = VarMask::range(1, arity);
    TruncatedMDS lhs = mul(embed(fn::one(), all, arity, bound), from_multisum(f_of_gcd_spec(f, arity), bound));
    std::vector<TruncatedMDS> factors{embed(f, all, arity, bound)};
    for (std::size_t j = 1; j <= arity; ++j) factors.push_back(zeta_at(j, arity, bound));
    return {"f-gcd-full", std::move(lhs), mul_all(factors)};
}

VerificationReport verify_f_gcd_series(const ArithFn& f, std::span<const std::int64_t> fixed, std::int64_t bound) {
    return compare(f_gcd_series_sides(f, fixed, bound));
}

VerificationReport verify_f_gcd_full_series(const ArithFn& f, std::size_t arity, std::int64_t bound) {
    return compare(f_gcd_full_series_sides(f, arity, bound));
}

}  // namespace ramsum
