// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: ramsum_acceptance <path-to-ramsum-cli> <golden-dir>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ramsum/dseries.hpp"
#include "ramsum/fourier.hpp"
#include "ramsum/hyperdet.hpp"
#include "ramsum/multisum.hpp"
#include "support/oracles.hpp"

using namespace ramsum;
using namespace ramsum::testing;

namespace {

constexpr double complex_tolerance = 1e-9;
constexpr double budget_c1_seconds = 5.0;
constexpr double budget_c2_seconds = 60.0;
constexpr double budget_c8_c9_seconds = 120.0;

struct Result {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string tuple_str(std::span<const std::int64_t> xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + ")";
}

std::string fixed2(double x) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << x;
    return os.str();
}

// Calls visit for every tuple in [1, max]^size.
void for_grid(std::size_t size, std::int64_t max, const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> t(size, 1);
    while (true) {
        visit(t);
        std::size_t i = size;
        while (i > 0 && t[i - 1] == max) t[--i] = 1;
        if (i == 0) return;
        ++t[i - 1];
    }
}

// ---------------------------------------------------------------------------

Result criterion_1() {
    Result r;
    const auto start = Clock::now();
    std::size_t cases = 0;
    for (std::int64_t k = 1; k <= 100; ++k) {
        for (std::int64_t n = 1; n <= 100; ++n) {
            const double exact = ramanujan_c(k, n).get_d();
            const auto approx = ramanujan_c_expsum(k, n);
            if (std::abs(approx - exact) >= complex_tolerance) r.fail("c(" + std::to_string(k) + "," + std::to_string(n) + ")");
            ++cases;
        }
    }
    const double t = seconds_since(start);
    if (t >= budget_c1_seconds) r.fail("over time budget");
    if (r.pass) r.detail = std::to_string(cases) + " cases in " + fixed2(t) + " s";
    return r;
}

// Specs: 17 with m = 1, 17 with m = 2, 16 with m = 3; every other spec weighted.
// m = 1, 2 and the first two m = 3 specs cover [1,40]^{m+1}; the other m = 3
// specs cover [1,16]^4 plus 100000 seeded tuples in [1,40]^4.
constexpr int full_m3_specs = 2;

Result criterion_2() {
    Result r;
    const auto start = Clock::now();
    Rng rng(2002);
    const auto pool = function_pool();
    std::size_t specs = 0, points = 0;
    for (std::size_t m = 1; m <= 3; ++m) {
        const int count = m == 3 ? 16 : 17;
        for (int s = 0; s < count; ++s) {
            const auto spec = random_spec(rng, m, pool, 3, s % 2 == 1);
            ++specs;
            auto check = [&](const std::vector<std::int64_t>& ns) {
                ++points;
                if (eval(spec, ns) != brute_S(spec, ns)) r.fail(spec.label() + " at " + tuple_str(ns));
            };
            if (m < 3 || s < full_m3_specs) {
                for_grid(m + 1, 40, check);
            } else {
                for_grid(4, 16, check);
                for (int i = 0; i < 100000; ++i) check(random_tuple(rng, 4, 40));
            }
        }
    }
    const double t = seconds_since(start);
    if (t >= budget_c2_seconds) r.fail("over time budget");
    if (r.pass) r.detail = std::to_string(specs) + " specs, " + std::to_string(points) + " tuples in " + fixed2(t) + " s";
    return r;
}

Result criterion_3() {
    Result r;
    Rng rng(3003);
    const auto pool = multiplicative_pool();
    int pairs = 0;
    while (pairs < 500) {
        const std::size_t m = rng.below(3);
        const auto spec = random_spec(rng, m, pool, 3, m > 0 && rng.coin());
        const auto a = random_tuple(rng, m + 1, 100);
        const auto b = random_tuple(rng, m + 1, 100);
        const std::int64_t pa = std::accumulate(a.begin(), a.end(), std::int64_t{1}, std::multiplies<>());
        const std::int64_t pb = std::accumulate(b.begin(), b.end(), std::int64_t{1}, std::multiplies<>());
        if (std::gcd(pa, pb) != 1) continue;
        ++pairs;
        std::vector<std::int64_t> ab(m + 1);
        for (std::size_t i = 0; i <= m; ++i) ab[i] = a[i] * b[i];
        const Rat whole = eval(spec, ab);
        if (whole != eval(spec, a) * eval(spec, b)) r.fail(spec.label() + " at " + tuple_str(a) + "*" + tuple_str(b));
        if (eval_euler(spec, ab) != whole) r.fail("Euler product path for " + spec.label());
    }
    if (r.pass) r.detail = std::to_string(pairs) + " coprime pairs, 0 failures";
    return r;
}

Result criterion_4() {
    Result r;
    Rng rng(4004);
    const auto pool = function_pool();
    int counts[4] = {0, 0, 0, 0};
    const Degeneracy kinds[4] = {Degeneracy::recursion, Degeneracy::unit_slot, Degeneracy::eps_slot,
                                 Degeneracy::divisible_first};
    const char* names[4] = {"recursion", "unit-slot", "eps-slot", "divisible-first"};
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t m = 1 + rng.below(3);
        const auto spec = random_spec(rng, m, pool, 3, false);
        const auto ns = random_tuple(rng, m + 1, 100);
        for (int kind = 0; kind < 4; ++kind) {
            std::size_t j = 0;
            auto args = ns;
            switch (kinds[kind]) {
            case Degeneracy::recursion:
                j = 1 + rng.below(m + 1);
                break;
            case Degeneracy::unit_slot:
                j = 1 + rng.below(m + 1);
                args[j - 1] = 1;
                break;
            case Degeneracy::eps_slot:
                j = 2 + rng.below(m);
                break;
            case Degeneracy::divisible_first:
                args[0] = rng.between(1, 20);
                for (std::size_t i = 1; i <= m; ++i) args[i] = args[0] * rng.between(1, 100 / args[0]);
                break;
            }
            const auto [lhs, rhs] = degeneracy_check(spec, args, kinds[kind], j);
            ++counts[kind];
            if (lhs != rhs) r.fail(std::string(names[kind]) + " for " + spec.label() + " at " + tuple_str(args));
        }
    }
    int diagonal = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const auto spec = random_spec(rng, 1 + rng.below(3), pool, 3, false);
        const auto h = chain_gamma_convolve(spec.fns, spec.gammas);
        for (std::int64_t n = 1; n <= 300; ++n) {
            ++diagonal;
            if (eval(spec, std::vector<std::int64_t>(spec.m() + 1, n)) != h(n)) {
                r.fail("diagonal for " + spec.label() + " at " + std::to_string(n));
            }
        }
    }
    if (r.pass) {
        r.detail = std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" + std::to_string(counts[2]) + "/" +
                   std::to_string(counts[3]) + " instances of (i)-(iv), " + std::to_string(diagonal) + " diagonal points";
    }
    return r;
}

Result criterion_5() {
    Result r;
    Rng rng(5005);
    const auto pool = function_pool();
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + trial % 2;
        const auto spec = random_spec(rng, m, pool, 3, rng.coin());
        const std::int64_t n1 = rng.between(1, 30);
        if (ffc_of_S(spec, n1).coeffs != ffc_of_S_direct(spec, n1).coeffs) {
            r.fail(spec.label() + " mod " + std::to_string(n1));
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + rng.below(3);
        std::vector<ArithFn> fs;
        for (std::size_t j = 0; j <= m; ++j) fs.push_back(rng.pick(pool));
        std::optional<WeightFn> w;
        if (rng.coin()) w = weight::of_gcd(rng.pick(pool), m);
        const auto spec = make_spec(fs, random_chain(rng, m, 1, 6), w);
        const std::int64_t n1 = rng.between(1, 64);
        const auto a = transpose_data(spec, n1);
        const auto b = transpose_data_restricted(spec, n1);
        for (int s = 0; s < 10; ++s) {
            auto ns = random_tuple(rng, m + 1, 64);
            ns[0] = n1;
            if (eval(a, ns) != eval(b, ns)) r.fail("chain remark for " + spec.label() + " at " + tuple_str(ns));
        }
    }
    if (r.pass) r.detail = "100 specs, 50 dividing-chain instances";
    return r;
}

Result criterion_6() {
    Result r;
    std::size_t triples = 0;
    for (std::int64_t n = 1; n <= 60; ++n) {
        for (auto e : divisors(n)) {
            for (auto d : divisors(n)) {
                ++triples;
                const Integer closed = e % d == 0 ? Integer(static_cast<long>(n / e)) : Integer(0);
                if (c_interval_sum(n, e, d) != closed) {
                    r.fail("(n,e,d) = " + tuple_str(std::vector<std::int64_t>{n, e, d}));
                }
            }
        }
    }
    if (r.pass) r.detail = std::to_string(triples) + " triples";
    return r;
}

// One identity family: every instance must hold, and a single perturbed
// coefficient must be reported at its own index.
void identity_suite(Result& r, const std::string& family, std::vector<IdentitySides> instances, std::size_t& count) {
    for (const auto& sides : instances) {
        ++count;
        const auto report = compare(sides);
        if (!report.ok()) r.fail(family + ": " + sides.identity + " mismatch at " + tuple_str(report.first_mismatch->index));
    }
    auto mutated = instances.front();
    const std::size_t slot = mutated.lhs.slot_count() / 3;
    mutated.lhs.at_slot(slot) += 1;
    const auto report = compare(mutated);
    if (report.ok() || report.first_mismatch->index != mutated.lhs.index_of(slot)) {
        r.fail(family + ": mutation not detected");
    }
}

Result criterion_7() {
    Result r;
    std::size_t count = 0;
    const std::int64_t one_gamma[] = {1};
    {
        std::vector<IdentitySides> v;
        const std::vector<std::vector<ArithFn>> fss = {{fn::one(), fn::one()},
                                                       {fn::mu(), fn::one(), fn::power(1)},
                                                       {fn::phi(), fn::power(2), fn::mu(), fn::one()}};
        const std::vector<std::vector<std::int64_t>> gss = {{2}, {2, 4}, {1, 3, 6}};
        for (std::size_t i = 0; i < fss.size(); ++i) v.push_back(gamma_chain_sides(fss[i], gss[i], 200));
        identity_suite(r, "gamma-chain", std::move(v), count);
    }
    {
        std::vector<IdentitySides> v;
        const ArithFn c[] = {fn::mu(), fn::power(1)};
        v.push_back(multivariable_L_sides(c, one_gamma, 1, 30));
        const ArithFn ones[] = {fn::one(), fn::one()};
        v.push_back(multivariable_L_sides(ones, one_gamma, 1, 30));
        const ArithFn three[] = {fn::phi(), fn::mu(), fn::power(2)};
        const std::int64_t g24[] = {2, 4};
        v.push_back(multivariable_L_sides(three, g24, 2, 30));
        const ArithFn zero[] = {fn::phi()};
        v.push_back(multivariable_L_sides(zero, {}, 3, 30));
        v.push_back(classical_c_sides(30));
        const std::int64_t as[] = {1, 0};
        v.push_back(divisor_L_sides(as, 30));
        identity_suite(r, "multivariable-L", std::move(v), count);
    }
    {
        std::vector<IdentitySides> v;
        const auto c = make_spec({fn::mu(), fn::power(1)}, {1});
        const std::int64_t six[] = {6};
        v.push_back(phi_series_sides(c, six, 1, 40));
        v.push_back(phi_series_sides(c, six, 2, 40));
        Rng rng(7007);
        const auto pool = function_pool();
        for (std::size_t m = 1; m <= 2; ++m) {
            for (std::size_t j = 1; j <= m + 1; ++j) {
                for (int s = 0; s < 4; ++s) {
                    const auto spec = random_spec(rng, m, pool, 3, false);
                    v.push_back(phi_series_sides(spec, random_tuple(rng, m, 36), j, 40));
                }
            }
        }
        identity_suite(r, "phi-series", std::move(v), count);
    }
    {
        std::vector<IdentitySides> v;
        v.push_back(double_series_sides(fn::power(1), fn::one(), fn::one(), fn::one(), 1, 40));
        v.push_back(double_series_sides(fn::one(), fn::one(), fn::one(), fn::one(), 2, 40));
        v.push_back(double_series_sides(fn::power(1), fn::power(-1), fn::power(2), fn::eps(), 3, 40));
        v.push_back(double_series_diagonal_sides(fn::power(1), fn::one(), fn::one(), fn::one(), 1, 40));
        v.push_back(double_series_diagonal_sides(fn::power(2), fn::one(), fn::power(1), fn::power(1), 2, 40));
        identity_suite(r, "double-series", std::move(v), count);
    }
    {
        std::vector<IdentitySides> v;
        const std::int64_t a1[] = {1};
        const std::int64_t a10[] = {1, 0};
        const std::int64_t a2[] = {2};
        for (std::int64_t n : {1, 6, 12}) {
            const std::int64_t fixed[] = {n};
            v.push_back(gen_ramanujan_series_sides(1, 1, a1, fixed, 20));
        }
        const std::int64_t f64[] = {6, 4};
        v.push_back(gen_ramanujan_series_sides(2, 1, a10, f64, 20));
        const std::int64_t f6[] = {6};
        v.push_back(gen_ramanujan_series_sides(2, 2, a1, f6, 20));
        const std::int64_t f12[] = {12};
        v.push_back(gen_ramanujan_series_sides(2, 2, a2, f12, 20));
        identity_suite(r, "gen-ramanujan", std::move(v), count);
    }
    {
        std::vector<IdentitySides> v;
        const std::int64_t six[] = {6};
        const std::int64_t pair[] = {12, 18};
        v.push_back(f_gcd_series_sides(fn::phi(), six, 40));
        v.push_back(f_gcd_series_sides(fn::power(1), pair, 40));
        v.push_back(f_gcd_full_series_sides(fn::power(1), 2, 40));
        v.push_back(f_gcd_full_series_sides(fn::eps(), 2, 40));
        v.push_back(f_gcd_full_series_sides(fn::phi(), 3, 20));
        identity_suite(r, "f-gcd", std::move(v), count);
    }
    if (r.pass) r.detail = std::to_string(count) + " identities, mutation detected in all 6 families";
    return r;
}

Result criterion_8() {
    Result r;
    Rng rng(8008);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_hypermatrix(rng, 2, 4);
        if (hyperdet(a, {1, 2}) != matrix_determinant(a) || matrix_determinant(a) != leibniz_det(a)) {
            r.fail("k = 2 reduction, trial " + std::to_string(trial));
        }
    }
    int checked = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                const auto a = random_hypermatrix(rng, k, n);
                const auto even = random_signature(rng, k, 0);
                const auto odd = random_signature(rng, k, 1);
                ++checked;
                if (hyperdet(a, even) != brute_hyperdet(a, even)) r.fail("fast path, even signature");
                if (hyperdet(a, odd) != brute_hyperdet(a, odd)) r.fail("fast path, odd signature");
                if (n >= 2 && hyperdet(a, odd) != 0) r.fail("odd signature not zero");
                const auto p = random_permutation(rng, n);
                if (hyperdet(permute_order(a, p), even) != hyperdet(a, even)) r.fail("order permutation lemma");
                const auto q = random_permutation(rng, k);
                if (hyperdet(permute_axes(a, q), even) != hyperdet(a, preimage(even, q))) r.fail("axis permutation lemma");
            }
        }
    }
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t k = 2 + rng.below(2);
        const std::size_t n = 1 + rng.below(3);
        const auto a = random_hypermatrix(rng, k, n);
        const auto b = random_hypermatrix(rng, 2, n);
        const Signature K = random_signature(rng, k - 1, 1);
        Signature I = K, a_sig = K;
        I.insert(k);
        a_sig.insert(k);
        if (hyperdet(cayley_product(a, b), I) != hyperdet(a, a_sig) * hyperdet(b, {1, 2})) r.fail("product lemma");
    }
    if (r.pass) r.detail = "100 4x4 determinants, " + std::to_string(checked) + " oracle instances, 30 products";
    return r;
}

Result criterion_9() {
    Result r;
    const auto c_spec = make_spec({fn::mu(), fn::power(1)}, {1});
    const auto gcd_spec = f_of_gcd_spec(fn::power(1), 2);
    const auto sets = factor_closed_sets(12);
    for (const auto& xs : sets) {
        const FactorClosedSet s(xs);
        Rat product = 1, phis = 1;
        for (auto x : xs) {
            product *= x;
            phis *= euler_phi(x);
        }
        if (matrix_determinant(build_S_hypermatrix(c_spec, s)) != product) r.fail("c matrix on " + tuple_str(xs));
        if (matrix_determinant(build_S_hypermatrix(gcd_spec, s)) != phis) r.fail("gcd matrix on " + tuple_str(xs));
    }

    Rng rng(9009);
    const std::vector<ArithFn> pool = {fn::mu(), fn::eps(), fn::one(), fn::power(1), fn::phi()};
    std::vector<std::vector<std::int64_t>> small;
    for (const auto& xs : sets) {
        if (xs.size() <= 4) small.push_back(xs);
    }
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + trial % 2;
        const auto spec = random_spec(rng, m, pool, 3, rng.coin());
        const auto& xs = rng.pick(small);
        const auto [lhs, rhs] = smith_hyperdet_check(spec, FactorClosedSet(xs));
        if (lhs != rhs) r.fail("S hypermatrix identity for " + spec.label() + " on " + tuple_str(xs));
    }

    const BlockEvenFn c_kernel = [](std::span<const std::int64_t> rs, std::span<const std::int64_t> ns) {
        Rat v = 1;
        for (auto n : ns) v *= Rat(ramanujan_c(rs[0], n));
        return v;
    };
    const std::size_t k1[] = {1};
    const std::size_t k2[] = {2};
    int block_even = 0;
    for (const auto& xs : small) {
        const FactorClosedSet s(xs);
        block_even += 2;
        const auto [l1, r1] = even_hyperdet_check(c_kernel, k1, s, {1, 2});
        const auto [l2, r2] = even_hyperdet_check(c_kernel, k2, s, {2, 3});
        if (l1 != r1 || l2 != r2) r.fail("block-even identity with the c kernel on " + tuple_str(xs));
    }
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t k = 1 + trial % 2;
        const std::size_t ks[] = {k};
        const auto& xs = rng.pick(small);
        auto tables = std::make_shared<std::map<std::int64_t, EvenCoeffTable>>();
        for (auto x : xs) {
            const std::int64_t moduli[] = {x};
            const std::size_t arities[] = {k};
            EvenCoeffTable t{{x}, {k}, {}};
            for (const auto& ds : divisor_tuples(moduli, arities)) t.coeffs[ds] = rng.rational(3);
            (*tables)[x] = std::move(t);
        }
        const BlockEvenFn F = [tables](std::span<const std::int64_t> rs, std::span<const std::int64_t> ns) {
            return reconstruct_even(tables->at(rs[0]), ns);
        };
        const Signature sig = k == 1 ? Signature{1, 2} : Signature{2, 3};
        ++block_even;
        const auto [lhs, rhs] = even_hyperdet_check(F, ks, FactorClosedSet(xs), sig);
        if (lhs != rhs) r.fail("block-even identity with a random even function on " + tuple_str(xs));
    }
    if (r.pass) {
        r.detail = std::to_string(sets.size()) + " factor-closed sets, 50 S-hypermatrix specs, " + std::to_string(block_even) +
                   " block-even instances";
    }
    return r;
}

// ---------------------------------------------------------------------------

struct Invocation {
    std::string golden;
    std::vector<std::string> args;
    int exit_code;
    std::string stderr_contains;
};

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Result criterion_10(const std::string& cli, const std::string& golden_dir) {
    Result r;
    const std::vector<Invocation> runs = {
        {"eval_phi.out", {"eval", "--gammas", "", "--fns", "phi", "--ns", "10"}, 0, ""},
        {"eval_c.out", {"eval", "--gammas", "1", "--fns", "mu,pow:1", "--ns", "4,2"}, 0, ""},
        {"eval_unit.out", {"eval", "--gammas", "1", "--fns", "one,one", "--ns", "1,5"}, 0, ""},
        {"verify_smith.out", {"verify", "smith", "--fns", "mu,pow:1", "--set", "1,2,3"}, 0, ""},
        {"verify_multivariable_L.out", {"verify", "multivariable-L", "--fns", "mu,pow:1", "--gammas", "1", "--N", "30"}, 0, ""},
        {"verify_smith_not_closed.out", {"verify", "smith", "--set", "2,3"}, 2, "set not factor-closed"},
        {"table_c.out", {"table", "c", "--kmax", "5", "--nmax", "5"}, 0, ""},
        {"table_fourier.out", {"table", "fourier", "--fns", "mu,pow:1", "--n1", "6"}, 0, ""},
        {"table_closure.out", {"table", "closure", "--set", "12"}, 0, ""},
    };
    const std::string err_path = "acceptance_cli_stderr.txt";
    for (const auto& run : runs) {
        std::string cmd = shell_quote(cli);
        for (const auto& a : run.args) cmd += " " + shell_quote(a);
        cmd += " 2>" + err_path;
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) {
            r.fail("cannot start " + cli);
            break;
        }
        std::string out;
        std::array<char, 4096> buf{};
        std::size_t got;
        while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
        const int status = pclose(pipe);
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        const std::string err = read_file(err_path);
        if (code != run.exit_code) r.fail(run.golden + ": exit " + std::to_string(code));
        if (out != read_file(golden_dir + "/" + run.golden)) r.fail(run.golden + ": output differs");
        if (!run.stderr_contains.empty() && err.find(run.stderr_contains) == std::string::npos) {
            r.fail(run.golden + ": missing diagnostic");
        }
    }
    std::remove(err_path.c_str());
    if (r.pass) r.detail = std::to_string(runs.size()) + " invocations byte-identical";
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: ramsum_acceptance <ramsum-cli> <golden-dir>\n";
        return 2;
    }
    struct Entry {
        int number;
        const char* title;
        std::function<Result()> run;
    };
    const std::vector<Entry> entries = {
        {1, "Ramanujan sum, divisor formula vs exponential sum", criterion_1},
        {2, "multiple sum vs unpruned oracle", criterion_2},
        {3, "multiplicativity on coprime tuples", criterion_3},
        {4, "degeneracy identities and diagonal", criterion_4},
        {5, "finite Fourier coefficients of S", criterion_5},
        {6, "interval sum of Ramanujan sums", criterion_6},
        {7, "Dirichlet series identities", criterion_7},
        {8, "hyperdeterminant core", criterion_8},
        {9, "Smith-type determinants", criterion_9},
        {10, "CLI golden outputs", [&] { return criterion_10(argv[1], argv[2]); }},
    };
    bool all = true;
    double hyper_seconds = 0;
    for (const auto& e : entries) {
        const auto start = Clock::now();
        Result res;
        try {
            res = e.run();
        } catch (const std::exception& ex) {
            res.fail(std::string("exception: ") + ex.what());
        }
        const double t = seconds_since(start);
        if (e.number == 8 || e.number == 9) {
            hyper_seconds += t;
            if (e.number == 9 && hyper_seconds >= budget_c8_c9_seconds) res.fail("criteria 8-9 over time budget");
        }
        all = all && res.pass;
        std::cout << (res.pass ? "PASS" : "FAIL") << " criterion " << e.number << ": " << e.title << " (" << res.detail
                  << ", " << fixed2(t) << " s)" << std::endl;
    }
    return all ? 0 : 1;
}
