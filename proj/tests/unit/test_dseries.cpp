#include <doctest.h>

#include "ramsum/dseries.hpp"
#include "ramsum/errors.hpp"
#include "ramsum/fourier.hpp"
#include "support/oracles.hpp"

using namespace ramsum;
using namespace ramsum::testing;

namespace {

TruncatedMDS random_sparse(Rng& rng, std::size_t arity, std::int64_t bound) {
    TruncatedMDS t(arity, bound);
    for (std::size_t s = 0; s < t.slot_count(); ++s) {
        if (rng.below(4) == 0) t.at_slot(s) = rng.rational();
    }
    return t;
}

// Perturbing one coefficient must be reported at exactly that index.
void check_mutation(IdentitySides sides, std::size_t slot) {
    REQUIRE(compare(sides).ok());
    sides.lhs.at_slot(slot) += 1;
    const auto report = compare(sides);
    REQUIRE_FALSE(report.ok());
    CHECK(report.first_mismatch->index == sides.lhs.index_of(slot));
    CHECK(report.first_mismatch->lhs == sides.rhs.at_slot(slot) + 1);
    CHECK(report.first_mismatch->rhs == sides.rhs.at_slot(slot));
}

}  // namespace

TEST_CASE("slot layout") {
    TruncatedMDS t(3, 4);
    CHECK(t.slot_count() == 64);
    for (std::size_t s = 0; s < t.slot_count(); ++s) CHECK(t.slot_of(t.index_of(s)) == s);
    const std::int64_t first[] = {1, 1, 1};
    const std::int64_t second[] = {1, 1, 2};
    CHECK(t.slot_of(first) == 0);
    CHECK(t.slot_of(second) == 1);
    const std::int64_t outside[] = {1, 5, 1};
    CHECK(t.at(outside) == 0);
    CHECK_THROWS(t.set(outside, 1));
    CHECK_THROWS_AS(TruncatedMDS(5, 100), resource_error);
    CHECK_THROWS(VarMask({}));
}

TEST_CASE("embed examples") {
    const auto e = embed(fn::eps(), VarMask({1, 2}), 2, 10);
    CHECK(e == unit_series(2, 10));
    const auto z = embed(fn::one(), VarMask({2}), 2, 10);
    for (std::int64_t a = 1; a <= 10; ++a) {
        for (std::int64_t b = 1; b <= 10; ++b) {
            const std::int64_t idx[] = {a, b};
            CHECK(z.at(idx) == (a == 1 ? 1 : 0));
        }
    }
    const auto d = embed(fn::phi(), VarMask::range(1, 3), 3, 6);
    const std::int64_t diag[] = {5, 5, 5};
    const std::int64_t off[] = {5, 5, 1};
    CHECK(d.at(diag) == 4);
    CHECK(d.at(off) == 0);
}

TEST_CASE("mul examples and algebra") {
    const auto one = embed(fn::one(), VarMask({1}), 1, 100);
    const auto mu = embed(fn::mu(), VarMask({1}), 1, 100);
    CHECK(mul(one, mu) == unit_series(1, 100));
    const auto tau = mul(one, one);
    for (std::int64_t n = 1; n <= 100; ++n) {
        const std::int64_t idx[] = {n};
        CHECK(tau.at(idx) == static_cast<long>(divisors(n).size()));
    }
    CHECK_THROWS(mul(one, unit_series(2, 100)));
    CHECK_THROWS(mul(one, unit_series(1, 50)));

    Rng rng(31);
    for (std::size_t arity = 1; arity <= 3; ++arity) {
        const std::int64_t bound = arity == 3 ? 8 : 20;
        const auto a = random_sparse(rng, arity, bound);
        const auto b = random_sparse(rng, arity, bound);
        const auto c = random_sparse(rng, arity, bound);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, unit_series(arity, bound)) == a);
        // Brute convolution at a few indices.
        for (int s = 0; s < 10; ++s) {
            const auto target = random_tuple(rng, arity, bound);
            Rat expected = 0;
            for (std::size_t sa = 0; sa < a.slot_count(); ++sa) {
                const auto ia = a.index_of(sa);
                std::vector<std::int64_t> ib(arity);
                bool fits = true;
                for (std::size_t i = 0; i < arity && fits; ++i) {
                    fits = target[i] % ia[i] == 0;
                    if (fits) ib[i] = target[i] / ia[i];
                }
                if (fits) expected += a.at_slot(sa) * b.at(ib);
            }
            CHECK(mul(a, b).at(target) == expected);
        }
    }
}

TEST_CASE("from_multisum") {
    const auto c = make_spec({fn::mu(), fn::power(1)}, {1});
    const auto t = from_multisum(c, 4);
    const std::int64_t idx[] = {4, 2};
    CHECK(t.at(idx) == -2);
    CHECK(from_multisum(make_spec({fn::phi()}, {}), 30) == embed(fn::phi(), VarMask({1}), 1, 30));
    const auto weighted = from_multisum(make_spec({fn::one(), fn::one()}, {1}), 10, 2);
    const std::int64_t sq[] = {4, 2};
    const std::int64_t nonsq[] = {2, 2};
    CHECK(weighted.at(sq) == 2);
    CHECK(weighted.at(nonsq) == 0);
    CHECK_THROWS_AS(from_multisum(make_spec({fn::one(), fn::one(), fn::one()}, {1, 1}), 200), resource_error);

    Rng rng(32);
    const auto pool = function_pool();
    for (int trial = 0; trial < 6; ++trial) {
        const auto spec = random_spec(rng, 1 + rng.below(2), pool, 3, false);
        const auto series = from_multisum(spec, 15);
        CHECK(diagonal(series) == embed(chain_gamma_convolve(spec.fns, spec.gammas), VarMask({1}), 1, 15));
    }
}

TEST_CASE("gamma chain product") {
    const ArithFn a[] = {fn::one(), fn::one()};
    const std::int64_t ga[] = {2};
    CHECK(verify_prop_gamma_chain(a, ga, 50).ok());
    const ArithFn b[] = {fn::mu(), fn::one(), fn::power(1)};
    const std::int64_t gb[] = {2, 4};
    CHECK(verify_prop_gamma_chain(b, gb, 50).ok());
    const std::int64_t bad[] = {2, 3};
    CHECK_THROWS_AS(verify_prop_gamma_chain(b, bad, 50), precondition_error);
    check_mutation(gamma_chain_sides(b, gb, 50), 17);
}

TEST_CASE("multivariable L") {
    const ArithFn c[] = {fn::mu(), fn::power(1)};
    const std::int64_t g1[] = {1};
    CHECK(verify_multivariable_L(c, g1, 1, 30).ok());
    const ArithFn ones[] = {fn::one(), fn::one()};
    CHECK(verify_multivariable_L(ones, g1, 1, 50).ok());
    const ArithFn three[] = {fn::phi(), fn::mu(), fn::power(2)};
    const std::int64_t g24[] = {2, 4};
    CHECK(verify_multivariable_L(three, g24, 2, 12).ok());
    CHECK_THROWS_AS(verify_multivariable_L(three, g24, 3, 12), precondition_error);
    CHECK(compare(classical_c_sides(30)).ok());
    const std::int64_t as[] = {1, 0};
    CHECK(compare(divisor_L_sides(as, 30)).ok());
    check_mutation(multivariable_L_sides(c, g1, 1, 30), 95);
    check_mutation(classical_c_sides(30), 400);
    check_mutation(divisor_L_sides(as, 12), 1000);
}

TEST_CASE("phi series") {
    const auto c = make_spec({fn::mu(), fn::power(1)}, {1});
    for (std::int64_t n = 1; n <= 20; ++n) {
        const std::int64_t fixed[] = {n};
        CHECK(verify_phi_series(c, fixed, 2, 50).ok());
    }
    const std::int64_t six[] = {6};
    CHECK(verify_phi_series(c, six, 1, 40).ok());

    Rng rng(33);
    const auto pool = function_pool();
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + rng.below(2);
        const auto spec = random_spec(rng, m, pool, 3, false);
        const auto fixed = random_tuple(rng, m, 24);
        const std::size_t j = 1 + rng.below(m + 1);
        CHECK(verify_phi_series(spec, fixed, j, 30).ok());
    }
    const auto weighted = make_spec({fn::mu(), fn::power(1)}, {1}, weight::unit(1));
    CHECK_THROWS(verify_phi_series(weighted, six, 1, 40));
    CHECK_THROWS(verify_phi_series(c, six, 3, 40));
    check_mutation(phi_series_sides(c, six, 1, 40), 11);
}

TEST_CASE("double series") {
    CHECK(verify_double_series(fn::power(1), fn::one(), fn::one(), fn::one(), 1, 40).ok());
    CHECK(verify_double_series(fn::one(), fn::one(), fn::one(), fn::one(), 2, 40).ok());
    CHECK(verify_double_series(fn::power(1), fn::power(-1), fn::power(2), fn::one(), 3, 20).ok());
    CHECK(compare(double_series_diagonal_sides(fn::power(1), fn::one(), fn::one(), fn::one(), 1, 200)).ok());
    CHECK(compare(double_series_diagonal_sides(fn::power(1), fn::power(2), fn::one(), fn::eps(), 2, 200)).ok());
    CHECK_THROWS_AS(verify_double_series(fn::mu(), fn::one(), fn::one(), fn::one(), 1, 10), precondition_error);
    check_mutation(double_series_sides(fn::power(1), fn::one(), fn::one(), fn::one(), 1, 40), 1000);
    check_mutation(double_series_diagonal_sides(fn::power(1), fn::one(), fn::one(), fn::one(), 1, 40), 35);
}

TEST_CASE("generalized Ramanujan series") {
    const std::int64_t a1[] = {1};
    for (std::int64_t n = 1; n <= 12; ++n) {
        const std::int64_t fixed[] = {n};
        CHECK(verify_gen_ramanujan_series(1, 1, a1, fixed, 30).ok());
    }
    const std::int64_t a10[] = {1, 0};
    const std::int64_t f64[] = {6, 4};
    CHECK(verify_gen_ramanujan_series(2, 1, a10, f64, 30).ok());
    const std::int64_t f6[] = {6};
    CHECK(verify_gen_ramanujan_series(2, 2, a1, f6, 20).ok());
    const std::int64_t a2[] = {2};
    const std::int64_t f12[] = {12};
    CHECK(verify_gen_ramanujan_series(2, 2, a2, f12, 20).ok());
    CHECK_THROWS(verify_gen_ramanujan_series(2, 3, a1, f6, 20));
    CHECK_THROWS(verify_gen_ramanujan_series(2, 2, a10, f6, 20));
    check_mutation(gen_ramanujan_series_sides(2, 2, a1, f6, 20), 45);
}

TEST_CASE("f o gcd series") {
    const std::int64_t six[] = {6};
    CHECK(verify_f_gcd_series(fn::phi(), six, 40).ok());
    const std::int64_t pair[] = {12, 18};
    CHECK(verify_f_gcd_series(fn::power(1), pair, 40).ok());
    CHECK(verify_f_gcd_full_series(fn::power(1), 2, 40).ok());
    CHECK(verify_f_gcd_full_series(fn::eps(), 3, 12).ok());
    CHECK(verify_f_gcd_full_series(fn::phi(), 2, 40).ok());
    check_mutation(f_gcd_series_sides(fn::phi(), six, 40), 5);
    check_mutation(f_gcd_full_series_sides(fn::power(1), 2, 40), 777);
}

TEST_CASE("first mismatch is lexicographically first") {
    auto sides = classical_c_sides(10);
    sides.lhs.at_slot(70) += 1;
    sides.lhs.at_slot(30) -= 2;
    const auto report = compare(sides);
    REQUIRE(report.first_mismatch);
    CHECK(report.first_mismatch->index == sides.lhs.index_of(30));
    CHECK(report.identity == "classical-c");
    CHECK(report.bound == 10);
}
