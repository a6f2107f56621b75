#include "doctest.h"

#include <random>

#include "carlitz/bigint.hpp"
#include "carlitz/hyperderiv.hpp"

using namespace carlitz;

namespace {

// Independent oracle: C(n, j) mod p through exact factorials.
std::uint32_t binomial_mod_p_oracle(unsigned long n, unsigned long j, std::uint32_t p) {
    if (j > n) return 0;
    const Int b = Int::binomial(n, j);
    mpz_class r = b.value() % p;
    return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

TEST_CASE("lucas binomial against the factorial oracle") {
    CHECK(lucas_binomial(2, 1, 2) == 0);
    CHECK(lucas_binomial(4, 2, 3) == 0);
    CHECK(lucas_binomial(10, 5, 3) == 0);  // digits (101)_3 vs (012)_3
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (unsigned long n = 0; n <= 60; ++n)
            for (unsigned long j = 0; j <= n; ++j)
                CHECK(lucas_binomial(n, j, p) == binomial_mod_p_oracle(n, j, p));
    }
    // digit-wise zero detection at q^i-scale arguments
    CHECK(lucas_binomial(729, 3, 3) == 0);
    CHECK(lucas_binomial(729 + 3, 3, 3) == 1);
}

TEST_CASE("hyperderivative basics") {
    auto f3 = FieldCtx::make_q(3);
    auto f2 = FieldCtx::make_q(2);
    CHECK(hyperderivative(Poly::theta_pow(f3, 2), 1) == Poly::from_ints(f3, {0, 2}));
    CHECK(hyperderivative(Poly::theta_pow(f2, 2), 1).is_zero());
    const Poly f = Poly::from_ints(f3, {1, 2, 0, 1});
    CHECK(hyperderivative(f, 0) == f);
    CHECK(hyperderivative(f, 7).is_zero());
}

TEST_CASE("product and composition rules") {
    std::mt19937_64 rng(42);
    for (std::uint64_t q : {2, 3, 4}) {
        auto ctx = FieldCtx::make_q(q);
        auto rand_poly = [&] {
            std::vector<Fq> cs;
            for (std::uint64_t n = 0; n <= rng() % 9; ++n)
                cs.push_back(Fq::from_index(ctx, rng() % q));
            return Poly(ctx, std::move(cs));
        };
        for (int trial = 0; trial < 100; ++trial) {
            const Poly f = rand_poly(), g = rand_poly();
            const auto j = static_cast<unsigned>(rng() % 5);
            const auto k = static_cast<unsigned>(rng() % (9 - j));
            Poly sum = Poly::zero(ctx);
            for (unsigned r = 0; r <= j; ++r)
                sum += hyperderivative(f, r) * hyperderivative(g, j - r);
            CHECK(hyperderivative(f * g, j) == sum);
            CHECK(hyperderivative(hyperderivative(f, k), j) ==
                  mul_int(hyperderivative(f, j + k), lucas_binomial(j + k, j, ctx->p())));
        }
    }
}

TEST_CASE("hyperderivative vanishing follows the base-p digit criterion") {
    for (std::uint32_t p : {2u, 3u}) {
        auto ctx = FieldCtx::make_prime(p);
        const std::uint64_t bound = static_cast<std::uint64_t>(p) * p * p;
        for (std::uint64_t n = 0; n < bound; ++n)
            for (std::uint64_t j = 0; j <= n; ++j) {
                bool dominated = true;
                for (std::uint64_t nn = n, jj = j; jj != 0; nn /= p, jj /= p)
                    if (jj % p > nn % p) {
                        dominated = false;
                        break;
                    }
                CHECK(hyperderivative(Poly::theta_pow(ctx, n), j).is_zero() == !dominated);
            }
    }
}

TEST_CASE("hyperderivatives on multivariate polynomials") {
    auto f3 = FieldCtx::make_q(3);
    // d_t^1 of t^2 theta = 2 t theta
    FqPoly f(Fq::zero(f3));
    f.add_term(Mono::var(Var::t(), 2) * Mono::var(Var::theta()), Fq::one(f3));
    FqPoly expect(Fq::zero(f3));
    expect.add_term(Mono::var(Var::t()) * Mono::var(Var::theta()), Fq::from_int(f3, 2));
    CHECK(hyperderivative(f, Var::t(), 1) == expect);
    CHECK(hyperderivative(f, Var::x(), 1).is_zero());
    CHECK(hyperderivative(f, Var::t(), 0) == f);
}

TEST_CASE("taylor expansion about t = theta") {
    auto f3 = FieldCtx::make_q(3);
    const auto c1 = taylor_about_theta(Poly::theta_pow(f3, 2), 2);
    CHECK(c1[0] == Poly::theta_pow(f3, 2));
    CHECK(c1[1] == Poly::from_ints(f3, {0, 2}));
    CHECK(c1[2] == Poly::one(f3));

    const auto c2 = taylor_about_theta(Poly::theta(f3), 3);
    CHECK(c2[0] == Poly::theta(f3));
    CHECK(c2[1] == Poly::one(f3));
    CHECK(c2[2].is_zero());
    CHECK(c2[3].is_zero());

    const auto c3 = taylor_about_theta(Poly::from_ints(f3, {2}), 2);
    CHECK(c3[0] == Poly::from_ints(f3, {2}));
    CHECK(c3[1].is_zero());

    // reconstruction: sum_j d^j(f)(theta) (t-theta)^j = f(t), 50 random f
    std::mt19937_64 rng(3);
    for (std::uint64_t q : {2, 3}) {
        auto ctx = FieldCtx::make_q(q);
        FqPoly t_minus_theta(Fq::zero(ctx));
        t_minus_theta.add_term(Mono::var(Var::t()), Fq::one(ctx));
        t_minus_theta.add_term(Mono::var(Var::theta()), -Fq::one(ctx));
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Fq> cs;
            for (std::uint64_t n = 0; n <= rng() % 13; ++n)
                cs.push_back(Fq::from_index(ctx, rng() % q));
            const Poly f(ctx, std::move(cs));
            const auto maxj = static_cast<unsigned>(f.is_zero() ? 0 : f.degree());
            const auto coeffs = taylor_about_theta(f, maxj);
            FqPoly acc(Fq::zero(ctx));
            FqPoly pw = FqPoly::constant(Fq::one(ctx));
            for (unsigned j = 0; j <= maxj; ++j) {
                acc += fq_on_var(coeffs[j], Var::theta()) * pw;
                pw *= t_minus_theta;
            }
            CHECK(acc == fq_on_var(f, Var::t()));
        }
    }
}

TEST_CASE("voloch identity on truncated series") {
    auto f3 = FieldCtx::make_q(3);
    CHECK(voloch_qpower_check(ThetaSeries::from_poly(Poly::theta(f3), 10), 1));

    // k = 0 is the identity by the [0]^0 = 1 convention
    ThetaSeries g0(f3, 8);
    g0.set_coeff(5, Fq::from_int(f3, 2));
    CHECK(voloch_qpower_check(g0, 0));

    // truncated geometric series 1/(1-theta) over F_2, squared directly
    auto f2 = FieldCtx::make_q(2);
    ThetaSeries geo(f2, 32);
    for (unsigned n = 0; n < 32; ++n) geo.set_coeff(n, Fq::one(f2));
    CHECK(geo.q_power(1) == geo * geo);
    CHECK(voloch_qpower_check(geo, 1));

    std::mt19937_64 rng(8);
    for (std::uint64_t q : {2, 3, 4}) {
        auto ctx = FieldCtx::make_q(q);
        for (int trial = 0; trial < 20; ++trial) {
            ThetaSeries g(ctx, 32);
            for (unsigned n = 0; n < 32; ++n) g.set_coeff(n, Fq::from_index(ctx, rng() % q));
            for (unsigned k = 0; k <= 3; ++k) CHECK(voloch_qpower_check(g, k));
        }
    }
}
