#include "doctest.h"

#include <random>

#include "carlitz/logalg.hpp"

using namespace carlitz;

namespace {

std::uint64_t q_pow(const FieldPtr& ctx, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned n = 0; n < k; ++n) r *= ctx->q();
    return r;
}

KPoly x_pow(const FieldPtr& ctx, long long n) {
    KPoly f = k_zero_poly(ctx);
    f.add_term(Mono::var(Var::x(), n), RatFun::one(ctx));
    return f;
}

KPoly z_var(const FieldPtr& ctx) {
    KPoly f = k_zero_poly(ctx);
    f.add_term(Mono::var(Var::z()), RatFun::one(ctx));
    return f;
}

KPoly term(const FieldPtr& ctx, long long xe, long long ze, const Poly& c) {
    KPoly f = k_zero_poly(ctx);
    f.add_term(Mono::var(Var::x(), xe) * Mono::var(Var::z(), ze), RatFun(c));
    return f;
}

}  // namespace

TEST_CASE("base-q digit positions with multiplicity") {
    CHECK(digit_positions(3, 6) == std::vector<unsigned>{1, 1});
    CHECK(digit_positions(3, 10) == std::vector<unsigned>{0, 2});
    CHECK(digit_positions(2, 8) == std::vector<unsigned>{3});
    CHECK(digit_positions(5, 30) == std::vector<unsigned>{1, 2});
    CHECK(digit_positions(3, 0).empty());
}

TEST_CASE("lambda sums: brute force") {
    auto f3 = FieldCtx::make_q(3);

    // i = 0: lambda_0(m) = x^m
    for (std::uint64_t m : {1, 2, 5}) CHECK(lambda_brute(f3, 0, m) == x_pow(f3, static_cast<long long>(m)));

    // i = 1, m = 1: -x^3/(theta^3 - theta)
    KPoly want = k_zero_poly(f3);
    want.add_term(Mono::var(Var::x(), 3),
                  RatFun(Poly::from_ints(f3, {-1}), Poly::from_ints(f3, {0, -1, 0, 1})));
    CHECK(lambda_brute(f3, 1, 1) == want);
}

TEST_CASE("lambda closed form, single q-power") {
    // mu = 0: x^{q^i}/L_i
    for (std::uint64_t q : {2, 3}) {
        auto ctx = FieldCtx::make_q(q);
        for (unsigned i = 0; i <= 2; ++i) {
            const KPoly got = lambda_closed_single(ctx, i, 0);
            KPoly want = k_zero_poly(ctx);
            want.add_term(Mono::var(Var::x(), static_cast<long long>(q_pow(ctx, i))),
                          RatFun(Poly::one(ctx), factorial_l(ctx, i)));
            CHECK(got == want);
        }
    }

    // i = 0, mu = 1: x^q
    auto f3 = FieldCtx::make_q(3);
    CHECK(lambda_closed_single(f3, 0, 1) == x_pow(f3, 3));

    // both regimes i > mu and i <= mu against brute force
    for (std::uint64_t q : {2, 3}) {
        auto ctx = FieldCtx::make_q(q);
        for (unsigned i = 0; i <= 3; ++i)
            for (unsigned mu = 0; mu <= 3; ++mu)
                CHECK(lambda_closed_single(ctx, i, mu) ==
                      lambda_brute(ctx, i, q_pow(ctx, mu)));
    }
}

TEST_CASE("lambda closed form, digit products") {
    auto f3 = FieldCtx::make_q(3);

    // one digit: reduces to the single form
    for (unsigned i = 0; i <= 2; ++i)
        for (unsigned mu = 0; mu <= 2; ++mu) {
            const std::vector<unsigned> one = {mu};
            CHECK(lambda_closed_multi(f3, i, one) == lambda_closed_single(f3, i, mu));
        }

    // i = 0, digits (0,0): x^2
    const std::vector<unsigned> zz = {0, 0};
    CHECK(lambda_closed_multi(f3, 0, zz) == x_pow(f3, 2));

    // i = 1, digits (0,1): lambda_1(4)
    const std::vector<unsigned> zo = {0, 1};
    CHECK(lambda_closed_multi(f3, 1, zo) == lambda_brute(f3, 1, 4));

    // full two-digit grid
    for (unsigned i = 0; i <= 2; ++i)
        for (unsigned m1 = 0; m1 <= 2; ++m1)
            for (unsigned m2 = m1; m2 <= 2; ++m2) {
                const std::vector<unsigned> mus = {m1, m2};
                CHECK(lambda_closed_multi(f3, i, mus) ==
                      lambda_brute(f3, i, q_pow(f3, m1) + q_pow(f3, m2)));
            }

    const std::vector<unsigned> toomany = {0, 0, 0};
    CHECK_THROWS_AS((void)lambda_closed_multi(f3, 1, toomany), usage_error);
}

TEST_CASE("Anderson series: first special polynomials") {
    for (std::uint64_t q : {2, 3, 5}) {
        auto ctx = FieldCtx::make_q(q);
        const long long order = static_cast<long long>(std::min<std::uint64_t>(q * q * q, 27));

        // P_1 = x z
        const TruncSeries p1 = special_poly_series(ctx, 1, order);
        CHECK(p1.poly() == (x_pow(ctx, 1) * z_var(ctx)).truncated(Var::z(), order));

        // P_q = x^q z - x^q z^q
        const TruncSeries pq = special_poly_series(ctx, q, order);
        KPoly pq_want = term(ctx, static_cast<long long>(q), 1, Poly::one(ctx)) +
                        term(ctx, static_cast<long long>(q), static_cast<long long>(q),
                             -Poly::one(ctx));
        CHECK(pq.poly() == pq_want.truncated(Var::z(), order));

        // P_{q+1} = x^{q+1} z - x^{2q} z^q for q > 2
        if (q > 2) {
            const TruncSeries pq1 = special_poly_series(ctx, q + 1, order);
            KPoly want = term(ctx, static_cast<long long>(q + 1), 1, Poly::one(ctx)) +
                         term(ctx, static_cast<long long>(2 * q), static_cast<long long>(q),
                              -Poly::one(ctx));
            CHECK(pq1.poly() == want.truncated(Var::z(), order));
        }
    }
}

TEST_CASE("Thakur closed form: explicit shapes") {
    auto f3 = FieldCtx::make_q(3);

    // m = q: x^q z - x^q z^q, exactly
    const KPoly pq = special_poly_thakur(f3, 3);
    CHECK(pq == term(f3, 3, 1, Poly::one(f3)) + term(f3, 3, 3, -Poly::one(f3)));

    // m = 2q (q > 2): x^{2q} z - ((theta^q - theta) x^{2q} + 2 x^{q^2+q}) z^q
    //                + x^{2q^2} z^{q^2}
    for (std::uint64_t q : {3, 5}) {
        auto ctx = FieldCtx::make_q(q);
        const auto lq = static_cast<long long>(q);
        const KPoly got = special_poly_thakur(ctx, 2 * q);
        KPoly want = term(ctx, 2 * lq, 1, Poly::one(ctx));
        want += term(ctx, 2 * lq, lq, -theta_bracket(ctx, 1));
        want += term(ctx, lq * lq + lq, lq, Poly::from_ints(ctx, {-2}));
        want += term(ctx, 2 * lq * lq, lq * lq, Poly::one(ctx));
        CHECK(got == want);
    }

    // m = q^2: C_{theta^2}(x) z - C_{theta^q + theta}(C_theta(x) z) + C_{theta^{q+1}}(x z)
    for (std::uint64_t q : {3, 5}) {
        auto ctx = FieldCtx::make_q(q);
        const KPoly got = special_poly_thakur(ctx, q * q);
        const KPoly xz = x_pow(ctx, 1) * z_var(ctx);
        const KPoly want =
            carlitz_action_on_x(Poly::theta_pow(ctx, 2)) * z_var(ctx) -
            carlitz_eval(Poly::theta(ctx).frobenius_twist(1) + Poly::theta(ctx),
                         carlitz_action_on_x(Poly::theta(ctx)) * z_var(ctx)) +
            carlitz_eval(Poly::theta_pow(ctx, static_cast<std::uint64_t>(q) + 1), xz);
        CHECK(got == want);
    }

    CHECK_THROWS_AS((void)special_poly_thakur(f3, 0), unsupported_error);
    CHECK_THROWS_AS((void)special_poly_thakur(f3, 5), unsupported_error);  // sigma_3(5) = 3
    auto f2 = FieldCtx::make_q(2);
    CHECK_THROWS_AS((void)special_poly_thakur(f2, 3), unsupported_error);  // sigma_2(3) = 2
}

TEST_CASE("series route reports the last completed degree on a cap hit") {
    auto f3 = FieldCtx::make_q(3);
    try {
        (void)special_poly_series(f3, 1, 27, SumOptions{5, 1});  // i=2 needs 9 monics
        FAIL("expected resource_error");
    } catch (const resource_error& e) {
        CHECK(std::string(e.what()).find("largest completed degree: 1") != std::string::npos);
    }
}

TEST_CASE("series and closed form agree modulo z^N") {
    struct Grid {
        std::uint64_t q;
        long long order;
        std::vector<std::uint64_t> ms;
    };
    for (const Grid& g : {Grid{3, 27, {1, 2, 3, 4, 6, 9}}, Grid{2, 16, {1, 2, 4, 8}}}) {
        auto ctx = FieldCtx::make_q(g.q);
        for (std::uint64_t m : g.ms) {
            const auto rep = verify_log_algebraicity(ctx, m, g.order);
            CHECK(rep.match);
            CHECK(rep.integral);
            CHECK(rep.pass());
        }
    }
}

TEST_CASE("linearity of the log-algebraicity series") {
    auto f3 = FieldCtx::make_q(3);
    const long long order = 27;

    // beta = x gives x z
    CHECK(special_poly_linear(x_pow(f3, 1), order).poly() ==
          (x_pow(f3, 1) * z_var(f3)).truncated(Var::z(), order));

    // beta = theta x gives C_theta(x z)
    const TruncSeries bt = special_poly_linear(x_pow(f3, 1).scaled(RatFun(Poly::theta(f3))), order);
    const KPoly xz = x_pow(f3, 1) * z_var(f3);
    CHECK(bt.poly() == carlitz_eval(Poly::theta(f3), xz).truncated(Var::z(), order));

    // beta = 0 gives 0
    CHECK(special_poly_linear(k_zero_poly(f3), order).is_zero());

    // beta outside A[x] is rejected
    CHECK_THROWS_AS(
        (void)special_poly_linear(x_pow(f3, 1) * z_var(f3), order), usage_error);
    CHECK_THROWS_AS((void)special_poly_linear(
                        x_pow(f3, 1).scaled(RatFun(Poly::one(f3), Poly::theta(f3))), order),
                    usage_error);

    // P(b x^m, z) = C_b(P_m) mod z^N for random b of degree <= 2
    std::mt19937_64 rng(77);
    for (std::uint64_t m : {1, 3}) {
        const KPoly pm = special_poly_thakur(f3, m);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Fq> cs;
            for (int n = 0; n <= 2; ++n) cs.push_back(Fq::from_index(f3, rng() % 3));
            const Poly b(f3, std::move(cs));
            const TruncSeries lhs =
                special_poly_linear(x_pow(f3, static_cast<long long>(m)).scaled(RatFun(b)), order);
            CHECK(lhs.poly() == carlitz_eval(b, pm).truncated(Var::z(), order));
        }
    }
}
