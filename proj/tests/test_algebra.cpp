#include "doctest.h"

#include <random>
#include <set>

#include "carlitz/kpoly.hpp"
#include "carlitz/poly.hpp"
#include "carlitz/ratfun.hpp"

using namespace carlitz;

TEST_CASE("prime and extension field arithmetic") {
    auto f3 = FieldCtx::make_q(3);
    CHECK(Fq::from_int(f3, 2) + Fq::from_int(f3, 2) == Fq::from_int(f3, 1));

    auto f4 = FieldCtx::make_q(4);  // F_2[u]/(u^2+u+1)
    const Fq u = Fq::from_coords(f4, {0, 1});
    CHECK(u * u == Fq::from_coords(f4, {1, 1}));

    auto f5 = FieldCtx::make_q(5);
    CHECK(Fq::from_int(f5, 2).inv() == Fq::from_int(f5, 3));

    CHECK_THROWS_AS((void)Fq::zero(f5).inv(), domain_error);
    CHECK_THROWS_AS((void)(Fq::one(f5) + Fq::one(f3)), usage_error);
}

TEST_CASE("field construction validates inputs") {
    CHECK_THROWS_AS((void)FieldCtx::make_prime(4), usage_error);
    CHECK_THROWS_AS((void)FieldCtx::make(2, 2, {1, 0, 1}), usage_error);  // (u+1)^2
    CHECK_THROWS_AS((void)FieldCtx::make_q(6), usage_error);
    CHECK(FieldCtx::make_q(8)->q() == 8);
    CHECK(FieldCtx::make(2, 4, {1, 1, 0, 0, 1})->q() == 16);  // irreducible quartic
    CHECK_THROWS_AS((void)FieldCtx::make(2, 4, {1, 0, 0, 0, 1}), usage_error);  // (u+1)^4
}

TEST_CASE("exhaustive field laws for q <= 9") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        auto ctx = FieldCtx::make_q(q);
        for (std::uint64_t ia = 0; ia < q; ++ia) {
            const Fq x = Fq::from_index(ctx, ia);
            CHECK(x.pow(q) == x);
            for (std::uint64_t ib = 0; ib < q; ++ib) {
                const Fq y = Fq::from_index(ctx, ib);
                CHECK((x + y).pow(ctx->p()) == x.pow(ctx->p()) + y.pow(ctx->p()));
                if (!y.is_zero()) CHECK(y * y.inv() == Fq::one(ctx));
            }
        }
    }
}

TEST_CASE("polynomial arithmetic matches the worked examples") {
    auto f3 = FieldCtx::make_q(3);
    CHECK(Poly::from_ints(f3, {1, 1}) * Poly::from_ints(f3, {2, 1}) ==
          Poly::from_ints(f3, {2, 0, 1}));

    auto f5 = FieldCtx::make_q(5);
    CHECK(gcd_monic(Poly::from_ints(f5, {-1, 0, 1}), Poly::from_ints(f5, {-1, 1})) ==
          Poly::from_ints(f5, {4, 1}));

    const auto [quot, rem] = Poly::theta_pow(f5, 3).divmod(Poly::theta_pow(f5, 2));
    CHECK(quot == Poly::theta(f5));
    CHECK(rem.is_zero());

    CHECK_THROWS_AS((void)Poly::theta(f5).divmod(Poly::zero(f5)), domain_error);
    CHECK(Poly::zero(f5).degree() == -1);  // zero-polynomial degree sentinel

    // evaluation agrees with modular arithmetic at every point of F_3
    const Poly prod = Poly::from_ints(f3, {1, 1}) * Poly::from_ints(f3, {2, 1});
    for (int c = 0; c < 3; ++c) {
        const Fq x = Fq::from_int(f3, c);
        CHECK(prod.eval(x) == (x + Fq::one(f3)) * (x + Fq::from_int(f3, 2)));
    }
    CHECK(Poly::zero(f3).eval(Fq::one(f3)) == Fq::zero(f3));
}

TEST_CASE("random polynomial ring properties") {
    std::mt19937_64 rng(1234);
    for (std::uint64_t q : {2, 3, 4, 9}) {
        auto ctx = FieldCtx::make_q(q);
        auto rand_poly = [&](unsigned maxd) {
            std::vector<Fq> cs;
            const auto d = rng() % (maxd + 1);
            for (std::uint64_t n = 0; n <= d; ++n) cs.push_back(Fq::from_index(ctx, rng() % q));
            return Poly(ctx, std::move(cs));
        };
        for (int trial = 0; trial < 200; ++trial) {
            const Poly f = rand_poly(8), g = rand_poly(8), h = rand_poly(5);
            CHECK(f + g == g + f);
            CHECK(f * g == g * f);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            if (!f.is_zero() && !g.is_zero()) CHECK((f * g).degree() == f.degree() + g.degree());
            if (!g.is_zero()) {
                const auto [quot, rem] = f.divmod(g);
                CHECK(quot * g + rem == f);
                if (!rem.is_zero()) CHECK(rem.degree() < g.degree());
                const Poly d = gcd_monic(f, g);
                if (!d.is_zero()) {
                    CHECK((f % d).is_zero());
                    CHECK((g % d).is_zero());
                }
            }
        }
    }
}

TEST_CASE("frobenius twist is the q^k-th power map") {
    auto f3 = FieldCtx::make_q(3);
    CHECK(Poly::from_ints(f3, {1, 1}).frobenius_twist(1) == Poly::from_ints(f3, {1, 0, 0, 1}));
    CHECK(Poly::from_ints(f3, {1, 1}).frobenius_twist(0) == Poly::from_ints(f3, {1, 1}));

    auto f2 = FieldCtx::make_q(2);
    const Poly f = Poly::from_ints(f2, {0, 1, 1});  // theta^2 + theta
    CHECK(f.frobenius_twist(1) == f * f);

    std::mt19937_64 rng(99);
    for (std::uint64_t q : {2, 3, 4}) {
        auto ctx = FieldCtx::make_q(q);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Fq> cs;
            for (std::uint64_t n = 0; n <= rng() % 7; ++n)
                cs.push_back(Fq::from_index(ctx, rng() % q));
            const Poly f2r(ctx, std::move(cs));
            const auto k = static_cast<unsigned>(rng() % 4);
            std::uint64_t qk = 1;
            for (unsigned n = 0; n < k; ++n) qk *= q;
            CHECK(f2r.frobenius_twist(k) == f2r.pow(qk));
        }
    }
}

TEST_CASE("special polynomial sequences and their recurrences") {
    auto f2 = FieldCtx::make_q(2);
    CHECK(theta_bracket(f2, 1) == Poly::from_ints(f2, {0, 1, 1}));
    CHECK(factorial_d(f2, 1) == Poly::from_ints(f2, {0, 1, 1}));
    CHECK(factorial_l(f2, 1) == Poly::from_ints(f2, {0, 1, 1}));  // -1 = 1 in F_2
    CHECK(factorial_d(f2, 0) == Poly::one(f2));
    CHECK(factorial_l(f2, 0) == Poly::one(f2));

    // D_2 = [2][1]^q multiplied out by hand
    const Poly lhs = factorial_d(f2, 2);
    const Poly rhs = (Poly::theta_pow(f2, 4) + Poly::theta(f2)) *
                     (Poly::theta_pow(f2, 2) + Poly::theta(f2)).pow(2);
    CHECK(lhs == rhs);

    for (std::uint64_t q : {2, 3, 4}) {
        auto ctx = FieldCtx::make_q(q);
        for (unsigned i = 1; i <= 4; ++i) {
            CHECK(factorial_d(ctx, i) ==
                  theta_bracket(ctx, i) * factorial_d(ctx, i - 1).frobenius_twist(1));
            CHECK(factorial_l(ctx, i) == -(theta_bracket(ctx, i) * factorial_l(ctx, i - 1)));
        }
    }
}

TEST_CASE("monic enumeration is exhaustive, distinct, and ordered") {
    auto f2 = FieldCtx::make_q(2);
    std::set<std::string> quadratics;
    for (const Poly& a : MonicRange(f2, 2)) quadratics.insert(a.str());
    CHECK(quadratics ==
          std::set<std::string>{"θ^2", "θ^2 + 1", "θ^2 + θ",
                                "θ^2 + θ + 1"});

    auto f3 = FieldCtx::make_q(3);
    CHECK(MonicRange(f3, 0).size() == 1);
    CHECK(MonicRange(f3, 0).at(0) == Poly::one(f3));

    // q = 3, i = 2: 9 distinct monic quadratics, set-equal to the direct
    // coefficient-vector construction
    std::set<std::string> seen;
    for (const Poly& a : MonicRange(f3, 2)) {
        CHECK(a.degree() == 2);
        CHECK(a.is_monic());
        seen.insert(a.str());
    }
    CHECK(seen.size() == 9);
    std::set<std::string> direct;
    for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = 0; c1 < 3; ++c1)
            direct.insert(Poly::from_ints(f3, {c0, c1, 1}).str());
    CHECK(seen == direct);

    CHECK_THROWS_AS((void)MonicRange(f3, 20, 1000), resource_error);
}

TEST_CASE("rational functions hold a canonical reduced form") {
    auto f3 = FieldCtx::make_q(3);
    const Poly a = Poly::from_ints(f3, {1, 2});
    const Poly b = Poly::from_ints(f3, {0, 1, 1});
    const RatFun canonical(a, b);
    CHECK(canonical.den().is_monic());
    CHECK(gcd_monic(canonical.num(), canonical.den()) == Poly::one(f3));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Fq> cs{Fq::from_index(f3, 1 + rng() % 2)};
        for (int n = 0; n < 3; ++n) cs.push_back(Fq::from_index(f3, rng() % 3));
        std::rotate(cs.begin(), cs.begin() + 1, cs.end());
        const Poly m(f3, std::move(cs));
        if (m.is_zero()) continue;
        CHECK(RatFun(a * m, b * m) == canonical);
    }

    CHECK_THROWS_AS((void)RatFun(a, Poly::zero(f3)), domain_error);
    CHECK(RatFun(Poly::zero(f3), b) == RatFun::zero(f3));
    CHECK(RatFun(b, b) == RatFun::one(f3));
}

TEST_CASE("fraction accumulator matches naive addition") {
    auto f3 = FieldCtx::make_q(3);
    std::mt19937_64 rng(17);
    FractionSum acc(f3);
    RatFun naive = RatFun::zero(f3);
    for (int n = 0; n < 150; ++n) {
        std::vector<Fq> nc, dc;
        for (int m = 0; m < 3; ++m) nc.push_back(Fq::from_index(f3, rng() % 3));
        dc.push_back(Fq::from_index(f3, 1 + rng() % 2));
        dc.push_back(Fq::one(f3));
        const Poly num(f3, std::move(nc));
        const Poly den(f3, std::move(dc));
        acc.add(num, den);
        naive += RatFun(num, den);
    }
    CHECK(acc.value() == naive);
}

TEST_CASE("multivariate polynomials: substitution, extraction, truncation") {
    auto f3 = FieldCtx::make_q(3);

    // substitute t := theta into (t - theta) -> 0
    FqPoly t_minus_theta(Fq::zero(f3));
    t_minus_theta.add_term(Mono::var(Var::t()), Fq::one(f3));
    t_minus_theta.add_term(Mono::var(Var::theta()), -Fq::one(f3));
    const FqPoly theta_poly = FqPoly::variable(Fq::zero(f3), Var::theta());
    CHECK(t_minus_theta.substitute(Var::t(), theta_poly).is_zero());

    // coefficient of x^q z^q in x^q z - x^q z^q is -1
    KPoly p = k_zero_poly(f3);
    p.add_term(Mono::var(Var::x(), 3) * Mono::var(Var::z()), RatFun::one(f3));
    p.add_term(Mono::var(Var::x(), 3) * Mono::var(Var::z(), 3), RatFun::from_int(f3, -1));
    CHECK(p.coeff(Mono::var(Var::x(), 3) * Mono::var(Var::z(), 3)) == RatFun::from_int(f3, -1));

    // (1 + z) mod z^1 = 1
    KPoly one_plus_z = KPoly::constant(RatFun::one(f3));
    one_plus_z.add_term(Mono::var(Var::z()), RatFun::one(f3));
    CHECK(one_plus_z.truncated(Var::z(), 1) == KPoly::constant(RatFun::one(f3)));

    // substitution commutes with ring operations at random points
    std::mt19937_64 rng(7);
    auto rand_kpoly = [&](int terms) {
        KPoly f = k_zero_poly(f3);
        for (int n = 0; n < terms; ++n)
            f.add_term(Mono::var(Var::x(), static_cast<long long>(rng() % 4)) *
                           Mono::var(Var::z(), static_cast<long long>(rng() % 3)),
                       RatFun::from_int(f3, static_cast<long long>(rng() % 3)));
        return f;
    };
    for (int trial = 0; trial < 40; ++trial) {
        const KPoly f = rand_kpoly(3), g = rand_kpoly(3), s = rand_kpoly(2);
        CHECK((f * g).substitute(Var::x(), s) ==
              f.substitute(Var::x(), s) * g.substitute(Var::x(), s));
        CHECK((f + g).substitute(Var::x(), s) ==
              f.substitute(Var::x(), s) + g.substitute(Var::x(), s));
    }
}

TEST_CASE("truncated series enforce matching orders") {
    auto f3 = FieldCtx::make_q(3);
    KPoly zp = k_zero_poly(f3);
    zp.add_term(Mono::var(Var::z()), RatFun::one(f3));
    const TruncSeries a(9, zp), b(27, zp);
    CHECK_THROWS_AS((void)(a + b), usage_error);
    CHECK_THROWS_AS((void)(a * b), usage_error);
    CHECK(a + a == TruncSeries(9, zp + zp));

    // truncated multiplication only depends on inputs mod z^N
    KPoly high = zp;
    high.add_term(Mono::var(Var::z(), 8), RatFun::one(f3));
    const TruncSeries c(9, high);
    CHECK((a * c).order() == 9);
    CHECK(a * c == TruncSeries(9, (zp * high).truncated(Var::z(), 9)));
}
