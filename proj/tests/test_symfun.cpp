#include "doctest.h"

#include <functional>
#include <random>

#include "carlitz/bigint.hpp"
#include "carlitz/kpoly.hpp"
#include "carlitz/symfun.hpp"

using namespace carlitz;

namespace {

using ZPoly = MultiPoly<Int>;

ZPoly zx(unsigned i) { return ZPoly::variable(Int(0), Var::t_sub(i)); }
ZPoly zy(unsigned i) { return ZPoly::variable(Int(0), Var::y_sub(i)); }

std::vector<ZPoly> zxs(unsigned n) {
    std::vector<ZPoly> out;
    for (unsigned i = 1; i <= n; ++i) out.push_back(zx(i));
    return out;
}

// Brute-force oracles: e_j as a sum over j-subsets, h_j as a sum over
// degree-j multisets.
template <class R>
R esym_oracle(std::span<const R> xs, long long j, const R& proto) {
    if (j < 0 || j > static_cast<long long>(xs.size())) return zero_like(proto);
    R total = zero_like(proto);
    std::function<void(std::size_t, long long, const R&)> rec =
        [&](std::size_t idx, long long left, const R& prod) {
            if (left == 0) {
                total = total + prod;
                return;
            }
            if (idx >= xs.size()) return;
            rec(idx + 1, left - 1, prod * xs[idx]);
            rec(idx + 1, left, prod);
        };
    rec(0, j, one_like(proto));
    return total;
}

template <class R>
R hsym_oracle(std::span<const R> xs, long long j, const R& proto) {
    if (j < 0) return zero_like(proto);
    R total = zero_like(proto);
    std::function<void(std::size_t, long long, const R&)> rec =
        [&](std::size_t idx, long long left, const R& prod) {
            if (left == 0) {
                total = total + prod;
                return;
            }
            if (idx >= xs.size()) return;
            R powered = prod;
            for (long long c = 0; c <= left; ++c) {
                rec(idx + 1, left - c, powered);
                if (c < left) powered = powered * xs[idx];
            }
        };
    rec(0, j, one_like(proto));
    return total;
}

}  // namespace

TEST_CASE("elementary symmetric polynomial basics") {
    const Int zero(0);
    const ZPoly proto(zero);

    const auto xs2 = zxs(2);
    CHECK(elementary_symmetric(std::span<const ZPoly>(xs2), 1, proto) == zx(1) + zx(2));
    CHECK(elementary_symmetric(std::span<const ZPoly>(xs2), -1, proto).is_zero());
    CHECK(elementary_symmetric(std::span<const ZPoly>(xs2), 3, proto).is_zero());
    CHECK(elementary_symmetric(std::span<const ZPoly>(xs2), 0, proto) == one_like(proto));

    auto f5 = FieldCtx::make_q(5);
    const std::vector<Fq> vals = {Fq::from_int(f5, 1), Fq::from_int(f5, 2), Fq::from_int(f5, 3)};
    // (1+t)(1+2t)(1+3t) has t^3 coefficient 6 = 1 mod 5
    CHECK(elementary_symmetric(std::span<const Fq>(vals), 3, Fq::zero(f5)) ==
          Fq::from_int(f5, 1));
}

TEST_CASE("complete homogeneous polynomial basics") {
    const ZPoly proto{Int(0)};
    const auto xs2 = zxs(2);
    CHECK(complete_homogeneous(std::span<const ZPoly>(xs2), 2, proto) ==
          zx(1) * zx(1) + zx(1) * zx(2) + zx(2) * zx(2));
    const std::vector<ZPoly> empty;
    CHECK(complete_homogeneous(std::span<const ZPoly>(empty), 0, proto) == one_like(proto));
    CHECK(complete_homogeneous(std::span<const ZPoly>(empty), 3, proto).is_zero());
    CHECK(complete_homogeneous(std::span<const ZPoly>(xs2), -2, proto).is_zero());

    auto f3 = FieldCtx::make_q(3);
    const std::vector<Poly> tw = {Poly::theta(f3), Poly::theta_pow(f3, 3)};
    CHECK(complete_homogeneous(std::span<const Poly>(tw), 1, Poly::zero(f3)) ==
          Poly::theta(f3) + Poly::theta_pow(f3, 3));
}

TEST_CASE("esym and hsym agree with subset/multiset enumeration") {
    std::mt19937_64 rng(11);
    auto f101 = FieldCtx::make_prime(101);
    const Fq proto = Fq::zero(f101);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Fq> xs;
        const auto n = 1 + rng() % 7;
        for (std::uint64_t i = 0; i < n; ++i) xs.push_back(Fq::from_index(f101, rng() % 101));
        for (long long j = 0; j <= static_cast<long long>(n) + 1; ++j) {
            CHECK(elementary_symmetric(std::span<const Fq>(xs), j, proto) ==
                  esym_oracle(std::span<const Fq>(xs), j, proto));
            CHECK(complete_homogeneous(std::span<const Fq>(xs), j, proto) ==
                  hsym_oracle(std::span<const Fq>(xs), j, proto));
        }
    }
    // symbolic agreement for small sizes
    const ZPoly zproto{Int(0)};
    for (unsigned n = 0; n <= 4; ++n) {
        const auto xs = zxs(n);
        for (long long j = 0; j <= static_cast<long long>(n) + 1; ++j) {
            CHECK(elementary_symmetric(std::span<const ZPoly>(xs), j, zproto) ==
                  esym_oracle(std::span<const ZPoly>(xs), j, zproto));
            CHECK(complete_homogeneous(std::span<const ZPoly>(xs), j, zproto) ==
                  hsym_oracle(std::span<const ZPoly>(xs), j, zproto));
        }
    }
}

TEST_CASE("generating function identity at random points") {
    std::mt19937_64 rng(13);
    for (std::uint32_t p : {5u, 101u}) {
        auto ctx = FieldCtx::make_prime(p);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Fq> xs;
            for (int m = 0; m < 5; ++m) xs.push_back(Fq::from_index(ctx, rng() % p));
            FqPoly prod = FqPoly::constant(Fq::one(ctx));
            for (const Fq& x : xs) {
                FqPoly fac = FqPoly::constant(Fq::one(ctx));
                fac.add_term(Mono::var(Var::t()), x);
                prod *= fac;
            }
            for (long long j = 0; j <= 5; ++j)
                CHECK(prod.coeff_in(Var::t(), j).constant_value() ==
                      elementary_symmetric(std::span<const Fq>(xs), j, Fq::zero(ctx)));
        }
    }
}

TEST_CASE("triangular matrices of symmetric polynomials") {
    const ZPoly proto{Int(0)};

    // d = 2: E = [[1,0],[-x1,1]], H = [[1,0],[x1,1]]
    const auto xs1 = zxs(1);
    const auto e2 = matrix_e(2, std::span<const ZPoly>(xs1), proto);
    const auto h2 = matrix_h(2, std::span<const ZPoly>(xs1), proto);
    CHECK(e2[1][0] == -zx(1));
    CHECK(e2[1][1] == one_like(proto));
    CHECK(h2[1][0] == zx(1));
    CHECK(matrix_mul(e2, h2, proto) == matrix_identity<ZPoly>(2, proto));

    // d = 1: both [[1]]
    const std::vector<ZPoly> none;
    CHECK(matrix_e(1, std::span<const ZPoly>(none), proto) ==
          matrix_identity<ZPoly>(1, proto));
    CHECK(matrix_h(1, std::span<const ZPoly>(none), proto) ==
          matrix_identity<ZPoly>(1, proto));

    // d <= 6 symbolic: E_d H_d = H_d E_d = I
    for (unsigned d = 1; d <= 6; ++d) {
        const auto xs = zxs(d - 1);
        const auto e = matrix_e(d, std::span<const ZPoly>(xs), proto);
        const auto hm = matrix_h(d, std::span<const ZPoly>(xs), proto);
        CHECK(matrix_mul(e, hm, proto) == matrix_identity<ZPoly>(d, proto));
        CHECK(matrix_mul(hm, e, proto) == matrix_identity<ZPoly>(d, proto));
    }

    // d = 4 over F_7 at concrete values
    auto f7 = FieldCtx::make_prime(7);
    const std::vector<Fq> vals = {Fq::from_int(f7, 1), Fq::from_int(f7, 2), Fq::from_int(f7, 3)};
    const Fq fproto = Fq::zero(f7);
    CHECK(matrix_mul(matrix_e(4, std::span<const Fq>(vals), fproto),
                     matrix_h(4, std::span<const Fq>(vals), fproto),
                     fproto) == matrix_identity<Fq>(4, fproto));

    // N_d = diag(1, E_d)
    const auto n3 = matrix_n(3, std::span<const ZPoly>(zxs(2)), proto);
    CHECK(n3.size() == 4);
    CHECK(n3[0][0] == one_like(proto));
    CHECK(n3[0][1].is_zero());
    CHECK(n3[1][0].is_zero());
    CHECK(n3[2][1] == -zx(1));
}

TEST_CASE("paired e-h sum collapses to a delta") {
    const ZPoly proto{Int(0)};
    // i = 2, k = 1 telescopes to zero
    const auto xs1 = zxs(1);
    CHECK(symmetric_pair_sum(2, 1, std::span<const ZPoly>(xs1), proto).is_zero());
    // k = i gives 1 for any values
    const auto xs2 = zxs(2);
    CHECK(symmetric_pair_sum(3, 3, std::span<const ZPoly>(xs2), proto) == one_like(proto));

    // i = 4, k = 2 at random values over F_5
    std::mt19937_64 rng(21);
    auto f5 = FieldCtx::make_q(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Fq> xs;
        for (int m = 0; m < 3; ++m) xs.push_back(Fq::from_index(f5, rng() % 5));
        CHECK(symmetric_pair_sum(4, 2, std::span<const Fq>(xs), Fq::zero(f5)).is_zero());
    }

    for (unsigned i = 1; i <= 5; ++i) {
        const auto xs = zxs(i);
        for (unsigned k = 1; k <= i; ++k) {
            const ZPoly got = symmetric_pair_sum(i, k, std::span<const ZPoly>(xs), proto);
            if (k == i)
                CHECK(got == one_like(proto));
            else
                CHECK(got.is_zero());
        }
    }
    CHECK_THROWS_AS(
        (void)symmetric_pair_sum(2, 0, std::span<const ZPoly>(zxs(1)), proto), usage_error);
}

TEST_CASE("shift identities for e and h") {
    const ZPoly proto{Int(0)};
    const ZPoly shift = ZPoly::variable(Int(0), Var::shift());

    // d=1, k=0 elementary: T - x1
    const auto xs1 = zxs(1);
    CHECK(shifted_elementary_sum(1, 0, std::span<const ZPoly>(xs1), shift, proto) ==
          shift - zx(1));
    // d=2, k=1 complete: 2T - x1 - x2
    const auto xs2 = zxs(2);
    CHECK(shifted_complete_sum(2, 1, std::span<const ZPoly>(xs2), shift, proto) ==
          shift + shift - zx(1) - zx(2));
    // d=k=2 elementary: e_{2,0} = 1
    CHECK(shifted_elementary_sum(2, 2, std::span<const ZPoly>(xs2), shift, proto) ==
          one_like(proto));

    // symbolic identity over Z for d <= 4, k <= 4
    for (unsigned d = 1; d <= 4; ++d) {
        const auto xs = zxs(d);
        std::vector<ZPoly> shifted;
        for (const auto& x : xs) shifted.push_back(shift - x);
        for (unsigned k = 0; k <= 4; ++k) {
            if (k <= d)
                CHECK(shifted_elementary_sum(d, k, std::span<const ZPoly>(xs), shift, proto) ==
                      elementary_symmetric(std::span<const ZPoly>(shifted),
                                           static_cast<long long>(d - k), proto));
            CHECK(shifted_complete_sum(d, k, std::span<const ZPoly>(xs), shift, proto) ==
                  complete_homogeneous(std::span<const ZPoly>(shifted),
                                       static_cast<long long>(k), proto));
        }
    }

    // characteristic-p reduction of the binomials
    std::mt19937_64 rng(31);
    for (std::uint64_t q : {2, 3}) {
        auto ctx = FieldCtx::make_q(q);
        const Fq fproto = Fq::zero(ctx);
        for (int trial = 0; trial < 50; ++trial) {
            const unsigned d = 1 + static_cast<unsigned>(rng() % 4);
            const unsigned k = static_cast<unsigned>(rng() % 5);
            std::vector<Fq> xs;
            for (unsigned m = 0; m < d; ++m) xs.push_back(Fq::from_index(ctx, rng() % q));
            const Fq tv = Fq::from_index(ctx, rng() % q);
            std::vector<Fq> shifted_vals;
            for (const Fq& x : xs) shifted_vals.push_back(tv - x);
            if (k <= d)
                CHECK(shifted_elementary_sum(d, k, std::span<const Fq>(xs), tv, fproto) ==
                      elementary_symmetric(std::span<const Fq>(shifted_vals),
                                           static_cast<long long>(d - k), fproto));
            CHECK(shifted_complete_sum(d, k, std::span<const Fq>(xs), tv, fproto) ==
                  complete_homogeneous(std::span<const Fq>(shifted_vals),
                                       static_cast<long long>(k), fproto));
        }
    }
}

TEST_CASE("variable elimination in the mixed e-h sum") {
    const ZPoly proto{Int(0)};

    // i=2, k=1, l=1: x1 - y1 by direct two-term expansion
    {
        const std::vector<ZPoly> xs = {zx(1)};
        const std::vector<ZPoly> ys = {zy(1)};
        CHECK(elimination_sum(2, 1, 1, std::span<const ZPoly>(xs), std::span<const ZPoly>(ys),
                              proto) == zx(1) - zy(1));
    }

    // symbolic: for i <= 5, the result never contains x_{l+1}..x_k
    for (unsigned i = 2; i <= 5; ++i)
        for (unsigned k = 1; k + 1 <= i; ++k)
            for (unsigned l = 1; l <= k; ++l) {
                const auto xs = zxs(i - 1);
                std::vector<ZPoly> ys;
                for (unsigned m = 1; m <= l; ++m) ys.push_back(zy(m));
                const ZPoly g = elimination_sum(i, k, l, std::span<const ZPoly>(xs),
                                                std::span<const ZPoly>(ys), proto);
                for (unsigned m = l + 1; m <= k; ++m)
                    CHECK_FALSE(g.contains_var(Var::t_sub(m)));
                // re-indexed reduction
                std::vector<ZPoly> reduced;
                for (unsigned m = 1; m <= l; ++m) reduced.push_back(zx(m));
                for (unsigned m = k + 1; m + 1 <= i; ++m) reduced.push_back(zx(m));
                CHECK(g == elimination_sum(i - (k - l), l, l, std::span<const ZPoly>(reduced),
                                           std::span<const ZPoly>(ys), proto));
            }

    // i=3, k=2, l=1 at concrete points: independent of x2
    auto f5 = FieldCtx::make_q(5);
    const Fq fproto = Fq::zero(f5);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Fq> xs = {Fq::from_index(f5, rng() % 5), Fq::from_index(f5, rng() % 5)};
        const std::vector<Fq> ys = {Fq::from_index(f5, rng() % 5)};
        const Fq a =
            elimination_sum(3, 2, 1, std::span<const Fq>(xs), std::span<const Fq>(ys), fproto);
        xs[1] = Fq::from_index(f5, rng() % 5);
        const Fq b =
            elimination_sum(3, 2, 1, std::span<const Fq>(xs), std::span<const Fq>(ys), fproto);
        CHECK(a == b);
    }

    CHECK_THROWS_AS((void)elimination_sum(2, 2, 1, std::span<const ZPoly>(zxs(1)),
                                          std::span<const ZPoly>(zxs(1)), proto),
                    usage_error);
}
