#ifndef CARLITZ_POWERSUMS_HPP
#define CARLITZ_POWERSUMS_HPP

#include <span>
#include <utility>
#include <vector>

#include "carlitz/kpoly.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

struct SumOptions {
    std::uint64_t cap = kDefaultEnumCap;
    unsigned threads = 1;
};

// S_i(k) = sum over monic a of degree i of a^k, k any integer.  Exact; the
// result is a polynomial whenever k >= 0.
RatFun power_sum_brute(const FieldPtr& ctx, unsigned i, long long k, const SumOptions& opt = {});

// Base-q digit sum of k.
unsigned sigma_q(std::uint64_t q, std::uint64_t k);

// True iff Carlitz's vanishing criteria apply: sigma_q(k) < i(q-1), or
// k < q^i - 1.  True implies S_i(k) = 0.
bool power_sum_vanishes(const FieldPtr& ctx, unsigned i, std::uint64_t k);

// Carlitz-Lee closed form for k = q^{l_1} + ... + q^{l_s} - 1 with
// 1 <= s <= q-1: zero if any l_r < i, else (1/L_i) prod_r D_{l_r}/D_{l_r-i}^{q^i}.
RatFun power_sum_closed(const FieldPtr& ctx, unsigned i, std::span<const unsigned> ells);

// Both sides of the Angles-Pellarin identity
//   sum_a a(t_1)...a(t_s)/a = (1/L_i) prod_r prod_{v<i} (t_r - theta^{q^v}),
// as polynomials in t_1..t_s over K; 0 <= s <= q-1.
struct PellarinSides {
    KPoly brute;
    KPoly closed;
};
PellarinSides angles_pellarin_both_sides(const FieldPtr& ctx, unsigned i, unsigned s,
                                         const SumOptions& opt = {});

// One factor of a hyperderivative power sum: the j-th hyperderivative raised
// to the q^mu-th power.
struct HyperFactor {
    unsigned j;
    unsigned mu;
};

// sum_a prod_r d^{j_r}(a)^{q^{mu_r}} / a   (over_a = true: the Theorem shape)
// sum_a prod_r d^{j_r}(a)^{q^{mu_r}}       (over_a = false)
RatFun hyper_sum_brute(const FieldPtr& ctx, unsigned i, std::span<const HyperFactor> factors,
                       bool over_a, const SumOptions& opt = {});

// The fully general H_i(j_1..j_l; k_1..k_l) with arbitrary integer exponents.
RatFun hyper_sum_general(const FieldPtr& ctx, unsigned i,
                         std::span<const std::pair<unsigned, long long>> jk,
                         const SumOptions& opt = {});

// Closed form (1/L_i) prod_r (-1)^{i-j_r} e_{i,i-j_r}(theta - theta^{q^{mu_r}},
// ..., theta^{q^{i-1}} - theta^{q^{mu_r}}), for i >= 1, 1 <= s <= q-1,
// 0 <= j_r <= i.
RatFun hyper_sum_closed(const FieldPtr& ctx, unsigned i, std::span<const HyperFactor> factors);

// Single-factor simplification in terms of the bracket polynomials; the two
// branches split at mu >= i (pure [.]-differences) and mu < i (mixed signs
// with the zero slot removed).
RatFun hyper_sum_closed_simplified(const FieldPtr& ctx, unsigned i, unsigned j, unsigned mu);

}  // namespace carlitz

#endif
