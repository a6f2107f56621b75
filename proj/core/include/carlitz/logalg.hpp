#ifndef CARLITZ_LOGALG_HPP
#define CARLITZ_LOGALG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "carlitz/carlitz.hpp"
#include "carlitz/powersums.hpp"

namespace carlitz {

// Base-q digit positions of m with multiplicity: m = sum_r q^{mu_r}.  A digit
// d at position mu contributes d copies of mu.  Ascending.
std::vector<unsigned> digit_positions(std::uint64_t q, std::uint64_t m);

// lambda_i(m) = sum over monic a of degree i of C_a(x)^m / a, in K[x].
KPoly lambda_brute(const FieldPtr& ctx, unsigned i, std::uint64_t m, const SumOptions& opt = {});

// Closed form for lambda_i(q^mu):
//   sum_{d=0}^{mu} (-1)^{mu-d} e_{mu,mu-d}(theta^{q^{mu-1}}, ..., theta)
//     C_{theta^d}(x)^{q^i} / L_i,
// valid in both regimes i > mu and i <= mu.
KPoly lambda_closed_single(const FieldPtr& ctx, unsigned i, unsigned mu);

// Product form for m = sum_r q^{mu_r} with 1 <= s <= q-1 factors.
KPoly lambda_closed_multi(const FieldPtr& ctx, unsigned i, std::span<const unsigned> mus);

// Truncated Anderson series exp_C(sum_i lambda_i(m) z^{q^i}) mod z^N, summing
// every i with q^i < N.
TruncSeries special_poly_series(const FieldPtr& ctx, std::uint64_t m, long long order,
                                const SumOptions& opt = {});

// Thakur's closed-form special polynomial, defined when 1 <= sigma_q(m) <= q-1.
// Coefficients are asserted to land in A.
KPoly special_poly_thakur(const FieldPtr& ctx, std::uint64_t m);

// Series for a general integral beta(x): exp_C(sum_i sum_a beta(C_a(x))/a
// z^{q^i}) mod z^N.
TruncSeries special_poly_linear(const KPoly& beta, long long order, const SumOptions& opt = {});

struct LogAlgReport {
    std::uint64_t m = 0;
    std::uint64_t q = 0;
    long long order = 0;   // z-adic truncation N
    bool match = false;     // closed form == series mod z^N
    bool integral = false;  // all closed-form coefficients in A
    KPoly poly;             // the closed form
    unsigned max_i = 0;     // largest enumerated degree
    std::int64_t millis = 0;
    bool pass() const { return match && integral; }
};

// Runs both routes for P_m and compares them modulo z^order.
LogAlgReport verify_log_algebraicity(const FieldPtr& ctx, std::uint64_t m, long long order,
                                     const SumOptions& opt = {});

}  // namespace carlitz

#endif
