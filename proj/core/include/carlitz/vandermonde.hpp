#ifndef CARLITZ_VANDERMONDE_HPP
#define CARLITZ_VANDERMONDE_HPP

#include <span>

#include "carlitz/kpoly.hpp"
#include "carlitz/symfun.hpp"

namespace carlitz {

// (i+1) x (i+1) Vandermonde matrix: row r is (1, x_r, x_r^2, ..., x_r^i).
template <class R>
Matrix<R> vandermonde_matrix(std::span<const R> nodes, const R& proto) {
    const std::size_t n = nodes.size();
    Matrix<R> m(n, std::vector<R>(n, zero_like(proto)));
    for (std::size_t r = 0; r < n; ++r) {
        m[r][0] = one_like(proto);
        for (std::size_t c = 1; c < n; ++c) m[r][c] = m[r][c - 1] * nodes[r];
    }
    return m;
}

// Entry (j, l) of the inverse Vandermonde matrix on pairwise-distinct nodes:
//   (-1)^{i-j} e_{i,i-j}(nodes without x_l) / prod_{m != l} (x_l - x_m).
// Closed formula only; Gaussian elimination exists solely as a test oracle.
template <class F>
F inverse_vandermonde_entry(unsigned i, unsigned j, unsigned l, std::span<const F> nodes,
                            const F& proto) {
    if (nodes.size() != static_cast<std::size_t>(i) + 1) throw usage_error("expected i+1 nodes");
    if (j > i || l > i) throw usage_error("kappa indices out of range");
    std::vector<F> rest;
    rest.reserve(i);
    F denom = one_like(proto);
    for (unsigned m = 0; m <= i; ++m) {
        if (m == l) continue;
        rest.push_back(nodes[m]);
        F diff = nodes[l] - nodes[m];
        if (diff.is_zero())
            throw singular_error("repeated Vandermonde nodes at positions " + std::to_string(l) +
                                 " and " + std::to_string(m));
        denom = denom * diff;
    }
    F num = elementary_symmetric(std::span<const F>(rest), static_cast<long long>(i - j), proto);
    if ((i - j) % 2 != 0) num = -num;
    return num / denom;
}

// kappa at the Carlitz-node specialization x_m = t^{q^m} - theta^{q^k},
// kept as an exact ratio: the denominator prod_{m != l} (t^{q^l} - t^{q^m})
// involves t only and is independent of k.
struct KappaRatio {
    FqPoly num;  // in {theta, t}
    FqPoly den;  // in t only
};
KappaRatio kappa_carlitz_nodes(const FieldPtr& ctx, unsigned i, unsigned j, unsigned l,
                               unsigned k);

// Evaluates sum_l kappa_{ijl}(t - theta^{q^k}, ..., t^{q^i} - theta^{q^k})
// a(t)^{q^l} over a common denominator and divides it out.  The quotient is
// t-free exactly when the certificate holds, and then equals the q^k-twisted
// j-th hyperderivative of a.
struct HyperViaVandermonde {
    Poly value;
    bool t_independent;
};
HyperViaVandermonde hyperderiv_via_vandermonde(const Poly& a, unsigned i, unsigned j, unsigned k);

}  // namespace carlitz

#endif
