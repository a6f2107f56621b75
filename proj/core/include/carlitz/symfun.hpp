#ifndef CARLITZ_SYMFUN_HPP
#define CARLITZ_SYMFUN_HPP

#include <span>
#include <vector>

#include "carlitz/errors.hpp"
#include "carlitz/field.hpp"
#include "carlitz/hyperderiv.hpp"

namespace carlitz {

namespace detail {
// C(n, k) as a ring scalar applied to x: reduced mod p in characteristic p
// (Lucas), exact over Z otherwise.  k is assumed small in characteristic 0.
template <class R>
R scale_binomial(const R& x, std::uint64_t n, std::uint64_t k) {
    const std::uint64_t p = x.characteristic();
    if (p != 0) return mul_int(x, lucas_binomial(n, k, static_cast<std::uint32_t>(p)));
    if (k > n) return zero_like(x);
    // exact integer binomial; arguments stay desk-sized in the Z tier
    unsigned long long acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return mul_int(x, static_cast<long long>(acc));
}
}  // namespace detail

// e_{ij}: coefficient of s^j in prod (1 + x_m s).  Zero outside 0 <= j <= i.
// Running-product recurrence, O(i * j) ring operations.
template <class R>
R elementary_symmetric(std::span<const R> xs, long long j, const R& proto) {
    if (j < 0 || j > static_cast<long long>(xs.size())) return zero_like(proto);
    std::vector<R> e(static_cast<std::size_t>(j) + 1, zero_like(proto));
    e[0] = one_like(proto);
    for (std::size_t m = 0; m < xs.size(); ++m) {
        const std::size_t top = std::min<std::size_t>(m + 1, static_cast<std::size_t>(j));
        for (std::size_t d = top; d >= 1; --d) e[d] = e[d] + xs[m] * e[d - 1];
    }
    return e[static_cast<std::size_t>(j)];
}

// h_{ij}: sum of all degree-j monomials in the xs.  Zero for j < 0; h_{i0}=1.
template <class R>
R complete_homogeneous(std::span<const R> xs, long long j, const R& proto) {
    if (j < 0) return zero_like(proto);
    std::vector<R> h(static_cast<std::size_t>(j) + 1, zero_like(proto));
    h[0] = one_like(proto);
    for (std::size_t m = 0; m < xs.size(); ++m)
        for (std::size_t d = 1; d <= static_cast<std::size_t>(j); ++d) h[d] = h[d] + xs[m] * h[d - 1];
    return h[static_cast<std::size_t>(j)];
}

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
Matrix<R> matrix_identity(std::size_t d, const R& proto) {
    Matrix<R> m(d, std::vector<R>(d, zero_like(proto)));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = one_like(proto);
    return m;
}

template <class R>
Matrix<R> matrix_mul(const Matrix<R>& a, const Matrix<R>& b, const R& proto) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix<R> out(n, std::vector<R>(m, zero_like(proto)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t c = 0; c < m; ++c) out[i][c] = out[i][c] + a[i][j] * b[j][c];
        }
    return out;
}

// Lower-triangular d x d matrix with rows of signed elementary symmetric
// polynomials: entry (r, c) = (-1)^{r-c} e_{r, r-c}(x_1..x_r).
template <class R>
Matrix<R> matrix_e(unsigned d, std::span<const R> xs, const R& proto) {
    if (d < 1) throw usage_error("matrix dimension must be >= 1");
    Matrix<R> m(d, std::vector<R>(d, zero_like(proto)));
    for (unsigned r = 0; r < d; ++r)
        for (unsigned c = 0; c <= r; ++c) {
            R v = elementary_symmetric(xs.subspan(0, r), static_cast<long long>(r - c), proto);
            m[r][c] = ((r - c) % 2 == 0) ? v : -v;
        }
    return m;
}

// Companion lower-triangular matrix of complete homogeneous polynomials:
// entry (r, c) = h_{c+1, r-c}(x_1..x_{c+1}); inverse of matrix_e.
template <class R>
Matrix<R> matrix_h(unsigned d, std::span<const R> xs, const R& proto) {
    if (d < 1) throw usage_error("matrix dimension must be >= 1");
    Matrix<R> m(d, std::vector<R>(d, zero_like(proto)));
    for (unsigned r = 0; r < d; ++r)
        for (unsigned c = 0; c <= r; ++c)
            m[r][c] = complete_homogeneous(xs.subspan(0, std::min<std::size_t>(c + 1, xs.size())),
                                           static_cast<long long>(r - c), proto);
    return m;
}

// (d+1) x (d+1) block matrix diag(1, matrix_e(d)).
template <class R>
Matrix<R> matrix_n(unsigned d, std::span<const R> xs, const R& proto) {
    Matrix<R> e = matrix_e(d, xs, proto);
    Matrix<R> m(d + 1, std::vector<R>(d + 1, zero_like(proto)));
    m[0][0] = one_like(proto);
    for (unsigned r = 0; r < d; ++r)
        for (unsigned c = 0; c < d; ++c) m[r + 1][c + 1] = e[r][c];
    return m;
}

// sum_{j=k}^{i} (-1)^{i-j} e_{i-1,i-j}(x_1..x_{i-1}) h_{k,j-k}(x_1..x_k);
// equals 1 when k = i and 0 when k < i.
template <class R>
R symmetric_pair_sum(unsigned i, unsigned k, std::span<const R> xs, const R& proto) {
    if (k < 1 || k > i) throw usage_error("need 1 <= k <= i");
    if (xs.size() + 1 < i) throw usage_error("expected i-1 values");
    R acc = zero_like(proto);
    for (unsigned j = k; j <= i; ++j) {
        R term = elementary_symmetric(xs.subspan(0, i - 1), static_cast<long long>(i - j), proto) *
                 complete_homogeneous(xs.subspan(0, std::min<std::size_t>(k, xs.size())),
                                      static_cast<long long>(j - k), proto);
        acc = ((i - j) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// sum_{j=k}^{d} (-1)^{d-j} C(j,k) e_{d,d-j}(xs) T^{j-k}; evaluates
// e_{d,d-k}(T - x_1, ..., T - x_d).
template <class R>
R shifted_elementary_sum(unsigned d, unsigned k, std::span<const R> xs, const R& shift,
                         const R& proto) {
    if (k > d) throw usage_error("need 0 <= k <= d");
    if (xs.size() != d) throw usage_error("expected d values");
    R acc = zero_like(proto);
    R tpow = one_like(proto);
    for (unsigned j = k; j <= d; ++j) {
        R term = detail::scale_binomial(elementary_symmetric(xs, static_cast<long long>(d - j), proto), j, k) * tpow;
        acc = ((d - j) % 2 == 0) ? acc + term : acc - term;
        if (j < d) tpow = tpow * shift;
    }
    return acc;
}

// sum_{j=0}^{k} (-1)^j C(d+k-1, k-j) h_{d,j}(xs) T^{k-j}; evaluates
// h_{d,k}(T - x_1, ..., T - x_d).
template <class R>
R shifted_complete_sum(unsigned d, unsigned k, std::span<const R> xs, const R& shift,
                       const R& proto) {
    if (xs.size() != d) throw usage_error("expected d values");
    if (d == 0) return k == 0 ? one_like(proto) : zero_like(proto);
    R acc = zero_like(proto);
    std::vector<R> tpow(k + 1, one_like(proto));
    for (unsigned n = 1; n <= k; ++n) tpow[n] = tpow[n - 1] * shift;
    for (unsigned j = 0; j <= k; ++j) {
        R term = detail::scale_binomial(complete_homogeneous(xs, static_cast<long long>(j), proto),
                                        d + k - 1, k - j) *
                 tpow[k - j];
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// sum_{j=k}^{i} (-1)^{i-j} e_{i-1,i-j}(y_1..y_l, x_{l+1}..x_{i-1})
//              h_{k,j-k}(x_1..x_k)
// for 1 <= l <= k <= i-1.  The result does not involve x_{l+1}..x_k.
template <class R>
R elimination_sum(unsigned i, unsigned k, unsigned l, std::span<const R> xs, std::span<const R> ys,
                  const R& proto) {
    if (!(1 <= l && l <= k && k <= i - 1)) throw usage_error("need 1 <= l <= k <= i-1");
    if (xs.size() + 1 < i) throw usage_error("expected i-1 x-values");
    if (ys.size() != l) throw usage_error("expected l y-values");
    std::vector<R> mixed(ys.begin(), ys.end());
    for (std::size_t m = l; m + 1 < i; ++m) mixed.push_back(xs[m]);
    R acc = zero_like(proto);
    for (unsigned j = k; j <= i; ++j) {
        R term = elementary_symmetric(std::span<const R>(mixed), static_cast<long long>(i - j),
                                      proto) *
                 complete_homogeneous(xs.subspan(0, k), static_cast<long long>(j - k), proto);
        acc = ((i - j) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace carlitz

#endif
