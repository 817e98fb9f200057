#ifndef M1COH_ORACLES_HPP
#define M1COH_ORACLES_HPP

// Slow reference computations used only to cross-check the main engine.
// They share no code path with the periodic resolution or with the
// pivoting SNF, except where noted.

#include "abelian_group.hpp"
#include "integer_matrix.hpp"
#include "smith.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace m1coh::oracle {

/// Rank over Q by fraction-based Gaussian elimination.
inline std::size_t rational_rank(const IntegerMatrix& a)
{
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = a(i, j);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == a.rows())
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (m[i][col] == 0)
                continue;
            const Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < a.cols(); ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Determinant by the permutation expansion.
inline Integer leibniz_determinant(const IntegerMatrix& a)
{
    if (!a.is_square())
        throw std::invalid_argument("leibniz_determinant: matrix is not square");
    std::vector<std::size_t> sigma(a.rows());
    std::iota(sigma.begin(), sigma.end(), 0);
    Integer det = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            for (std::size_t j = i + 1; j < sigma.size(); ++j)
                if (sigma[i] > sigma[j])
                    sign = -sign;
        Integer term = sign;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            term *= a(i, sigma[i]);
        det += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return det;
}

namespace detail {

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

} // namespace detail

/**
 * Elementary divisors from determinantal divisors: D_k is the gcd of all
 * k x k minors and the k-th divisor is D_k / D_{k-1}. Exponential in the
 * size, meant for matrices up to about 5 x 5.
 */
inline std::vector<Integer> minors_elementary_divisors(const IntegerMatrix& a)
{
    std::vector<Integer> out;
    Integer previous = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        Integer g = 0;
        for (const auto& rows : detail::subsets(a.rows(), k))
            for (const auto& cols : detail::subsets(a.cols(), k)) {
                IntegerMatrix minor(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        minor(i, j) = a(rows[i], cols[j]);
                g = gcd(g, leibniz_determinant(minor));
            }
        if (g == 0)
            break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

/// H^n of C^0 -> ... -> C^top from rational ranks and determinantal divisors.
inline FgAbelianGroup complex_cohomology(const std::vector<std::size_t>& ranks, const std::vector<IntegerMatrix>& d,
                                         std::size_t n)
{
    const std::size_t out_rank = n < d.size() ? rational_rank(d[n]) : 0;
    std::size_t in_rank = 0;
    std::vector<Integer> torsion;
    if (n > 0) {
        in_rank = rational_rank(d[n - 1]);
        for (const auto& e : minors_elementary_divisors(d[n - 1]))
            if (e != 1)
                torsion.push_back(e);
    }
    return FgAbelianGroup(ranks[n] - out_rank - in_rank, std::move(torsion));
}

struct SmallComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntegerMatrix> d;
};

/**
 * Random C^0 -> C^1 -> C^2 with ranks in [1, 4] and entries in [-3, 3].
 * d^1 is assembled from integer vectors in [-3, 3]^{c1} annihilating the
 * image of d^0, found by enumeration, so d^1 d^0 = 0 by construction.
 */
inline SmallComplex random_small_complex(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> size(1, 4), entry(-3, 3), coin(0, 1);
    SmallComplex c;
    c.ranks = {std::size_t(size(rng)), std::size_t(size(rng)), std::size_t(size(rng))};
    const auto c0 = c.ranks[0], c1 = c.ranks[1], c2 = c.ranks[2];

    IntegerMatrix d0(c1, c0);
    for (std::size_t i = 0; i < c1; ++i)
        for (std::size_t j = 0; j < c0; ++j)
            d0(i, j) = entry(rng);
    if (c1 > 1 && coin(rng)) {
        // Make one row a signed copy of another so the image has a cokernel.
        std::uniform_int_distribution<std::size_t> row(0, c1 - 1);
        const auto a = row(rng), b = row(rng);
        const int s = coin(rng) ? 1 : -1;
        if (a != b)
            for (std::size_t j = 0; j < c0; ++j)
                d0(b, j) = s * d0(a, j);
    }

    std::vector<std::vector<int>> annihilators;
    std::vector<int> v(c1, -3);
    while (true) {
        bool kills = true;
        for (std::size_t j = 0; j < c0 && kills; ++j) {
            Integer s = 0;
            for (std::size_t i = 0; i < c1; ++i)
                s += v[i] * d0(i, j);
            kills = s == 0;
        }
        if (kills)
            annihilators.push_back(v);
        std::size_t i = 0;
        while (i < c1 && v[i] == 3)
            v[i++] = -3;
        if (i == c1)
            break;
        ++v[i];
    }
    std::uniform_int_distribution<std::size_t> pick(0, annihilators.size() - 1);
    IntegerMatrix d1(c2, c1);
    for (std::size_t i = 0; i < c2; ++i) {
        const auto& row = annihilators[pick(rng)];
        for (std::size_t j = 0; j < c1; ++j)
            d1(i, j) = row[j];
    }
    c.d = {std::move(d0), std::move(d1)};
    return c;
}

/**
 * Normalized bar cochains of Z/m = <g> acting on Z^r through `g`:
 * C^n = maps (G \ {1})^n -> Z^r, indexed by exponent tuples in [1, m-1].
 * Returns the matrix of d^n : C^n -> C^{n+1}.
 */
inline IntegerMatrix bar_differential(unsigned m, const IntegerMatrix& g, std::size_t n)
{
    const std::size_t r = g.rows();
    const std::size_t base = m - 1;
    std::vector<IntegerMatrix> powers{IntegerMatrix::identity(r)};
    for (unsigned e = 1; e < m; ++e)
        powers.push_back(powers.back() * g);

    std::size_t cols = 1;
    for (std::size_t i = 0; i < n; ++i)
        cols *= base;
    const std::size_t rows_tuples = cols * base;
    IntegerMatrix d(rows_tuples * r, cols * r);

    // Column block of an n-tuple of exponents, or none if some entry is 0.
    const auto block = [&](const std::vector<unsigned>& t) -> std::ptrdiff_t {
        std::size_t idx = 0;
        for (unsigned e : t) {
            if (e == 0)
                return -1;
            idx = idx * base + (e - 1);
        }
        return static_cast<std::ptrdiff_t>(idx);
    };
    const auto add_block = [&](std::size_t row_block, std::ptrdiff_t col_block, const IntegerMatrix& coeff) {
        if (col_block < 0)
            return;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                d(row_block * r + i, static_cast<std::size_t>(col_block) * r + j) += coeff(i, j);
    };
    const IntegerMatrix id = IntegerMatrix::identity(r);
    const IntegerMatrix minus_id = -id;

    std::vector<unsigned> a(n + 1, 1);
    for (std::size_t row = 0; row < rows_tuples; ++row) {
        add_block(row, block({a.begin() + 1, a.end()}), powers[a[0]]);
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<unsigned> t;
            for (std::size_t j = 0; j + 1 < i; ++j)
                t.push_back(a[j]);
            t.push_back((a[i - 1] + a[i]) % m);
            for (std::size_t j = i + 1; j <= n; ++j)
                t.push_back(a[j]);
            add_block(row, block(t), i % 2 ? minus_id : id);
        }
        add_block(row, block({a.begin(), a.end() - 1}), (n + 1) % 2 ? minus_id : id);

        // Next tuple, last coordinate fastest.
        for (std::size_t i = n + 1; i-- > 0;) {
            if (a[i] < m - 1) {
                ++a[i];
                break;
            }
            a[i] = 1;
        }
    }
    return d;
}

/**
 * H^n(Z/m, Z^r) from the normalized bar complex. Torsion comes from the
 * pivoting SNF of d^{n-1} (too large for minors); the rank of d^n is taken
 * from a mod-P rank certified against the bound rank d^n <= dim C^n -
 * rank d^{n-1}, falling back to SNF when the bound is not attained.
 */
inline FgAbelianGroup bar_cohomology(unsigned m, const IntegerMatrix& g, std::size_t n)
{
    constexpr std::uint32_t P = 2147483647u;
    const auto dn = bar_differential(m, g, n);
    std::vector<Integer> incoming;
    if (n > 0)
        incoming = elementary_divisors(bar_differential(m, g, n - 1));
    const std::size_t dim = dn.cols();
    std::size_t out_rank = rank_mod_p(dn, P);
    if (out_rank != dim - incoming.size())
        out_rank = elementary_divisors(dn).size();
    const std::size_t free_rank = dim - out_rank - incoming.size();
    return FgAbelianGroup(free_rank, std::move(incoming));
}

/**
 * All integer matrices of size r with entries in [lo, hi] whose order
 * divides m, by exhaustive enumeration.
 */
inline std::vector<IntegerMatrix> finite_order_matrices(std::size_t r, unsigned m, int lo = -2, int hi = 2)
{
    std::vector<IntegerMatrix> out;
    const std::size_t cells = r * r;
    std::vector<long> e(cells, lo);
    std::vector<long> p(cells), q(cells);
    while (true) {
        // g^m = I in machine integers; entries stay tiny for finite-order g
        // and anything that grows past 2^20 is rejected early.
        p = e;
        bool ok = true;
        for (unsigned k = 1; k < m && ok; ++k) {
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    long s = 0;
                    for (std::size_t t = 0; t < r; ++t)
                        s += p[i * r + t] * e[t * r + j];
                    q[i * r + j] = s;
                }
            p.swap(q);
            for (long x : p)
                if (x > (1L << 20) || x < -(1L << 20))
                    ok = false;
        }
        if (ok) {
            for (std::size_t i = 0; i < r && ok; ++i)
                for (std::size_t j = 0; j < r && ok; ++j)
                    ok = p[i * r + j] == (i == j ? 1 : 0);
        }
        if (ok) {
            IntegerMatrix g(r, r);
            for (std::size_t c = 0; c < cells; ++c)
                g(c / r, c % r) = e[c];
            out.push_back(std::move(g));
        }
        std::size_t c = 0;
        while (c < cells && e[c] == hi)
            e[c++] = lo;
        if (c == cells)
            break;
        ++e[c];
    }
    return out;
}

} // namespace m1coh::oracle

#endif // M1COH_ORACLES_HPP
