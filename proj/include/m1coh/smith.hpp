#ifndef M1COH_SMITH_HPP
#define M1COH_SMITH_HPP

#include "integer_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace m1coh {

/// U * A * V = D with U, V unimodular and D a non-negative divisibility chain.
struct SmithForm {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;

    /// Non-zero diagonal entries of D, in order.
    std::vector<Integer> nonzero_diagonal() const
    {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
            if (D(i, i) != 0)
                out.push_back(D(i, i));
        return out;
    }

    std::size_t rank() const { return nonzero_diagonal().size(); }
};

namespace detail {

// Row/column operations applied to the working matrix are mirrored into
// the optional transforms: row ops act on U from the left, column ops act
// on V from the right.
class SmithReducer {
public:
    SmithReducer(IntegerMatrix a, bool track)
        : a_(std::move(a))
    {
        if (track) {
            u_ = IntegerMatrix::identity(a_.rows());
            v_ = IntegerMatrix::identity(a_.cols());
        }
    }

    void run()
    {
        const std::size_t m = a_.rows();
        const std::size_t n = a_.cols();
        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            if (!move_smallest_to(t))
                break;
            for (;;) {
                clear_column(t);
                clear_row(t);
                if (!column_clear(t))
                    continue;
                // Divisibility: if a(t,t) fails to divide some entry of the
                // trailing block, fold that row into row t and repeat.
                auto bad = find_non_multiple(t);
                if (!bad)
                    break;
                row_add(t, *bad, Integer(1));
            }
            if (a_(t, t) < 0) {
                a_.negate_row(t);
                if (u_)
                    u_->negate_row(t);
            }
        }
    }

    IntegerMatrix& matrix() { return a_; }
    std::optional<IntegerMatrix>& u() { return u_; }
    std::optional<IntegerMatrix>& v() { return v_; }

private:
    bool move_smallest_to(std::size_t t)
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                if (a_(i, j) == 0)
                    continue;
                if (!best || mpz_cmpabs(a_(i, j).get_mpz_t(), a_(best->first, best->second).get_mpz_t()) < 0)
                    best = {i, j};
            }
        if (!best)
            return false;
        row_swap(t, best->first);
        col_swap(t, best->second);
        return true;
    }

    // Reduce column t below the pivot; a smaller remainder becomes the new pivot.
    void clear_column(std::size_t t)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (a_(i, t) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                row_add(i, t, -q);
                if (a_(i, t) != 0) {
                    row_swap(t, i);
                    changed = true;
                }
            }
        }
    }

    void clear_row(std::size_t t)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_(t, j) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                col_add(j, t, -q);
                if (a_(t, j) != 0) {
                    col_swap(t, j);
                    changed = true;
                }
            }
        }
    }

    bool column_clear(std::size_t t) const
    {
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            if (a_(i, t) != 0)
                return false;
        return true;
    }

    std::optional<std::size_t> find_non_multiple(std::size_t t) const
    {
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
                if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t()))
                    return i;
        return std::nullopt;
    }

    void row_swap(std::size_t a, std::size_t b)
    {
        a_.swap_rows(a, b);
        if (u_)
            u_->swap_rows(a, b);
    }
    void col_swap(std::size_t a, std::size_t b)
    {
        a_.swap_cols(a, b);
        if (v_)
            v_->swap_cols(a, b);
    }
    void row_add(std::size_t dst, std::size_t src, const Integer& f)
    {
        a_.add_row_multiple(dst, src, f);
        if (u_)
            u_->add_row_multiple(dst, src, f);
    }
    void col_add(std::size_t dst, std::size_t src, const Integer& f)
    {
        a_.add_col_multiple(dst, src, f);
        if (v_)
            v_->add_col_multiple(dst, src, f);
    }

    IntegerMatrix a_;
    std::optional<IntegerMatrix> u_;
    std::optional<IntegerMatrix> v_;
};

} // namespace detail

inline SmithForm smith_normal_form(const IntegerMatrix& a)
{
    detail::SmithReducer r(a, true);
    r.run();
    return {std::move(*r.u()), std::move(r.matrix()), std::move(*r.v())};
}

/// Non-zero invariant factors of `a` (including units); the count is the rank.
inline std::vector<Integer> elementary_divisors(const IntegerMatrix& a)
{
    detail::SmithReducer r(a, false);
    r.run();
    std::vector<Integer> out;
    const auto& d = r.matrix();
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d(i, i) != 0)
            out.push_back(d(i, i));
    return out;
}

/// Rank over the prime field F_p; p must fit in 32 bits.
inline std::size_t rank_mod_p(const IntegerMatrix& a, std::uint32_t p)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<std::uint64_t> w(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), a(i, j).get_mpz_t(), p);
            w[i * n + j] = r.get_ui();
        }
    auto inv = [p](std::uint64_t x) {
        std::uint64_t result = 1, base = x % p, e = p - 2;
        while (e) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && w[piv * n + col] == 0)
            ++piv;
        if (piv == m)
            continue;
        if (piv != rank)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w[piv * n + j], w[rank * n + j]);
        const std::uint64_t s = inv(w[rank * n + col]);
        for (std::size_t j = col; j < n; ++j)
            w[rank * n + j] = w[rank * n + j] * s % p;
        for (std::size_t i = rank + 1; i < m; ++i) {
            const std::uint64_t f = w[i * n + col];
            if (f == 0)
                continue;
            for (std::size_t j = col; j < n; ++j)
                w[i * n + j] = (w[i * n + j] + (p - f) * w[rank * n + j]) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace m1coh

#endif // M1COH_SMITH_HPP
