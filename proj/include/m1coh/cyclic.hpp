#ifndef M1COH_CYCLIC_HPP
#define M1COH_CYCLIC_HPP

#include "cochain_complex.hpp"
#include "integer_matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

/**
 * A cyclic group of order m acting on a free module through the matrix g
 * of a chosen generator. Holds g - 1 and the norm N = 1 + g + ... + g^{m-1}.
 *
 * Note on real places: for complex conjugation acting on the lattice L of a
 * real elliptic curve, H^1(Gal(C/R), E(C)) is identified with
 * H^2(Z/2, L) through the exponential sequence; only the lattice side is
 * computed here.
 */
class CyclicAction {
public:
    CyclicAction(unsigned order, IntegerMatrix generator, Base base = Base::integers())
        : order_(order), g_(base.reduce(generator)), base_(base)
    {
        if (order_ == 0)
            throw std::invalid_argument("CyclicAction: order must be positive");
        if (!g_.is_square())
            throw std::invalid_argument("CyclicAction: generator action must be square");
        const auto I = IntegerMatrix::identity(g_.rows());
        if (base_.reduce(power(g_, order_)) != I)
            throw std::invalid_argument("CyclicAction: g^" + std::to_string(order_) + " != 1");
        g_minus_1_ = g_ - I;
        norm_ = partial_norm(order_);
        if (!base_.reduce(norm_ * g_minus_1_).is_zero() || !base_.reduce(g_minus_1_ * norm_).is_zero())
            throw std::logic_error("CyclicAction: N (g - 1) != 0");
    }

    unsigned order() const { return order_; }
    std::size_t rank() const { return g_.rows(); }
    Base base() const { return base_; }
    const IntegerMatrix& generator() const { return g_; }
    const IntegerMatrix& g_minus_1() const { return g_minus_1_; }
    const IntegerMatrix& norm() const { return norm_; }

    /// 1 + g + ... + g^{d-1}
    IntegerMatrix partial_norm(unsigned d) const
    {
        IntegerMatrix sum(rank(), rank());
        IntegerMatrix term = IntegerMatrix::identity(rank());
        for (unsigned i = 0; i < d; ++i) {
            sum += term;
            term = term * g_;
        }
        return base_.reduce(sum);
    }

    /// The action of the subgroup generated by g^d (order m/d).
    CyclicAction subgroup(unsigned d) const
    {
        require_divides(d);
        return CyclicAction(order_ / d, power(g_, d), base_);
    }

    /// Degree-n differential of the periodic complex: g - 1 at even n, N at odd n.
    const IntegerMatrix& differential(std::size_t n) const { return n % 2 == 0 ? g_minus_1_ : norm_; }

    void require_divides(unsigned d) const
    {
        if (d == 0 || order_ % d != 0)
            throw std::invalid_argument("CyclicAction: index " + std::to_string(d) + " does not divide order " +
                                        std::to_string(order_));
    }

private:
    unsigned order_;
    IntegerMatrix g_;
    Base base_;
    IntegerMatrix g_minus_1_;
    IntegerMatrix norm_;
};

/// M -> M -> M -> ... with g - 1 and N alternating, degrees 0..top_degree.
inline CochainComplex periodic_complex(const CyclicAction& a, std::size_t top_degree)
{
    if (top_degree < 1)
        throw std::invalid_argument("periodic_complex: top_degree must be at least 1");
    std::vector<std::size_t> ranks(top_degree + 1, a.rank());
    std::vector<IntegerMatrix> d;
    for (std::size_t n = 0; n < top_degree; ++n)
        d.push_back(a.differential(n));
    return CochainComplex(std::move(ranks), std::move(d), a.base());
}

inline FgAbelianGroup cyclic_cohomology(const CyclicAction& a, std::size_t n)
{
    return periodic_complex(a, n + 1).cohomology_at(n);
}

/**
 * Degree-n component of restriction from <g> to <g^d> on periodic cochains:
 * the identity in even degrees, 1 + g + ... + g^{d-1} in odd degrees.
 */
inline IntegerMatrix restriction_cochain_matrix(const CyclicAction& a, unsigned d, std::size_t n)
{
    a.require_divides(d);
    if (n % 2 == 0)
        return IntegerMatrix::identity(a.rank());
    return a.partial_norm(d);
}

} // namespace m1coh

#endif // M1COH_CYCLIC_HPP
