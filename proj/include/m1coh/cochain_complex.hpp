#ifndef M1COH_COCHAIN_COMPLEX_HPP
#define M1COH_COCHAIN_COMPLEX_HPP

#include "abelian_group.hpp"
#include "integer_matrix.hpp"
#include "smith.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

/// Coefficient ring of a complex or module: Z (characteristic 0) or F_p.
struct Base {
    std::uint32_t characteristic = 0;

    static Base integers() { return {0}; }
    static Base prime_field(std::uint32_t p)
    {
        if (!is_prime(Integer(p)))
            throw std::invalid_argument("Base: " + std::to_string(p) + " is not prime");
        return {p};
    }

    bool is_integers() const { return characteristic == 0; }

    /// Canonical representative of a matrix over this base.
    IntegerMatrix reduce(const IntegerMatrix& m) const
    {
        return is_integers() ? m : m.reduced_mod(Integer(characteristic));
    }

    friend bool operator==(const Base&, const Base&) = default;
};

/**
 * Finite cochain complex C^0 -> C^1 -> ... -> C^top of free modules.
 *
 * differentials[n] is the (ranks[n+1] x ranks[n]) matrix of d^n. The
 * constructor rejects wrong shapes and any composite d^{n+1} d^n != 0.
 * The top degree has no outgoing differential, so cohomology there is
 * the cokernel of the last map (the complex is read as truncated).
 */
class CochainComplex {
public:
    CochainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> differentials,
                   Base base = Base::integers())
        : ranks_(std::move(ranks)), base_(base)
    {
        if (ranks_.empty())
            throw std::invalid_argument("CochainComplex: no degrees");
        if (differentials.size() + 1 != ranks_.size())
            throw std::invalid_argument("CochainComplex: need one differential per adjacent pair of degrees");
        d_.reserve(differentials.size());
        for (std::size_t n = 0; n < differentials.size(); ++n) {
            if (differentials[n].rows() != ranks_[n + 1] || differentials[n].cols() != ranks_[n])
                throw std::invalid_argument("CochainComplex: differential " + std::to_string(n) +
                                            " has the wrong shape");
            d_.push_back(base_.reduce(differentials[n]));
        }
        for (std::size_t n = 0; n + 1 < d_.size(); ++n)
            if (!base_.reduce(d_[n + 1] * d_[n]).is_zero())
                throw std::invalid_argument("CochainComplex: d^" + std::to_string(n + 1) + " d^" +
                                            std::to_string(n) + " != 0");
    }

    std::size_t top_degree() const { return ranks_.size() - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const std::vector<IntegerMatrix>& differentials() const { return d_; }
    const IntegerMatrix& differential(std::size_t n) const { return d_.at(n); }
    Base base() const { return base_; }

    /**
     * ker(d^n) / im(d^{n-1}). Over Z the kernel is a direct summand, so the
     * torsion is read off the elementary divisors of d^{n-1}; over F_p the
     * answer is (Z/p)^dim from rank counting.
     */
    FgAbelianGroup cohomology_at(std::size_t n) const
    {
        if (n > top_degree())
            throw std::out_of_range("cohomology_at: degree " + std::to_string(n) +
                                    " outside constructed range 0.." + std::to_string(top_degree()));
        if (base_.is_integers()) {
            const std::size_t out_rank = n < d_.size() ? elementary_divisors(d_[n]).size() : 0;
            std::vector<Integer> incoming;
            if (n > 0)
                incoming = elementary_divisors(d_[n - 1]);
            const std::size_t free_rank = ranks_[n] - out_rank - incoming.size();
            return FgAbelianGroup(free_rank, std::move(incoming));
        }
        const std::uint32_t p = base_.characteristic;
        const std::size_t out_rank = n < d_.size() ? rank_mod_p(d_[n], p) : 0;
        const std::size_t in_rank = n > 0 ? rank_mod_p(d_[n - 1], p) : 0;
        return FgAbelianGroup::elementary(Integer(p), ranks_[n] - out_rank - in_rank);
    }

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntegerMatrix> d_;
    Base base_;
};

} // namespace m1coh

#endif // M1COH_COCHAIN_COMPLEX_HPP
