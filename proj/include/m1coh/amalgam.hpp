#ifndef M1COH_AMALGAM_HPP
#define M1COH_AMALGAM_HPP

#include "abelian_group.hpp"
#include "cochain_complex.hpp"
#include "cyclic.hpp"
#include "group_module.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

/**
 * Total complex computing H^*(SL2(Z), M) from SL2(Z) = Z/4 *_{Z/2} Z/6.
 *
 * Degree n is A^n + B^n + C^{n-1}, each a copy of M, where A, B, C are the
 * periodic cochains of <S>, <U> and <-I>. The differential is
 *
 *     D(a, b, c) = (dA a, dB b, rA(a) - rB(b) - dC c)
 *
 * with rA, rB the cochain-level restrictions (index 2 and 3). This is the
 * cone of rA - rB, so its cohomology is H^*(SL2(Z), M) with no extension
 * problem left to solve.
 */
class AmalgamComplex {
public:
    AmalgamComplex(const GroupModule& module, std::size_t top_degree)
        : module_name_(module.name()), top_degree_(top_degree),
          complex_(assemble(module, top_degree))
    {
    }

    const CochainComplex& complex() const { return complex_; }
    const std::string& module_name() const { return module_name_; }
    std::size_t top_degree() const { return top_degree_; }

    FgAbelianGroup cohomology_at(std::size_t n) const
    {
        if (n + 1 > top_degree_)
            throw std::out_of_range("AmalgamComplex: degree " + std::to_string(n) + " needs top degree > " +
                                    std::to_string(n));
        return complex_.cohomology_at(n);
    }

private:
    static CochainComplex assemble(const GroupModule& m, std::size_t top)
    {
        if (top < 1)
            throw std::invalid_argument("build_total_complex: top_degree must be at least 1");
        for (const char* g : {"S", "U"})
            if (!m.has_action(g))
                throw std::invalid_argument(std::string("build_total_complex: missing action of ") + g);

        const CyclicAction a(4, m.action("S"), m.base());
        const CyclicAction b(6, m.action("U"), m.base());
        const CyclicAction c = a.subgroup(2);
        if (c.generator() != b.subgroup(3).generator())
            throw std::invalid_argument("build_total_complex: S^2 and U^3 act differently");

        const std::size_t r = m.rank();
        auto slots = [](std::size_t n) { return n == 0 ? 2u : 3u; };

        std::vector<std::size_t> ranks;
        for (std::size_t n = 0; n <= top; ++n)
            ranks.push_back(slots(n) * r);

        std::vector<IntegerMatrix> d;
        for (std::size_t n = 0; n < top; ++n) {
            IntegerMatrix D(3 * r, slots(n) * r);
            place(D, 0, 0, a.differential(n));
            place(D, r, r, b.differential(n));
            place(D, 2 * r, 0, restriction_cochain_matrix(a, 2, n));
            place(D, 2 * r, r, -restriction_cochain_matrix(b, 3, n));
            if (n > 0)
                place(D, 2 * r, 2 * r, -c.differential(n - 1));
            d.push_back(std::move(D));
        }
        for (std::size_t n = 0; n + 1 < d.size(); ++n)
            if (!m.base().reduce(d[n + 1] * d[n]).is_zero())
                throw std::logic_error("build_total_complex: D^2 != 0 at degree " + std::to_string(n));
        return CochainComplex(std::move(ranks), std::move(d), m.base());
    }

    static void place(IntegerMatrix& dst, std::size_t row, std::size_t col, const IntegerMatrix& block)
    {
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                dst(row + i, col + j) = block(i, j);
    }

    std::string module_name_;
    std::size_t top_degree_;
    CochainComplex complex_;
};

inline AmalgamComplex build_total_complex(const GroupModule& module, std::size_t top_degree)
{
    return AmalgamComplex(module, top_degree);
}

/// Z, F_q, or Z with a set of primes inverted.
struct CoefficientRing {
    enum class Kind { Integers, PrimeField, Localized };
    Kind kind = Kind::Integers;
    std::uint32_t prime = 0;
    std::set<Integer> inverted;

    static CoefficientRing integers() { return {}; }
    static CoefficientRing prime_field(std::uint32_t q)
    {
        Base::prime_field(q); // validates
        return {Kind::PrimeField, q, {}};
    }
    static CoefficientRing localized(std::set<Integer> primes)
    {
        for (const auto& p : primes)
            if (!is_prime(p))
                throw std::invalid_argument("CoefficientRing: " + p.get_str() + " is not prime");
        return {Kind::Localized, 0, std::move(primes)};
    }
};

/// H^p(SL2(Z), M) for any module carrying S and U actions.
inline FgAbelianGroup sl2z_cohomology_module(const GroupModule& module, std::size_t p)
{
    return build_total_complex(module, p + 2).cohomology_at(p);
}

/**
 * H^p(SL2(Z), M_k) over Z, F_q, or a localization of Z. M_k defaults to the
 * dual of Sym^k(Z^2), the module whose cohomology makes up the Leray E2 page
 * tables; see SymConvention.
 */
inline FgAbelianGroup sl2z_cohomology(unsigned k, std::size_t p,
                                      const CoefficientRing& ring = CoefficientRing::integers(),
                                      SymConvention convention = SymConvention::Dual)
{
    const GroupModule m = sym_module(k, convention);
    switch (ring.kind) {
    case CoefficientRing::Kind::PrimeField:
        return sl2z_cohomology_module(m.reduced_mod(ring.prime), p);
    case CoefficientRing::Kind::Localized:
        return localize(sl2z_cohomology_module(m, p), ring.inverted);
    case CoefficientRing::Kind::Integers:
        break;
    }
    return sl2z_cohomology_module(m, p);
}

} // namespace m1coh

#endif // M1COH_AMALGAM_HPP
