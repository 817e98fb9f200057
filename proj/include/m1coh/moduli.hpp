#ifndef M1COH_MODULI_HPP
#define M1COH_MODULI_HPP

#include "abelian_group.hpp"
#include "amalgam.hpp"
#include "group_module.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

/// Highest degree in which the E2 page of J: M_1 -> M_{1,1} is known to degenerate and split.
inline constexpr std::size_t kDegenerationBound = 9;

class DegenerationUnproven : public std::out_of_range {
public:
    explicit DegenerationUnproven(std::size_t n)
        : std::out_of_range("degree " + std::to_string(n) + ": degeneration unproven beyond degree " +
                            std::to_string(kDegenerationBound))
    {
    }
};

/// E2^{p,q} = H^p(SL2(Z), M_{q/2}) for even q, zero for odd q.
inline FgAbelianGroup e2_entry(std::size_t p, std::size_t q)
{
    if (q % 2 == 1)
        return FgAbelianGroup::zero();
    return sl2z_cohomology(static_cast<unsigned>(q / 2), p);
}

/**
 * The E2 page on the triangle p + q <= n_max. Row q = 0 is the cohomology
 * of M_{1,1}; rows q > 0 form the dagger part.
 */
class E2Page {
public:
    explicit E2Page(std::size_t n_max)
        : n_max_(n_max)
    {
        for (std::size_t n = 0; n <= n_max_; ++n)
            for (std::size_t q = 0; q <= n; ++q)
                entries_.emplace(std::make_pair(n - q, q), e2_entry(n - q, q));
    }

    std::size_t n_max() const { return n_max_; }

    const FgAbelianGroup& at(std::size_t p, std::size_t q) const
    {
        auto it = entries_.find({p, q});
        if (it == entries_.end())
            throw std::out_of_range("E2Page: (" + std::to_string(p) + ", " + std::to_string(q) + ") outside p + q <= " +
                                    std::to_string(n_max_));
        return it->second;
    }

    static bool is_dagger(std::size_t q) { return q > 0; }

    /// Direct sum of the dagger entries on the antidiagonal p + q = n.
    FgAbelianGroup dagger_total(std::size_t n) const
    {
        FgAbelianGroup sum;
        for (std::size_t q = 1; q <= n; ++q)
            sum += at(n - q, q);
        return sum;
    }

private:
    std::size_t n_max_;
    std::map<std::pair<std::size_t, std::size_t>, FgAbelianGroup> entries_;
};

/// H^n(M_{1,1}, Z) = H^n(SL2(Z), Z).
inline FgAbelianGroup m11_group(std::size_t n) { return e2_entry(n, 0); }

/**
 * H^n(M_1, Z)^dagger, the sum of E2^{p,2k} over p + 2k = n with k >= 1.
 * Valid only where the mod-2 dimension count forces degeneration and
 * splitting (n <= 9); refuses beyond.
 */
inline FgAbelianGroup dagger_group(std::size_t n)
{
    if (n > kDegenerationBound)
        throw DegenerationUnproven(n);
    FgAbelianGroup sum;
    for (std::size_t k = 1; 2 * k <= n; ++k)
        sum += e2_entry(n - 2 * k, 2 * k);
    return sum;
}

/// H^n(M_1, Z[1/2]) = (H^n(M_{1,1}) + H^n(M_1)^dagger) localized at 2.
inline FgAbelianGroup half_inverted_group(std::size_t n)
{
    return localize(m11_group(n) + dagger_group(n), {Integer(2)});
}

/// dim_F2 H^n(M_1, Z/2)^dagger for n = 0..8, as computed by Furusawa, Tezuka and Yagita.
inline constexpr std::array<std::size_t, 9> kFtyDaggerDims{0, 0, 0, 1, 2, 3, 4, 5, 6};

struct FtyRow {
    std::size_t n = 0;
    std::size_t expected = 0;
    std::size_t computed = 0;
    std::size_t from_tensor = 0;  // dim H^n(Z)^dagger (x) F2
    std::size_t from_torsion = 0; // dim H^{n+1}(Z)^dagger [2]
    bool matches() const { return expected == computed; }
};

struct FtyReport {
    std::vector<FtyRow> rows;
    std::size_t mismatches() const
    {
        std::size_t m = 0;
        for (const auto& r : rows)
            m += r.matches() ? 0 : 1;
        return m;
    }
};

/**
 * Universal-coefficient count of the mod-2 dagger cohomology from the
 * integral dagger groups, compared against the FTY dimensions. Any nonzero
 * differential or non-split extension in degrees < 10 would make some
 * computed count smaller than expected, so zero mismatches certifies
 * degeneration in that range.
 */
inline FtyReport fty_consistency(std::size_t n_max)
{
    if (n_max >= kFtyDaggerDims.size())
        throw std::out_of_range("fty_consistency: n_max must be at most " + std::to_string(kFtyDaggerDims.size() - 1));
    FtyReport report;
    const Integer two = 2;
    for (std::size_t n = 0; n <= n_max; ++n) {
        FtyRow row;
        row.n = n;
        row.expected = kFtyDaggerDims[n];
        row.from_tensor = mod_p_dims(dagger_group(n), two).dim_tensor;
        row.from_torsion = mod_p_dims(dagger_group(n + 1), two).dim_torsion;
        row.computed = row.from_tensor + row.from_torsion;
        report.rows.push_back(row);
    }
    return report;
}

struct PTorsionWitness {
    unsigned q = 0;
    std::vector<Integer> invariant;   // coefficients of X^q Y - Y^q X in Sym^{q+1}
    bool fixed_by_S = false;
    bool fixed_by_T = false;
    FgAbelianGroup h1;                // H^1(SL2(Z), Sym^{q+1} Z^2)
    std::optional<Integer> divisible_factor;
    bool passed() const { return fixed_by_S && fixed_by_T && divisible_factor.has_value(); }
};

/**
 * Witnesses that H^1(SL2(Z), Sym^{q+1} Z^2) has q-torsion: the form
 * X^q Y - Y^q X is SL2(F_q)-invariant (checked on S and T), so
 * H^0(Sym^{q+1} F_q^2) != 0, which injects into H^1(Sym^{q+1} Z^2)[q].
 */
inline PTorsionWitness p_torsion_scan(unsigned q)
{
    if (q == 2)
        throw std::invalid_argument("p_torsion_scan: q = 2 is not supported");
    if (!is_prime(Integer(q)))
        throw std::invalid_argument("p_torsion_scan: " + std::to_string(q) + " is not prime");

    PTorsionWitness w;
    w.q = q;
    const unsigned k = q + 1;
    // Basis e1^{k-i} e2^i: X^q Y sits at i = 1, Y^q X at i = q.
    w.invariant.assign(k + 1, Integer(0));
    w.invariant[1] = 1;
    w.invariant[q] = -1;

    const GeneratorSet gens;
    const Integer modulus = q;
    const auto fixed = [&](const IntegerMatrix& g) {
        const auto image = sym_power_matrix(g, k) * w.invariant;
        for (std::size_t i = 0; i <= k; ++i)
            if (!mpz_divisible_p(Integer(image[i] - w.invariant[i]).get_mpz_t(), modulus.get_mpz_t()))
                return false;
        return true;
    };
    w.fixed_by_S = fixed(gens.S);
    w.fixed_by_T = fixed(gens.T());

    w.h1 = sl2z_cohomology(k, 1, CoefficientRing::integers(), SymConvention::Polynomial);
    for (const auto& d : w.h1.invariant_factors())
        if (mpz_divisible_p(d.get_mpz_t(), modulus.get_mpz_t())) {
            w.divisible_factor = d;
            break;
        }
    return w;
}

} // namespace m1coh

#endif // M1COH_MODULI_HPP
