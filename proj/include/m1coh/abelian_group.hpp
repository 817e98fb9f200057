#ifndef M1COH_ABELIAN_GROUP_HPP
#define M1COH_ABELIAN_GROUP_HPP

#include "integer_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

inline bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

/**
 * Isomorphism class of a finitely generated abelian group, held in
 * invariant-factor form Z^r + Z/d1 + ... + Z/dm with 2 <= d1 | d2 | ... | dm.
 *
 * The constructor accepts any list of cyclic orders (units are dropped,
 * zeros become free summands) and normalizes, so two values compare equal
 * exactly when the groups are isomorphic.
 */
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;

    explicit FgAbelianGroup(std::size_t free_rank, std::vector<Integer> cyclic_orders = {})
        : free_rank_(free_rank)
    {
        for (auto& d : cyclic_orders) {
            Integer a = abs(d);
            if (a == 0)
                ++free_rank_;
            else if (a != 1)
                factors_.push_back(std::move(a));
        }
        normalize();
    }

    static FgAbelianGroup zero() { return {}; }
    static FgAbelianGroup free(std::size_t r) { return FgAbelianGroup(r); }
    static FgAbelianGroup cyclic(const Integer& d) { return FgAbelianGroup(0, {d}); }

    /// (Z/p)^dim
    static FgAbelianGroup elementary(const Integer& p, std::size_t dim)
    {
        return FgAbelianGroup(0, std::vector<Integer>(dim, p));
    }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& invariant_factors() const { return factors_; }

    bool is_zero() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    /// Order of the torsion subgroup.
    Integer torsion_order() const
    {
        Integer n = 1;
        for (const auto& d : factors_)
            n *= d;
        return n;
    }

    FgAbelianGroup& operator+=(const FgAbelianGroup& o)
    {
        free_rank_ += o.free_rank_;
        factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
        normalize();
        return *this;
    }

    friend FgAbelianGroup operator+(FgAbelianGroup a, const FgAbelianGroup& b) { return a += b; }

    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

    /// Primary decomposition: (prime power, multiplicity) in increasing order.
    std::map<Integer, std::size_t> primary_parts() const
    {
        std::map<Integer, std::size_t> parts;
        for (const auto& d : factors_)
            for (const auto& [p, e] : factorize(d)) {
                Integer q;
                mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
                ++parts[q];
            }
        return parts;
    }

    static std::vector<std::pair<Integer, unsigned long>> factorize(Integer n)
    {
        std::vector<std::pair<Integer, unsigned long>> out;
        for (Integer p = 2; p * p <= n; ++p) {
            unsigned long e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                n /= p;
                ++e;
            }
            if (e)
                out.emplace_back(p, e);
        }
        if (n > 1)
            out.emplace_back(n, 1);
        return out;
    }

private:
    // Replace every pair (a, b) by (gcd, lcm) until the list is a
    // divisibility chain; this is the Smith form of diag(factors).
    void normalize()
    {
        for (std::size_t i = 0; i < factors_.size(); ++i)
            for (std::size_t j = i + 1; j < factors_.size(); ++j) {
                Integer g = gcd(factors_[i], factors_[j]);
                Integer l = factors_[i] / g * factors_[j];
                factors_[i] = std::move(g);
                factors_[j] = std::move(l);
            }
        std::erase_if(factors_, [](const Integer& d) { return d == 1; });
    }

    std::size_t free_rank_ = 0;
    std::vector<Integer> factors_;
};

/// Remove the p-primary part of every invariant factor, for each p inverted.
inline FgAbelianGroup localize(const FgAbelianGroup& g, const std::set<Integer>& inverted_primes)
{
    std::vector<Integer> factors;
    for (Integer d : g.invariant_factors()) {
        for (const auto& p : inverted_primes)
            while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
                d /= p;
        factors.push_back(d);
    }
    return FgAbelianGroup(g.free_rank(), std::move(factors));
}

struct ModPDims {
    std::size_t dim_tensor = 0;  // dim G (x) F_p
    std::size_t dim_torsion = 0; // dim G[p]
    friend bool operator==(const ModPDims&, const ModPDims&) = default;
};

inline ModPDims mod_p_dims(const FgAbelianGroup& g, const Integer& p)
{
    if (!is_prime(p))
        throw std::invalid_argument("mod_p_dims: " + p.get_str() + " is not prime");
    std::size_t divisible = 0;
    for (const auto& d : g.invariant_factors())
        if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
            ++divisible;
    return {g.free_rank() + divisible, divisible};
}

struct RenderOptions {
    bool primary = false;             // Z/4 + Z/3 instead of Z/12
    std::set<Integer> inverted_primes; // free part printed as Z[1/p...]
};

/// "Z^r + Z/d1 + ...", "Z" for rank one, "0" for the zero group.
inline std::string render(const FgAbelianGroup& g, const RenderOptions& opt = {})
{
    std::vector<std::string> terms;
    if (g.free_rank() > 0) {
        std::string z = "Z";
        if (!opt.inverted_primes.empty()) {
            z += "[1/";
            Integer prod = 1;
            for (const auto& p : opt.inverted_primes)
                prod *= p;
            z += prod.get_str() + "]";
        }
        if (g.free_rank() > 1)
            z += "^" + std::to_string(g.free_rank());
        terms.push_back(std::move(z));
    }
    if (opt.primary) {
        for (const auto& [q, mult] : g.primary_parts())
            for (std::size_t i = 0; i < mult; ++i)
                terms.push_back("Z/" + q.get_str());
    } else {
        for (const auto& d : g.invariant_factors())
            terms.push_back("Z/" + d.get_str());
    }
    if (terms.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i)
        os << (i ? " + " : "") << terms[i];
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const FgAbelianGroup& g) { return os << render(g); }

} // namespace m1coh

#endif // M1COH_ABELIAN_GROUP_HPP
