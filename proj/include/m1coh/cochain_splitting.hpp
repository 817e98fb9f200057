#ifndef M1COH_COCHAIN_SPLITTING_HPP
#define M1COH_COCHAIN_SPLITTING_HPP

#include "integer_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

/// A vector of the lattice Z^d.
using LatticeVector = std::vector<Integer>;

/// phi in Hom(Z^d, Q), given by its values on the standard basis.
class DualVector {
public:
    DualVector() = default;
    explicit DualVector(std::vector<Rational> coefficients)
        : c_(std::move(coefficients)) {}

    static DualVector basis(std::size_t d, std::size_t i)
    {
        std::vector<Rational> c(d, Rational(0));
        c.at(i) = 1;
        return DualVector(std::move(c));
    }

    std::size_t rank() const { return c_.size(); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational operator()(const LatticeVector& v) const
    {
        if (v.size() != c_.size())
            throw std::invalid_argument("DualVector: rank mismatch");
        Rational s = 0;
        for (std::size_t i = 0; i < c_.size(); ++i)
            s += c_[i] * v[i];
        return s;
    }

    friend DualVector operator+(const DualVector& a, const DualVector& b)
    {
        std::vector<Rational> c(a.c_);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] += b.c_.at(i);
        return DualVector(std::move(c));
    }

    friend DualVector operator*(const Rational& s, const DualVector& a)
    {
        std::vector<Rational> c(a.c_);
        for (auto& x : c)
            x *= s;
        return DualVector(std::move(c));
    }

private:
    std::vector<Rational> c_;
};

/**
 * An n-cochain on Z^d with rational values, held as an evaluator. The
 * cochain groups are infinite, so identities are checked by exact
 * evaluation on sampled arguments.
 */
class Cochain {
public:
    using Evaluator = std::function<Rational(std::span<const LatticeVector>)>;

    Cochain(std::size_t arity, std::size_t rank, Evaluator f)
        : arity_(arity), rank_(rank), f_(std::move(f)) {}

    std::size_t arity() const { return arity_; }
    std::size_t rank() const { return rank_; }

    Rational operator()(std::span<const LatticeVector> args) const
    {
        if (args.size() != arity_)
            throw std::invalid_argument("Cochain: expected " + std::to_string(arity_) + " arguments");
        return f_(args);
    }

    friend Cochain operator-(const Cochain& a, const Cochain& b)
    {
        if (a.arity_ != b.arity_ || a.rank_ != b.rank_)
            throw std::invalid_argument("Cochain: arity or rank mismatch");
        return Cochain(a.arity_, a.rank_, [a, b](std::span<const LatticeVector> x) -> Rational { return a(x) - b(x); });
    }

private:
    std::size_t arity_;
    std::size_t rank_;
    Evaluator f_;
};

inline LatticeVector add(const LatticeVector& a, const LatticeVector& b)
{
    LatticeVector c(a);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.at(i);
    return c;
}

/**
 * Inhomogeneous cochain differential with trivial coefficients:
 *   (df)(l1..l{n+1}) = f(l2..l{n+1}) + sum_i (-1)^i f(.., li + l{i+1}, ..)
 *                      + (-1)^{n+1} f(l1..ln)
 */
inline Cochain cochain_differential(const Cochain& f)
{
    const std::size_t n = f.arity();
    return Cochain(n + 1, f.rank(), [f, n](std::span<const LatticeVector> x) -> Rational {
        std::vector<LatticeVector> args(x.begin() + 1, x.end());
        Rational total = f(args);
        for (std::size_t i = 1; i <= n; ++i) {
            args.clear();
            for (std::size_t j = 0; j < i - 1; ++j)
                args.push_back(x[j]);
            args.push_back(add(x[i - 1], x[i]));
            for (std::size_t j = i + 1; j <= n; ++j)
                args.push_back(x[j]);
            total += (i % 2 ? -1 : 1) * f(args);
        }
        args.assign(x.begin(), x.end() - 1);
        total += ((n + 1) % 2 ? -1 : 1) * f(args);
        return total;
    });
}

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                sign = -sign;
    return sign;
}

} // namespace detail

/// a^k(phi1 ^ ... ^ phik)(l1..lk) = (1/k!) sum_sigma sgn(sigma) prod_i phi_i(l_{sigma i}).
inline Cochain splitting_map(const std::vector<DualVector>& phis, std::size_t rank)
{
    const std::size_t k = phis.size();
    if (k > rank)
        throw std::invalid_argument("splitting_map: k = " + std::to_string(k) + " exceeds lattice rank " +
                                    std::to_string(rank));
    for (const auto& phi : phis)
        if (phi.rank() != rank)
            throw std::invalid_argument("splitting_map: dual vector has the wrong rank");
    return Cochain(k, rank, [phis, k](std::span<const LatticeVector> x) -> Rational {
        std::vector<std::size_t> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 0);
        Rational sum = 0;
        Rational factorial = 1;
        for (std::size_t i = 2; i <= k; ++i)
            factorial *= static_cast<unsigned long>(i);
        do {
            Rational term = detail::permutation_sign(sigma);
            for (std::size_t i = 0; i < k && term != 0; ++i)
                term *= phis[i](x[sigma[i]]);
            sum += term;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return sum / factorial;
    });
}

/// (phi1 u phi2)(l1, l2) = phi1(l1) phi2(l2)
inline Cochain cup_product(const DualVector& phi1, const DualVector& phi2)
{
    return Cochain(2, phi1.rank(), [phi1, phi2](std::span<const LatticeVector> x) -> Rational { return phi1(x[0]) * phi2(x[1]); });
}

/// g(l) = -1/2 phi1(l) phi2(l), with dg = phi1 u phi2 - a^2(phi1 ^ phi2).
inline Cochain cup_primitive(const DualVector& phi1, const DualVector& phi2)
{
    return Cochain(1, phi1.rank(), [phi1, phi2](std::span<const LatticeVector> x) -> Rational {
        return Rational(-1, 2) * phi1(x[0]) * phi2(x[0]);
    });
}

/// Seeded source of lattice vectors and dual vectors with entries in [-10, 10].
class LatticeSampler {
public:
    LatticeSampler(std::size_t rank, std::uint64_t seed)
        : rank_(rank), rng_(seed) {}

    LatticeVector vector()
    {
        LatticeVector v(rank_);
        for (auto& x : v)
            x = dist_(rng_);
        return v;
    }

    std::vector<LatticeVector> tuple(std::size_t n)
    {
        std::vector<LatticeVector> t;
        for (std::size_t i = 0; i < n; ++i)
            t.push_back(vector());
        return t;
    }

    DualVector dual()
    {
        std::vector<Rational> c(rank_);
        for (auto& x : c)
            x = dist_(rng_);
        return DualVector(std::move(c));
    }

private:
    std::size_t rank_;
    std::mt19937_64 rng_;
    std::uniform_int_distribution<int> dist_{-10, 10};
};

struct IdentityReport {
    std::string name;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::uint64_t seed = 0;
    bool passed() const { return failures == 0; }
};

/**
 * Checks d^k a^k(phi1 ^ ... ^ phik) = 0 at `samples` seeded points; each
 * sample draws fresh dual vectors and a fresh (k+1)-tuple of lattice vectors.
 */
inline IdentityReport verify_d_after_a(std::size_t k, std::size_t d, std::size_t samples, std::uint64_t seed = 0)
{
    if (k > d || d > 3)
        throw std::invalid_argument("verify_d_after_a: need k <= d <= 3");
    IdentityReport rep{"d a^" + std::to_string(k) + " = 0 on Z^" + std::to_string(d), samples, 0, seed};
    LatticeSampler sampler(d, seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<DualVector> phis;
        for (std::size_t i = 0; i < k; ++i)
            phis.push_back(sampler.dual());
        const auto da = cochain_differential(splitting_map(phis, d));
        const auto args = sampler.tuple(k + 1);
        if (da(args) != 0)
            ++rep.failures;
    }
    return rep;
}

/// Checks phi1 u phi2 - a^2(phi1 ^ phi2) = d(cup_primitive) pointwise.
inline IdentityReport verify_cup_primitive(const DualVector& phi1, const DualVector& phi2, std::size_t samples,
                                           std::uint64_t seed = 0)
{
    const std::size_t d = phi1.rank();
    if (d < 2 || phi2.rank() != d)
        throw std::invalid_argument("verify_cup_primitive: need rank >= 2 and matching ranks");
    IdentityReport rep{"cup - a^2 = d g on Z^" + std::to_string(d), samples, 0, seed};
    const auto lhs = cup_product(phi1, phi2) - splitting_map({phi1, phi2}, d);
    const auto rhs = cochain_differential(cup_primitive(phi1, phi2));
    LatticeSampler sampler(d, seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto args = sampler.tuple(2);
        if (lhs(args) != rhs(args))
            ++rep.failures;
    }
    return rep;
}

} // namespace m1coh

#endif // M1COH_COCHAIN_SPLITTING_HPP
