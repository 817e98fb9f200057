#ifndef M1COH_GROUP_MODULE_HPP
#define M1COH_GROUP_MODULE_HPP

#include "cochain_complex.hpp"
#include "integer_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

/// The generators S (order 4) and U (order 6) of SL2(Z), with S^2 = U^3 = -I.
struct GeneratorSet {
    IntegerMatrix S{{0, -1}, {1, 0}};
    IntegerMatrix U{{0, -1}, {1, 1}};
    IntegerMatrix minus_identity{{-1, 0}, {0, -1}};

    GeneratorSet()
    {
        const auto I = IntegerMatrix::identity(2);
        if (power(S, 4) != I || power(U, 6) != I || power(S, 2) != minus_identity ||
            power(U, 3) != minus_identity)
            throw std::logic_error("GeneratorSet: amalgam relations fail");
    }

    /// T = S^{-1} U = [[1, 1], [0, 1]].
    IntegerMatrix T() const { return power(S, 3) * U; }
};

namespace detail {

// Coefficients of (a e1 + b e2)^i (c e1 + d e2)^j in the basis e1^{i+j-t} e2^t.
inline std::vector<Integer> expand_binary_form(const Integer& a, const Integer& b, unsigned i,
                                               const Integer& c, const Integer& d, unsigned j)
{
    std::vector<Integer> poly{1};
    auto multiply_linear = [&poly](const Integer& x, const Integer& y) {
        std::vector<Integer> next(poly.size() + 1);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t] += poly[t] * x;
            next[t + 1] += poly[t] * y;
        }
        poly = std::move(next);
    };
    for (unsigned s = 0; s < i; ++s)
        multiply_linear(a, b);
    for (unsigned s = 0; s < j; ++s)
        multiply_linear(c, d);
    return poly;
}

} // namespace detail

/**
 * Matrix of Sym^k(g) on the monomial basis e1^k, e1^{k-1} e2, ..., e2^k,
 * where g sends e1, e2 to its first and second columns.
 */
inline IntegerMatrix sym_power_matrix(const IntegerMatrix& g, unsigned k)
{
    if (g.rows() != 2 || g.cols() != 2)
        throw std::invalid_argument("sym_power_matrix: expected a 2x2 matrix");
    const Integer det = determinant(g);
    if (det != 1 && det != -1)
        throw std::invalid_argument("sym_power_matrix: matrix is not invertible over Z");
    IntegerMatrix out(k + 1, k + 1);
    for (unsigned col = 0; col <= k; ++col) {
        auto image = detail::expand_binary_form(g(0, 0), g(1, 0), k - col, g(0, 1), g(1, 1), col);
        for (unsigned row = 0; row <= k; ++row)
            out(row, col) = image[row];
    }
    return out;
}

/**
 * A module over SL2(Z) (or over F_p) given by the action matrices of the
 * generators "S", "U" and "-I". Construction checks invertibility over the
 * base and the relations S^4 = U^6 = 1, S^2 = U^3 = (-I).
 */
class GroupModule {
public:
    GroupModule(std::string name, std::size_t rank, Base base, std::map<std::string, IntegerMatrix> actions)
        : name_(std::move(name)), rank_(rank), base_(base)
    {
        for (auto& [gen, m] : actions) {
            if (m.rows() != rank_ || m.cols() != rank_)
                throw std::invalid_argument("GroupModule: action of " + gen + " has the wrong shape");
            const Integer det = determinant(m);
            if (base_.is_integers() ? (det != 1 && det != -1)
                                    : mpz_divisible_ui_p(det.get_mpz_t(), base_.characteristic) != 0)
                throw std::invalid_argument("GroupModule: action of " + gen + " is not invertible");
            actions_.emplace(gen, base_.reduce(m));
        }
        check_relations();
    }

    const std::string& name() const { return name_; }
    std::size_t rank() const { return rank_; }
    Base base() const { return base_; }

    const IntegerMatrix& action(const std::string& generator) const
    {
        auto it = actions_.find(generator);
        if (it == actions_.end())
            throw std::invalid_argument("GroupModule " + name_ + ": no action for generator " + generator);
        return it->second;
    }

    bool has_action(const std::string& generator) const { return actions_.count(generator) != 0; }

    /// Reduction of a Z-module modulo a prime.
    GroupModule reduced_mod(std::uint32_t p) const
    {
        if (!base_.is_integers())
            throw std::invalid_argument("GroupModule: already defined over a prime field");
        return GroupModule(name_ + " mod " + std::to_string(p), rank_, Base::prime_field(p), actions_);
    }

private:
    void check_relations() const
    {
        const auto I = IntegerMatrix::identity(rank_);
        auto eq = [this](const IntegerMatrix& a, const IntegerMatrix& b) { return base_.reduce(a) == base_.reduce(b); };
        const IntegerMatrix* s = find("S");
        const IntegerMatrix* u = find("U");
        const IntegerMatrix* m = find("-I");
        if (s && !eq(power(*s, 4), I))
            throw std::invalid_argument("GroupModule: S^4 != 1");
        if (u && !eq(power(*u, 6), I))
            throw std::invalid_argument("GroupModule: U^6 != 1");
        if (s && u && !eq(power(*s, 2), power(*u, 3)))
            throw std::invalid_argument("GroupModule: S^2 != U^3");
        if (s && m && !eq(power(*s, 2), *m))
            throw std::invalid_argument("GroupModule: S^2 != (-I)");
    }

    const IntegerMatrix* find(const std::string& g) const
    {
        auto it = actions_.find(g);
        return it == actions_.end() ? nullptr : &it->second;
    }

    std::string name_;
    std::size_t rank_;
    Base base_;
    std::map<std::string, IntegerMatrix> actions_;
};

/// Inverse of a 2x2 integer matrix of determinant +-1.
inline IntegerMatrix inverse_2x2(const IntegerMatrix& g)
{
    const Integer det = determinant(g);
    if (det != 1 && det != -1)
        throw std::invalid_argument("inverse_2x2: matrix is not invertible over Z");
    IntegerMatrix inv{{0, 0}, {0, 0}};
    inv(0, 0) = g(1, 1) * det;
    inv(0, 1) = -g(0, 1) * det;
    inv(1, 0) = -g(1, 0) * det;
    inv(1, 1) = g(0, 0) * det;
    return inv;
}

/**
 * Matrix of g on the dual lattice Hom(Sym^k Z^2, Z), in the basis dual to
 * the monomials: the transpose of Sym^k(g^{-1}).
 */
inline IntegerMatrix dual_sym_power_matrix(const IntegerMatrix& g, unsigned k)
{
    return sym_power_matrix(inverse_2x2(g), k).transpose();
}

/**
 * Over Z, Sym^k(Z^2) and its dual are different SL2(Z)-modules once k >= 4
 * (H^1 with k = 4 is Z + Z/12 for the first and Z + Z/6 for the second).
 * The low-degree tables of H^p(SL2(Z), M_k) are those of the dual, while
 * mod-p invariant polynomials such as X^pY - Y^pX live in Sym^{p+1} itself.
 */
enum class SymConvention { Polynomial, Dual };

inline const char* to_string(SymConvention c) { return c == SymConvention::Dual ? "dual" : "sym"; }

/// Sym^k(Z^2) with the standard action, or its dual.
inline GroupModule sym_module(unsigned k, SymConvention convention = SymConvention::Polynomial)
{
    const GeneratorSet gens;
    const auto matrix = [&](const IntegerMatrix& g) {
        return convention == SymConvention::Dual ? dual_sym_power_matrix(g, k) : sym_power_matrix(g, k);
    };
    const std::string name = (convention == SymConvention::Dual ? "Sym^" + std::to_string(k) + "*"
                                                                : "Sym^" + std::to_string(k));
    return GroupModule(name, k + 1, Base::integers(),
                       {{"S", matrix(gens.S)}, {"U", matrix(gens.U)}, {"-I", matrix(gens.minus_identity)}});
}

/**
 * Named coefficient modules: "trivial_Z", "sym_k" (needs k), "sym_k_dual"
 * (needs k) and "f2_squared", the mod-2 reduction of the standard
 * representation.
 */
inline GroupModule standard_coefficient_module(const std::string& name, std::optional<unsigned> k = std::nullopt)
{
    if (name == "trivial_Z") {
        const auto one = IntegerMatrix::identity(1);
        return GroupModule("Z", 1, Base::integers(), {{"S", one}, {"U", one}, {"-I", one}});
    }
    if (name == "sym_k") {
        if (!k)
            throw std::invalid_argument("standard_coefficient_module: sym_k needs k");
        return sym_module(*k);
    }
    if (name == "sym_k_dual") {
        if (!k)
            throw std::invalid_argument("standard_coefficient_module: sym_k_dual needs k");
        return sym_module(*k, SymConvention::Dual);
    }
    if (name == "f2_squared") {
        auto m = sym_module(1).reduced_mod(2);
        return GroupModule("(Z/2)^2", 2, m.base(), {{"S", m.action("S")}, {"U", m.action("U")}, {"-I", m.action("-I")}});
    }
    throw std::invalid_argument("standard_coefficient_module: unknown module '" + name + "'");
}

} // namespace m1coh

#endif // M1COH_GROUP_MODULE_HPP
