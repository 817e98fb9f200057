#ifndef M1COH_EXTERIOR_HPP
#define M1COH_EXTERIOR_HPP

#include "cochain_splitting.hpp"
#include "integer_matrix.hpp"
#include "smith.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

/**
 * Element of an exterior algebra over Z on at most 32 degree-one
 * generators. A basis monomial is a bitmask; set bits are the generator
 * indices in increasing order.
 */
class ExteriorElement {
public:
    using Monomial = std::uint32_t;

    ExteriorElement() = default;

    static ExteriorElement generator(std::size_t i)
    {
        ExteriorElement e;
        e.terms_[Monomial(1) << i] = 1;
        return e;
    }

    static ExteriorElement scalar(const Integer& c)
    {
        ExteriorElement e;
        if (c != 0)
            e.terms_[0] = c;
        return e;
    }

    const std::map<Monomial, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coefficient(Monomial m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Degree of a homogeneous element; nullopt for zero or mixed degree.
    std::optional<int> degree() const
    {
        std::optional<int> deg;
        for (const auto& [m, c] : terms_) {
            const int d = std::popcount(m);
            if (deg && *deg != d)
                return std::nullopt;
            deg = d;
        }
        return deg;
    }

    /// Sign of e_A ^ e_B relative to e_{A u B}; zero if A and B meet.
    static int merge_sign(Monomial a, Monomial b)
    {
        if (a & b)
            return 0;
        int swaps = 0;
        for (Monomial rest = a; rest; rest &= rest - 1) {
            const int i = std::countr_zero(rest);
            const Monomial below = (Monomial(1) << i) - 1;
            swaps += std::popcount(b & below);
        }
        return swaps % 2 ? -1 : 1;
    }

    ExteriorElement& operator+=(const ExteriorElement& o)
    {
        for (const auto& [m, c] : o.terms_)
            accumulate(m, c);
        return *this;
    }

    ExteriorElement& operator*=(const Integer& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b)
    {
        for (const auto& [m, c] : b.terms_)
            a.accumulate(m, -c);
        return a;
    }
    friend ExteriorElement operator*(const Integer& s, ExteriorElement a) { return a *= s; }

    /// Wedge product.
    friend ExteriorElement operator^(const ExteriorElement& a, const ExteriorElement& b)
    {
        ExteriorElement out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                const int s = merge_sign(ma, mb);
                if (s)
                    out.accumulate(ma | mb, s * ca * cb);
            }
        return out;
    }

    friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

private:
    void accumulate(Monomial m, const Integer& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::map<Monomial, Integer> terms_;
};

/**
 * Generator layout for H^*(T^k x (S^1)^k) with T a rank-2 torus: the two
 * duals of the j-th torus factor are 2j and 2j+1, the circle duals come
 * after them at 2k + j.
 */
struct TorusCircleLayout {
    std::size_t k = 1;

    std::size_t torus(std::size_t copy, std::size_t coordinate) const { return 2 * copy + coordinate; }
    std::size_t circle(std::size_t copy) const { return 2 * k + copy; }
    std::size_t generators() const { return 3 * k; }
};

/**
 * f^* lambda on the j-th factor T x S^1, found by evaluating the class
 * (x, n) ^ (y, m) -> n lambda(y) - m lambda(x) on pairs of basis vectors
 * of Lambda + Z and reading off the coefficients of the 2-form.
 */
inline ExteriorElement pullback_on_h2(const DualVector& lambda, std::size_t copy = 0, const TorusCircleLayout& layout = {})
{
    if (lambda.rank() != 2)
        throw std::invalid_argument("pullback_on_h2: expected a dual vector on a rank-2 lattice");
    struct Vec {
        LatticeVector x;
        Integer n;
        std::size_t generator;
    };
    const std::vector<Vec> basis{
        {{1, 0}, 0, layout.torus(copy, 0)},
        {{0, 1}, 0, layout.torus(copy, 1)},
        {{0, 0}, 1, layout.circle(copy)},
    };
    ExteriorElement out;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            const Rational value = basis[a].n * lambda(basis[b].x) - basis[b].n * lambda(basis[a].x);
            if (value.get_den() != 1)
                throw std::invalid_argument("pullback_on_h2: dual vector is not integral");
            // The 2-form w with w(u_a, u_b) = value, in increasing generator order.
            const auto ga = basis[a].generator;
            const auto gb = basis[b].generator;
            ExteriorElement term = ExteriorElement::generator(std::min(ga, gb)) ^ ExteriorElement::generator(std::max(ga, gb));
            out += Integer(ga < gb ? value.get_num() : Integer(-value.get_num())) * term;
        }
    return out;
}

struct SquareReport {
    std::size_t k = 0;
    int sign = 0;                 // global sign relating the two paths, 0 if none works
    std::size_t basis_size = 0;
    std::size_t agreements = 0;   // basis vectors on which top = sign * bottom
    bool bottom_injective = false;
    bool passed() const { return sign != 0 && agreements == basis_size && bottom_injective; }
};

namespace detail {

// Sign of the permutation that sorts `order` increasingly (distinct entries).
inline int sorting_sign(const std::vector<std::size_t>& order)
{
    int sign = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j])
                sign = -sign;
    return sign;
}

} // namespace detail

/**
 * Compares the two routes Sym^k H^1(T) -> H^{2k}(T^k x (S^1)^k):
 *   top then right: lambda_1 ... lambda_k -> prod_i f^*(lambda_i), with
 *                   f^* lambda = sum_j (pullback on the j-th factor);
 *   left then bottom: eps_1 (x) ... (x) eps_k (x) s, included as
 *                   sum_sigma prod_j (eps_j ^ lambda_{sigma j} on copy j).
 * Passes if one global sign relates the routes on the whole monomial basis.
 * `flip_basis_index` negates the bottom image of one basis vector, for
 * exercising the consistency check.
 */
inline SquareReport verify_square(std::size_t k, std::optional<std::size_t> flip_basis_index = std::nullopt)
{
    if (k < 1 || k > 2)
        throw std::invalid_argument("verify_square: k must be 1 or 2");
    const TorusCircleLayout layout{k};
    SquareReport rep;
    rep.k = k;
    rep.basis_size = k + 1;

    std::vector<ExteriorElement> top, bottom;
    for (std::size_t i = 0; i <= k; ++i) {
        // Monomial e1*^{k-i} e2*^i as a list of coordinates.
        std::vector<std::size_t> coords(k - i, 0);
        coords.insert(coords.end(), i, 1);

        ExteriorElement t = ExteriorElement::scalar(1);
        for (std::size_t c : coords) {
            ExteriorElement pulled;
            for (std::size_t j = 0; j < k; ++j)
                pulled += pullback_on_h2(DualVector::basis(2, c), j, layout);
            t = t ^ pulled;
        }
        top.push_back(std::move(t));

        ExteriorElement b;
        std::vector<std::size_t> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            std::vector<std::size_t> order;
            ExteriorElement::Monomial mask = 0;
            for (std::size_t j = 0; j < k; ++j) {
                order.push_back(layout.circle(j));
                order.push_back(layout.torus(j, coords[sigma[j]]));
            }
            for (auto g : order)
                mask |= ExteriorElement::Monomial(1) << g;
            ExteriorElement sorted = ExteriorElement::scalar(1);
            for (std::size_t g = 0; g < layout.generators(); ++g)
                if (mask & (ExteriorElement::Monomial(1) << g))
                    sorted = sorted ^ ExteriorElement::generator(g);
            b += Integer(detail::sorting_sign(order)) * sorted;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        if (flip_basis_index && *flip_basis_index == i)
            b *= -1;
        bottom.push_back(std::move(b));
    }

    for (int s : {1, -1}) {
        std::size_t agree = 0;
        for (std::size_t i = 0; i <= k; ++i)
            if (top[i] == Integer(s) * bottom[i])
                ++agree;
        if (agree == rep.basis_size) {
            rep.sign = s;
            rep.agreements = agree;
            break;
        }
        rep.agreements = std::max(rep.agreements, agree);
    }

    // Injectivity of the bottom map: its images span a rank-(k+1) lattice.
    std::map<ExteriorElement::Monomial, std::size_t> column;
    for (const auto& b : bottom)
        for (const auto& [m, c] : b.terms())
            column.try_emplace(m, column.size());
    IntegerMatrix images(bottom.size(), column.size());
    for (std::size_t i = 0; i < bottom.size(); ++i)
        for (const auto& [m, c] : bottom[i].terms())
            images(i, column[m]) = c;
    rep.bottom_injective = elementary_divisors(images).size() == bottom.size();
    return rep;
}

} // namespace m1coh

#endif // M1COH_EXTERIOR_HPP
