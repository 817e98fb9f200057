#ifndef M1COH_TORSOR_HPP
#define M1COH_TORSOR_HPP

#include "integer_matrix.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

/// An element (x, y) of (Z/4)^2.
struct Z4Pair {
    int x = 0;
    int y = 0;

    static int mod4(int v) { return ((v % 4) + 4) % 4; }

    Z4Pair operator+(const Z4Pair& o) const { return {mod4(x + o.x), mod4(y + o.y)}; }
    Z4Pair operator-() const { return {mod4(-x), mod4(-y)}; }
    Z4Pair doubled() const { return {mod4(2 * x), mod4(2 * y)}; }
    bool is_zero() const { return x == 0 && y == 0; }
    int index() const { return 4 * x + y; }
    static Z4Pair from_index(int i) { return {i / 4, i % 4}; }

    friend auto operator<=>(const Z4Pair&, const Z4Pair&) = default;
};

/// A 2x2 matrix over Z/4 acting on column vectors.
struct Mat2Z4 {
    std::array<int, 4> a{1, 0, 0, 1}; // row-major

    Mat2Z4() = default;
    Mat2Z4(int a00, int a01, int a10, int a11)
        : a{Z4Pair::mod4(a00), Z4Pair::mod4(a01), Z4Pair::mod4(a10), Z4Pair::mod4(a11)} {}

    int det() const { return Z4Pair::mod4(a[0] * a[3] - a[1] * a[2]); }
    bool invertible() const { return det() % 2 == 1; }

    Z4Pair operator*(const Z4Pair& v) const
    {
        return {Z4Pair::mod4(a[0] * v.x + a[1] * v.y), Z4Pair::mod4(a[2] * v.x + a[3] * v.y)};
    }
    Mat2Z4 operator*(const Mat2Z4& o) const
    {
        return {a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3], a[2] * o.a[0] + a[3] * o.a[2],
                a[2] * o.a[1] + a[3] * o.a[3]};
    }

    /// Reduction mod 2 as an integer matrix with entries in {0, 1}.
    IntegerMatrix mod2() const { return IntegerMatrix{{a[0] % 2, a[1] % 2}, {a[2] % 2, a[3] % 2}}; }

    friend auto operator<=>(const Mat2Z4&, const Mat2Z4&) = default;
};

/// A permutation of {0, ..., n-1}, image of i at position i.
using Permutation = std::vector<std::size_t>;

inline Permutation compose(const Permutation& f, const Permutation& g) // f after g
{
    Permutation h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        h[i] = f[g[i]];
    return h;
}

inline bool is_identity(const Permutation& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i)
            return false;
    return true;
}

/// Cycle lengths in decreasing order.
inline std::vector<std::size_t> cycle_type(const Permutation& p)
{
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

/**
 * The canonical M[2]-torsor built from M = (Z/4)^2.
 *
 * Doubling gives a 2:1 cover phi: M* / <-1> -> M[2]*, where M* are the
 * elements of exact order 4. T is the set of ways to split phi into two
 * sections. Each element of T is stored as the section (one class per
 * fibre, so three classes) that contains the smallest class of M* / <-1>.
 */
class TorsorConfiguration {
public:
    using Section = std::array<int, 3>; // sorted class representatives

    TorsorConfiguration()
    {
        for (int i = 0; i < 16; ++i) {
            const auto v = Z4Pair::from_index(i);
            elements_.push_back(v);
            if (!v.doubled().is_zero())
                order_four_.push_back(v);
            else if (!v.is_zero())
                order_two_.push_back(v);
        }
        for (const auto& v : order_four_)
            classes_.insert(class_of(v));
        for (int c : classes_)
            fibers_[Z4Pair::from_index(c).doubled().index()].push_back(c);

        // Choose one class per fibre (2^3 labelings) and identify each
        // labeling with its complement.
        std::vector<std::vector<int>> fibers;
        for (const auto& [base, f] : fibers_)
            fibers.push_back(f);
        for (unsigned bits = 0; bits < (1u << fibers.size()); ++bits) {
            Section s{};
            for (std::size_t f = 0; f < fibers.size(); ++f)
                s[f] = fibers[f][(bits >> f) & 1u];
            ++raw_labelings_;
            torsor_.insert(canonical(s));
        }
        elements_of_t_.assign(torsor_.begin(), torsor_.end());
        check_invariants();
    }

    const std::vector<Z4Pair>& module_elements() const { return elements_; }
    const std::vector<Z4Pair>& order_four() const { return order_four_; }
    const std::vector<Z4Pair>& order_two() const { return order_two_; }
    const std::set<int>& classes() const { return classes_; }
    const std::map<int, std::vector<int>>& fibers() const { return fibers_; }
    const std::vector<Section>& torsor() const { return elements_of_t_; }
    std::size_t raw_labelings() const { return raw_labelings_; }

    /// The 2-torsion subgroup M[2], including zero.
    std::vector<Z4Pair> two_torsion() const
    {
        std::vector<Z4Pair> out{Z4Pair{}};
        out.insert(out.end(), order_two_.begin(), order_two_.end());
        return out;
    }

    std::size_t index_of(const Section& s) const
    {
        auto it = std::find(elements_of_t_.begin(), elements_of_t_.end(), canonical(s));
        if (it == elements_of_t_.end())
            throw std::logic_error("TorsorConfiguration: not a partition of the cover");
        return static_cast<std::size_t>(it - elements_of_t_.begin());
    }

    /// Translation of T by m in M[2].
    Permutation translation(const Z4Pair& m) const
    {
        if (!m.doubled().is_zero())
            throw std::invalid_argument("translation: element is not 2-torsion");
        return permutation([&](int c) { return class_of(Z4Pair::from_index(c) + m); });
    }

    /// Permutation of T induced by g in GL2(Z/4).
    Permutation matrix_action(const Mat2Z4& g) const
    {
        if (!g.invertible())
            throw std::invalid_argument("torsor_matrix_action: matrix is not invertible mod 4");
        return permutation([&](int c) { return class_of(g * Z4Pair::from_index(c)); });
    }

    /// The M[2]-orbit of the i-th element of T.
    std::set<std::size_t> translation_orbit(std::size_t i) const
    {
        std::set<std::size_t> orbit;
        for (const auto& m : two_torsion())
            orbit.insert(translation(m)[i]);
        return orbit;
    }

private:
    static int class_of(const Z4Pair& v) { return std::min(v.index(), (-v).index()); }

    Section canonical(Section s) const
    {
        std::sort(s.begin(), s.end());
        if (std::find(s.begin(), s.end(), *classes_.begin()) != s.end())
            return s;
        Section complement{};
        std::size_t k = 0;
        for (int c : classes_)
            if (std::find(s.begin(), s.end(), c) == s.end())
                complement[k++] = c;
        return complement;
    }

    template <typename ClassMap>
    Permutation permutation(ClassMap f) const
    {
        Permutation p(elements_of_t_.size());
        for (std::size_t i = 0; i < elements_of_t_.size(); ++i) {
            Section image{};
            for (std::size_t j = 0; j < 3; ++j)
                image[j] = f(elements_of_t_[i][j]);
            p[i] = index_of(image);
        }
        return p;
    }

    void check_invariants() const
    {
        if (order_four_.size() != 12 || classes_.size() != 6 || order_two_.size() != 3 || torsor_.size() != 4)
            throw std::logic_error("TorsorConfiguration: unexpected cardinalities");
        for (const auto& [base, f] : fibers_)
            if (f.size() != 2)
                throw std::logic_error("TorsorConfiguration: doubling map is not 2:1");
        for (const auto& m : two_torsion()) {
            const auto p = translation(m);
            std::vector<bool> hit(p.size(), false);
            for (auto j : p)
                hit[j] = true;
            if (std::find(hit.begin(), hit.end(), false) != hit.end())
                throw std::logic_error("TorsorConfiguration: translation is not a bijection");
        }
    }

    std::vector<Z4Pair> elements_;
    std::vector<Z4Pair> order_four_;
    std::vector<Z4Pair> order_two_;
    std::set<int> classes_;
    std::map<int, std::vector<int>> fibers_; // keyed by index of the image in M[2]*
    std::set<Section> torsor_;
    std::vector<Section> elements_of_t_;
    std::size_t raw_labelings_ = 0;
};

inline TorsorConfiguration build_canonical_torsor() { return {}; }

inline std::set<std::size_t> torsor_translation_orbit(const TorsorConfiguration& cfg, std::size_t t)
{
    return cfg.translation_orbit(t);
}

inline Permutation torsor_matrix_action(const TorsorConfiguration& cfg, const Mat2Z4& g)
{
    return cfg.matrix_action(g);
}

/// All 96 elements of GL2(Z/4), in lexicographic order of entries.
inline std::vector<Mat2Z4> gl2_z4_elements()
{
    std::vector<Mat2Z4> out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    Mat2Z4 g(a, b, c, d);
                    if (g.invertible())
                        out.push_back(g);
                }
    if (out.size() != 96)
        throw std::logic_error("gl2_z4_elements: expected 96 elements");
    return out;
}

/**
 * A finite group as a multiplication table, acting linearly on F_p^dim.
 * Construction checks the group axioms and that the action is a
 * homomorphism, over all pairs.
 */
class FiniteGroupData {
public:
    FiniteGroupData(std::vector<std::vector<std::size_t>> table, std::vector<IntegerMatrix> action, std::uint32_t p)
        : table_(std::move(table)), action_(std::move(action)), p_(p)
    {
        const std::size_t n = table_.size();
        if (n == 0 || action_.size() != n)
            throw std::invalid_argument("FiniteGroupData: table and action sizes differ");
        dim_ = action_[0].rows();
        for (auto& m : action_) {
            if (m.rows() != dim_ || m.cols() != dim_)
                throw std::invalid_argument("FiniteGroupData: action matrices have inconsistent shape");
            m = m.reduced_mod(Integer(p_));
        }
        for (const auto& row : table_)
            if (row.size() != n || std::any_of(row.begin(), row.end(), [n](std::size_t x) { return x >= n; }))
                throw std::invalid_argument("FiniteGroupData: malformed multiplication table");

        identity_ = n;
        for (std::size_t e = 0; e < n && identity_ == n; ++e) {
            bool ok = true;
            for (std::size_t g = 0; g < n && ok; ++g)
                ok = table_[e][g] == g && table_[g][e] == g;
            if (ok)
                identity_ = e;
        }
        if (identity_ == n)
            throw std::invalid_argument("FiniteGroupData: no identity element");
        for (std::size_t g = 0; g < n; ++g)
            if (std::find(table_[g].begin(), table_[g].end(), identity_) == table_[g].end())
                throw std::invalid_argument("FiniteGroupData: element without inverse");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw std::invalid_argument("FiniteGroupData: multiplication is not associative");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if ((action_[a] * action_[b]).reduced_mod(Integer(p_)) != action_[table_[a][b]])
                    throw std::invalid_argument("FiniteGroupData: action is not a homomorphism");
    }

    std::size_t order() const { return table_.size(); }
    std::size_t dim() const { return dim_; }
    std::uint32_t prime() const { return p_; }
    std::size_t identity() const { return identity_; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
    const IntegerMatrix& action(std::size_t g) const { return action_[g]; }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<IntegerMatrix> action_;
    std::uint32_t p_;
    std::size_t dim_ = 0;
    std::size_t identity_ = 0;
};

/// GL2(Z/4) acting on (Z/2)^2 through reduction mod 2.
inline FiniteGroupData gl2_z4_on_f2_squared()
{
    const auto elems = gl2_z4_elements();
    std::map<Mat2Z4, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index[elems[i]] = i;
    std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
    std::vector<IntegerMatrix> action;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j)
            table[i][j] = index.at(elems[i] * elems[j]);
        action.push_back(elems[i].mod2());
    }
    return FiniteGroupData(std::move(table), std::move(action), 2);
}

/// Z/m = <g> acting on F_p^dim by powers of g.
inline FiniteGroupData cyclic_group_data(std::size_t m, const IntegerMatrix& g, std::uint32_t p)
{
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    std::vector<IntegerMatrix> action;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            table[i][j] = (i + j) % m;
        action.push_back(power(g, static_cast<unsigned>(i)));
    }
    return FiniteGroupData(std::move(table), std::move(action), p);
}

namespace detail {

// Incremental row echelon form over F_p; rows are reduced against existing
// pivots as they arrive, so memory stays at rank x width.
class FpEchelon {
public:
    FpEchelon(std::size_t width, std::uint32_t p)
        : width_(width), p_(p), pivot_row_(width, npos) {}

    void add(std::vector<std::uint32_t> row)
    {
        for (std::size_t c = 0; c < width_; ++c) {
            if (row[c] == 0)
                continue;
            if (pivot_row_[c] == npos) {
                const std::uint64_t s = inverse(row[c]);
                for (std::size_t j = c; j < width_; ++j)
                    row[j] = static_cast<std::uint32_t>(row[j] * s % p_);
                pivot_row_[c] = rows_.size();
                rows_.push_back(std::move(row));
                return;
            }
            const auto& piv = rows_[pivot_row_[c]];
            const std::uint64_t f = row[c];
            for (std::size_t j = c; j < width_; ++j)
                if (piv[j])
                    row[j] = static_cast<std::uint32_t>((row[j] + (p_ - f) * piv[j]) % p_);
        }
    }

    std::size_t rank() const { return rows_.size(); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::uint64_t inverse(std::uint64_t x) const
    {
        std::uint64_t r = 1, b = x % p_, e = p_ - 2;
        while (e) {
            if (e & 1)
                r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    std::size_t width_;
    std::uint32_t p_;
    std::vector<std::size_t> pivot_row_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

} // namespace detail

/**
 * dim_Fp H^1(G, V) by brute force: Z^1 is the solution space of
 * c(gh) = c(g) + g c(h) over every pair (g, h); B^1 = {g -> (g - 1) v}.
 */
inline std::size_t h1_one_cocycles(const FiniteGroupData& G)
{
    const std::size_t n = G.order();
    const std::size_t r = G.dim();
    const std::uint32_t p = G.prime();
    const std::size_t width = n * r; // unknown c(g)_i at column g * r + i

    detail::FpEchelon eq(width, p);
    for (std::size_t g = 0; g < n; ++g) {
        const auto& A = G.action(g);
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t gh = G.multiply(g, h);
            for (std::size_t i = 0; i < r; ++i) {
                // c(gh)_i - c(g)_i - sum_j A(i, j) c(h)_j = 0
                std::vector<std::uint32_t> row(width, 0);
                auto bump = [&](std::size_t col, std::int64_t v) {
                    const std::int64_t cur = row[col];
                    row[col] = static_cast<std::uint32_t>((((cur + v) % p) + p) % p);
                };
                bump(gh * r + i, 1);
                bump(g * r + i, -1);
                for (std::size_t j = 0; j < r; ++j)
                    bump(h * r + j, -static_cast<std::int64_t>(A(i, j).get_ui()));
                eq.add(std::move(row));
            }
        }
    }
    const std::size_t dim_z1 = width - eq.rank();

    // B^1 is the image of v -> ((g - 1) v)_g, of dimension r - dim V^G.
    detail::FpEchelon fixed(r, p);
    for (std::size_t g = 0; g < n; ++g) {
        const auto& A = G.action(g);
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::uint32_t> row(r);
            for (std::size_t j = 0; j < r; ++j) {
                std::int64_t v = static_cast<std::int64_t>(A(i, j).get_ui()) - (i == j ? 1 : 0);
                row[j] = static_cast<std::uint32_t>(((v % p) + p) % p);
            }
            fixed.add(std::move(row));
        }
    }
    const std::size_t dim_b1 = fixed.rank();
    return dim_z1 - dim_b1;
}

struct NontrivialityWitness {
    bool nontrivial = false;
    Mat2Z4 element;
    Permutation permutation;
};

/// [[1, 1], [0, 1]] moves every element of T, so the torsor has no section.
inline NontrivialityWitness torsor_nontriviality_witness(const TorsorConfiguration& cfg)
{
    NontrivialityWitness w;
    w.element = Mat2Z4(1, 1, 0, 1);
    w.permutation = cfg.matrix_action(w.element);
    w.nontrivial = true;
    for (std::size_t i = 0; i < w.permutation.size(); ++i)
        if (w.permutation[i] == i)
            w.nontrivial = false;
    return w;
}

} // namespace m1coh

#endif // M1COH_TORSOR_HPP
