#ifndef M1COH_VERIFY_HPP
#define M1COH_VERIFY_HPP

#include "abelian_group.hpp"
#include "amalgam.hpp"
#include "cochain_splitting.hpp"
#include "cyclic.hpp"
#include "exterior.hpp"
#include "group_module.hpp"
#include "moduli.hpp"
#include "oracles.hpp"
#include "smith.hpp"
#include "torsor.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace m1coh {

struct Check {
    std::string anchor; // which published statement the check exercises
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    const Check* first_failure() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return &c;
        return nullptr;
    }

    void append(std::vector<Check> more)
    {
        for (auto& c : more)
            checks.push_back(std::move(c));
    }
};

inline std::ostream& operator<<(std::ostream& os, const Report& r)
{
    os << "suite: " << r.suite << "\nseed: " << r.seed << "\n";
    for (const auto& c : r.checks) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.anchor << " | " << c.name;
        if (!c.detail.empty())
            os << " | " << c.detail;
        os << "\n";
    }
    std::size_t failed = 0;
    for (const auto& c : r.checks)
        failed += c.passed ? 0 : 1;
    os << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
    if (const auto* f = r.first_failure())
        os << "first failure: " << f->anchor << " | " << f->name << "\n";
    return os;
}

namespace expected {

inline FgAbelianGroup group(std::size_t r, std::vector<long> factors = {})
{
    std::vector<Integer> f(factors.begin(), factors.end());
    return FgAbelianGroup(r, std::move(f));
}

/// H^p(SL2(Z), M_k), k <= 4, as published: columns p = 0, 1, even >= 2, odd >= 3.
inline std::array<std::array<FgAbelianGroup, 4>, 5> low_weight_table()
{
    return {{
        {group(1), group(0), group(0, {4, 3}), group(0)},
        {group(0), group(0), group(0, {2}), group(0)},
        {group(0), group(1, {2}), group(0), group(0, {2, 2})},
        {group(0), group(0, {2}), group(0, {2}), group(0, {2})},
        {group(0), group(1, {2, 3}), group(0, {4}), group(0, {2, 2, 3})},
    }};
}

inline const FgAbelianGroup& low_weight_cell(std::size_t k, std::size_t p)
{
    static const auto table = low_weight_table();
    const std::size_t column = p < 2 ? p : (p % 2 == 0 ? 2 : 3);
    return table.at(k).at(column);
}

inline std::vector<FgAbelianGroup> m11_row()
{
    return {group(1), group(0), group(0, {12}), group(0), group(0, {12}), group(0)};
}

inline std::vector<FgAbelianGroup> dagger_row()
{
    return {group(0),         group(0),      group(0),         group(0),
            group(0, {2}),    group(1, {2}), group(0, {2}),    group(0, {2, 2, 2}),
            group(0, {2, 2}), group(1, {2, 2, 2, 2, 3})};
}

} // namespace expected

namespace detail {

inline std::string render_list(const std::vector<std::string>& items)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i)
        os << (i ? "; " : "") << items[i];
    return os.str();
}

inline Check make_check(std::string anchor, std::string name, bool passed, std::string detail = {})
{
    return {std::move(anchor), std::move(name), passed, std::move(detail)};
}

/// Empty if U A V = D with U, V unimodular and D a non-negative divisibility chain.
inline std::string smith_certificate_failure(const IntegerMatrix& a)
{
    const auto s = smith_normal_form(a);
    if (s.U * a * s.V != s.D)
        return "U A V != D";
    if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1)
        return "transform not unimodular";
    if (!s.D.is_diagonal())
        return "D not diagonal";
    Integer previous = 1;
    bool seen_zero = false;
    for (std::size_t i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i) {
        const Integer& d = s.D(i, i);
        if (d < 0)
            return "negative diagonal entry";
        if (d == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero || !mpz_divisible_p(d.get_mpz_t(), previous.get_mpz_t()))
            return "diagonal is not a divisibility chain";
        previous = d;
    }
    return {};
}

inline std::string complex_failure(const CochainComplex& c)
{
    const auto& d = c.differentials();
    for (std::size_t n = 0; n + 1 < d.size(); ++n)
        if (!c.base().reduce(d[n + 1] * d[n]).is_zero())
            return "d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " != 0";
    if (c.base().is_integers())
        for (std::size_t n = 0; n < d.size(); ++n)
            if (auto f = smith_certificate_failure(d[n]); !f.empty())
                return "SNF of d^" + std::to_string(n) + ": " + f;
    return {};
}

} // namespace detail

/// Low-weight table: H^p(SL2(Z), M_k) for k <= 4, p <= 7, one check per weight.
inline std::vector<Check> sl2z_table_checks()
{
    std::vector<Check> out;
    for (unsigned k = 0; k <= 4; ++k) {
        std::vector<std::string> bad;
        for (std::size_t p = 0; p <= 7; ++p) {
            const auto got = sl2z_cohomology(k, p);
            if (!(got == expected::low_weight_cell(k, p)))
                bad.push_back("p=" + std::to_string(p) + ": got " + render(got) + ", expected " +
                              render(expected::low_weight_cell(k, p)));
        }
        out.push_back(detail::make_check("low-weight SL2(Z) table", "H^p(SL2(Z), M_" + std::to_string(k) + "), p <= 7",
                                         bad.empty(), detail::render_list(bad)));
    }
    return out;
}

/// H^n(M_{1,1}) for n <= 5, the dagger part for n <= 9, and the refusal at 10.
inline std::vector<Check> moduli_table_checks()
{
    std::vector<Check> out;
    const auto m11 = expected::m11_row();
    const auto dagger = expected::dagger_row();
    for (std::size_t n = 0; n < m11.size(); ++n) {
        const auto got = m11_group(n);
        out.push_back(detail::make_check("low-degree table of M_{1,1} and M_1", "H^" + std::to_string(n) + "(M_{1,1})",
                                         got == m11[n], "got " + render(got) + ", expected " + render(m11[n])));
    }
    for (std::size_t n = 0; n < dagger.size(); ++n) {
        const auto got = dagger_group(n);
        out.push_back(detail::make_check("dagger part in degrees <= 9", "H^" + std::to_string(n) + "(M_1)^dagger",
                                         got == dagger[n],
                                         "got " + render(got) + ", expected " + render(dagger[n])));
    }
    bool refused = false;
    try {
        (void)dagger_group(10);
    } catch (const DegenerationUnproven&) {
        refused = true;
    }
    out.push_back(detail::make_check("dagger part in degrees <= 9", "degree 10 is refused", refused));

    std::vector<std::string> odd;
    for (std::size_t p = 0; p <= 12; ++p)
        for (std::size_t q = 1; p + q <= 12; q += 2)
            if (!e2_entry(p, q).is_zero())
                odd.push_back("E2^{" + std::to_string(p) + "," + std::to_string(q) + "}");
    out.push_back(detail::make_check("Leray E2 page", "odd rows vanish for p + q <= 12", odd.empty(),
                                     detail::render_list(odd)));
    return out;
}

inline std::vector<Check> fty_checks()
{
    std::vector<Check> out;
    const auto report = fty_consistency(8);
    for (const auto& row : report.rows)
        out.push_back(detail::make_check("mod-2 dagger dimensions", "n = " + std::to_string(row.n), row.matches(),
                                         "computed " + std::to_string(row.computed) + " = " +
                                             std::to_string(row.from_tensor) + " + " +
                                             std::to_string(row.from_torsion) + ", expected " +
                                             std::to_string(row.expected)));
    out.push_back(detail::make_check("mod-2 dagger dimensions", "zero mismatches", report.mismatches() == 0,
                                     std::to_string(report.mismatches()) + " mismatches"));
    return out;
}

/// H^p = H^{p+2} for 2 <= p <= 6 and k <= 8, for both module conventions.
inline std::vector<Check> periodicity_checks()
{
    std::vector<Check> out;
    for (auto convention : {SymConvention::Dual, SymConvention::Polynomial}) {
        for (unsigned k = 0; k <= 8; ++k) {
            const GroupModule m = sym_module(k, convention);
            std::vector<std::string> bad;
            for (std::size_t p = 2; p <= 6; ++p) {
                const auto a = sl2z_cohomology(k, p, CoefficientRing::integers(), convention);
                const auto b = sl2z_cohomology(k, p + 2, CoefficientRing::integers(), convention);
                if (!(a == b))
                    bad.push_back("p=" + std::to_string(p) + ": " + render(a) + " vs " + render(b));
            }
            out.push_back(detail::make_check("2-periodicity of SL2(Z) cohomology",
                                             m.name() + ", 2 <= p <= 6", bad.empty(), detail::render_list(bad)));
        }
    }
    return out;
}

inline std::vector<Check> p_torsion_checks()
{
    std::vector<Check> out;
    const auto w3 = p_torsion_scan(3);
    out.push_back(detail::make_check("p-torsion for every prime", "q = 3: X^3Y - Y^3X is invariant mod 3",
                                     w3.fixed_by_S && w3.fixed_by_T));
    for (unsigned q : {5u, 7u, 11u, 13u}) {
        const auto w = p_torsion_scan(q);
        std::string detail = "H^1(Sym^" + std::to_string(q + 1) + ") = " + render(w.h1);
        if (w.divisible_factor)
            detail += ", " + std::to_string(q) + " | " + w.divisible_factor->get_str();
        out.push_back(detail::make_check("p-torsion for every prime", "q = " + std::to_string(q), w.passed(), detail));
    }
    return out;
}

/// H^n(M_1, Z[1/2]) against the localized E2 antidiagonal, n <= 9.
inline std::vector<Check> half_inverted_checks()
{
    std::vector<Check> out;
    const E2Page page(kDegenerationBound);
    const RenderOptions half{false, {Integer(2)}};
    for (std::size_t n = 0; n <= kDegenerationBound; ++n) {
        FgAbelianGroup total;
        for (std::size_t q = 0; q <= n; ++q)
            total += page.at(n - q, q);
        const auto expected = localize(total, {Integer(2)});
        const auto got = half_inverted_group(n);
        bool odd = true;
        for (const auto& d : got.invariant_factors())
            odd = odd && mpz_even_p(d.get_mpz_t()) == 0;
        out.push_back(detail::make_check("splitting after inverting 2", "H^" + std::to_string(n) + "(M_1, Z[1/2])",
                                         got == expected && odd,
                                         render(got, half) + " vs " + render(expected, half)));
    }
    return out;
}

inline std::vector<Check> torsor_checks()
{
    std::vector<Check> out;
    const auto cfg = build_canonical_torsor();
    const std::string a = "canonical E[2]-torsor";
    out.push_back(detail::make_check(a, "|T| = 4", cfg.torsor().size() == 4,
                                     std::to_string(cfg.torsor().size()) + " elements from " +
                                         std::to_string(cfg.raw_labelings()) + " labelings"));

    bool transitive = true, free = true;
    for (std::size_t t = 0; t < cfg.torsor().size(); ++t)
        transitive = transitive && cfg.translation_orbit(t).size() == cfg.torsor().size();
    for (const auto& m : cfg.two_torsion()) {
        if (m.is_zero())
            continue;
        const auto p = cfg.translation(m);
        for (std::size_t t = 0; t < p.size(); ++t)
            free = free && p[t] != t;
    }
    out.push_back(detail::make_check(a, "M[2] acts simply transitively", transitive && free));

    const auto w = torsor_nontriviality_witness(cfg);
    const auto cycles = cycle_type(w.permutation);
    out.push_back(detail::make_check(a, "[[1,1],[0,1]] induces a 4-cycle",
                                     cycles == std::vector<std::size_t>{4} && w.nontrivial));

    // GL2(Z/4) acts on T through a homomorphism, compatibly with translations.
    const auto elems = gl2_z4_elements();
    std::vector<Permutation> perms;
    for (const auto& g : elems)
        perms.push_back(cfg.matrix_action(g));
    bool hom = true, compatible = true;
    for (std::size_t i = 0; i < elems.size() && hom; ++i)
        for (std::size_t j = 0; j < elems.size() && hom; ++j)
            hom = compose(perms[i], perms[j]) == cfg.matrix_action(elems[i] * elems[j]);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& m : cfg.two_torsion())
            compatible = compatible && compose(perms[i], cfg.translation(m)) ==
                                           compose(cfg.translation(elems[i] * m), perms[i]);
    out.push_back(detail::make_check(a, "GL2(Z/4) acts on T, equivariantly for M[2]", hom && compatible,
                                     std::to_string(elems.size()) + " matrices"));

    const auto h1 = h1_one_cocycles(gl2_z4_on_f2_squared());
    out.push_back(detail::make_check("H^1 of GL2(Z/4) and SL2(Z) with (Z/2)^2", "dim H^1(GL2(Z/4), (Z/2)^2) = 1",
                                     h1 == 1, "dim " + std::to_string(h1)));
    const auto h1_sl2 = sl2z_cohomology_module(standard_coefficient_module("f2_squared"), 1);
    out.push_back(detail::make_check("H^1 of GL2(Z/4) and SL2(Z) with (Z/2)^2", "|H^1(SL2(Z), (Z/2)^2)| = 2",
                                     h1_sl2.is_finite() && h1_sl2.torsion_order() == 2, render(h1_sl2)));
    return out;
}

inline std::vector<Check> splitting_checks(std::uint64_t seed, std::size_t samples = 1000)
{
    std::vector<Check> out;
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::size_t k = 1; k <= d; ++k) {
            const auto r = verify_d_after_a(k, d, samples, seed);
            out.push_back(detail::make_check("splitting cochains a^k", r.name, r.passed(),
                                             std::to_string(r.failures) + " nonzero of " + std::to_string(r.samples)));
        }
    for (std::size_t d = 2; d <= 3; ++d)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const auto r = verify_cup_primitive(DualVector::basis(d, i), DualVector::basis(d, j), samples, seed);
                out.push_back(detail::make_check("splitting cochains a^k",
                                                 r.name + ", e" + std::to_string(i + 1) + "* u e" +
                                                     std::to_string(j + 1) + "*",
                                                 r.passed(),
                                                 std::to_string(r.failures) + " mismatches of " +
                                                     std::to_string(r.samples)));
            }
    return out;
}

/**
 * Periodic-resolution cohomology against the bar complex (50 seeded
 * actions of Z/m, m in {2, 3, 4, 6}, rank <= 3, entries in [-2, 2],
 * degrees <= 3), and cohomology_at against the minors oracle on 100
 * seeded small complexes.
 */
inline std::vector<Check> oracle_checks(std::uint64_t seed, std::size_t actions = 50, std::size_t complexes = 100)
{
    std::vector<Check> out;
    std::mt19937_64 rng(seed);
    const std::array<unsigned, 4> orders{2, 3, 4, 6};
    std::map<std::pair<unsigned, std::size_t>, std::vector<IntegerMatrix>> pools;
    std::uniform_int_distribution<std::size_t> pick_order(0, orders.size() - 1), pick_rank(1, 3);

    std::vector<std::string> bad;
    for (std::size_t s = 0; s < actions; ++s) {
        const unsigned m = orders[pick_order(rng)];
        const std::size_t r = pick_rank(rng);
        auto& pool = pools[{m, r}];
        if (pool.empty())
            pool = oracle::finite_order_matrices(r, m);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const IntegerMatrix& g = pool[pick(rng)];
        const CyclicAction a(m, g);
        for (std::size_t n = 0; n <= 3; ++n) {
            const auto fast = cyclic_cohomology(a, n);
            const auto slow = oracle::bar_cohomology(m, g, n);
            if (!(fast == slow)) {
                std::ostringstream os;
                os << "sample " << s << " m=" << m << " g=" << g << " n=" << n << ": " << fast << " vs " << slow;
                bad.push_back(os.str());
            }
        }
    }
    out.push_back(detail::make_check("cyclic group cohomology", "periodic resolution = bar complex",
                                     bad.empty(),
                                     bad.empty() ? std::to_string(actions) + " actions, degrees 0..3"
                                                 : detail::render_list(bad)));

    bad.clear();
    for (std::size_t s = 0; s < complexes; ++s) {
        const auto c = oracle::random_small_complex(rng);
        const CochainComplex cc(c.ranks, c.d);
        for (std::size_t n = 0; n < c.ranks.size(); ++n) {
            const auto fast = cc.cohomology_at(n);
            const auto slow = oracle::complex_cohomology(c.ranks, c.d, n);
            if (!(fast == slow))
                bad.push_back("complex " + std::to_string(s) + " n=" + std::to_string(n) + ": " + render(fast) +
                              " vs " + render(slow));
        }
    }
    out.push_back(detail::make_check("cohomology of cochain complexes", "SNF cohomology = rank and minors oracle",
                                     bad.empty(),
                                     bad.empty() ? std::to_string(complexes) + " complexes" : detail::render_list(bad)));
    return out;
}

/// Lattice side of the real-place computation: Z/2 acting on Z^2.
inline std::vector<Check> real_place_checks()
{
    std::vector<Check> out;
    const std::string a = "real places";
    const IntegerMatrix swap{{0, 1}, {1, 0}}, reflect{{1, 0}, {0, -1}};
    const auto h_swap = cyclic_cohomology(CyclicAction(2, swap), 2);
    out.push_back(detail::make_check(a, "H^2(Z/2, Z^2), swap = 0", h_swap.is_zero(), render(h_swap)));
    const auto h_reflect = cyclic_cohomology(CyclicAction(2, reflect), 2);
    out.push_back(detail::make_check(a, "H^2(Z/2, Z^2), diag(1,-1) = Z/2", h_reflect == FgAbelianGroup::cyclic(2),
                                     render(h_reflect)));
    const auto fixed = cyclic_cohomology(CyclicAction(2, reflect, Base::prime_field(2)), 0);
    out.push_back(detail::make_check(a, "mod-2 fixed space of diag(1,-1) = (Z/2)^2",
                                     fixed == FgAbelianGroup::elementary(2, 2), render(fixed)));
    return out;
}

inline std::vector<Check> square_checks()
{
    std::vector<Check> out;
    const std::string a = "exterior square of the torus pullback";
    for (std::size_t k : {1u, 2u}) {
        const auto r = verify_square(k);
        out.push_back(detail::make_check(a, "k = " + std::to_string(k), r.passed(),
                                         "sign " + std::to_string(r.sign) + ", " + std::to_string(r.agreements) + "/" +
                                             std::to_string(r.basis_size) + " basis vectors, bottom injective: " +
                                             (r.bottom_injective ? "yes" : "no")));
    }
    for (std::size_t k : {1u, 2u}) {
        const auto control = verify_square(k, 0);
        out.push_back(detail::make_check(a, "k = " + std::to_string(k) + " with one basis image negated is rejected",
                                         !control.passed()));
    }
    return out;
}

/// d d = 0 and SNF certificates on every complex built for the tables, plus seeded random matrices.
inline std::vector<Check> structural_checks(std::uint64_t seed)
{
    std::vector<Check> out;
    std::vector<std::string> bad;
    std::size_t complexes = 0, matrices = 0;
    const auto inspect = [&](const std::string& label, const CochainComplex& c) {
        ++complexes;
        matrices += c.differentials().size();
        if (auto f = detail::complex_failure(c); !f.empty())
            bad.push_back(label + ": " + f);
    };
    for (auto convention : {SymConvention::Dual, SymConvention::Polynomial})
        for (unsigned k = 0; k <= 8; ++k) {
            const auto m = sym_module(k, convention);
            inspect(m.name(), AmalgamComplex(m, 10).complex());
            inspect(m.name() + " mod 2", AmalgamComplex(m.reduced_mod(2), 10).complex());
            inspect(m.name() + " on <S>", periodic_complex(CyclicAction(4, m.action("S")), 6));
            inspect(m.name() + " on <U>", periodic_complex(CyclicAction(6, m.action("U")), 6));
        }
    inspect("(Z/2)^2", AmalgamComplex(standard_coefficient_module("f2_squared"), 4).complex());
    out.push_back(detail::make_check("structural", "d d = 0 and U A V = D on constructed complexes", bad.empty(),
                                     bad.empty() ? std::to_string(complexes) + " complexes, " + std::to_string(matrices) +
                                                       " differentials"
                                                 : detail::render_list(bad)));

    bad.clear();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 7), entry(-9, 9), sparse(0, 3);
    for (std::size_t s = 0; s < 200; ++s) {
        IntegerMatrix a(size(rng), size(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) = sparse(rng) == 0 ? 0 : entry(rng);
        if (auto f = detail::smith_certificate_failure(a); !f.empty())
            bad.push_back("matrix " + std::to_string(s) + ": " + f);
    }
    out.push_back(detail::make_check("structural", "U A V = D on 200 random matrices", bad.empty(),
                                     detail::render_list(bad)));
    return out;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"all",         "tables",   "fty",            "torsor",  "splitting",
                                                "periodicity", "ptorsion", "exterior-square", "lemma52", "oracles"};
    return names;
}

/// Alternative suite names accepted by run_suite.
inline std::string canonical_suite(const std::string& suite) { return suite == "lemma52" ? "exterior-square" : suite; }

inline Report run_suite(const std::string& suite, std::uint64_t seed = 0)
{
    Report r{canonical_suite(suite), seed, {}};
    const bool all = suite == "all";
    bool known = all;
    const auto want = [&](const char* name) {
        const bool hit = all || canonical_suite(suite) == name;
        known = known || hit;
        return hit;
    };
    if (want("tables")) {
        r.append(sl2z_table_checks());
        r.append(moduli_table_checks());
        r.append(half_inverted_checks());
        r.append(real_place_checks());
    }
    if (want("fty"))
        r.append(fty_checks());
    if (want("periodicity"))
        r.append(periodicity_checks());
    if (want("ptorsion"))
        r.append(p_torsion_checks());
    if (want("torsor"))
        r.append(torsor_checks());
    if (want("splitting"))
        r.append(splitting_checks(seed));
    if (want("exterior-square"))
        r.append(square_checks());
    if (want("oracles")) {
        r.append(oracle_checks(seed));
        r.append(structural_checks(seed));
    }
    if (!known)
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return r;
}

} // namespace m1coh

#endif // M1COH_VERIFY_HPP
