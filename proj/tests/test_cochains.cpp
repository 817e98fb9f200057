#include "m1coh/cochain_splitting.hpp"
#include "m1coh/exterior.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace m1coh;

namespace {

Rational eval(const Cochain& f, std::vector<LatticeVector> args) { return f(args); }

Cochain linear(const DualVector& phi)
{
    return Cochain(1, phi.rank(), [phi](std::span<const LatticeVector> x) -> Rational { return phi(x[0]); });
}

ExteriorElement random_element(std::mt19937_64& rng, std::size_t generators)
{
    std::uniform_int_distribution<ExteriorElement::Monomial> mono(0, (1u << generators) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    ExteriorElement e;
    for (int i = 0; i < 4; ++i) {
        ExteriorElement term = ExteriorElement::scalar(coeff(rng));
        const auto m = mono(rng);
        for (std::size_t g = 0; g < generators; ++g)
            if (m & (1u << g))
                term = term ^ ExteriorElement::generator(g);
        e += term;
    }
    return e;
}

ExteriorElement random_homogeneous(std::mt19937_64& rng, std::size_t generators, int degree)
{
    ExteriorElement e;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (ExteriorElement::Monomial m = 0; m < (1u << generators); ++m)
        if (std::popcount(m) == degree) {
            ExteriorElement term = ExteriorElement::scalar(coeff(rng));
            for (std::size_t g = 0; g < generators; ++g)
                if (m & (1u << g))
                    term = term ^ ExteriorElement::generator(g);
            e += term;
        }
    return e;
}

} // namespace

TEST_CASE("cochain differential", "[cochains]")
{
    LatticeSampler s(3, 1);
    const DualVector phi = s.dual();
    const DualVector lambda = s.dual();
    const DualVector mu = s.dual();

    const Cochain constant(0, 3, [](std::span<const LatticeVector>) -> Rational { return 7; });
    for (int i = 0; i < 20; ++i) {
        const auto l = s.vector(), m = s.vector();
        CHECK(eval(cochain_differential(constant), {l}) == 0);
        CHECK(eval(cochain_differential(linear(phi)), {l, m}) == 0);
    }

    const Cochain square(1, 3, [lambda](std::span<const LatticeVector> x) -> Rational {
        return lambda(x[0]) * lambda(x[0]);
    });
    for (int i = 0; i < 20; ++i) {
        const auto l = s.vector(), m = s.vector();
        CHECK(eval(cochain_differential(square), {l, m}) == -2 * lambda(l) * lambda(m));
    }

    // d d = 0 on polynomial cochains of arity 1 and 2.
    const Cochain f2(2, 3, [lambda, mu](std::span<const LatticeVector> x) -> Rational {
        return lambda(x[0]) * lambda(x[0]) * mu(x[1]) + mu(x[0]) * mu(x[1]) * mu(x[1]);
    });
    const auto dd1 = cochain_differential(cochain_differential(square));
    const auto dd2 = cochain_differential(cochain_differential(f2));
    for (int i = 0; i < 50; ++i) {
        CHECK(dd1(s.tuple(3)) == 0);
        CHECK(dd2(s.tuple(4)) == 0);
    }
    CHECK_THROWS_AS(eval(square, {}), std::invalid_argument);
}

TEST_CASE("splitting maps a^k", "[cochains]")
{
    const auto e1 = DualVector::basis(2, 0), e2 = DualVector::basis(2, 1);
    const LatticeVector v1{1, 0}, v2{0, 1};

    LatticeSampler s(2, 2);
    const auto phi = s.dual();
    const auto a1 = splitting_map({phi}, 2);
    for (int i = 0; i < 20; ++i) {
        const auto l = s.vector();
        CHECK(eval(a1, {l}) == phi(l));
    }

    CHECK(eval(splitting_map({e1, e2}, 2), {v1, v2}) == Rational(1, 2));
    CHECK(eval(splitting_map({e1, e2}, 2), {v2, v1}) == Rational(-1, 2));
    CHECK(eval(splitting_map({phi, phi}, 2), s.tuple(2)) == 0);

    SECTION("multilinear and alternating")
    {
        LatticeSampler t(3, 3);
        for (int i = 0; i < 30; ++i) {
            const auto p = t.dual(), q = t.dual(), r = t.dual();
            const auto x = t.tuple(2);
            const std::vector<LatticeVector> swapped{x[1], x[0]};
            const auto a = splitting_map({p, q}, 3);
            CHECK(a(x) == -a(swapped));
            CHECK(splitting_map({q, p}, 3)(x) == -a(x));
            CHECK(splitting_map({p + r, q}, 3)(x) == a(x) + splitting_map({r, q}, 3)(x));
            CHECK(splitting_map({Rational(3) * p, q}, 3)(x) == 3 * a(x));
        }
    }
    SECTION("argument errors")
    {
        CHECK_THROWS_AS(splitting_map({e1, e2, e1}, 2), std::invalid_argument);
        CHECK_THROWS_AS(splitting_map({DualVector::basis(3, 0)}, 2), std::invalid_argument);
        CHECK_THROWS_AS(e1(LatticeVector{1, 2, 3}), std::invalid_argument);
    }
}

TEST_CASE("d a^k = 0 and the cup primitive", "[cochains]")
{
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::size_t k = 1; k <= d; ++k) {
            const auto r = verify_d_after_a(k, d, 300, 17);
            INFO(r.name);
            CHECK(r.passed());
            CHECK(r.samples == 300);
            CHECK(r.seed == 17);
        }
    CHECK_THROWS_AS(verify_d_after_a(3, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_d_after_a(1, 4, 10), std::invalid_argument);

    LatticeSampler s(3, 4);
    for (int i = 0; i < 10; ++i)
        CHECK(verify_cup_primitive(s.dual(), s.dual(), 100, i).passed());
    const DualVector zero(std::vector<Rational>(3, Rational(0)));
    CHECK(verify_cup_primitive(s.dual(), zero, 100).passed());
    CHECK_THROWS_AS(verify_cup_primitive(DualVector::basis(1, 0), DualVector::basis(1, 0), 10), std::invalid_argument);

    // The cup product itself is not a^2: the difference is a coboundary but not zero.
    const auto e1 = DualVector::basis(2, 0), e2 = DualVector::basis(2, 1);
    const auto diff = cup_product(e1, e2) - splitting_map({e1, e2}, 2);
    CHECK(eval(diff, {{1, 0}, {0, 1}}) == Rational(1, 2));
}

TEST_CASE("exterior algebra", "[exterior]")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_element(rng, 6), b = random_element(rng, 6), c = random_element(rng, 6);
        CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
        CHECK(((a + b) ^ c) == ((a ^ c) + (b ^ c)));
    }
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            const auto a = random_homogeneous(rng, 6, p), b = random_homogeneous(rng, 6, q);
            const Integer sign = (p * q) % 2 ? -1 : 1;
            CHECK((a ^ b) == sign * (b ^ a));
        }
    const auto g0 = ExteriorElement::generator(0);
    CHECK((g0 ^ g0).is_zero());
    CHECK((g0 ^ ExteriorElement::generator(1)).degree() == 2);
    CHECK_FALSE((g0 + ExteriorElement::scalar(1)).degree().has_value());
    CHECK(ExteriorElement::merge_sign(0b10, 0b01) == -1);
    CHECK(ExteriorElement::merge_sign(0b01, 0b10) == 1);
    CHECK(ExteriorElement::merge_sign(0b11, 0b10) == 0);
}

TEST_CASE("pullback to the torus times a circle", "[exterior]")
{
    const auto gen = [](std::size_t i) { return ExteriorElement::generator(i); };
    // Layout for k = 1: torus duals 0, 1 and circle dual 2.
    CHECK(pullback_on_h2(DualVector::basis(2, 0)) == (gen(2) ^ gen(0)));
    CHECK(pullback_on_h2(DualVector::basis(2, 1)) == (gen(2) ^ gen(1)));
    CHECK(pullback_on_h2(DualVector(std::vector<Rational>{0, 0})).is_zero());

    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> e(-5, 5);
    for (int i = 0; i < 20; ++i) {
        const DualVector l(std::vector<Rational>{e(rng), e(rng)}), m(std::vector<Rational>{e(rng), e(rng)});
        CHECK(pullback_on_h2(l + m) == pullback_on_h2(l) + pullback_on_h2(m));
        CHECK(pullback_on_h2(l).degree().value_or(2) == 2);
    }
    CHECK_THROWS_AS(pullback_on_h2(DualVector(std::vector<Rational>{Rational(1, 2), 0})), std::invalid_argument);
    CHECK_THROWS_AS(pullback_on_h2(DualVector::basis(3, 0)), std::invalid_argument);
}

TEST_CASE("exterior-square comparison", "[exterior]")
{
    for (std::size_t k : {1u, 2u}) {
        const auto r = verify_square(k);
        CHECK(r.passed());
        CHECK(r.basis_size == k + 1);
        CHECK(r.bottom_injective);
        for (std::size_t flip = 0; flip <= k; ++flip)
            CHECK_FALSE(verify_square(k, flip).passed());
    }
    CHECK_THROWS_AS(verify_square(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_square(3), std::invalid_argument);
}
