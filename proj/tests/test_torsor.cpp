#include "m1coh/cyclic.hpp"
#include "m1coh/oracles.hpp"
#include "m1coh/torsor.hpp"

#include <catch_amalgamated.hpp>

using namespace m1coh;

TEST_CASE("torsor cardinalities", "[torsor]")
{
    const auto cfg = build_canonical_torsor();
    CHECK(cfg.module_elements().size() == 16);
    CHECK(cfg.order_four().size() == 12);
    CHECK(cfg.classes().size() == 6);
    CHECK(cfg.order_two().size() == 3);
    CHECK(cfg.fibers().size() == 3);
    for (const auto& [base, fiber] : cfg.fibers()) {
        CHECK(fiber.size() == 2);
        for (int c : fiber)
            CHECK(Z4Pair::from_index(c).doubled().index() == base);
    }
    CHECK(cfg.raw_labelings() == 8);
    CHECK(cfg.torsor().size() == 4);
}

TEST_CASE("M[2] acts simply transitively", "[torsor]")
{
    const auto cfg = build_canonical_torsor();
    CHECK(is_identity(cfg.translation(Z4Pair{})));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(torsor_translation_orbit(cfg, i).size() == 4);
    for (const auto& m : cfg.order_two()) {
        const auto p = cfg.translation(m);
        for (std::size_t i = 0; i < p.size(); ++i)
            CHECK(p[i] != i);
    }
    for (const auto& a : cfg.two_torsion())
        for (const auto& b : cfg.two_torsion())
            CHECK(cfg.translation(a + b) == compose(cfg.translation(a), cfg.translation(b)));
    CHECK_THROWS_AS(cfg.translation(Z4Pair{1, 0}), std::invalid_argument);
}

TEST_CASE("GL2(Z/4) acts on the torsor", "[torsor]")
{
    const auto cfg = build_canonical_torsor();
    const auto elems = gl2_z4_elements();
    REQUIRE(elems.size() == 96);

    CHECK(is_identity(torsor_matrix_action(cfg, Mat2Z4{})));
    CHECK(is_identity(torsor_matrix_action(cfg, Mat2Z4(-1, 0, 0, -1))));
    CHECK_THROWS_AS(cfg.matrix_action(Mat2Z4(2, 0, 0, 1)), std::invalid_argument);

    SECTION("the unipotent element is a 4-cycle")
    {
        const auto w = torsor_nontriviality_witness(cfg);
        CHECK(w.nontrivial);
        CHECK(cycle_type(w.permutation) == std::vector<std::size_t>{4});
    }
    SECTION("homomorphism")
    {
        for (const auto& g : elems)
            for (const auto& h : elems)
                CHECK(cfg.matrix_action(g * h) == compose(cfg.matrix_action(g), cfg.matrix_action(h)));
    }
    SECTION("compatible with translations")
    {
        for (const auto& g : elems)
            for (const auto& m : cfg.two_torsion())
                CHECK(compose(cfg.matrix_action(g), cfg.translation(m)) ==
                      compose(cfg.translation(g * m), cfg.matrix_action(g)));
    }
}

TEST_CASE("brute-force H^1", "[torsor]")
{
    const auto I2 = IntegerMatrix::identity(2);
    CHECK(h1_one_cocycles(FiniteGroupData({{0}}, {I2}, 2)) == 0);
    CHECK(h1_one_cocycles(gl2_z4_on_f2_squared()) == 1);
    CHECK(h1_one_cocycles(cyclic_group_data(3, IntegerMatrix{{1}}, 2)) == 0);
    CHECK(h1_one_cocycles(cyclic_group_data(2, IntegerMatrix{{1}}, 2)) == 1);
    CHECK(h1_one_cocycles(cyclic_group_data(6, IntegerMatrix{{1}}, 3)) == 1);
}

TEST_CASE("cocycle solver agrees with the periodic resolution", "[torsor]")
{
    for (unsigned m = 1; m <= 6; ++m)
        for (std::size_t r = 1; r <= 2; ++r) {
            const auto pool = oracle::finite_order_matrices(r, m, -1, 1);
            for (std::size_t i = 0; i < pool.size(); i += 1 + pool.size() / 6)
                for (std::uint32_t p : {2u, 3u}) {
                    const auto& g = pool[i];
                    INFO("m=" << m << " p=" << p << " g=" << g);
                    const auto fast = cyclic_cohomology(CyclicAction(m, g, Base::prime_field(p)), 1);
                    CHECK(h1_one_cocycles(cyclic_group_data(m, g, p)) == fast.invariant_factors().size());
                }
        }
}

TEST_CASE("finite group data is validated", "[torsor]")
{
    const IntegerMatrix one{{1}};
    CHECK_THROWS_AS(FiniteGroupData({}, {}, 2), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupData({{0}}, {one, one}, 2), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupData({{0, 1}, {1, 2}}, {one, one}, 2), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupData({{1, 1}, {1, 1}}, {one, one}, 2), std::invalid_argument);
    // Z/2 acting on F_3 by -1; the identity must act trivially.
    CHECK_NOTHROW(FiniteGroupData({{0, 1}, {1, 0}}, {one, IntegerMatrix{{2}}}, 3));
    CHECK_THROWS_AS(FiniteGroupData({{0, 1}, {1, 0}}, {IntegerMatrix{{2}}, one}, 3), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupData({{0}}, {IntegerMatrix(1, 2)}, 2), std::invalid_argument);
}
