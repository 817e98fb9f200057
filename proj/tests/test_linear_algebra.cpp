#include "m1coh/abelian_group.hpp"
#include "m1coh/cochain_complex.hpp"
#include "m1coh/integer_matrix.hpp"
#include "m1coh/oracles.hpp"
#include "m1coh/smith.hpp"
#include "m1coh/verify.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace m1coh;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound)
{
    std::uniform_int_distribution<std::size_t> size(1, max_dim);
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntegerMatrix a(size(rng), size(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(i, j) = entry(rng);
    return a;
}

FgAbelianGroup G(std::size_t r, std::vector<long> f = {}) { return expected::group(r, std::move(f)); }

} // namespace

TEST_CASE("integer matrices are exact and shape-checked", "[linalg]")
{
    IntegerMatrix a{{1, 2, 3}, {4, 5, 6}};
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    CHECK(a.entries().size() == 6);
    CHECK(a.transpose()(2, 1) == 6);
    CHECK_THROWS_AS((IntegerMatrix{{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(IntegerMatrix(2, 2, {Integer(1)}), std::invalid_argument);
    CHECK_THROWS_AS(a * a, std::invalid_argument);
    CHECK_THROWS_AS(determinant(a), std::invalid_argument);

    // 2^200 with no overflow.
    IntegerMatrix two{{2}};
    CHECK(power(two, 200)(0, 0) == Integer(1) << 200);
    // (2^128 + 1)^2 = 2^256 + 2^129 + 1
    const IntegerMatrix huge(1, 1, {(Integer(1) << 128) + 1});
    CHECK((huge * huge)(0, 0) == (Integer(1) << 256) + (Integer(1) << 129) + 1);
}

TEST_CASE("determinant agrees with the permutation expansion", "[linalg]")
{
    std::mt19937_64 rng(1);
    for (int s = 0; s < 50; ++s) {
        const std::size_t n = 1 + s % 5;
        IntegerMatrix a(n, n);
        std::uniform_int_distribution<int> e(-5, 5);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = e(rng);
        CHECK(determinant(a) == oracle::leibniz_determinant(a));
    }
}

TEST_CASE("Smith normal form on the basic examples", "[linalg]")
{
    SECTION("identity")
    {
        const auto s = smith_normal_form(IntegerMatrix::identity(2));
        CHECK(s.D == IntegerMatrix::identity(2));
        CHECK(s.U * IntegerMatrix::identity(2) * s.V == s.D);
    }
    SECTION("diag(2, 3)")
    {
        const IntegerMatrix a{{2, 0}, {0, 3}};
        const auto s = smith_normal_form(a);
        CHECK(s.D == IntegerMatrix{{1, 0}, {0, 6}});
        CHECK(s.U * a * s.V == s.D);
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        CHECK(abs(determinant(a)) == determinant(s.D));
        CHECK(oracle::minors_elementary_divisors(a) == std::vector<Integer>{1, 6});
    }
    SECTION("zero matrix")
    {
        const auto z = IntegerMatrix::zero(3, 2);
        const auto s = smith_normal_form(z);
        CHECK(s.D.is_zero());
        CHECK(s.rank() == 0);
        CHECK(elementary_divisors(z).empty());
    }
    SECTION("empty shapes")
    {
        CHECK(elementary_divisors(IntegerMatrix(0, 3)).empty());
        CHECK(elementary_divisors(IntegerMatrix(3, 0)).empty());
    }
}

TEST_CASE("Smith normal form certificates on random matrices", "[linalg]")
{
    std::mt19937_64 rng(2);
    for (int s = 0; s < 200; ++s) {
        const auto a = random_matrix(rng, 6, 9);
        INFO(a);
        CHECK(detail::smith_certificate_failure(a).empty());
    }
}

TEST_CASE("Smith normal form survives entry growth", "[linalg]")
{
    // Entries near 2^100 force multi-limb gcd steps.
    const Integer big = Integer(1) << 100;
    const IntegerMatrix a(2, 2, {big + 1, big, big, big - 1});
    const auto s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(s.D(0, 0) == 1);
    CHECK(s.D(1, 1) == 1);
}

TEST_CASE("elementary divisors agree with the determinantal-divisor oracle", "[linalg]")
{
    std::mt19937_64 rng(3);
    for (int s = 0; s < 300; ++s) {
        const auto a = random_matrix(rng, 4, 3);
        INFO(a);
        CHECK(elementary_divisors(a) == oracle::minors_elementary_divisors(a));
        CHECK(elementary_divisors(a).size() == oracle::rational_rank(a));
    }
}

TEST_CASE("rank mod p", "[linalg]")
{
    const IntegerMatrix a{{2, 0}, {0, 3}};
    CHECK(rank_mod_p(a, 2) == 1);
    CHECK(rank_mod_p(a, 3) == 1);
    CHECK(rank_mod_p(a, 5) == 2);
    CHECK(rank_mod_p(IntegerMatrix{{-1, 1}, {1, -1}}, 7) == 1);
}

TEST_CASE("finitely generated abelian groups are kept in invariant-factor form", "[linalg]")
{
    CHECK(G(0, {4, 3}) == G(0, {12}));
    CHECK(G(0, {4, 3}).invariant_factors() == std::vector<Integer>{12});
    CHECK(G(0, {6, 4}).invariant_factors() == std::vector<Integer>{2, 12});
    CHECK(G(1, {1, 1, 0}) == G(2));
    CHECK(G(0, {-6}) == G(0, {6}));
    CHECK_FALSE(G(0, {4}) == G(0, {2, 2}));
    CHECK(G(0, {2, 2, 3}).torsion_order() == 12);
    CHECK(G(0, {12, 2}).primary_parts() == std::map<Integer, std::size_t>{{2, 1}, {4, 1}, {3, 1}});

    FgAbelianGroup sum = G(1, {2});
    sum += G(0, {3});
    CHECK(sum == G(1, {6}));
    CHECK(G(0, {2}) + G(0, {2}) == FgAbelianGroup::elementary(2, 2));

    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> d(1, 40);
    for (int s = 0; s < 100; ++s) {
        const auto g = G(s % 3, {d(rng), d(rng), d(rng), d(rng)});
        const auto& f = g.invariant_factors();
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f[i] >= 2);
            if (i + 1 < f.size())
                CHECK(mpz_divisible_p(f[i + 1].get_mpz_t(), f[i].get_mpz_t()));
        }
    }
}

TEST_CASE("rendering grammar", "[linalg]")
{
    CHECK(render(G(0)) == "0");
    CHECK(render(G(1)) == "Z");
    CHECK(render(G(3)) == "Z^3");
    CHECK(render(G(1, {2, 3})) == "Z + Z/6");
    CHECK(render(G(1, {2, 3}), {true, {}}) == "Z + Z/2 + Z/3");
    CHECK(render(G(2, {3}), {false, {Integer(2)}}) == "Z[1/2]^2 + Z/3");
}

TEST_CASE("localization", "[linalg]")
{
    const std::set<Integer> two{Integer(2)};
    CHECK(localize(G(0, {12}), two) == G(0, {3}));
    CHECK(localize(G(1, {2, 2, 2, 2, 3}), two) == G(1, {3}));
    const auto g = G(2, {4, 6, 10});
    CHECK(localize(g, {}) == g);
    CHECK(localize(localize(g, two), two) == localize(g, two));
    CHECK(localize(g, {Integer(2), Integer(3)}) == G(2, {5}));
}

TEST_CASE("mod p dimensions", "[linalg]")
{
    const Integer two = 2;
    CHECK(mod_p_dims(G(1, {12}), two) == ModPDims{2, 1});
    CHECK(mod_p_dims(G(0), Integer(5)) == ModPDims{0, 0});
    CHECK(mod_p_dims(G(0, {2, 2, 2}), two) == ModPDims{3, 3});
    CHECK_THROWS_AS(mod_p_dims(G(1), Integer(4)), std::invalid_argument);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(1, 30);
    for (int s = 0; s < 50; ++s) {
        const auto a = G(s % 2, {d(rng), d(rng)});
        const auto b = G(s % 3, {d(rng)});
        for (long p : {2, 3, 5}) {
            const auto da = mod_p_dims(a, Integer(p)), db = mod_p_dims(b, Integer(p));
            const auto dab = mod_p_dims(a + b, Integer(p));
            CHECK(dab.dim_tensor == da.dim_tensor + db.dim_tensor);
            CHECK(dab.dim_torsion == da.dim_torsion + db.dim_torsion);
        }
    }
}

TEST_CASE("cochain complexes", "[linalg]")
{
    SECTION("0 -> Z -> 0")
    {
        const CochainComplex c({1}, {});
        CHECK(c.cohomology_at(0) == G(1));
        CHECK_THROWS_AS(c.cohomology_at(1), std::out_of_range);
    }
    SECTION("Z --2--> Z")
    {
        const CochainComplex c({1, 1}, {IntegerMatrix{{2}}});
        CHECK(c.cohomology_at(0) == G(0));
        CHECK(c.cohomology_at(1) == G(0, {2}));
    }
    SECTION("shape and d d checks")
    {
        CHECK_THROWS_AS(CochainComplex({}, {}), std::invalid_argument);
        CHECK_THROWS_AS(CochainComplex({1, 2}, {IntegerMatrix{{1}}}), std::invalid_argument);
        CHECK_THROWS_AS(CochainComplex({1, 1, 1}, {IntegerMatrix{{1}}, IntegerMatrix{{1}}}), std::invalid_argument);
        CHECK_NOTHROW(CochainComplex({1, 1, 1}, {IntegerMatrix{{2}}, IntegerMatrix{{2}}}, Base::prime_field(2)));
    }
    SECTION("over F_p by rank counting")
    {
        const CochainComplex c({1, 1, 1}, {IntegerMatrix{{0}}, IntegerMatrix{{4}}}, Base::prime_field(2));
        CHECK(c.cohomology_at(1) == FgAbelianGroup::elementary(2, 1));
        CHECK_THROWS_AS(Base::prime_field(6), std::invalid_argument);
    }
}

TEST_CASE("cohomology_at agrees with the rank and minors oracle", "[linalg]")
{
    std::mt19937_64 rng(6);
    for (int s = 0; s < 300; ++s) {
        const auto c = oracle::random_small_complex(rng);
        const CochainComplex cc(c.ranks, c.d);
        for (std::size_t n = 0; n < c.ranks.size(); ++n) {
            INFO("complex " << s << " degree " << n);
            CHECK(cc.cohomology_at(n) == oracle::complex_cohomology(c.ranks, c.d, n));
        }
    }
}
