#include "m1coh/serialize.hpp"
#include "m1coh/tables.hpp"
#include "m1coh/verify.hpp"

#include <catch_amalgamated.hpp>

#include <json.hpp>

using namespace m1coh;

TEST_CASE("format names", "[tables]")
{
    CHECK(parse_format("md") == Format::Markdown);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("table layouts", "[tables]")
{
    const auto t = moduli_table(5);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.header.size() == 7);
    CHECK(t.rows[0][3] == "Z/12");
    CHECK(t.rows[1][6] == "Z + Z/2");

    const auto md = emit(t, Format::Markdown);
    CHECK(md.rfind("| n | 0 | 1 | 2 | 3 | 4 | 5 |\n|---|:---:|", 0) == 0);
    CHECK(md.find("| H^n(M_{1,1}, Z) | Z | 0 | Z/12 | 0 | Z/12 | 0 |") != std::string::npos);

    const auto csv = emit(t, Format::Csv);
    CHECK(csv.rfind("n,0,1,2,3,4,5\n", 0) == 0);
    CHECK(csv.find("H^n(M_1, Z)^dagger,0,0,0,0,Z/2,Z + Z/2\n") != std::string::npos);

    CHECK(nlohmann::ordered_json::parse(emit(t, Format::Json)) == t.json);
    CHECK(emit(moduli_table(5), Format::Json) == emit(t, Format::Json));

    CHECK(moduli_table(9, true).rows[1][10] == "Z + Z/2 + Z/2 + Z/2 + Z/2 + Z/3");
    CHECK_THROWS_AS(moduli_table(10), DegenerationUnproven);
    CHECK_THROWS_AS(moduli_half_table(10), DegenerationUnproven);
}

TEST_CASE("JSON round trip of every emitted group", "[tables]")
{
    const auto t = sl2z_table(4, 7);
    REQUIRE(t.json.size() == 5 * 8);
    for (const auto& cell : t.json) {
        const auto k = cell["k"].get<unsigned>();
        const auto p = cell["p"].get<std::size_t>();
        CHECK(group_from_json(cell["group"]) == sl2z_cohomology(k, p));
        CHECK(cell["rendered"] == render(sl2z_cohomology(k, p)));
    }
    for (const auto& cell : moduli_table(9).json) {
        const auto n = cell["n"].get<std::size_t>();
        CHECK(group_from_json(cell["m11"]) == m11_group(n));
        CHECK(group_from_json(cell["dagger"]) == dagger_group(n));
    }
    for (const auto& cell : moduli_half_table(9).json)
        CHECK(group_from_json(cell["group"]) == half_inverted_group(cell["n"].get<std::size_t>()));

    const auto local = sl2z_table(4, 3, CoefficientRing::localized({Integer(2)}));
    CHECK(local.json[4 * 4 + 1]["ring"] == "Z[1/2]");
    CHECK(local.json[4 * 4 + 1]["rendered"] == "Z[1/2] + Z/3");
}

TEST_CASE("group JSON parsing", "[tables]")
{
    const Integer big = (Integer(1) << 80) * 3;
    const FgAbelianGroup g(2, {Integer(2), big});
    const auto j = to_json(g);
    CHECK(j["invariant_factors"][1].is_string());
    CHECK(group_from_json(j.dump()) == g);
    CHECK(group_from_json(std::string(R"({"free_rank": 1, "invariant_factors": [4, 6]})")) ==
          expected::group(1, {2, 12}));
    CHECK_THROWS_AS(group_from_json(std::string(R"({"free_rank": 1})")), std::invalid_argument);
    CHECK_THROWS_AS(group_from_json(std::string(R"({"free_rank": -1, "invariant_factors": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(group_from_json(std::string(R"({"free_rank": 0, "invariant_factors": [0]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(group_from_json(std::string(R"({"free_rank": 0, "invariant_factors": [1.5]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(group_from_json(std::string("[1, 2]")), std::invalid_argument);
}
