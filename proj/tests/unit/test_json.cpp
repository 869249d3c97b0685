#include <doctest.h>

#include <stdexcept>

#include "poltan/json_io.hpp"
#include "poltan/polarize.hpp"

using namespace poltan;

TEST_CASE("ideal JSON round trip") {
    for (const auto& ideal : {box_polarization(3, 2), sqfree_power_ideal(3, 2), power_ideal(2, 3)}) {
        const auto j = ideal_to_json(ideal);
        CHECK(ideal_from_json(j) == ideal);
    }
}

TEST_CASE("loading applies canonical order and minimality") {
    // Generators scrambled and redundant; the load normalizes.
    const auto j = nlohmann::json::parse(R"({
        "variables": ["a", "b"],
        "generators": [[[1, 2]], [[0, 1], [1, 1]], [[0, 2]], [[0, 2], [1, 1]]]
    })");
    const auto ideal = ideal_from_json(j);
    CHECK(ideal.generators.size() == 3);
    CHECK(ideal == minimalize({Monomial::from_pairs({{0, 2}}), Monomial::from_pairs({{0, 1}, {1, 1}}),
                               Monomial::from_pairs({{1, 2}})},
                              ideal.universe));
}

TEST_CASE("malformed ideal JSON is rejected") {
    CHECK_THROWS_AS(ideal_from_json(nlohmann::json::parse(R"({"variables": ["x"]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_json(nlohmann::json::parse(
                        R"({"variables": ["x"], "generators": [[[3, 1]]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_json(nlohmann::json::parse(
                        R"({"variables": ["x"], "generators": [[[0, 0]]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_json(nlohmann::json::parse(
                        R"({"variables": ["x", "x"], "generators": []})")),
                    std::invalid_argument);
}
