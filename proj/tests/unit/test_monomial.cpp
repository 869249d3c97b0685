#include <doctest.h>

#include <stdexcept>

#include <random>

#include "poltan/monomial.hpp"
#include "poltan/polarize.hpp"

using namespace poltan;

namespace {

Monomial mono(std::vector<std::pair<int, int>> pairs) { return Monomial::from_pairs(std::move(pairs)); }

Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_degree) {
    std::vector<std::pair<int, int>> pairs;
    int degree = static_cast<int>(rng() % (max_degree + 1));
    std::vector<int> exps(nvars, 0);
    for (int i = 0; i < degree; ++i) ++exps[rng() % nvars];
    for (int v = 0; v < nvars; ++v)
        if (exps[v] > 0) pairs.emplace_back(v, exps[v]);
    return mono(std::move(pairs));
}

}  // namespace

TEST_CASE("monomial arithmetic basics") {
    const Monomial a = mono({{0, 1}, {1, 1}});
    const Monomial b = mono({{1, 1}, {2, 2}});
    CHECK((a * b) == mono({{0, 1}, {1, 2}, {2, 2}}));
    CHECK(Monomial::lcm(a, b) == mono({{0, 1}, {1, 1}, {2, 2}}));
    CHECK((Monomial::lcm(a, b) / a) == mono({{2, 2}}));
    CHECK(a.divides(a * b));
    CHECK(!b.divides(a));
    CHECK(a.degree() == 2);
    CHECK(Monomial{}.is_one());
    CHECK_THROWS_AS(a / b, std::invalid_argument);
    CHECK_THROWS_AS(mono({{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(mono({{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("minimalize drops multiples, deduplicates, orders canonically") {
    const Universe u = simple_universe(3);
    const Monomial x1x2 = mono({{0, 1}, {1, 1}});
    const Monomial x1x2x3 = mono({{0, 1}, {1, 1}, {2, 1}});
    CHECK(minimalize({x1x2, x1x2x3}, u).generators == std::vector<Monomial>{x1x2});

    CHECK(minimalize({}, u).generators.empty());

    const Universe u2 = simple_universe(2);
    const Monomial x1sq = mono({{0, 2}});
    const Monomial x2sq = mono({{1, 2}});
    const auto ideal = minimalize({x1sq, x1x2, x2sq, x1x2}, u2);
    CHECK(ideal.generators == std::vector<Monomial>{x1sq, x1x2, x2sq});

    CHECK_THROWS_AS(minimalize({mono({{5, 1}})}, u2), std::invalid_argument);
}

TEST_CASE("canonical order reproduces the printed generator orders") {
    // Two constructions of the same set compare equal as sequences.
    const Universe u = simple_universe(2);
    const auto a = minimalize({mono({{0, 2}}), mono({{0, 1}, {1, 1}}), mono({{1, 2}})}, u);
    const auto b = minimalize({mono({{1, 2}}), mono({{0, 1}, {1, 1}}), mono({{0, 2}})}, u);
    CHECK(a == b);
    CHECK(a.generators.front() == mono({{0, 2}}));  // x1^2 first, descending-lex
}

TEST_CASE("minimalize is idempotent and preserves membership") {
    std::mt19937_64 rng(13);
    const Universe u = simple_universe(4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Monomial> gens;
        for (int i = 0; i < 6; ++i) gens.push_back(random_monomial(rng, 4, 3));
        std::erase_if(gens, [](const Monomial& m) { return m.is_one(); });
        const MonomialIdeal once = minimalize(gens, u);
        const MonomialIdeal twice = minimalize(once.generators, u);
        CHECK(once == twice);
        const MonomialIdeal raw{u, gens};
        for (int i = 0; i < 30; ++i) {
            const Monomial probe = random_monomial(rng, 4, 4);
            CHECK(contains(raw, probe) == contains(once, probe));
        }
    }
}

TEST_CASE("standard monomials") {
    const MonomialIdeal m2 = power_ideal(2, 2);
    CHECK(standard_monomials(m2, 2).empty());
    CHECK(standard_monomials(m2, 0) == std::vector<Monomial>{Monomial{}});

    // Degree-2 monomials of the box ideal's ring outside the ideal: all
    // C(5,2) = 10 degree-2 monomials minus the 3 generators.
    const MonomialIdeal box = box_polarization(2, 2);
    const auto std2 = standard_monomials(box, 2);
    const int x11 = 0, x12 = 1, x21 = 2, x22 = 3;
    const std::vector<Monomial> expected = {
        mono({{x11, 2}}),          mono({{x11, 1}, {x21, 1}}), mono({{x12, 2}}),
        mono({{x12, 1}, {x21, 1}}), mono({{x12, 1}, {x22, 1}}), mono({{x21, 2}}),
        mono({{x22, 2}})};
    CHECK(std2 == expected);
}

TEST_CASE("hilbert numerator on small ideals") {
    const Universe u2 = simple_universe(2);
    const auto principal = minimalize({mono({{0, 1}, {1, 1}})}, u2);
    CHECK(hilbert_numerator(principal).coefficients == std::vector<long long>{1, 0, -1});

    // S/(x1,x2)^2 has Hilbert function 1,2,0,...: K = (1+2t)(1-t)^2.
    CHECK(hilbert_numerator(power_ideal(2, 2)).coefficients == std::vector<long long>{1, 0, -3, 2});

    // The split ideal has the same numerator over its bigger ring.
    const auto k_box = hilbert_numerator(box_polarization(2, 2));
    CHECK(k_box.coefficients == std::vector<long long>{1, 0, -3, 2});
    CHECK(k_box.ambient_variable_count == 4);

    const auto zero = minimalize({}, u2);
    CHECK(hilbert_numerator(zero).coefficients == std::vector<long long>{1});
}

TEST_CASE("hilbert function counts and matches the series expansion") {
    CHECK(hilbert_function(standard_polarization(3, 2), 2) == 15);  // C(7,2) - 6
    CHECK(hilbert_function(power_ideal(3, 2), 0) == 1);

    const auto zero = minimalize({}, simple_universe(3));
    for (int k = 0; k <= 5; ++k) CHECK(hilbert_function(zero, k) == monomial_count(3, k));

    const std::vector<MonomialIdeal> ideals = {power_ideal(2, 2), box_polarization(2, 2),
                                               standard_polarization(3, 2), box_polarization(2, 3),
                                               sqfree_power_ideal(3, 2)};
    for (const auto& ideal : ideals) {
        const auto series = expand_series(hilbert_numerator(ideal), 6);
        for (int k = 0; k <= 6; ++k) CHECK(hilbert_function(ideal, k) == series[k]);
    }
}

TEST_CASE("monomial counting") {
    CHECK(monomial_count(2, 2) == 3);
    CHECK(monomial_count(4, 2) == 10);
    CHECK(monomial_count(9, 6) == 3003);
    CHECK(monomial_count(3, 0) == 1);
    CHECK(static_cast<long long>(monomials_of_degree(4, 3).size()) == monomial_count(4, 3));
}
