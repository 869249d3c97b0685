#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>

#include "poltan/determinantal.hpp"
#include "poltan/monomial.hpp"
#include "poltan/polarize.hpp"

using namespace poltan;

namespace {

Monomial mono(std::vector<std::pair<int, int>> pairs) { return Monomial::from_pairs(std::move(pairs)); }

Polynomial var_poly(int i, int j, int d) {
    return Polynomial(Monomial::variable(split_index(i, j, d)));
}

// Independent determinant: signed sum over all permutations.
Polynomial permutation_determinant(const BandedMatrix& m, const std::vector<int>& cols) {
    std::vector<int> perm(cols.size());
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial out;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Polynomial term{Rational(sign)};
        bool zero = false;
        for (std::size_t r = 0; r < perm.size(); ++r) {
            const auto entry = m.entry(static_cast<int>(r) + 1, cols[perm[r]]);
            if (!entry) {
                zero = true;
                break;
            }
            term = term * Monomial::variable(*entry);
        }
        if (!zero) out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void column_subsets(int total, int size, int next, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    for (int c = next; c <= total; ++c) {
        current.push_back(c);
        column_subsets(total, size, c + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

TEST_CASE("banded matrix layout") {
    const BandedMatrix m22 = banded_matrix(2, 2);
    CHECK(m22.entry(1, 1) == split_index(1, 1, 2));
    CHECK(m22.entry(1, 2) == split_index(2, 1, 2));
    CHECK(!m22.entry(1, 3));
    CHECK(!m22.entry(2, 1));
    CHECK(m22.entry(2, 2) == split_index(1, 2, 2));
    CHECK(m22.entry(2, 3) == split_index(2, 2, 2));

    const BandedMatrix m32 = banded_matrix(3, 2);
    CHECK(m32.rows() == 2);
    CHECK(m32.cols() == 4);
    for (int c = 1; c <= 3; ++c) CHECK(m32.entry(1, c) == split_index(c, 1, 2));
    CHECK(!m32.entry(1, 4));

    const BandedMatrix row = banded_matrix(4, 1);
    CHECK(row.rows() == 1);
    for (int c = 1; c <= 4; ++c) CHECK(row.entry(1, c) == split_index(c, 1, 1));
}

TEST_CASE("maximal minors of the small banded matrices") {
    const auto minors22 = maximal_minors(banded_matrix(2, 2));
    REQUIRE(minors22.size() == 3);
    CHECK(minors22[0] == var_poly(1, 1, 2) * var_poly(1, 2, 2));
    CHECK(minors22[1] == var_poly(1, 1, 2) * var_poly(2, 2, 2));
    CHECK(minors22[2] == var_poly(2, 1, 2) * var_poly(2, 2, 2));
    for (const auto& p : minors22) {
        Rational at_ones = 0;
        for (const auto& [m, c] : p.terms()) at_ones += c;
        CHECK(at_ones == 1);
    }

    const auto minors32 = maximal_minors(banded_matrix(3, 2));
    REQUIRE(minors32.size() == 6);
    // Column subsets in lexicographic order; {2,3} is the fourth and the
    // only binomial.
    CHECK(minors32[3] ==
          var_poly(2, 1, 2) * var_poly(2, 2, 2) - var_poly(3, 1, 2) * var_poly(1, 2, 2));
    int binomials = 0;
    for (const auto& p : minors32) binomials += p.terms().size() == 2 ? 1 : 0;
    CHECK(binomials == 1);
}

TEST_CASE("cofactor expansion agrees with the permutation-sum determinant") {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}, {3, 4}}) {
        const BandedMatrix m = banded_matrix(n, d);
        std::vector<std::vector<int>> subsets;
        std::vector<int> current;
        column_subsets(m.cols(), m.rows(), 1, current, subsets);
        const auto minors = maximal_minors(m);
        REQUIRE(minors.size() == subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i)
            CHECK(minors[i] == permutation_determinant(m, subsets[i]));
    }
}

TEST_CASE("minors are homogeneous and their leading terms are the box generators") {
    for (const auto& [n, d] :
         std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        const auto minors = maximal_minors(banded_matrix(n, d));
        const CopyMajorLex order{n, d};
        std::vector<Monomial> leads;
        for (const auto& p : minors) {
            CHECK(p.homogeneous_degree() == d);
            leads.push_back(leading_term(p, order));
        }
        std::sort(leads.begin(), leads.end(), CanonicalLess{});
        CHECK(std::adjacent_find(leads.begin(), leads.end()) == leads.end());
        CHECK(leads == box_polarization(n, d).generators);
    }
}

TEST_CASE("leading terms under the copy-major order") {
    const CopyMajorLex order{3, 2};
    const Polynomial binom =
        var_poly(2, 1, 2) * var_poly(2, 2, 2) - var_poly(3, 1, 2) * var_poly(1, 2, 2);
    CHECK(leading_term(binom, order) ==
          mono({{split_index(2, 1, 2), 1}, {split_index(2, 2, 2), 1}}));
}

TEST_CASE("leading term basics") {
    const CopyMajorLex order{2, 2};
    const Monomial m = mono({{split_index(1, 1, 2), 1}, {split_index(1, 2, 2), 1}});
    CHECK(leading_term(Polynomial(m), order) == m);

    const Polynomial sum = Polynomial(mono({{split_index(1, 1, 2), 1}, {split_index(1, 2, 2), 1}})) +
                           Polynomial(mono({{split_index(1, 1, 2), 1}, {split_index(2, 2, 2), 1}}));
    CHECK(leading_term(sum, order) ==
          mono({{split_index(1, 1, 2), 1}, {split_index(2, 2, 2), 1}}));

    CHECK_THROWS_AS(leading_term(Polynomial{}, order), std::invalid_argument);
}

TEST_CASE("graded piece ranks") {
    const auto minors32 = maximal_minors(banded_matrix(3, 2));
    CHECK(graded_piece_rank(minors32, 6, 2) == 6);
    CHECK(graded_piece_rank(minors32, 6, 2) ==
          monomial_count(6, 2) - hilbert_function(box_polarization(3, 2), 2));

    const std::vector<Polynomial> x1 = {Polynomial(Monomial::variable(0))};
    CHECK(graded_piece_rank(x1, 2, 3) == 3);
    CHECK(graded_piece_rank(x1, 2, 0) == 0);

    CHECK_THROWS_AS(
        graded_piece_rank({Polynomial(Monomial::variable(0)) + Polynomial(Rational(1))}, 2, 2),
        std::invalid_argument);
}

TEST_CASE("graded piece rank is invariant under invertible recombination") {
    std::mt19937_64 rng(31);
    auto gens = maximal_minors(banded_matrix(3, 2));
    const long long rank2 = graded_piece_rank(gens, 6, 2);
    const long long rank3 = graded_piece_rank(gens, 6, 3);
    for (int step = 0; step < 12; ++step) {
        const std::size_t i = rng() % gens.size();
        std::size_t j = rng() % gens.size();
        while (j == i) j = rng() % gens.size();
        static const Rational coeffs[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
        gens[i] += gens[j] * coeffs[rng() % 4];
        if (step % 3 == 0) gens[i] = gens[i] * coeffs[rng() % 4];
    }
    CHECK(graded_piece_rank(gens, 6, 2) == rank2);
    CHECK(graded_piece_rank(gens, 6, 3) == rank3);
}

TEST_CASE("initial ideal verification") {
    const auto report = verify_initial_ideal(2, 2, 5);
    CHECK(report.leading_terms_match);
    CHECK(report.ok);
    for (const auto& deg : report.degrees) CHECK(deg.match);
    CHECK_THROWS_AS(verify_initial_ideal(2, 2, 1), std::invalid_argument);
}

TEST_CASE("the deformed families specialize correctly") {
    // All parameters zero: exactly the standard polarization.
    const auto at_zero = lifted_family(2, {Rational(0), Rational(0), Rational(0)});
    const auto standard = standard_polarization(3, 2);
    REQUIRE(at_zero.size() == standard.generators.size());
    for (std::size_t i = 0; i < at_zero.size(); ++i)
        CHECK(at_zero[i] == Polynomial(standard.generators[i]));

    // All parameters one: the displayed six generators.
    const int d = 2;
    auto v = [&](int i, int j) { return var_poly(i, j, d); };
    const auto at_one = lifted_family(2, {Rational(1), Rational(1), Rational(1)});
    const std::vector<Polynomial> expected = {
        v(1, 1) * v(1, 2) + v(2, 2) * v(3, 2), v(1, 1) * v(2, 1) - v(3, 2) * v(3, 2),
        v(1, 1) * v(3, 1) - v(2, 2) * v(2, 2), v(2, 1) * v(2, 2) + v(1, 2) * v(3, 2),
        v(2, 1) * v(3, 1) - v(1, 2) * v(1, 2), v(3, 1) * v(3, 2) + v(1, 2) * v(2, 2)};
    REQUIRE(at_one.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(at_one[i] == expected[i]);

    // d = 3 with only the first parameter nonzero: one deformed vertex.
    const auto partial = lifted_family(3, {Rational(1), Rational(0), Rational(0)});
    const auto p33 = standard_polarization(3, 3);
    const auto vertices = vertex_generators(p33, split_depolarization(3, 3));
    for (std::size_t i = 0; i < partial.size(); ++i) {
        if (static_cast<int>(i) == vertices[0]) {
            const Polynomial expected_vertex =
                Polynomial(p33.generators[i]) +
                Polynomial(mono({{split_index(1, 1, 3), 1},
                                 {split_index(2, 2, 3), 1},
                                 {split_index(3, 2, 3), 1}}));
            CHECK(partial[i] == expected_vertex);
        } else {
            CHECK(partial[i] == Polynomial(p33.generators[i]));
        }
    }
}

TEST_CASE("flat family evidence") {
    CHECK(verify_flat_family(2, {Rational(0), Rational(0), Rational(0)}, 6).ok);
    CHECK(verify_flat_family(2, {Rational(1), Rational(1, 2), Rational(-2)}, 6).ok);
}
