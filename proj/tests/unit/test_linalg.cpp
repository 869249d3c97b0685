#include <doctest.h>

#include <algorithm>
#include <random>

#include "poltan/linalg.hpp"

using namespace poltan;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<int>>& dense) {
    SparseMatrix m(static_cast<int>(dense.size()), dense.empty() ? 0 : static_cast<int>(dense[0].size()));
    for (std::size_t r = 0; r < dense.size(); ++r) {
        std::vector<std::pair<int, Rational>> row;
        for (std::size_t c = 0; c < dense[r].size(); ++c)
            if (dense[r][c] != 0) row.emplace_back(static_cast<int>(c), Rational(dense[r][c]));
        m.set_row(static_cast<int>(r), std::move(row));
    }
    return m;
}

std::vector<Rational> matvec(const SparseMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.row_count, Rational(0));
    for (int r = 0; r < m.row_count; ++r)
        for (const auto& [c, val] : m.rows[r]) out[r] += val * v[c];
    return out;
}

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

TEST_CASE("rank and nullity on small matrices") {
    CHECK(rank_nullity(from_dense({{1, 0}, {0, 1}})) == std::pair<int, int>{2, 0});
    CHECK(rank_nullity(from_dense({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}})) ==
          std::pair<int, int>{0, 5});
    // Third row is the sum of the first two.
    CHECK(rank_nullity(from_dense({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}})) == std::pair<int, int>{2, 1});
}

TEST_CASE("nullspace bases") {
    CHECK(nullspace_basis(from_dense({{1, 0}, {0, 1}})).empty());

    const auto sym = nullspace_basis(from_dense({{1, -1}}));
    REQUIRE(sym.size() == 1);
    CHECK(sym[0] == std::vector<Rational>{1, 1});

    const SparseMatrix m = from_dense({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}});
    const auto basis = nullspace_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(all_zero(matvec(m, basis[0])));
    CHECK(basis[0][2] == 1);  // free-column coordinate normalized to 1
}

TEST_CASE("exactness with rational entries") {
    SparseMatrix m(2, 3);
    m.set_row(0, {{0, Rational(1, 3)}, {1, Rational(1, 6)}, {2, Rational(-1, 2)}});
    m.set_row(1, {{0, Rational(2)}, {1, Rational(1)}, {2, Rational(-3)}});
    // Second row is 6x the first: rank 1.
    CHECK(rank_nullity(m) == std::pair<int, int>{1, 2});
    for (const auto& v : nullspace_basis(m)) CHECK(all_zero(matvec(m, v)));
}

TEST_CASE("rank is invariant under row permutation and scaling; basis vectors solve exactly") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = 3 + static_cast<int>(rng() % 5);
        const int cols = 3 + static_cast<int>(rng() % 6);
        std::vector<std::vector<int>> dense(rows, std::vector<int>(cols, 0));
        for (auto& row : dense)
            for (auto& x : row)
                if (rng() % 3 == 0) x = static_cast<int>(rng() % 7) - 3;
        const SparseMatrix m = from_dense(dense);
        const auto [rk, nl] = rank_nullity(m);
        CHECK(rk + nl == cols);

        for (const auto& v : nullspace_basis(m)) CHECK(all_zero(matvec(m, v)));

        std::shuffle(dense.begin(), dense.end(), rng);
        for (auto& row : dense) {
            const int scale = 1 + static_cast<int>(rng() % 3);
            for (auto& x : row) x *= scale;
        }
        CHECK(rank_nullity(from_dense(dense)).first == rk);
    }
}

TEST_CASE("incremental echelon reports independence") {
    Echelon e(3);
    CHECK(e.add_row({{0, Rational(1)}, {1, Rational(1)}}));
    CHECK(e.add_row({{1, Rational(1)}, {2, Rational(1)}}));
    CHECK(!e.add_row({{0, Rational(1)}, {1, Rational(2)}, {2, Rational(1)}}));
    CHECK(e.rank() == 2);
}
