#include "poltan/tangent.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace poltan {

namespace {

int equigenerated_degree(const MonomialIdeal& ideal) {
    if (ideal.generators.empty()) return 0;
    const int d = ideal.generators.front().degree();
    for (const auto& g : ideal.generators)
        if (g.degree() != d)
            throw std::invalid_argument("ideal is not generated in a single degree");
    return d;
}

}  // namespace

SyzygySystem syzygy_constraints(const MonomialIdeal& ideal) {
    SyzygySystem sys;
    sys.degree = equigenerated_degree(ideal);
    sys.generator_count = static_cast<int>(ideal.generators.size());
    sys.standard_basis = standard_monomials(ideal, sys.degree);

    const int g = sys.generator_count;
    const int s = static_cast<int>(sys.standard_basis.size());
    std::vector<std::vector<std::pair<int, Rational>>> rows;

    for (int i = 0; i < g; ++i) {
        for (int j = i + 1; j < g; ++j) {
            const Monomial l = Monomial::lcm(ideal.generators[i], ideal.generators[j]);
            const Monomial qi = l / ideal.generators[i];
            const Monomial qj = l / ideal.generators[j];
            // Contributions to the class of each degree-deg(L) monomial.
            std::map<Monomial, std::pair<int, int>, CanonicalLess> by_target;
            for (int k = 0; k < s; ++k) {
                Monomial u = qi * sys.standard_basis[k];
                if (!contains(ideal, u)) {
                    auto& slot = by_target.try_emplace(std::move(u), std::make_pair(-1, -1)).first->second;
                    slot.first = sys.column(i, k);
                }
                Monomial w = qj * sys.standard_basis[k];
                if (!contains(ideal, w)) {
                    auto& slot = by_target.try_emplace(std::move(w), std::make_pair(-1, -1)).first->second;
                    slot.second = sys.column(j, k);
                }
            }
            for (const auto& [target, cols] : by_target) {
                std::vector<std::pair<int, Rational>> row;
                if (cols.first >= 0) row.emplace_back(cols.first, Rational(1));
                if (cols.second >= 0) row.emplace_back(cols.second, Rational(-1));
                rows.push_back(std::move(row));
            }
        }
    }

    sys.matrix = SparseMatrix(static_cast<int>(rows.size()), g * s);
    for (std::size_t r = 0; r < rows.size(); ++r) sys.matrix.set_row(static_cast<int>(r), std::move(rows[r]));
    return sys;
}

long long tangent_dimension(const MonomialIdeal& ideal) {
    return rank_nullity(syzygy_constraints(ideal).matrix).second;
}

std::vector<DeformationVector> deformation_basis(const MonomialIdeal& ideal) {
    const SyzygySystem sys = syzygy_constraints(ideal);
    const int s = static_cast<int>(sys.standard_basis.size());
    std::vector<DeformationVector> basis;
    for (const auto& v : nullspace_basis(sys.matrix)) {
        DeformationVector dv;
        dv.perturbations.resize(sys.generator_count);
        for (int gi = 0; gi < sys.generator_count; ++gi)
            for (int k = 0; k < s; ++k) {
                const Rational& c = v[sys.column(gi, k)];
                if (c != 0) dv.perturbations[gi].emplace_back(sys.standard_basis[k], c);
            }
        basis.push_back(std::move(dv));
    }
    return basis;
}

bool is_first_order_deformation(const MonomialIdeal& ideal, const DeformationVector& v) {
    const SyzygySystem sys = syzygy_constraints(ideal);
    if (static_cast<int>(v.perturbations.size()) != sys.generator_count)
        throw std::invalid_argument("deformation vector has the wrong number of components");

    std::map<Monomial, int, CanonicalLess> index;
    for (int k = 0; k < static_cast<int>(sys.standard_basis.size()); ++k)
        index.emplace(sys.standard_basis[k], k);

    std::vector<Rational> coords(static_cast<std::size_t>(sys.generator_count) * sys.standard_basis.size(),
                                 Rational(0));
    for (int gi = 0; gi < sys.generator_count; ++gi)
        for (const auto& [m, c] : v.perturbations[gi]) {
            auto it = index.find(m);
            if (it == index.end())
                throw std::invalid_argument("perturbation monomial is not a degree-d standard monomial");
            coords[sys.column(gi, it->second)] += c;
        }

    for (const auto& row : sys.matrix.rows) {
        Rational acc = 0;
        for (const auto& [c, val] : row) acc += val * coords[c];
        if (acc != 0) return false;
    }
    return true;
}

namespace {

// For adjacent generators f' = f * a / b returns the single variables (a, b);
// throws if the generators are not in that relation.
std::pair<Monomial, Monomial> adjacency_ratio(const Monomial& f, const Monomial& f_prime) {
    const Monomial l = Monomial::lcm(f, f_prime);
    const Monomial a = l / f;
    const Monomial b = l / f_prime;
    if (a.degree() != 1 || b.degree() != 1)
        throw std::invalid_argument("generators do not differ by a single variable swap");
    return {a, b};
}

}  // namespace

PushOutcome push_deformation(const MonomialIdeal& ideal, int f, const Monomial& m, int f_prime) {
    const int d = equigenerated_degree(ideal);
    if (f < 0 || f_prime < 0 || f >= static_cast<int>(ideal.generators.size()) ||
        f_prime >= static_cast<int>(ideal.generators.size()) || f == f_prime)
        throw std::invalid_argument("generator index out of range");
    if (m.degree() != d) throw std::invalid_argument("perturbation monomial has the wrong degree");

    const auto [a, b] = adjacency_ratio(ideal.generators[f], ideal.generators[f_prime]);
    PushOutcome out;
    if (contains(ideal, a * m)) {
        out.kind = PushOutcome::Kind::Vanishes;
    } else if (b.divides(m)) {
        out.kind = PushOutcome::Kind::Pushed;
        out.pushed = (m * a) / b;
    } else {
        out.kind = PushOutcome::Kind::Obstructed;
    }
    return out;
}

std::set<int> pushes_to_vertices(const MonomialIdeal& ideal, const std::vector<int>& vertices,
                                 int generator, const Monomial& m) {
    if (contains(ideal, m))
        throw std::invalid_argument("improper deformation: the perturbation monomial lies in the ideal");

    struct StateLess {
        bool operator()(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return canonical_before(a.second, b.second);
        }
    };
    const std::set<int> vertex_set(vertices.begin(), vertices.end());
    std::set<std::pair<int, Monomial>, StateLess> seen;
    std::queue<std::pair<int, Monomial>> frontier;
    frontier.emplace(generator, m);
    seen.emplace(generator, m);

    std::set<int> reached;
    while (!frontier.empty()) {
        auto [g, pert] = frontier.front();
        frontier.pop();
        if (vertex_set.count(g)) reached.insert(g);
        for (int h = 0; h < static_cast<int>(ideal.generators.size()); ++h) {
            if (h == g) continue;
            const Monomial l = Monomial::lcm(ideal.generators[g], ideal.generators[h]);
            if (l.degree() != ideal.generators[g].degree() + 1) continue;  // not adjacent
            const PushOutcome step = push_deformation(ideal, g, pert, h);
            if (step.kind != PushOutcome::Kind::Pushed) continue;
            auto state = std::make_pair(h, step.pushed);
            if (seen.insert(state).second) frontier.push(std::move(state));
        }
    }
    return reached;
}

long long variable_deformation_dim(const MonomialIdeal& ideal) {
    const SyzygySystem sys = syzygy_constraints(ideal);
    const int s = static_cast<int>(sys.standard_basis.size());
    std::map<Monomial, int, CanonicalLess> index;
    for (int k = 0; k < s; ++k) index.emplace(sys.standard_basis[k], k);

    const int nvars = ideal.universe.size();
    Echelon ech(sys.generator_count * s);
    for (int a = 0; a < nvars; ++a) {
        for (int b = 0; b < nvars; ++b) {
            if (a == b) continue;
            // x_a -> x_a + t x_b perturbs each generator f by x_b * df/dx_a.
            std::vector<std::pair<int, Rational>> row;
            for (int gi = 0; gi < sys.generator_count; ++gi) {
                const Monomial& f = ideal.generators[gi];
                const int e = f.exponent(a);
                if (e == 0) continue;
                const Monomial h = (f / Monomial::variable(a)) * Monomial::variable(b);
                auto it = index.find(h);
                if (it == index.end()) continue;  // lands in the ideal
                row.emplace_back(sys.column(gi, it->second), Rational(e));
            }
            ech.add_row(row);
        }
    }
    return ech.rank();
}

long long determinantal_component_dim(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("n and d must be positive");
    const long long dd = d, nn = n, s = d + n - 1;
    return dd * dd * nn * s - dd * dd - s * s + 1;
}

}  // namespace poltan
