#include "poltan/polarize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace poltan {

namespace {

void require_positive(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("n and d must be positive");
}

// All (e_1,...,e_n) with nonnegative entries summing to d, in the order that
// makes the resulting generator lists canonical without re-sorting upstream.
void compositions(int n, int d, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == n - 1) {
        current.push_back(d);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        current.push_back(e);
        compositions(n, d - e, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    compositions(n, d, current, out);
    return out;
}

}  // namespace

Universe split_universe(int n, int d) {
    Universe u;
    u.names.reserve(n * d);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= d; ++j)
            u.names.push_back("x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    return u;
}

int split_index(int i, int j, int d) { return (i - 1) * d + (j - 1); }

DepolarizationSpec split_depolarization(int n, int d) {
    DepolarizationSpec spec;
    spec.base = simple_universe(n);
    spec.base_of.resize(n * d);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= d; ++j) spec.base_of[split_index(i, j, d)] = i - 1;
    return spec;
}

MonomialIdeal power_ideal(int n, int d) {
    require_positive(n, d);
    return MonomialIdeal{simple_universe(n), monomials_of_degree(n, d)};
}

MonomialIdeal sqfree_power_ideal(int n, int d) {
    require_positive(n, d);
    const int nvars = n + d - 1;
    std::vector<Monomial> gens;
    std::vector<int> choice;
    // all d-subsets of {0,...,nvars-1}
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(choice.size()) == d) {
            std::vector<std::pair<int, int>> pairs;
            for (int v : choice) pairs.emplace_back(v, 1);
            gens.push_back(Monomial::from_pairs(std::move(pairs)));
            return;
        }
        for (int v = next; v < nvars; ++v) {
            choice.push_back(v);
            self(self, v + 1);
            choice.pop_back();
        }
    };
    rec(rec, 0);
    return minimalize(std::move(gens), simple_universe(nvars));
}

MonomialIdeal standard_polarization(int n, int d) {
    require_positive(n, d);
    std::vector<Monomial> gens;
    for (const auto& comp : compositions(n, d)) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= comp[i - 1]; ++j) pairs.emplace_back(split_index(i, j, d), 1);
        gens.push_back(Monomial::from_pairs(std::move(pairs)));
    }
    return minimalize(std::move(gens), split_universe(n, d));
}

MonomialIdeal box_polarization(int n, int d) {
    require_positive(n, d);
    std::vector<Monomial> gens;
    std::vector<int> rows;
    auto rec = [&](auto&& self, int min_row) -> void {
        if (static_cast<int>(rows.size()) == d) {
            std::vector<std::pair<int, int>> pairs;
            for (int j = 1; j <= d; ++j) pairs.emplace_back(split_index(rows[j - 1], j, d), 1);
            gens.push_back(Monomial::from_pairs(std::move(pairs)));
            return;
        }
        for (int i = min_row; i <= n; ++i) {
            rows.push_back(i);
            self(self, i);
            rows.pop_back();
        }
    };
    rec(rec, 1);
    return minimalize(std::move(gens), split_universe(n, d));
}

MonomialIdeal trivial_polarization(int n, int d) {
    require_positive(n, d);
    std::vector<Monomial> gens;
    for (const auto& comp : compositions(n, d)) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= n; ++i)
            if (comp[i - 1] > 0) pairs.emplace_back(split_index(i, 1, d), comp[i - 1]);
        gens.push_back(Monomial::from_pairs(std::move(pairs)));
    }
    return minimalize(std::move(gens), split_universe(n, d));
}

namespace {

Monomial depolarize_monomial(const Monomial& m, const DepolarizationSpec& spec) {
    std::map<int, int> exps;
    for (const auto& [v, e] : m.entries()) {
        if (v >= static_cast<int>(spec.base_of.size()))
            throw std::invalid_argument("depolarization spec does not cover variable " + std::to_string(v));
        exps[spec.base_of[v]] += e;
    }
    std::vector<std::pair<int, int>> pairs(exps.begin(), exps.end());
    return Monomial::from_pairs(std::move(pairs));
}

}  // namespace

MonomialIdeal depolarize(const MonomialIdeal& ideal, const DepolarizationSpec& spec) {
    if (static_cast<int>(spec.base_of.size()) != ideal.universe.size())
        throw std::invalid_argument("depolarization spec size does not match the universe");
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) gens.push_back(depolarize_monomial(g, spec));
    return minimalize(std::move(gens), spec.base);
}

PolarizationReport is_polarization(const MonomialIdeal& split, const MonomialIdeal& base,
                                   const DepolarizationSpec& spec) {
    for (const auto& g : split.generators)
        if (!g.is_squarefree())
            throw std::invalid_argument("is_polarization requires a square-free ideal");
    if (static_cast<int>(spec.base_of.size()) != split.universe.size())
        throw std::invalid_argument("depolarization spec size does not match the universe");
    for (int b : spec.base_of)
        if (b < 0 || b >= spec.base.size())
            throw std::invalid_argument("depolarization spec maps outside the base universe");

    PolarizationReport report;

    std::vector<Monomial> images;
    images.reserve(split.generators.size());
    for (const auto& g : split.generators) images.push_back(depolarize_monomial(g, spec));
    std::sort(images.begin(), images.end(), CanonicalLess{});
    const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    report.generator_bijection = distinct && images == base.generators;
    if (!report.generator_bijection) {
        report.detail = distinct ? "depolarized generators differ from the base generators"
                                 : "two generators depolarize to the same monomial";
    }

    const auto k_split = hilbert_numerator(split);
    const auto k_base = hilbert_numerator(base);
    report.numerator_match = k_split.coefficients == k_base.coefficients;
    if (!report.numerator_match) {
        if (!report.detail.empty()) report.detail += "; ";
        report.detail += "Hilbert-series numerators differ";
    }

    report.ok = report.generator_bijection && report.numerator_match;
    return report;
}

std::vector<int> vertex_generators(const MonomialIdeal& split, const DepolarizationSpec& spec) {
    if (split.generators.empty()) throw std::runtime_error("zero ideal has no vertices");
    const int d = split.generators.front().degree();
    std::vector<int> vertex(spec.base.size(), -1);
    for (std::size_t idx = 0; idx < split.generators.size(); ++idx) {
        const Monomial image = depolarize_monomial(split.generators[idx], spec);
        if (image.entries().size() == 1 && image.degree() == d) {
            const int base_var = image.entries().front().first;
            if (vertex[base_var] != -1)
                throw std::runtime_error("two generators depolarize to the same pure power");
            vertex[base_var] = static_cast<int>(idx);
        }
    }
    for (int i = 0; i < spec.base.size(); ++i)
        if (vertex[i] == -1)
            throw std::runtime_error("no generator depolarizes to a pure power of " +
                                     spec.base.names[i]);
    return vertex;
}

}  // namespace poltan
