#include "poltan/determinantal.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "poltan/linalg.hpp"
#include "poltan/polarize.hpp"

namespace poltan {

Polynomial::Polynomial(Rational constant) {
    if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial::Polynomial(Monomial m, Rational coeff) {
    if (coeff != 0) terms_.emplace(std::move(m), std::move(coeff));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += other * Rational(-1); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_) {
            Rational c = c1 * c2;
            auto [it, inserted] = out.terms_.try_emplace(m1 * m2, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
    Polynomial out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

std::string Polynomial::str(const Universe& u) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational abs = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (abs != 1 || m.is_one()) {
            out += to_string(abs);
            if (!m.is_one()) out += "*";
        }
        if (!m.is_one()) out += m.str(u);
    }
    return out;
}

bool CopyMajorLex::variable_less(int a, int b) const {
    const int ia = a / d, ja = a % d;
    const int ib = b / d, jb = b % d;
    if (ja != jb) return ja < jb;
    return ia < ib;
}

bool CopyMajorLex::monomial_less(const Monomial& a, const Monomial& b) const {
    // Lexicographic from the largest variable down over the joint support.
    std::vector<int> support;
    for (const auto& [v, e] : a.entries()) support.push_back(v);
    for (const auto& [v, e] : b.entries()) support.push_back(v);
    std::sort(support.begin(), support.end(), [&](int x, int y) { return variable_less(y, x); });
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (int v : support) {
        const int ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::optional<int> BandedMatrix::entry(int r, int c) const {
    if (c < r || c > r + n - 1) return std::nullopt;
    return split_index(c - r + 1, r, d);
}

BandedMatrix banded_matrix(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("n and d must be positive");
    return BandedMatrix{n, d};
}

namespace {

// Cofactor expansion along the first remaining row.
Polynomial determinant(const BandedMatrix& m, const std::vector<int>& cols, int row,
                       std::vector<bool>& used) {
    if (row > m.rows()) return Polynomial(Rational(1));
    Polynomial out;
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (used[k]) continue;
        if (const auto var = m.entry(row, cols[k])) {
            used[k] = true;
            Polynomial sub = determinant(m, cols, row + 1, used);
            used[k] = false;
            out += sub * Monomial::variable(*var) * Rational(sign);
        }
        sign = -sign;
    }
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

std::vector<Polynomial> maximal_minors(const BandedMatrix& m) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    column_subsets(m.cols(), m.rows(), 1, current, subsets);
    std::vector<Polynomial> out;
    out.reserve(subsets.size());
    for (const auto& cols : subsets) {
        std::vector<bool> used(cols.size(), false);
        out.push_back(determinant(m, cols, 1, used));
    }
    return out;
}

Monomial leading_term(const Polynomial& p, const CopyMajorLex& order) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || order.monomial_less(*best, m)) best = &m;
    return *best;
}

long long graded_piece_rank(const std::vector<Polynomial>& gens, int nvars, int k) {
    std::unordered_map<std::string, int> column_of;
    int next_column = 0;
    auto column = [&](const Monomial& m) {
        auto [it, inserted] = column_of.try_emplace(m.key(), next_column);
        if (inserted) ++next_column;
        return it->second;
    };

    Echelon ech(static_cast<int>(monomial_count(nvars, k)));
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const auto deg = g.homogeneous_degree();
        if (!deg) throw std::invalid_argument("graded_piece_rank requires homogeneous generators");
        if (*deg > k) continue;
        for (const auto& mult : monomials_of_degree(nvars, k - *deg)) {
            std::vector<std::pair<int, Rational>> row;
            row.reserve(g.terms().size());
            for (const auto& [m, c] : g.terms()) row.emplace_back(column(m * mult), c);
            ech.add_row(row);
        }
    }
    return ech.rank();
}

InitialIdealReport verify_initial_ideal(int n, int d, int max_degree) {
    if (max_degree < d) throw std::invalid_argument("max_degree must be at least d");
    const MonomialIdeal box = box_polarization(n, d);
    const auto minors = maximal_minors(banded_matrix(n, d));
    const CopyMajorLex order{n, d};

    InitialIdealReport report;
    std::vector<Monomial> leads;
    leads.reserve(minors.size());
    for (const auto& p : minors) leads.push_back(leading_term(p, order));
    std::sort(leads.begin(), leads.end(), CanonicalLess{});
    report.leading_terms_match =
        std::adjacent_find(leads.begin(), leads.end()) == leads.end() && leads == box.generators;

    const int nvars = n * d;
    report.ok = report.leading_terms_match;
    for (int k = 0; k <= max_degree; ++k) {
        DegreeCheck check;
        check.degree = k;
        check.computed = graded_piece_rank(minors, nvars, k);
        check.expected = monomial_count(nvars, k) - hilbert_function(box, k);
        check.match = check.computed == check.expected;
        report.ok = report.ok && check.match;
        report.degrees.push_back(check);
    }
    return report;
}

std::vector<Polynomial> lifted_family(int d, const std::array<Rational, 3>& t) {
    if (d < 2) throw std::invalid_argument("the family needs d >= 2");
    const int n = 3;
    auto var = [&](int i, int j) { return Monomial::variable(split_index(i, j, d)); };

    if (d == 2) {
        // Vertices pick up a degree-2 monomial in the other two rows; the
        // mixed generators need the quadratic corrections for the relations
        // to lift exactly.
        std::vector<Polynomial> gens;
        gens.push_back(Polynomial(var(1, 1) * var(1, 2)) + Polynomial(var(2, 2) * var(3, 2), t[0]));
        gens.push_back(Polynomial(var(1, 1) * var(2, 1)) -
                       Polynomial(var(3, 2) * var(3, 2), t[0] * t[1]));
        gens.push_back(Polynomial(var(1, 1) * var(3, 1)) -
                       Polynomial(var(2, 2) * var(2, 2), t[0] * t[2]));
        gens.push_back(Polynomial(var(2, 1) * var(2, 2)) + Polynomial(var(1, 2) * var(3, 2), t[1]));
        gens.push_back(Polynomial(var(2, 1) * var(3, 1)) -
                       Polynomial(var(1, 2) * var(1, 2), t[1] * t[2]));
        gens.push_back(Polynomial(var(3, 1) * var(3, 2)) + Polynomial(var(1, 2) * var(2, 2), t[2]));
        return gens;
    }

    const MonomialIdeal standard = standard_polarization(n, d);
    const auto spec = split_depolarization(n, d);
    const auto vertices = vertex_generators(standard, spec);

    std::vector<Polynomial> gens;
    gens.reserve(standard.generators.size());
    for (const auto& g : standard.generators) gens.emplace_back(g);
    for (int i = 1; i <= n; ++i) {
        const int j = i == 1 ? 2 : 1;
        const int k = i == 3 ? 2 : 3;
        Monomial m = var(j, 2) * var(k, 2);
        for (int c = 1; c <= d - 2; ++c) m = m * var(i, c);
        gens[vertices[i - 1]] += Polynomial(std::move(m), t[i - 1]);
    }
    return gens;
}

FlatFamilyReport verify_flat_family(int d, const std::array<Rational, 3>& t, int max_degree) {
    if (max_degree < d) throw std::invalid_argument("max_degree must be at least d");
    const int nvars = 3 * d;
    const auto deformed = lifted_family(d, t);
    std::vector<Polynomial> reference;
    for (const auto& g : standard_polarization(3, d).generators) reference.emplace_back(g);

    FlatFamilyReport report;
    report.ok = true;
    for (int k = 0; k <= max_degree; ++k) {
        DegreeCheck check;
        check.degree = k;
        check.computed = graded_piece_rank(deformed, nvars, k);
        check.expected = graded_piece_rank(reference, nvars, k);
        check.match = check.computed == check.expected;
        report.ok = report.ok && check.match;
        report.degrees.push_back(check);
    }
    return report;
}

}  // namespace poltan
