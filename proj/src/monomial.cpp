#include "poltan/monomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace poltan {

Universe simple_universe(int n, const std::string& prefix) {
    Universe u;
    u.names.reserve(n);
    for (int i = 1; i <= n; ++i) u.names.push_back(prefix + std::to_string(i));
    return u;
}

Monomial Monomial::variable(int v, int exponent) {
    return from_pairs({{v, exponent}});
}

Monomial Monomial::from_pairs(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (const auto& [v, e] : pairs) {
        if (v < 0) throw std::invalid_argument("negative variable index");
        if (e <= 0) throw std::invalid_argument("exponent must be positive");
        if (!m.entries_.empty() && m.entries_.back().first == v)
            throw std::invalid_argument("duplicate variable in monomial");
        m.entries_.emplace_back(v, e);
        m.degree_ += e;
    }
    return m;
}

bool Monomial::is_squarefree() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.second == 1; });
}

int Monomial::exponent(int v) const {
    for (const auto& [var, e] : entries_)
        if (var == v) return e;
    return 0;
}

int Monomial::max_variable() const {
    return entries_.empty() ? -1 : entries_.back().first;
}

bool Monomial::divides(const Monomial& other) const {
    std::size_t j = 0;
    for (const auto& [v, e] : entries_) {
        while (j < other.entries_.size() && other.entries_[j].first < v) ++j;
        if (j == other.entries_.size() || other.entries_[j].first != v || other.entries_[j].second < e)
            return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.degree_ = degree_ + other.degree_;
    std::size_t i = 0, j = 0;
    while (i < entries_.size() || j < other.entries_.size()) {
        if (j == other.entries_.size() || (i < entries_.size() && entries_[i].first < other.entries_[j].first))
            out.entries_.push_back(entries_[i++]);
        else if (i == entries_.size() || other.entries_[j].first < entries_[i].first)
            out.entries_.push_back(other.entries_[j++]);
        else {
            out.entries_.emplace_back(entries_[i].first, entries_[i].second + other.entries_[j].second);
            ++i, ++j;
        }
    }
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial out;
    std::size_t j = 0;
    for (const auto& [v, e] : entries_) {
        int sub = 0;
        while (j < other.entries_.size() && other.entries_[j].first < v) ++j;
        if (j < other.entries_.size() && other.entries_[j].first == v) sub = other.entries_[j].second;
        if (sub > e) throw std::invalid_argument("monomial division is not exact");
        if (e - sub > 0) {
            out.entries_.emplace_back(v, e - sub);
            out.degree_ += e - sub;
        }
    }
    if (out.degree_ != degree_ - other.degree_) throw std::invalid_argument("monomial division is not exact");
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
        if (j == b.entries_.size() || (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first))
            out.entries_.push_back(a.entries_[i++]);
        else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first)
            out.entries_.push_back(b.entries_[j++]);
        else {
            out.entries_.emplace_back(a.entries_[i].first, std::max(a.entries_[i].second, b.entries_[j].second));
            ++i, ++j;
        }
    }
    for (const auto& [v, e] : out.entries_) out.degree_ += e;
    return out;
}

Monomial Monomial::rename(const std::vector<int>& variable_map) const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(entries_.size());
    for (const auto& [v, e] : entries_) {
        if (v >= static_cast<int>(variable_map.size())) throw std::invalid_argument("rename map too short");
        pairs.emplace_back(variable_map[v], e);
    }
    return from_pairs(std::move(pairs));
}

std::string Monomial::str(const Universe& u) const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : entries_) {
        if (!out.empty()) out += "*";
        out += v < u.size() ? u.names[v] : "?" + std::to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string Monomial::key() const {
    std::string out;
    for (const auto& [v, e] : entries_) {
        out += std::to_string(v);
        out += '^';
        out += std::to_string(e);
        out += '.';
    }
    return out;
}

bool canonical_before(const Monomial& a, const Monomial& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first == eb[j].first) {
            if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
            ++i, ++j;
        } else {
            // The one with a positive exponent at the earlier variable is larger.
            return ea[i].first < eb[j].first;
        }
    }
    return i < ea.size();
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), CanonicalLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, Universe universe) {
    for (const auto& g : gens)
        if (g.max_variable() >= universe.size())
            throw std::invalid_argument("monomial references variable " + std::to_string(g.max_variable()) +
                                        " outside a universe of size " + std::to_string(universe.size()));
    return MonomialIdeal{std::move(universe), minimal_generators(std::move(gens))};
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
    for (const auto& g : ideal.generators)
        if (g.divides(m)) return true;
    return false;
}

namespace {

void enumerate_degree(int nvars, int k, int var, std::vector<std::pair<int, int>>& stack,
                      std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        auto entries = stack;
        if (k > 0) entries.emplace_back(var, k);
        out.push_back(Monomial::from_pairs(std::move(entries)));
        return;
    }
    // Descending exponent at the current variable yields canonical order.
    for (int e = k; e >= 0; --e) {
        if (e > 0) stack.emplace_back(var, e);
        enumerate_degree(nvars, k - e, var + 1, stack, out);
        if (e > 0) stack.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int k) {
    if (k == 0) return {Monomial{}};
    if (nvars == 0) return {};
    std::vector<Monomial> out;
    std::vector<std::pair<int, int>> stack;
    enumerate_degree(nvars, k, 0, stack, out);
    return out;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int k) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(ideal.universe.size(), k))
        if (!contains(ideal, m)) out.push_back(std::move(m));
    return out;
}

long long hilbert_function(const MonomialIdeal& ideal, int k) {
    return static_cast<long long>(standard_monomials(ideal, k).size());
}

namespace {

using Poly = std::vector<long long>;  // univariate integer polynomial in t

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

Poly shift(Poly p, int by) {
    if (p.empty()) return p;
    p.insert(p.begin(), by, 0);
    return p;
}

Poly mul_one_minus_power(const Poly& p, int e) {
    // p * (1 - t^e)
    Poly out(p.size() + e, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] += p[i];
        out[i + e] -= p[i];
    }
    trim(out);
    return out;
}

std::string gens_key(const std::vector<Monomial>& gens) {
    std::string key;
    for (const auto& g : gens) {
        key += g.key();
        key += '|';
    }
    return key;
}

// K(t) of the ideal generated by `gens` (minimal, canonical order). The
// numerator does not depend on the ambient variable count, so the cache is
// shared across universes. Recursion: K(I) = K(I + (x)) + t*K(I : x) with the
// pivot x the most frequent variable among the non-pure-power generators.
Poly numerator_rec(const std::vector<Monomial>& gens,
                   std::unordered_map<std::string, Poly>& memo) {
    if (gens.empty()) return {1};
    for (const auto& g : gens)
        if (g.is_one()) return {};  // unit ideal

    bool all_pure = true;
    for (const auto& g : gens)
        if (g.entries().size() > 1) {
            all_pure = false;
            break;
        }
    if (all_pure) {
        Poly out{1};
        for (const auto& g : gens) out = mul_one_minus_power(out, g.degree());
        return out;
    }

    const std::string key = gens_key(gens);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Pivot: among variables occurring in some non-pure-power generator,
    // the one occurring in the most generators overall (ties: lowest index).
    std::map<int, int> count;
    std::unordered_set<int> eligible;
    for (const auto& g : gens)
        for (const auto& [v, e] : g.entries()) {
            ++count[v];
            if (g.entries().size() > 1) eligible.insert(v);
        }
    int pivot = -1, best = -1;
    for (const auto& [v, c] : count)
        if (eligible.count(v) && c > best) {
            best = c;
            pivot = v;
        }

    std::vector<Monomial> sum_gens = gens;
    sum_gens.push_back(Monomial::variable(pivot));
    std::vector<Monomial> colon_gens;
    colon_gens.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.exponent(pivot) > 0)
            colon_gens.push_back(g / Monomial::variable(pivot));
        else
            colon_gens.push_back(g);
    }

    Poly result = add(numerator_rec(minimal_generators(std::move(sum_gens)), memo),
                      shift(numerator_rec(minimal_generators(std::move(colon_gens)), memo), 1));
    memo.emplace(key, result);
    return result;
}

}  // namespace

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal) {
    thread_local std::unordered_map<std::string, Poly> memo;
    return HilbertNumerator{numerator_rec(ideal.generators, memo), ideal.universe.size()};
}

std::vector<long long> expand_series(const HilbertNumerator& k, int max_degree) {
    const int n = k.ambient_variable_count;
    std::vector<long long> out(max_degree + 1, 0);
    for (int j = 0; j <= max_degree; ++j) {
        const long long binom = monomial_count(n, j);  // coefficient of t^j in 1/(1-t)^n
        for (std::size_t i = 0; i < k.coefficients.size(); ++i) {
            const int deg = j + static_cast<int>(i);
            if (deg > max_degree) break;
            out[deg] += k.coefficients[i] * binom;
        }
    }
    return out;
}

long long monomial_count(int nvars, int k) {
    if (k == 0) return 1;
    if (nvars == 0) return 0;
    // C(nvars+k-1, k)
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (nvars - 1 + i) / i;
    return out;
}

}  // namespace poltan
