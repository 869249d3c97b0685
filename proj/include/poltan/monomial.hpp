#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace poltan {

// A ring's variable set: just a list of distinct display names. The index
// into `names` is the variable everywhere else in the library.
struct Universe {
    std::vector<std::string> names;

    int size() const { return static_cast<int>(names.size()); }
    bool operator==(const Universe&) const = default;
};

// n variables named <prefix>1 .. <prefix>n.
Universe simple_universe(int n, const std::string& prefix = "x");

// A monomial as a sparse exponent vector: (variable, exponent) pairs sorted
// by variable, exponents strictly positive, with the total degree cached.
class Monomial {
  public:
    Monomial() = default;  // the monomial 1

    static Monomial variable(int v, int exponent = 1);
    // Validates: sorted unique variables, positive exponents.
    static Monomial from_pairs(std::vector<std::pair<int, int>> pairs);

    const std::vector<std::pair<int, int>>& entries() const { return entries_; }
    int degree() const { return degree_; }
    bool is_one() const { return entries_.empty(); }
    bool is_squarefree() const;
    int exponent(int v) const;
    int max_variable() const;  // -1 for the monomial 1

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Pre: other.divides(*this).
    Monomial operator/(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    // Relabel variables; map must be injective on the support.
    Monomial rename(const std::vector<int>& variable_map) const;

    bool operator==(const Monomial&) const = default;

    std::string str(const Universe& u) const;
    // Compact serialization, used as a hash key.
    std::string key() const;

  private:
    std::vector<std::pair<int, int>> entries_;
    int degree_ = 0;
};

// Canonical order on monomials: descending lexicographic on the dense
// exponent vector. All generator lists, standard-monomial bases and matrix
// column orders in this library use it, so equal ideals compare equal as
// sequences.
bool canonical_before(const Monomial& a, const Monomial& b);

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonical_before(a, b); }
};

// A monomial ideal given by its minimal generators in canonical order.
struct MonomialIdeal {
    Universe universe;
    std::vector<Monomial> generators;

    bool operator==(const MonomialIdeal&) const = default;
};

// Divisibility-minimal, deduplicated, canonically ordered generators.
// Throws std::invalid_argument if a monomial references a variable outside
// the universe.
MonomialIdeal minimalize(std::vector<Monomial> gens, Universe universe);

// Same reduction on a bare generator list (no universe check).
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

// Membership test: is m divisible by some generator?
bool contains(const MonomialIdeal& ideal, const Monomial& m);

// All degree-k monomials in nvars variables, canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int k);

// Degree-k monomials of the universe outside the ideal, canonical order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int k);

// dim_k (S/I)_k, counted directly from standard monomials.
long long hilbert_function(const MonomialIdeal& ideal, int k);

// Numerator K(t) of the Hilbert series K(t)/(1-t)^N.
struct HilbertNumerator {
    std::vector<long long> coefficients;  // coefficient of t^k at index k
    int ambient_variable_count = 0;

    bool operator==(const HilbertNumerator&) const = default;
};

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal);

// Coefficients 0..max_degree of the power series K(t)/(1-t)^N.
std::vector<long long> expand_series(const HilbertNumerator& k, int max_degree);

// C(n+k-1, k), the count of degree-k monomials in n variables.
long long monomial_count(int nvars, int k);

}  // namespace poltan
