#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poltan/monomial.hpp"
#include "poltan/rational.hpp"

namespace poltan {

// Exact multivariate polynomial: monomial -> coefficient, no zero terms.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(Monomial m, Rational coeff = Rational(1));

    const std::map<Monomial, Rational, CanonicalLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Monomial& m) const;
    Polynomial operator*(const Rational& c) const;

    // Total degree if homogeneous; nullopt for 0 or inhomogeneous input.
    std::optional<int> homogeneous_degree() const;

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

    std::string str(const Universe& u) const;

  private:
    std::map<Monomial, Rational, CanonicalLess> terms_;
};

// Variable order on the nd-variable ring ranking x_{i,j} below x_{i',j'}
// when j < j', or j = j' and i < i'; monomials compare lexicographically
// from the largest variable down.
struct CopyMajorLex {
    int n = 0;
    int d = 0;

    bool variable_less(int a, int b) const;
    bool monomial_less(const Monomial& a, const Monomial& b) const;
};

// The banded d x (n+d-1) matrix whose row r carries x_{1,r},...,x_{n,r} in
// columns r..r+n-1 (1-based) and zeros elsewhere.
struct BandedMatrix {
    int n = 0;
    int d = 0;

    int rows() const { return d; }
    int cols() const { return n + d - 1; }
    // Flat variable index, or nullopt for a zero entry. 1-based r, c.
    std::optional<int> entry(int r, int c) const;
};

BandedMatrix banded_matrix(int n, int d);

// All d x d minors by cofactor expansion, one per column subset in
// lexicographic subset order. Each is homogeneous of degree d.
std::vector<Polynomial> maximal_minors(const BandedMatrix& m);

// Throws std::invalid_argument on the zero polynomial.
Monomial leading_term(const Polynomial& p, const CopyMajorLex& order);

// Dimension of the degree-k piece of the ideal generated by homogeneous
// `gens` in nvars variables: the rank of the multiples {m * g} expressed in
// the degree-k monomial basis. Throws on an inhomogeneous generator.
long long graded_piece_rank(const std::vector<Polynomial>& gens, int nvars, int k);

struct DegreeCheck {
    int degree = 0;
    long long computed = 0;
    long long expected = 0;
    bool match = false;
};

struct InitialIdealReport {
    bool leading_terms_match = false;
    std::vector<DegreeCheck> degrees;
    bool ok = false;
};

// Certifies, through max_degree, that the box ideal is the initial ideal of
// the maximal minors under the copy-major lex order: the leading terms must
// be exactly the box generators and the graded dimensions of the two ideals
// must agree degree by degree.
InitialIdealReport verify_initial_ideal(int n, int d, int max_degree);

// The three-parameter family deforming the standard polarization for n = 3:
// for d = 2 the six explicitly lifted generators; for d >= 3 the generators
// with each vertex f_i deformed by t_i * x_{i,1}..x_{i,d-2} x_{j,2} x_{k,2}.
std::vector<Polynomial> lifted_family(int d, const std::array<Rational, 3>& t);

struct FlatFamilyReport {
    std::vector<DegreeCheck> degrees;
    bool ok = false;
};

// Flatness evidence at specialized parameters: the graded dimensions of the
// deformed ideal must match those of the standard polarization through
// max_degree.
FlatFamilyReport verify_flat_family(int d, const std::array<Rational, 3>& t, int max_degree);

}  // namespace poltan
