#pragma once

#include <string>
#include <vector>

#include "poltan/monomial.hpp"

namespace poltan {

// Substitution collapsing a split ring back to its base ring: every variable
// of the split universe is assigned a base variable.
struct DepolarizationSpec {
    std::vector<int> base_of;  // split variable index -> base variable index
    Universe base;
};

// The shared nd-variable ring k[x_{1,1},...,x_{n,d}] in which the power-ideal
// constructions below are comparable. Flat index of x_{i,j}: (i-1)*d + (j-1).
Universe split_universe(int n, int d);
int split_index(int i, int j, int d);  // 1-based (i, j)

// x_{i,j} -> x_i onto the n-variable base ring.
DepolarizationSpec split_depolarization(int n, int d);

// m^d: all degree-d monomials in n variables.
MonomialIdeal power_ideal(int n, int d);

// All square-free degree-d monomials in n+d-1 variables.
MonomialIdeal sqfree_power_ideal(int n, int d);

// Generators x_{1,1}..x_{1,i1} * ... * x_{n,1}..x_{n,in} over compositions
// i1+...+in = d, in the nd-variable ring.
MonomialIdeal standard_polarization(int n, int d);

// Generators x_{i1,1} x_{i2,2} ... x_{id,d} with 1 <= i1 <= ... <= id <= n.
MonomialIdeal box_polarization(int n, int d);

// (x_{1,1},...,x_{n,1})^d embedded in the nd-variable ring.
MonomialIdeal trivial_polarization(int n, int d);

// Substitute each variable by its base variable and minimalize.
MonomialIdeal depolarize(const MonomialIdeal& ideal, const DepolarizationSpec& spec);

struct PolarizationReport {
    bool ok = false;
    bool generator_bijection = false;
    bool numerator_match = false;
    std::string detail;
};

// Certifies that `split` is a polarization of `base`: the generator-wise
// depolarization must be a bijection onto the generators of `base`, and the
// two Hilbert-series numerators must agree as polynomials (which, given the
// bijection, is the regular-sequence condition on the variable differences).
// Pre: `split` is square-free; throws std::invalid_argument otherwise.
PolarizationReport is_polarization(const MonomialIdeal& split, const MonomialIdeal& base,
                                   const DepolarizationSpec& spec);

// Indices of the generators depolarizing to the pure powers x_i^d, ordered by
// base variable. Throws std::runtime_error if some pure power has no (unique)
// preimage, i.e. the ideal is not a polarization of a power ideal.
std::vector<int> vertex_generators(const MonomialIdeal& split, const DepolarizationSpec& spec);

}  // namespace poltan
