#pragma once

#include <set>
#include <vector>

#include "poltan/linalg.hpp"
#include "poltan/monomial.hpp"

namespace poltan {

// The linear system whose solutions are the degree-0 homomorphisms I -> S/I
// of an ideal generated in a single degree d. Unknowns: one coefficient per
// (generator, degree-d standard monomial) pair. Constraints: for every
// generator pair (f_i, f_j) with L = lcm(f_i, f_j), the relation
// (L/f_i) h_i - (L/f_j) h_j must vanish in S/I, one row per standard
// monomial of degree deg L that can receive a contribution. Pairwise
// relations generate all relations of a monomial ideal, so the nullspace is
// exactly the homomorphism space.
struct SyzygySystem {
    SparseMatrix matrix;
    std::vector<Monomial> standard_basis;  // degree-d standard monomials
    int generator_count = 0;
    int degree = 0;

    int column(int generator, int monomial_index) const {
        return generator * static_cast<int>(standard_basis.size()) + monomial_index;
    }
};

// Throws std::invalid_argument if the generators have mixed degrees.
SyzygySystem syzygy_constraints(const MonomialIdeal& ideal);

// dim_k (Hom(I, S/I))_0 = nullity of the syzygy system.
long long tangent_dimension(const MonomialIdeal& ideal);

// One first-order deformation: a degree-d perturbation of every generator,
// written in the standard-monomial basis.
struct DeformationVector {
    std::vector<std::vector<std::pair<Monomial, Rational>>> perturbations;  // one list per generator
};

std::vector<DeformationVector> deformation_basis(const MonomialIdeal& ideal);

// True iff the syzygy system annihilates v. Throws on shape mismatch
// (wrong generator count, wrong degree, or a perturbation monomial inside
// the ideal).
bool is_first_order_deformation(const MonomialIdeal& ideal, const DeformationVector& v);

// Transporting a single-monomial perturbation across the relation between
// adjacent generators f and f' = f * a / b (a, b single variables): the
// perturbation vanishes, moves to f' as m * a / b, or obstructs.
struct PushOutcome {
    enum class Kind { Vanishes, Pushed, Obstructed };
    Kind kind = Kind::Obstructed;
    Monomial pushed;  // set when kind == Pushed
};

// Pre: generators f and f_prime differ by a single variable swap; throws
// std::invalid_argument otherwise, or when deg(m) != d.
PushOutcome push_deformation(const MonomialIdeal& ideal, int f, const Monomial& m, int f_prime);

// Vertices (given as generator indices) reachable from the single-monomial
// perturbation (generator, m) by successive pushes that never vanish.
// Throws std::invalid_argument if m lies in the ideal (improper deformation).
std::set<int> pushes_to_vertices(const MonomialIdeal& ideal, const std::vector<int>& vertices,
                                 int generator, const Monomial& m);

// Dimension of the subspace of the homomorphism space spanned by the
// substitutions x_a -> x_a + t x_b over all ordered variable pairs.
long long variable_deformation_dim(const MonomialIdeal& ideal);

// d^2 n (d+n-1) - d^2 - (d+n-1)^2 + 1: the dimension of the determinantal
// component on which the box ideal sits.
long long determinantal_component_dim(int n, int d);

}  // namespace poltan
