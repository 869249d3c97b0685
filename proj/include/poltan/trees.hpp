#pragma once

#include <vector>

#include "poltan/monomial.hpp"
#include "poltan/polarize.hpp"

namespace poltan {

// A spanning tree of the complete graph on vertices 1..n with its edges
// labeled by position: edge t (1-based) is edges[t-1]. Construction checks
// connectedness and acyclicity.
struct LabeledTree {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // (u, v) with u < v, 1-based
};

LabeledTree make_tree(int vertex_count, std::vector<std::pair<int, int>> edges);

// Standard Pruefer bijection. Decoding sorts the edge list lexicographically
// before assigning labels; sequence entries must lie in 1..len+2.
LabeledTree prufer_decode(const std::vector<int>& seq);
std::vector<int> prufer_encode(const LabeledTree& tree);

// All n^(n-2) sequences for trees on n vertices, in lexicographic order.
std::vector<std::vector<int>> all_prufer_sequences(int vertex_count);

LabeledTree path_tree(int vertex_count);
LabeledTree star_tree(int vertex_count, int center = 1);
// The 7-vertex tree with three length-2 legs from a common center.
LabeledTree spider_tree_7();

// The edge-pair ideal of a tree: one variable x_{v,e} per incident
// vertex/edge pair, and for every vertex pair i < j the generator
// x_{i,a} x_{j,b} where the tree path from i to j starts with edge a and
// ends with edge b. Comes with its depolarization x_{v,e} -> x_v and the
// vertex generators, one per edge (the generator x_{i,t} x_{j,t}).
struct TreeIdeal {
    MonomialIdeal ideal;
    DepolarizationSpec spec;
    std::vector<int> vertex_gens;  // index t-1 holds the generator of edge t
};

TreeIdeal tree_ideal(const LabeledTree& tree);

// Degree statistics of the adjacency graph on the tree's edges (two edges
// adjacent when they share an endpoint), and the derived index.
struct TreeIndexReport {
    std::vector<int> line_graph_degrees;  // per edge label, 1-based at index 0
    long long nu1 = 0;                    // edges with exactly one neighbor
    long long nu2 = 0;                    // edges with exactly two neighbors
    long long index = 0;                  // (n-2)*nu1 + nu2
};

TreeIndexReport tree_index(const LabeledTree& tree);

// (3n-4)(n-1) + index(T); the tangent-space dimension the tree predicts.
long long predicted_tangent_dim(const LabeledTree& tree);

}  // namespace poltan
