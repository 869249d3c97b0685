#include "poltan/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace poltan {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

LabeledTree make_tree(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 2) throw std::invalid_argument("a tree needs at least 2 vertices");
    if (static_cast<int>(edges.size()) != vertex_count - 1)
        throw std::invalid_argument("a tree on n vertices has n-1 edges");
    UnionFind uf(vertex_count);
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > vertex_count || u == v) throw std::invalid_argument("bad edge");
        if (!uf.unite(u - 1, v - 1)) throw std::invalid_argument("edges contain a cycle");
    }
    return LabeledTree{vertex_count, std::move(edges)};
}

LabeledTree prufer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    for (int s : seq)
        if (s < 1 || s > n) throw std::invalid_argument("Pruefer label out of range");

    std::vector<int> degree(n + 1, 1);
    for (int s : seq) ++degree[s];

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // Attach the smallest current leaf to the next sequence entry.
    std::vector<bool> used(n + 1, false);
    for (int s : seq) {
        int leaf = -1;
        for (int v = 1; v <= n; ++v)
            if (degree[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        used[leaf] = true;
        --degree[s];
    }
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (!used[v] && degree[v] == 1) rest.push_back(v);
    edges.emplace_back(rest[0], rest[1]);

    std::sort(edges.begin(), edges.end());
    return make_tree(n, std::move(edges));
}

std::vector<int> prufer_encode(const LabeledTree& tree) {
    const int n = tree.vertex_count;
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& [u, v] : tree.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> degree(n + 1, 0);
    for (int v = 1; v <= n; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<bool> removed(n + 1, false);

    std::vector<int> seq;
    seq.reserve(n - 2);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = -1;
        for (int v = 1; v <= n; ++v)
            if (!removed[v] && degree[v] == 1) {
                leaf = v;
                break;
            }
        int neighbor = -1;
        for (int w : adj[leaf])
            if (!removed[w]) neighbor = w;
        seq.push_back(neighbor);
        removed[leaf] = true;
        --degree[neighbor];
    }
    return seq;
}

std::vector<std::vector<int>> all_prufer_sequences(int vertex_count) {
    if (vertex_count < 2) throw std::invalid_argument("need at least 2 vertices");
    const int len = vertex_count - 2;
    std::vector<std::vector<int>> out;
    std::vector<int> seq(len, 1);
    while (true) {
        out.push_back(seq);
        int pos = len - 1;
        while (pos >= 0 && seq[pos] == vertex_count) {
            seq[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++seq[pos];
    }
    return out;
}

LabeledTree path_tree(int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < vertex_count; ++v) edges.emplace_back(v, v + 1);
    return make_tree(vertex_count, std::move(edges));
}

LabeledTree star_tree(int vertex_count, int center) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= vertex_count; ++v)
        if (v != center) edges.emplace_back(std::min(v, center), std::max(v, center));
    std::sort(edges.begin(), edges.end());
    return make_tree(vertex_count, std::move(edges));
}

LabeledTree spider_tree_7() {
    return make_tree(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}});
}

namespace {

// First and last edge labels (1-based) of the unique path between two vertices.
std::pair<int, int> path_end_edges(const LabeledTree& tree, int from, int to) {
    const int n = tree.vertex_count;
    std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (neighbor, edge label)
    for (int t = 0; t < static_cast<int>(tree.edges.size()); ++t) {
        const auto& [u, v] = tree.edges[t];
        adj[u].emplace_back(v, t + 1);
        adj[v].emplace_back(u, t + 1);
    }
    std::vector<int> parent(n + 1, 0), parent_edge(n + 1, 0);
    std::vector<int> stack{from};
    parent[from] = from;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [w, e] : adj[v])
            if (parent[w] == 0 && w != from) {
                parent[w] = v;
                parent_edge[w] = e;
                stack.push_back(w);
            }
    }
    int last = parent_edge[to];
    int first = last;
    for (int v = to; v != from; v = parent[v]) first = parent_edge[v];
    return {first, last};
}

}  // namespace

TreeIdeal tree_ideal(const LabeledTree& tree) {
    const int n = tree.vertex_count;

    // Universe: incident (vertex, edge-label) pairs, sorted lexicographically.
    std::vector<std::pair<int, int>> incidences;
    for (int t = 0; t < n - 1; ++t) {
        incidences.emplace_back(tree.edges[t].first, t + 1);
        incidences.emplace_back(tree.edges[t].second, t + 1);
    }
    std::sort(incidences.begin(), incidences.end());

    Universe universe;
    std::map<std::pair<int, int>, int> var_of;
    DepolarizationSpec spec;
    spec.base = simple_universe(n);
    for (const auto& [v, e] : incidences) {
        var_of[{v, e}] = universe.size();
        universe.names.push_back("x_{" + std::to_string(v) + "," + std::to_string(e) + "}");
        spec.base_of.push_back(v - 1);
    }

    std::vector<Monomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto [a, b] = path_end_edges(tree, i, j);
            gens.push_back(Monomial::variable(var_of.at({i, a})) * Monomial::variable(var_of.at({j, b})));
        }

    TreeIdeal out;
    out.ideal = minimalize(std::move(gens), std::move(universe));
    out.spec = std::move(spec);

    out.vertex_gens.resize(n - 1, -1);
    for (int t = 0; t < n - 1; ++t) {
        const auto& [u, v] = tree.edges[t];
        const Monomial vertex =
            Monomial::variable(var_of.at({u, t + 1})) * Monomial::variable(var_of.at({v, t + 1}));
        auto it = std::find(out.ideal.generators.begin(), out.ideal.generators.end(), vertex);
        out.vertex_gens[t] = static_cast<int>(it - out.ideal.generators.begin());
    }
    return out;
}

TreeIndexReport tree_index(const LabeledTree& tree) {
    const int n = tree.vertex_count;
    std::vector<int> vertex_degree(n + 1, 0);
    for (const auto& [u, v] : tree.edges) {
        ++vertex_degree[u];
        ++vertex_degree[v];
    }
    TreeIndexReport report;
    for (const auto& [u, v] : tree.edges)
        report.line_graph_degrees.push_back(vertex_degree[u] + vertex_degree[v] - 2);
    for (int deg : report.line_graph_degrees) {
        if (deg == 1) ++report.nu1;
        if (deg == 2) ++report.nu2;
    }
    report.index = static_cast<long long>(n - 2) * report.nu1 + report.nu2;
    return report;
}

long long predicted_tangent_dim(const LabeledTree& tree) {
    const long long n = tree.vertex_count;
    if (n < 3) throw std::invalid_argument("prediction requires at least 3 vertices");
    return (3 * n - 4) * (n - 1) + tree_index(tree).index;
}

}  // namespace poltan
