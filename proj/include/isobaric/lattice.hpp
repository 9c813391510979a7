#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isobaric/strings.hpp"

namespace isobaric {

struct EdgeOrder {
    bool operator()(const std::pair<ExponentVector, ExponentVector>& a,
                    const std::pair<ExponentVector, ExponentVector>& b) const noexcept {
        TermOrder lt;
        if (a.first != b.first) return lt(a.first, b.first);
        return lt(a.second, b.second);
    }
};

/// Node/edge set of a differential lattice. Nodes are the nonzero exponent
/// vectors componentwise dominated by some root; an edge joins beta to
/// beta - e_i (a single decrement, one depth level apart). Stored edges put
/// the deeper node first.
struct LatticeGraph {
    std::set<ExponentVector, TermOrder> nodes;
    std::set<std::pair<ExponentVector, ExponentVector>, EdgeOrder> edges;

    void merge(const LatticeGraph& other) {
        nodes.insert(other.nodes.begin(), other.nodes.end());
        edges.insert(other.edges.begin(), other.edges.end());
    }
};

/// Differential lattice of a single monomial: the closure of the root under
/// single-entry decrements, excluding the zero vector. Depths run from the
/// root's exponent sum down to 1, and the node count is prod(alpha_i + 1) - 1.
struct DiffLattice {
    ExponentVector root;
    LatticeGraph graph;
};

inline DiffLattice build_lattice(const ExponentVector& alpha) {
    if (alpha.is_zero())
        throw std::invalid_argument("build_lattice: root must be a nonzero monomial");
    DiffLattice lat{alpha, {}};
    int k = alpha.size();
    std::vector<int> beta(k, 0);
    for (;;) {
        ExponentVector node{beta};
        if (!node.is_zero()) lat.graph.nodes.insert(node);
        int i = 0;
        while (i < k && beta[i] == alpha[i]) beta[i++] = 0;
        if (i == k) break;
        ++beta[i];
    }
    for (const auto& node : lat.graph.nodes)
        for (int j = 1; j <= k; ++j) {
            if (node[j - 1] == 0) continue;
            ExponentVector child = node.decremented(j);
            if (!child.is_zero()) lat.graph.edges.emplace(node, child);
        }
    return lat;
}

/// Union of the lattices of all string elements ("the lattice of the string").
inline LatticeGraph string_lattice_union(const StringFamily& fam) {
    LatticeGraph g;
    for (const auto& e : fam.elements) g.merge(build_lattice(e).graph);
    return g;
}

/// Nodes where lattices of consecutive string elements first meet: for each
/// adjacent pair, the common nodes of maximal depth. Deduplicated, canonical
/// order. Pairs whose lattices are disjoint contribute nothing (possible only
/// at degree 2, where the candidate meet is the excluded zero vector).
inline std::vector<ExponentVector> intersection_nodes(const StringFamily& fam) {
    if (fam.elements.size() < 2)
        throw std::invalid_argument("intersection_nodes: string must have at least two elements");
    std::set<ExponentVector, TermOrder> found;
    for (std::size_t i = 0; i + 1 < fam.elements.size(); ++i) {
        auto a = build_lattice(fam.elements[i]).graph.nodes;
        auto b = build_lattice(fam.elements[i + 1]).graph.nodes;
        std::vector<ExponentVector> common;
        for (const auto& n : a)
            if (b.count(n)) common.push_back(n);
        if (common.empty()) continue;
        int max_depth = 0;
        for (const auto& n : common) max_depth = std::max(max_depth, n.depth());
        for (const auto& n : common)
            if (n.depth() == max_depth) found.insert(n);
    }
    return {found.begin(), found.end()};
}

/// Graphviz rendering with one rank per depth level.
inline std::string to_dot(const LatticeGraph& g) {
    std::string out = "graph lattice {\n  rankdir=TB;\n  node [shape=plaintext];\n";
    int max_depth = 0;
    for (const auto& n : g.nodes) max_depth = std::max(max_depth, n.depth());
    for (int d = max_depth; d >= 1; --d) {
        std::string rank;
        for (const auto& n : g.nodes)
            if (n.depth() == d) rank += " \"" + n.to_string() + "\";";
        if (!rank.empty()) out += "  { rank=same;" + rank + " }\n";
    }
    for (const auto& [a, b] : g.edges)
        out += "  \"" + a.to_string() + "\" -- \"" + b.to_string() + "\";\n";
    out += "}\n";
    return out;
}

inline std::string to_dot(const DiffLattice& lat) { return to_dot(lat.graph); }

}  // namespace isobaric
