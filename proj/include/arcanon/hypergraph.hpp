#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "arcanon/types.hpp"

namespace arcanon {

// Edge-colored hypergraph with hyperedge multiplicities. Vertices are named;
// internally hyperedges are sorted index sets over the sorted name list.
// Invariants: names sorted and unique; every edge set sorted; entries sorted
// by (set, color); entries with equal set and color merged by adding
// multiplicities; all multiplicities >= 1. Values are immutable after
// construction.
class Hypergraph {
public:
    struct Edge {
        std::vector<int> set;  // sorted vertex indices
        Color color = 0;
        Mult mult = 1;
        bool operator==(const Edge&) const = default;
    };

    Hypergraph() = default;
    // Throws std::invalid_argument on duplicate names, unknown edge members,
    // or non-positive multiplicities.
    Hypergraph(std::vector<VertexId> names,
               const std::vector<std::tuple<std::vector<VertexId>, Color, Mult>>& edges);
    static Hypergraph from_index_edges(std::vector<VertexId> names,
                                       std::vector<Edge> edges);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<VertexId>& names() const { return names_; }
    const VertexId& name(int i) const { return names_[i]; }
    int index_of(const VertexId& v) const;  // -1 if absent
    const std::vector<Edge>& edges() const { return edges_; }

    // Total multiplicity over all entries.
    Mult edge_count() const;
    std::vector<VertexId> edge_names(const Edge& e) const;
    bool has_edge_set(const std::vector<int>& set) const;  // any color

    bool operator==(const Hypergraph&) const = default;

private:
    std::vector<VertexId> names_;
    std::vector<Edge> edges_;
};

// Simple undirected graph over named vertices.
class Graph {
public:
    Graph() = default;
    // Throws std::invalid_argument on duplicates, loops, or unknown endpoints.
    Graph(std::vector<VertexId> names,
          const std::vector<std::pair<VertexId, VertexId>>& edges);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<VertexId>& names() const { return names_; }
    const VertexId& name(int i) const { return names_[i]; }
    int index_of(const VertexId& v) const;
    bool adjacent(int i, int j) const { return adj_[i][j]; }
    std::vector<int> neighbors(int i) const;

    // Edges as sorted index pairs (i<j), lexicographically sorted.
    std::vector<std::pair<int, int>> edge_list() const;
    std::vector<std::pair<VertexId, VertexId>> edge_name_list() const;
    long long num_edges() const;

    Graph complement() const;
    Graph induced(const std::vector<int>& vertices) const;
    // Relabels through the given bijection on names.
    Graph renamed(const std::map<VertexId, VertexId>& map) const;

    std::vector<std::vector<int>> components() const;  // sorted vertex groups
    bool is_connected() const;
    // Global proper 2-coloring (0/1 per vertex; the smallest vertex of each
    // component gets color 0), or nullopt if not bipartite.
    std::optional<std::vector<int>> two_coloring() const;

    // Row-major 0/1 adjacency bytes prefixed by "G<n>;" under the current
    // vertex order.
    std::string adjacency_bytes() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexId> names_;
    std::vector<std::vector<char>> adj_;
};

}  // namespace arcanon
