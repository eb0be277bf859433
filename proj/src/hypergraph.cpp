#include "arcanon/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arcanon {

namespace {

std::vector<VertexId> sorted_unique_names(std::vector<VertexId> names) {
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
        throw std::invalid_argument("duplicate vertex name");
    return names;
}

}  // namespace

Hypergraph::Hypergraph(
    std::vector<VertexId> names,
    const std::vector<std::tuple<std::vector<VertexId>, Color, Mult>>& edges) {
    names_ = sorted_unique_names(std::move(names));
    std::vector<Edge> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [members, color, mult] : edges) {
        Edge e;
        e.color = color;
        e.mult = mult;
        for (const auto& v : members) {
            int i = index_of(v);
            if (i < 0) throw std::invalid_argument("hyperedge member not a vertex: " + v);
            e.set.push_back(i);
        }
        std::sort(e.set.begin(), e.set.end());
        e.set.erase(std::unique(e.set.begin(), e.set.end()), e.set.end());
        idx_edges.push_back(std::move(e));
    }
    *this = from_index_edges(std::move(names_), std::move(idx_edges));
}

Hypergraph Hypergraph::from_index_edges(std::vector<VertexId> names,
                                        std::vector<Edge> edges) {
    Hypergraph h;
    h.names_ = sorted_unique_names(std::move(names));
    int n = h.size();
    for (auto& e : edges) {
        if (e.mult <= 0) throw std::invalid_argument("multiplicity must be positive");
        std::sort(e.set.begin(), e.set.end());
        e.set.erase(std::unique(e.set.begin(), e.set.end()), e.set.end());
        if (!e.set.empty() && (e.set.front() < 0 || e.set.back() >= n))
            throw std::invalid_argument("hyperedge member out of range");
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.set, a.color) < std::tie(b.set, b.color);
    });
    for (auto& e : edges) {
        if (!h.edges_.empty() && h.edges_.back().set == e.set &&
            h.edges_.back().color == e.color) {
            h.edges_.back().mult += e.mult;
        } else {
            h.edges_.push_back(std::move(e));
        }
    }
    return h;
}

int Hypergraph::index_of(const VertexId& v) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), v);
    if (it == names_.end() || *it != v) return -1;
    return static_cast<int>(it - names_.begin());
}

Mult Hypergraph::edge_count() const {
    Mult total = 0;
    for (const auto& e : edges_) total += e.mult;
    return total;
}

std::vector<VertexId> Hypergraph::edge_names(const Edge& e) const {
    std::vector<VertexId> out;
    out.reserve(e.set.size());
    for (int i : e.set) out.push_back(names_[i]);
    return out;
}

bool Hypergraph::has_edge_set(const std::vector<int>& set) const {
    for (const auto& e : edges_)
        if (e.set == set) return true;
    return false;
}

Graph::Graph(std::vector<VertexId> names,
             const std::vector<std::pair<VertexId, VertexId>>& edges) {
    names_ = sorted_unique_names(std::move(names));
    int n = size();
    adj_.assign(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : edges) {
        int i = index_of(a), j = index_of(b);
        if (i < 0 || j < 0) throw std::invalid_argument("edge endpoint not a vertex");
        if (i == j) throw std::invalid_argument("loops are not allowed");
        adj_[i][j] = adj_[j][i] = 1;
    }
}

int Graph::index_of(const VertexId& v) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), v);
    if (it == names_.end() || *it != v) return -1;
    return static_cast<int>(it - names_.begin());
}

std::vector<int> Graph::neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (adj_[i][j]) out.push_back(j);
    return out;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (adj_[i][j]) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_name_list() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (auto [i, j] : edge_list()) out.emplace_back(names_[i], names_[j]);
    return out;
}

long long Graph::num_edges() const {
    return static_cast<long long>(edge_list().size());
}

Graph Graph::complement() const {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (!adj_[i][j]) edges.emplace_back(names_[i], names_[j]);
    return Graph(names_, edges);
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<VertexId> names;
    for (int i : vertices) names.push_back(names_[i]);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (adj_[vertices[a]][vertices[b]])
                edges.emplace_back(names_[vertices[a]], names_[vertices[b]]);
    return Graph(std::move(names), edges);
}

Graph Graph::renamed(const std::map<VertexId, VertexId>& map) const {
    std::vector<VertexId> names;
    for (const auto& v : names_) names.push_back(map.at(v));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : edge_name_list()) edges.emplace_back(map.at(a), map.at(b));
    return Graph(std::move(names), edges);
}

std::vector<std::vector<int>> Graph::components() const {
    int n = size();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u)
                if (adj_[v][u] && comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
        ++c;
    }
    std::vector<std::vector<int>> out(c);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

std::optional<std::vector<int>> Graph::two_coloring() const {
    int n = size();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (!adj_[v][u]) continue;
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::string Graph::adjacency_bytes() const {
    std::ostringstream os;
    os << "G" << size() << ";";
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) os << (adj_[i][j] ? '1' : '0');
    return os.str();
}

}  // namespace arcanon
