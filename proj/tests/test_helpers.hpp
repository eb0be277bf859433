#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arcanon/core_model.hpp"
#include "arcanon/hypergraph.hpp"

namespace testutil {

using namespace arcanon;

inline Graph path(int n) {
    std::vector<VertexId> names;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i)
        edges.emplace_back(std::to_string(i), std::to_string(i + 1));
    return Graph(names, edges);
}

inline Graph cycle(int n) {
    std::vector<VertexId> names;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        edges.emplace_back(std::to_string(i), std::to_string(i % n + 1));
    return Graph(names, edges);
}

inline Graph complete(int n) {
    std::vector<VertexId> names;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(std::to_string(i), std::to_string(j));
    return Graph(names, edges);
}

// Star K_{1,k} with center "c" and leaves "a","b","d",...
inline Graph star(int k) {
    std::vector<VertexId> names{"c"};
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string leaf = "a";
    for (int i = 0; i < k; ++i) {
        while (leaf == "c") leaf[0]++;
        names.push_back(leaf);
        edges.emplace_back("c", leaf);
        leaf[0]++;
    }
    return Graph(names, edges);
}

// Power of a cycle: vertices within circular distance d are adjacent.
inline Graph cycle_power(int n, int d) {
    std::vector<VertexId> names;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= d; ++k) {
            int j = (i + k) % n;
            if (i < j) edges.emplace_back(std::to_string(i), std::to_string(j));
            else edges.emplace_back(std::to_string(j), std::to_string(i));
        }
    return Graph(names, edges);
}

inline Hypergraph hg(std::vector<VertexId> names,
                     std::vector<std::vector<VertexId>> sets) {
    std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> edges;
    for (auto& s : sets) edges.emplace_back(std::move(s), 0, 1);
    return Hypergraph(std::move(names), edges);
}

inline std::vector<VertexId> range_names(int n) {
    std::vector<VertexId> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return names;
}

// Random renaming onto fresh names; returns the renamed structure and map.
inline std::pair<Hypergraph, std::map<VertexId, VertexId>> rename_random(
    const Hypergraph& h, std::mt19937& rng) {
    int n = h.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<VertexId, VertexId> map;
    for (int i = 0; i < n; ++i) map[h.name(i)] = "r" + std::to_string(perm[i]);
    std::vector<VertexId> names;
    for (int i = 0; i < n; ++i) names.push_back(map.at(h.name(i)));
    std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> edges;
    for (const auto& e : h.edges()) {
        std::vector<VertexId> set;
        for (int v : e.set) set.push_back(map.at(h.name(v)));
        edges.emplace_back(std::move(set), e.color, e.mult);
    }
    return {Hypergraph(std::move(names), edges), std::move(map)};
}

inline std::pair<Graph, std::map<VertexId, VertexId>> rename_random(
    const Graph& g, std::mt19937& rng) {
    int n = g.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<VertexId, VertexId> map;
    for (int i = 0; i < n; ++i) map[g.name(i)] = "r" + std::to_string(perm[i]);
    return {g.renamed(map), std::move(map)};
}

// Random hypergraph whose hyperedges are arcs of a shuffled circular order:
// guaranteed circular-arc.
inline Hypergraph random_ca_hypergraph(int n, int m, std::mt19937& rng,
                                       bool colored = false) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    auto names = range_names(n);
    std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> edges;
    std::uniform_int_distribution<int> pos(0, n - 1);
    std::uniform_int_distribution<int> len(1, n - 1);
    std::uniform_int_distribution<int> colors(0, colored ? 2 : 0);
    std::uniform_int_distribution<int> mults(1, colored ? 2 : 1);
    for (int e = 0; e < m; ++e) {
        int s = pos(rng), l = len(rng);
        std::vector<VertexId> set;
        for (int k = 0; k < l; ++k) set.push_back(names[order[(s + k) % n]]);
        edges.emplace_back(std::move(set), colors(rng), mults(rng));
    }
    return Hypergraph(names, edges);
}

// Random hypergraph whose hyperedges are intervals of a shuffled linear
// order: guaranteed interval.
inline Hypergraph random_interval_hypergraph(int n, int m, std::mt19937& rng,
                                             bool colored = false) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    auto names = range_names(n);
    std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> edges;
    std::uniform_int_distribution<int> pos(0, n - 1);
    std::uniform_int_distribution<int> colors(0, colored ? 2 : 0);
    std::uniform_int_distribution<int> mults(1, colored ? 2 : 1);
    for (int e = 0; e < m; ++e) {
        int a = pos(rng), b = pos(rng);
        if (a > b) std::swap(a, b);
        std::vector<VertexId> set;
        for (int k = a; k <= b; ++k) set.push_back(names[order[k]]);
        edges.emplace_back(std::move(set), colors(rng), mults(rng));
    }
    return Hypergraph(names, edges);
}

// Fully random hypergraph (no structure guaranteed).
inline Hypergraph random_hypergraph(int n, int m, std::mt19937& rng) {
    auto names = range_names(n);
    std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> edges;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int e = 0; e < m; ++e) {
        std::vector<VertexId> set;
        for (int v = 0; v < n; ++v)
            if (coin(rng)) set.push_back(names[v]);
        edges.emplace_back(std::move(set), 0, 1);
    }
    return Hypergraph(names, edges);
}

// Random graph with edge probability ~ p percent.
inline Graph random_graph(int n, int p_percent, std::mt19937& rng) {
    auto names = range_names(n);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::uniform_int_distribution<int> roll(0, 99);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (roll(rng) < p_percent) edges.emplace_back(names[i], names[j]);
    return Graph(names, edges);
}

// Intersection graph of strictly increasing random intervals: proper
// interval by construction.
inline Graph random_proper_interval_graph(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> gap(0, 2);
    std::vector<std::pair<int, int>> iv(n);
    int s = 0, e = 1;
    for (int i = 0; i < n; ++i) {
        s += 1 + gap(rng);
        e = std::max(e + 1 + gap(rng), s);
        iv[i] = {s, e};
    }
    auto names = range_names(n);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::max(iv[i].first, iv[j].first) <=
                std::min(iv[i].second, iv[j].second))
                edges.emplace_back(names[i], names[j]);
    return Graph(names, edges);
}

// Intersection graph of pairwise incomparable random arcs (proper circular
// arc by construction); callers filter for connectivity etc.
inline Graph random_pca_graph(int n, std::mt19937& rng) {
    int circle = 2 * n + 2;
    std::uniform_int_distribution<int> pos(0, circle - 1);
    std::uniform_int_distribution<int> len(2, circle - 2);
    std::vector<std::pair<int, int>> arcs;  // (start, length)
    int guard = 0;
    while (static_cast<int>(arcs.size()) < n && guard++ < 10000) {
        int s = pos(rng), l = len(rng);
        bool ok = true;
        for (auto [s2, l2] : arcs) {
            // containment test on the circle
            auto contains = [&](int sa, int la, int sb, int lb) {
                int rel = (sb - sa + circle) % circle;
                return rel + lb <= la;
            };
            if (contains(s, l, s2, l2) || contains(s2, l2, s, l) ||
                (s == s2 && l == l2)) {
                ok = false;
                break;
            }
        }
        if (ok) arcs.emplace_back(s, l);
    }
    auto names = range_names(static_cast<int>(arcs.size()));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            int rel = (arcs[j].first - arcs[i].first + circle) % circle;
            int rel2 = (arcs[i].first - arcs[j].first + circle) % circle;
            if (rel < arcs[i].second || rel2 < arcs[j].second)
                edges.emplace_back(names[i], names[j]);
        }
    return Graph(names, edges);
}

// Complement of a random convex bipartite graph: co-convex by construction.
// Blue side 1..k ordered naturally; every red neighborhood is an interval.
inline Graph random_coconvex_graph(int blues, int reds, std::mt19937& rng) {
    std::vector<VertexId> names;
    for (int i = 1; i <= blues; ++i) names.push_back("u" + std::to_string(i));
    for (int i = 1; i <= reds; ++i) names.push_back("w" + std::to_string(i));
    std::uniform_int_distribution<int> pos(1, blues);
    std::uniform_int_distribution<int> empty_roll(0, 9);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= reds; ++i) {
        if (empty_roll(rng) == 0) continue;  // occasional universal vertex of g
        int a = pos(rng), b = pos(rng);
        if (a > b) std::swap(a, b);
        for (int u = a; u <= b; ++u)
            edges.emplace_back("u" + std::to_string(u), "w" + std::to_string(i));
    }
    Graph h(names, edges);
    return h.complement();
}

inline std::multiset<std::string> arc_multiset(const VertexArcModel& m) {
    std::multiset<std::string> out;
    for (const auto& [v, a] : m.arcs) {
        auto k = a.sort_key();
        out.insert(std::to_string(m.circle) + "|" + std::to_string(k[0]) + ":" +
                   std::to_string(k[1]) + ":" + std::to_string(k[2]));
    }
    return out;
}

}  // namespace testutil
