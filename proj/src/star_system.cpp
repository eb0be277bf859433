#include "arcanon/star_system.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arcanon/circular_canon.hpp"
#include "arcanon/core_model.hpp"
#include "arcanon/interval_canon.hpp"

namespace arcanon {

namespace {

// A closed neighborhood hypergraph has color 0 everywhere, one hyperedge
// instance per vertex, no empty hyperedge, and no uncovered vertex.
bool plausible_neighborhood_hypergraph(const Hypergraph& h) {
    if (h.edge_count() != h.size()) return false;
    std::vector<char> covered(h.size(), 0);
    for (const auto& e : h.edges()) {
        if (e.color != 0) return false;
        if (e.set.empty()) return false;
        for (int v : e.set) covered[v] = 1;
    }
    for (char c : covered)
        if (!c) return false;
    return true;
}

bool solves(const Graph& g, const Hypergraph& h) {
    return closed_neighborhoods(g) == h;
}

// Expands a solution on the twin-free quotient back to the full vertex set:
// class members become pairwise adjacent and inherit the class adjacencies.
Graph lift_from_quotient(const Hypergraph& h, const QuotientResult& q,
                         const std::set<std::pair<int, int>>& class_edges) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    int n = h.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int ci = q.class_of[i], cj = q.class_of[j];
            bool adjacent;
            if (ci == cj) adjacent = true;
            else {
                auto key = std::minmax(ci, cj);
                adjacent = class_edges.count({key.first, key.second}) > 0;
            }
            if (adjacent) edges.emplace_back(h.name(i), h.name(j));
        }
    return Graph(h.names(), edges);
}

}  // namespace

std::optional<Graph> ssp_proper_interval(const Hypergraph& h) {
    if (h.size() == 0) {
        Graph g({}, {});
        return solves(g, h) ? std::optional<Graph>(g) : std::nullopt;
    }
    if (!plausible_neighborhood_hypergraph(h)) return std::nullopt;

    auto q = quotient(h);
    auto split = split_components(q.quotient);
    if (split.has_empty_edge || !split.isolated_vertices.empty()) return std::nullopt;

    std::set<std::pair<int, int>> class_edges;  // indices into q.quotient names
    for (const auto& comp : split.components) {
        const Hypergraph& sub = comp.sub;
        int k = sub.size();
        if (static_cast<int>(sub.edges().size()) != k) return std::nullopt;
        auto ci = canonical_interval(sub);
        if (!ci) return std::nullopt;

        // Pair the i-th vertex of the interval order with the i-th hyperedge
        // in the lexicographic interval order.
        std::vector<int> vertex_at(k);
        for (int v = 0; v < k; ++v) vertex_at[ci->labeling.at(sub.name(v)) - 1] = v;
        std::vector<std::pair<std::pair<int, int>, int>> spans;
        for (int ei = 0; ei < k; ++ei) {
            int lo = k + 1, hi = 0;
            for (int v : sub.edges()[ei].set) {
                int p = ci->labeling.at(sub.name(v));
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
            spans.push_back({{lo, hi}, ei});
        }
        std::sort(spans.begin(), spans.end());

        // The pairing must define a graph: self-membership and symmetry.
        std::vector<int> edge_of(k);  // vertex (local) -> hyperedge index
        for (int p = 0; p < k; ++p) edge_of[vertex_at[p]] = spans[p].second;
        auto member = [&](int v, int of) {
            const auto& set = sub.edges()[edge_of[of]].set;
            return std::binary_search(set.begin(), set.end(), v);
        };
        for (int v = 0; v < k; ++v)
            if (!member(v, v)) return std::nullopt;
        for (int v = 0; v < k; ++v)
            for (int u = v + 1; u < k; ++u) {
                if (member(u, v) != member(v, u)) return std::nullopt;
                if (member(u, v)) {
                    int gi = q.quotient.index_of(sub.name(v));
                    int gj = q.quotient.index_of(sub.name(u));
                    auto key = std::minmax(gi, gj);
                    class_edges.insert({key.first, key.second});
                }
            }
    }

    // Map quotient-name indices back to class indices for lifting.
    std::set<std::pair<int, int>> class_pairs;
    std::map<int, int> class_of_qindex;
    for (size_t c = 0; c < q.classes.size(); ++c)
        class_of_qindex[q.quotient.index_of(q.class_name[c])] = static_cast<int>(c);
    for (auto [a, b] : class_edges) {
        auto key = std::minmax(class_of_qindex.at(a), class_of_qindex.at(b));
        class_pairs.insert({key.first, key.second});
    }
    Graph g = lift_from_quotient(h, q, class_pairs);
    if (!solves(g, h)) return std::nullopt;
    return g;
}

std::optional<Graph> ssp_pca_noncobip(const Hypergraph& h) {
    if (h.size() == 0) return std::nullopt;
    if (!plausible_neighborhood_hypergraph(h)) return std::nullopt;

    auto split = split_components(h);
    if (split.components.size() != 1 || !split.isolated_vertices.empty() ||
        split.has_empty_edge)
        return std::nullopt;

    // Gates: the tightened hypergraph must be circular-arc and the complement
    // must not be interval (otherwise the proper interval solver owns h).
    if (!canonical_tight_arc(h)) return std::nullopt;
    if (canonical_interval(complement_hypergraph(h))) return std::nullopt;

    auto q = quotient(h);
    const Hypergraph& sub = q.quotient;
    int k = sub.size();
    if (static_cast<int>(sub.edges().size()) != k) return std::nullopt;
    auto ca = canonical_arc(sub);
    if (!ca) return std::nullopt;

    std::vector<int> vertex_at(k);
    for (int v = 0; v < k; ++v) vertex_at[ca->labeling.at(sub.name(v))] = v;

    // Hyperedges in lexicographic arc order: by start position, then length.
    struct ArcOf {
        int start, len, edge;
    };
    std::vector<ArcOf> arcs;
    for (int ei = 0; ei < k; ++ei) {
        const auto& set = sub.edges()[ei].set;
        if (static_cast<int>(set.size()) == k) return std::nullopt;  // universal
        std::vector<char> in(k, 0);
        for (int v : set) in[ca->labeling.at(sub.name(v))] = 1;
        int start = -1;
        for (int p = 0; p < k; ++p)
            if (in[p] && !in[(p + k - 1) % k]) {
                if (start >= 0) return std::nullopt;
                start = p;
            }
        if (start < 0) return std::nullopt;
        arcs.push_back({start, static_cast<int>(set.size()), ei});
    }
    std::sort(arcs.begin(), arcs.end(), [](const ArcOf& a, const ArcOf& b) {
        return std::tie(a.start, a.len) < std::tie(b.start, b.len);
    });

    for (int shift = 0; shift < k; ++shift) {
        std::vector<int> edge_of(k);
        for (int p = 0; p < k; ++p)
            edge_of[vertex_at[p]] = arcs[(p + shift) % k].edge;
        auto member = [&](int v, int of) {
            const auto& set = sub.edges()[edge_of[of]].set;
            return std::binary_search(set.begin(), set.end(), v);
        };
        bool ok = true;
        for (int v = 0; v < k && ok; ++v)
            if (!member(v, v)) ok = false;
        for (int v = 0; v < k && ok; ++v)
            for (int u = v + 1; u < k && ok; ++u)
                if (member(u, v) != member(v, u)) ok = false;
        if (!ok) continue;

        std::set<std::pair<int, int>> class_pairs;
        for (int v = 0; v < k; ++v)
            for (int u = v + 1; u < k; ++u)
                if (member(u, v)) {
                    // quotient vertex index == class index via name lookup
                    int ci = -1, cj = -1;
                    for (size_t c = 0; c < q.classes.size(); ++c) {
                        if (q.class_name[c] == sub.name(v)) ci = static_cast<int>(c);
                        if (q.class_name[c] == sub.name(u)) cj = static_cast<int>(c);
                    }
                    auto key = std::minmax(ci, cj);
                    class_pairs.insert({key.first, key.second});
                }
        Graph g = lift_from_quotient(h, q, class_pairs);
        if (solves(g, h)) return g;
    }
    return std::nullopt;
}

namespace {

struct CoconvexPairing {
    int u = -1;  // component used as the interval side
    int w = -1;  // component isomorphic to its dual
};

// Searches for a perfect matching of the components under the feasibility
// relation, returning all matchings lazily through a callback.
bool match_components(int idx, std::vector<int>& partner,
                      const std::vector<std::vector<char>>& feasible,
                      const std::function<bool(const std::vector<int>&)>& sink) {
    int q = static_cast<int>(partner.size());
    while (idx < q && partner[idx] >= 0) ++idx;
    if (idx >= q) return sink(partner);
    for (int j = 0; j < q; ++j) {
        if (j == idx || partner[j] >= 0) continue;
        if (!feasible[idx][j] && !feasible[j][idx]) continue;
        partner[idx] = j;
        partner[j] = idx;
        if (match_components(idx + 1, partner, feasible, sink)) return true;
        partner[idx] = partner[j] = -1;
    }
    return false;
}

}  // namespace

std::optional<Graph> ssp_coconvex(const Hypergraph& h) {
    if (h.size() == 0) return ssp_proper_interval(h);
    if (!plausible_neighborhood_hypergraph(h)) return std::nullopt;
    int n = h.size();

    // Universal vertices lie in every hyperedge; strip and restore later.
    std::vector<char> universal(n, 1);
    for (const auto& e : h.edges())
        for (int v = 0; v < n; ++v)
            if (!std::binary_search(e.set.begin(), e.set.end(), v)) universal[v] = 0;
    std::vector<VertexId> kept, stripped;
    for (int v = 0; v < n; ++v)
        (universal[v] ? stripped : kept).push_back(h.name(v));

    // Universal vertices return adjacent to everything.
    auto restore = [&](const Graph& core) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool adj;
                if (universal[i] || universal[j]) adj = true;
                else {
                    int a = core.index_of(h.name(i));
                    int b = core.index_of(h.name(j));
                    adj = core.adjacent(a, b);
                }
                if (adj) edges.emplace_back(h.name(i), h.name(j));
            }
        return Graph(h.names(), edges);
    };

    if (kept.empty()) {
        Graph g = restore(Graph({}, {}));
        if (solves(g, h)) return g;
        return std::nullopt;
    }

    // Reduced hypergraph on the non-universal vertices. Each universal vertex
    // contributes the full-set hyperedge; one instance per stripped vertex
    // must go with it.
    std::vector<int> fullset(n);
    for (int v = 0; v < n; ++v) fullset[v] = v;
    Mult to_drop = static_cast<Mult>(stripped.size());
    std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> redges;
    for (const auto& e : h.edges()) {
        Mult mult = e.mult;
        if (e.set == fullset) {
            Mult used = std::min(mult, to_drop);
            mult -= used;
            to_drop -= used;
            if (mult == 0) continue;
        }
        std::vector<VertexId> set;
        for (int v : e.set)
            if (!universal[v]) set.push_back(h.name(v));
        redges.emplace_back(std::move(set), e.color, mult);
    }
    if (to_drop > 0) return std::nullopt;  // a universal vertex lacks its hyperedge
    Hypergraph hr(kept, redges);
    Hypergraph k_struct = complement_hypergraph(hr);

    auto split = split_components(k_struct);
    if (split.has_empty_edge || !split.isolated_vertices.empty()) return std::nullopt;
    int qn = static_cast<int>(split.components.size());
    if (qn == 0 || qn % 2 != 0) return std::nullopt;

    // Duality data per component.
    struct CompData {
        bool interval = false;
        std::optional<DualCanonResult> dual_canon;  // of the component itself
        Hypergraph dual;                            // dual hypergraph
        std::optional<DualCanonResult> dual_of_dual_canon;
    };
    std::vector<CompData> data(qn);
    for (int i = 0; i < qn; ++i) {
        const auto& sub = split.components[i].sub;
        data[i].interval = canonical_interval(sub).has_value();
        data[i].dual = dual_hypergraph(sub);
        data[i].dual_canon = canonical_labeling_dual_interval(sub);
        data[i].dual_of_dual_canon = canonical_labeling_dual_interval(data[i].dual);
    }

    // feasible[a][b]: component a serves as the interval side, b matches its
    // dual (checked through the dual-class canonical forms).
    std::vector<std::vector<char>> feasible(qn, std::vector<char>(qn, 0));
    for (int a = 0; a < qn; ++a) {
        if (!data[a].interval || !data[a].dual_of_dual_canon) continue;
        for (int b = 0; b < qn; ++b) {
            if (a == b || !data[b].dual_canon) continue;
            if (data[a].dual_of_dual_canon->canonical_form ==
                data[b].dual_canon->canonical_form)
                feasible[a][b] = 1;
        }
    }

    std::optional<Graph> answer;
    std::vector<int> partner(qn, -1);
    std::function<bool(const std::vector<int>&)> attempt =
        [&](const std::vector<int>& match) {
            // Build the candidate complement (bipartite) on V(hr) directly.
            std::vector<std::pair<VertexId, VertexId>> bip_edges;
            std::vector<char> used(qn, 0);
            for (int a = 0; a < qn; ++a) {
                if (used[a]) continue;
                int b = match[a];
                used[a] = used[b] = 1;
                int ua = feasible[a][b] ? a : b;
                int wb = feasible[a][b] ? b : a;
                const auto& usub = split.components[ua].sub;
                const auto& wsub = split.components[wb].sub;
                // psi: dual(usub) -> wsub via the dual-class canonical labels.
                const auto& dca = *data[ua].dual_of_dual_canon;
                const auto& dcb = *data[wb].dual_canon;
                std::map<int, VertexId> at_pos;
                for (const auto& [v, p] : dcb.labeling.pos) at_pos[p] = v;
                // Dual vertex names are "e<i>.<copy>" per usub edge entry.
                for (size_t ei = 0; ei < usub.edges().size(); ++ei) {
                    const auto& e = usub.edges()[ei];
                    for (Mult c = 0; c < e.mult; ++c) {
                        std::ostringstream os;
                        os << "e" << ei << "." << c;
                        auto it = dca.labeling.pos.find(os.str());
                        if (it == dca.labeling.pos.end())
                            throw std::logic_error("dual vertex missing from labeling");
                        const VertexId& red = at_pos.at(it->second);
                        for (int v : e.set)
                            bip_edges.emplace_back(usub.name(v), red);
                        (void)wsub;
                    }
                }
            }
            Graph bip(kept, bip_edges);
            Graph g = restore(bip.complement());
            if (solves(g, h)) {
                answer = std::move(g);
                return true;
            }
            return false;
        };
    match_components(0, partner, feasible, attempt);
    return answer;
}

std::optional<Graph> ssp_ca(const Hypergraph& h) {
    if (auto g = ssp_proper_interval(h)) return g;
    if (auto g = ssp_pca_noncobip(h)) return g;
    if (auto g = ssp_coconvex(h)) return g;
    return std::nullopt;
}

}  // namespace arcanon
