#include "arcanon/core_model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arcanon {

namespace {

std::vector<int> set_difference_sorted(const std::vector<int>& a,
                                       const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

bool subset_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

std::vector<int> complement_set(const std::vector<int>& s, int n) {
    std::vector<int> out;
    out.reserve(n - s.size());
    size_t k = 0;
    for (int v = 0; v < n; ++v) {
        if (k < s.size() && s[k] == v) ++k;
        else out.push_back(v);
    }
    return out;
}

}  // namespace

Hypergraph closed_neighborhoods(const Graph& g) {
    std::vector<Hypergraph::Edge> edges;
    for (int v = 0; v < g.size(); ++v) {
        Hypergraph::Edge e;
        e.set = g.neighbors(v);
        e.set.push_back(v);
        std::sort(e.set.begin(), e.set.end());
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_index_edges(g.names(), std::move(edges));
}

Hypergraph open_neighborhoods(const Graph& g) {
    std::vector<Hypergraph::Edge> edges;
    for (int v = 0; v < g.size(); ++v) {
        Hypergraph::Edge e;
        e.set = g.neighbors(v);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_index_edges(g.names(), std::move(edges));
}

Hypergraph complement_hypergraph(const Hypergraph& h) {
    std::vector<Hypergraph::Edge> edges;
    for (const auto& e : h.edges()) {
        Hypergraph::Edge c;
        c.set = complement_set(e.set, h.size());
        c.color = e.color;
        c.mult = e.mult;
        edges.push_back(std::move(c));
    }
    return Hypergraph::from_index_edges(h.names(), std::move(edges));
}

Hypergraph dual_hypergraph(const Hypergraph& h) {
    // Dual vertex names: one per edge entry and copy, in edge order.
    std::vector<VertexId> dual_names;
    std::vector<std::pair<int, int>> dual_vertex;  // (edge index, copy)
    for (size_t ei = 0; ei < h.edges().size(); ++ei) {
        for (Mult c = 0; c < h.edges()[ei].mult; ++c) {
            std::ostringstream os;
            os << "e" << ei << "." << c;
            dual_names.push_back(os.str());
            dual_vertex.emplace_back(static_cast<int>(ei), static_cast<int>(c));
        }
    }
    // Names are generated sorted only for small counts; from_index_edges sorts
    // anyway, so build sets against the sorted order.
    std::vector<VertexId> sorted_names = dual_names;
    std::sort(sorted_names.begin(), sorted_names.end());
    auto dual_index = [&](size_t flat) {
        auto it = std::lower_bound(sorted_names.begin(), sorted_names.end(),
                                   dual_names[flat]);
        return static_cast<int>(it - sorted_names.begin());
    };

    std::vector<Hypergraph::Edge> dual_edges;
    for (int x = 0; x < h.size(); ++x) {
        Hypergraph::Edge e;
        for (size_t flat = 0; flat < dual_vertex.size(); ++flat) {
            const auto& src = h.edges()[dual_vertex[flat].first];
            if (std::binary_search(src.set.begin(), src.set.end(), x))
                e.set.push_back(dual_index(flat));
        }
        dual_edges.push_back(std::move(e));
    }
    return Hypergraph::from_index_edges(std::move(sorted_names), std::move(dual_edges));
}

Color tightened_reserved_color(const Hypergraph& h) {
    Color mx = 0;
    for (const auto& e : h.edges()) mx = std::max(mx, e.color);
    return mx + 1;
}

Hypergraph tightened(const Hypergraph& h) {
    Color reserved = tightened_reserved_color(h);
    std::set<std::vector<int>> diffs;
    for (const auto& a : h.edges()) {
        for (const auto& b : h.edges()) {
            if (b.set.empty() || b.set == a.set) continue;
            if (subset_sorted(b.set, a.set))
                diffs.insert(set_difference_sorted(a.set, b.set));
        }
    }
    std::vector<Hypergraph::Edge> edges(h.edges().begin(), h.edges().end());
    for (const auto& d : diffs) {
        Hypergraph::Edge e;
        e.set = d;
        e.color = reserved;
        e.mult = 1;
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_index_edges(h.names(), std::move(edges));
}

QuotientResult quotient(const Hypergraph& h) {
    int n = h.size();
    // Membership row per vertex over the edge entry list.
    std::vector<std::vector<char>> row(n, std::vector<char>(h.edges().size(), 0));
    for (size_t ei = 0; ei < h.edges().size(); ++ei)
        for (int v : h.edges()[ei].set) row[v][ei] = 1;

    QuotientResult res;
    res.class_of.assign(n, -1);
    std::map<std::vector<char>, int> seen;
    for (int v = 0; v < n; ++v) {
        auto it = seen.find(row[v]);
        if (it == seen.end()) {
            int id = static_cast<int>(res.classes.size());
            seen.emplace(row[v], id);
            res.classes.push_back({v});
            res.class_of[v] = id;
        } else {
            res.classes[it->second].push_back(v);
            res.class_of[v] = it->second;
        }
    }
    for (const auto& cls : res.classes) res.class_name.push_back(h.name(cls.front()));

    std::vector<VertexId> qnames = res.class_name;
    std::sort(qnames.begin(), qnames.end());
    auto qindex = [&](int cls) {
        auto it = std::lower_bound(qnames.begin(), qnames.end(), res.class_name[cls]);
        return static_cast<int>(it - qnames.begin());
    };

    std::vector<Hypergraph::Edge> qedges;
    for (const auto& e : h.edges()) {
        Hypergraph::Edge q;
        std::set<int> members;
        for (int v : e.set) members.insert(qindex(res.class_of[v]));
        q.set.assign(members.begin(), members.end());
        q.color = e.color;
        q.mult = e.mult;
        qedges.push_back(std::move(q));
    }
    res.quotient = Hypergraph::from_index_edges(std::move(qnames), std::move(qedges));
    return res;
}

StrictComponents strict_components(const Hypergraph& h) {
    StrictComponents out;
    int n = h.size();
    int m = static_cast<int>(h.edges().size());

    std::vector<char> covered(n, 0);
    for (const auto& e : h.edges())
        for (int v : e.set) covered[v] = 1;
    out.has_isolated_vertex =
        std::find(covered.begin(), covered.end(), 0) != covered.end();

    std::vector<int> full;
    for (int v = 0; v < n; ++v) full.push_back(v);
    for (const auto& e : h.edges()) {
        if (e.set.empty()) out.has_empty_edge = true;
        if (e.set == full) out.has_full_edge = true;
    }

    auto components_under = [&](auto related) {
        std::vector<int> comp(m, -1);
        int c = 0;
        for (int s = 0; s < m; ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = c;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int a = stack.back();
                stack.pop_back();
                for (int b = 0; b < m; ++b)
                    if (comp[b] < 0 && related(a, b)) {
                        comp[b] = c;
                        stack.push_back(b);
                    }
            }
            ++c;
        }
        std::vector<std::vector<int>> groups(c);
        for (int e = 0; e < m; ++e) groups[comp[e]].push_back(e);
        return groups;
    };

    auto strict = [&](int a, int b) {
        const auto& A = h.edges()[a].set;
        const auto& B = h.edges()[b].set;
        if (!intersects_sorted(A, B)) return false;
        if (subset_sorted(A, B) || subset_sorted(B, A)) return true;
        // overlap; strict requires union != V
        std::vector<int> u;
        std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(u));
        return static_cast<int>(u.size()) != n;
    };
    auto plain = [&](int a, int b) {
        return intersects_sorted(h.edges()[a].set, h.edges()[b].set);
    };

    out.strict_components = components_under(strict);
    out.components = components_under(plain);
    out.strictly_connected = out.strict_components.size() <= 1 &&
                             !out.has_isolated_vertex && !out.has_empty_edge &&
                             !out.has_full_edge && m > 0;
    out.connected = out.components.size() <= 1 && !out.has_isolated_vertex && m > 0;
    return out;
}

HypergraphSplit split_components(const Hypergraph& h) {
    HypergraphSplit out;
    int n = h.size();
    // Union vertices through shared hyperedges.
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : h.edges()) {
        if (e.set.empty()) {
            out.has_empty_edge = true;
            continue;
        }
        for (size_t i = 1; i < e.set.size(); ++i)
            parent[find(e.set[i])] = find(e.set[0]);
    }
    std::vector<char> covered(n, 0);
    for (const auto& e : h.edges())
        for (int v : e.set) covered[v] = 1;

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        if (!covered[v]) {
            out.isolated_vertices.push_back(v);
            continue;
        }
        groups[find(v)].push_back(v);
    }
    for (auto& [root, verts] : groups) {
        HypergraphComponent comp;
        comp.vertices = verts;
        std::vector<VertexId> names;
        for (int v : verts) names.push_back(h.name(v));
        std::map<int, int> local;
        std::vector<VertexId> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < verts.size(); ++i) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), h.name(verts[i]));
            local[verts[i]] = static_cast<int>(it - sorted.begin());
        }
        std::vector<Hypergraph::Edge> edges;
        for (const auto& e : h.edges()) {
            if (e.set.empty() || find(e.set[0]) != root) continue;
            Hypergraph::Edge sub;
            sub.color = e.color;
            sub.mult = e.mult;
            for (int v : e.set) sub.set.push_back(local.at(v));
            edges.push_back(std::move(sub));
        }
        comp.sub = Hypergraph::from_index_edges(std::move(sorted), std::move(edges));
        out.components.push_back(std::move(comp));
    }
    return out;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
    IncidenceGraph out;
    out.vertex_side = h.names();
    std::set<VertexId> used(h.names().begin(), h.names().end());
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> all = h.names();
    for (size_t ei = 0; ei < h.edges().size(); ++ei) {
        for (Mult c = 0; c < h.edges()[ei].mult; ++c) {
            std::ostringstream os;
            os << "#e" << ei << "." << c;
            VertexId name = os.str();
            while (used.count(name)) name += "'";
            used.insert(name);
            out.edge_side.push_back(name);
            all.push_back(name);
            for (int v : h.edges()[ei].set) edges.emplace_back(h.name(v), name);
        }
    }
    out.graph = Graph(std::move(all), edges);
    return out;
}

namespace {

using EntrySets = std::map<std::pair<std::vector<int>, Color>, Mult>;

ValidationResult validate_generic(const Hypergraph& h, const Labeling& lab,
                                  int positions, bool arc_positions,
                                  const EntrySets& got) {
    ValidationResult res;
    if (static_cast<int>(lab.pos.size()) != h.size()) {
        res.reason = "labeling size does not match vertex count";
        return res;
    }
    std::set<int> seen;
    for (const auto& [v, p] : lab.pos) {
        if (h.index_of(v) < 0) {
            res.reason = "labeling names unknown vertex " + v;
            return res;
        }
        int lo = arc_positions ? 0 : 1;
        int hi = arc_positions ? positions - 1 : positions;
        if (p < lo || p > hi) {
            res.reason = "labeling position out of range for " + v;
            return res;
        }
        if (!seen.insert(p).second) {
            res.reason = "labeling is not injective at " + v;
            return res;
        }
    }
    // Multiset of (point set, color, mult) from the hypergraph image.
    EntrySets want;
    for (const auto& e : h.edges()) {
        std::vector<int> img;
        for (int v : e.set) img.push_back(lab.at(h.name(v)));
        std::sort(img.begin(), img.end());
        want[{img, e.color}] += e.mult;
    }
    if (want != got) {
        for (const auto& [k, v] : want) {
            auto it = got.find(k);
            if (it == got.end() || it->second != v) {
                std::ostringstream os;
                os << "hyperedge image with color " << k.second
                   << " not matched by the model";
                res.reason = os.str();
                return res;
            }
        }
        res.reason = "model contains an entry with no matching hyperedge";
        return res;
    }
    res.ok = true;
    return res;
}

}  // namespace

ValidationResult validate_model(const Hypergraph& h, const IntervalSystem& m,
                                const Labeling& lab) {
    EntrySets got;
    for (const auto& e : m.intervals) got[{e.span.points(), e.color}] += e.mult;
    return validate_generic(h, lab, m.length, false, got);
}

ValidationResult validate_model(const Hypergraph& h, const ArcSystem& m,
                                const Labeling& lab) {
    EntrySets got;
    for (const auto& e : m.arcs) got[{e.arc.points(m.circle), e.color}] += e.mult;
    return validate_generic(h, lab, m.circle, true, got);
}

namespace {

struct SetEntry {
    std::vector<int> points;
    bool whole = false;   // equals the full ground set (circle only)
    bool has_ends = false;
    int lo = 0, hi = 0;   // extreme points when defined
};

ModelClass classify_sets(const std::vector<SetEntry>& sets, bool any_duplicate) {
    ModelClass out;
    out.is_tight = true;
    out.is_proper = !any_duplicate;
    for (size_t i = 0; i < sets.size(); ++i) {
        for (size_t j = 0; j < sets.size(); ++j) {
            if (i == j) continue;
            const auto& A = sets[i];
            const auto& B = sets[j];
            if (B.points.empty()) continue;
            bool b_in_a = std::includes(A.points.begin(), A.points.end(),
                                        B.points.begin(), B.points.end());
            if (!b_in_a) continue;
            if (A.points.size() != B.points.size()) out.is_proper = false;
            if (A.points == B.points) continue;
            if (A.whole) continue;  // full-circle exemption
            if (!(A.has_ends && B.has_ends && (A.lo == B.lo || A.hi == B.hi)))
                out.is_tight = false;
        }
    }
    return out;
}

}  // namespace

ModelClass classify_model(const IntervalSystem& m) {
    std::vector<SetEntry> sets;
    bool dup = false;
    for (const auto& e : m.intervals) {
        SetEntry s;
        s.points = e.span.points();
        s.has_ends = !e.span.is_empty();
        s.lo = e.span.lo;
        s.hi = e.span.hi;
        if (e.mult > 1 && !s.points.empty()) dup = true;
        sets.push_back(std::move(s));
    }
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (!sets[i].points.empty() && sets[i].points == sets[j].points) dup = true;
    return classify_sets(sets, dup);
}

ModelClass classify_model(const ArcSystem& m) {
    std::vector<SetEntry> sets;
    bool dup = false;
    for (const auto& e : m.arcs) {
        SetEntry s;
        s.points = e.arc.points(m.circle);
        s.whole = e.arc.covers_circle(m.circle);
        s.has_ends = e.arc.is_span();
        if (e.arc.is_span()) {
            s.lo = e.arc.start;
            s.hi = e.arc.end;
        }
        if (e.mult > 1 && !s.points.empty()) dup = true;
        sets.push_back(std::move(s));
    }
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (!sets[i].points.empty() && sets[i].points == sets[j].points) dup = true;
    return classify_sets(sets, dup);
}

ModelClass classify_model(const VertexArcModel& m) {
    ArcSystem sys;
    sys.circle = m.circle;
    for (const auto& [v, a] : m.arcs) sys.arcs.push_back({a, 0, 1});
    // no normalize: duplicates must stay visible to the properness check
    return classify_model(sys);
}

ModelClass classify_model(const VertexIntervalModel& m) {
    IntervalSystem sys;
    sys.length = m.length;
    for (const auto& [v, s] : m.intervals) sys.intervals.push_back({s, 0, 1});
    return classify_model(sys);
}

Graph intersection_graph(const VertexArcModel& m) {
    std::vector<VertexId> names;
    for (const auto& [v, a] : m.arcs) names.push_back(v);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (size_t i = 0; i < m.arcs.size(); ++i) {
        auto pi = m.arcs[i].second.points(m.circle);
        for (size_t j = i + 1; j < m.arcs.size(); ++j) {
            auto pj = m.arcs[j].second.points(m.circle);
            if (intersects_sorted(pi, pj))
                edges.emplace_back(m.arcs[i].first, m.arcs[j].first);
        }
    }
    return Graph(std::move(names), edges);
}

Graph intersection_graph(const VertexIntervalModel& m) {
    std::vector<VertexId> names;
    for (const auto& [v, s] : m.intervals) names.push_back(v);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (size_t i = 0; i < m.intervals.size(); ++i)
        for (size_t j = i + 1; j < m.intervals.size(); ++j) {
            const auto& a = m.intervals[i].second;
            const auto& b = m.intervals[j].second;
            if (!a.is_empty() && !b.is_empty() &&
                std::max(a.lo, b.lo) <= std::min(a.hi, b.hi))
                edges.emplace_back(m.intervals[i].first, m.intervals[j].first);
        }
    return Graph(std::move(names), edges);
}

}  // namespace arcanon
