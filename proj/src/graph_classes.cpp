#include "arcanon/graph_classes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "arcanon/circular_canon.hpp"
#include "arcanon/core_model.hpp"
#include "arcanon/interval_canon.hpp"

namespace arcanon {

std::string to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::ProperInterval: return "ProperInterval";
        case ClassTag::Interval: return "Interval";
        case ClassTag::PCA: return "PCA";
        case ClassTag::TCA: return "TCA";
        case ClassTag::ConvexBipartite: return "ConvexBipartite";
        case ClassTag::CircularConvexBipartite: return "CircularConvexBipartite";
        case ClassTag::Biconvex: return "Biconvex";
        case ClassTag::CoConvex: return "CoConvex";
        case ClassTag::CoBipartite: return "CoBipartite";
        case ClassTag::None: return "None";
    }
    return "None";
}

std::optional<ClassTag> class_tag_from_string(const std::string& s) {
    for (ClassTag t : {ClassTag::ProperInterval, ClassTag::Interval, ClassTag::PCA,
                       ClassTag::TCA, ClassTag::ConvexBipartite,
                       ClassTag::CircularConvexBipartite, ClassTag::Biconvex,
                       ClassTag::CoConvex, ClassTag::CoBipartite, ClassTag::None})
        if (to_string(t) == s) return t;
    return std::nullopt;
}

namespace {

std::string padded_name(int value, int width) {
    std::string s = std::to_string(value);
    return std::string(width - static_cast<int>(s.size()), '0') + s;
}

int name_width(int n) { return static_cast<int>(std::to_string(n + 1).size()); }

// Relabels g through the labeling using zero-padded numeric names, so the
// lexicographic vertex order of the result equals the position order.
Graph relabel(const Graph& g, const Labeling& lab) {
    int w = name_width(g.size());
    std::map<VertexId, VertexId> map;
    for (const auto& [v, p] : lab.pos) map[v] = padded_name(p, w);
    return g.renamed(map);
}

// Hypergraph on the blue side whose hyperedges are the red neighborhoods.
Hypergraph side_hypergraph(const Graph& g, const std::vector<int>& blue,
                           const std::vector<int>& red) {
    std::vector<VertexId> names;
    for (int v : blue) names.push_back(g.name(v));
    std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> edges;
    for (int r : red) {
        std::vector<VertexId> set;
        for (int b : blue)
            if (g.adjacent(r, b)) set.push_back(g.name(b));
        edges.emplace_back(std::move(set), 0, 1);
    }
    return Hypergraph(std::move(names), edges);
}

struct BipComponent {
    std::vector<int> side[2];
};

// Component list with 2-colored sides, or nullopt when not bipartite.
std::optional<std::vector<BipComponent>> bipartite_components(const Graph& g) {
    auto col = g.two_coloring();
    if (!col) return std::nullopt;
    std::vector<BipComponent> out;
    for (const auto& comp : g.components()) {
        BipComponent bc;
        for (int v : comp) bc.side[(*col)[v]].push_back(v);
        out.push_back(std::move(bc));
    }
    return out;
}

bool side_is_interval(const Graph& g, const std::vector<int>& blue,
                      const std::vector<int>& red) {
    return canonical_interval(side_hypergraph(g, blue, red)).has_value();
}

bool side_is_ca(const Graph& g, const std::vector<int>& blue,
                const std::vector<int>& red) {
    if (blue.empty()) return true;
    return canonical_arc(side_hypergraph(g, blue, red)).has_value();
}

// Interval graphs have at most n maximal cliques (they are chordal); the
// clique-vs-vertex incidence must have the consecutive-ones property.
bool is_interval_graph(const Graph& g) {
    int n = g.size();
    if (n == 0) return true;
    std::vector<std::vector<int>> cliques;
    bool aborted = false;

    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
        [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
            if (aborted) return;
            if (p.empty() && x.empty()) {
                cliques.push_back(r);
                if (static_cast<int>(cliques.size()) > n) aborted = true;
                return;
            }
            int pivot = -1, best = -1;
            for (const auto& pool : {p, x})
                for (int u : pool) {
                    int cnt = 0;
                    for (int v : p)
                        if (g.adjacent(u, v)) ++cnt;
                    if (cnt > best) {
                        best = cnt;
                        pivot = u;
                    }
                }
            std::vector<int> cand;
            for (int v : p)
                if (!g.adjacent(pivot, v)) cand.push_back(v);
            for (int v : cand) {
                std::vector<int> p2, x2;
                for (int u : p)
                    if (g.adjacent(v, u)) p2.push_back(u);
                for (int u : x)
                    if (g.adjacent(v, u)) x2.push_back(u);
                r.push_back(v);
                bk(r, std::move(p2), std::move(x2));
                r.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
                if (aborted) return;
            }
        };
    std::vector<int> r, p(n), x;
    for (int v = 0; v < n; ++v) p[v] = v;
    bk(r, std::move(p), std::move(x));
    if (aborted) return false;

    int w = name_width(static_cast<int>(cliques.size()));
    std::vector<VertexId> names;
    for (size_t i = 0; i < cliques.size(); ++i)
        names.push_back(padded_name(static_cast<int>(i) + 1, w));
    std::vector<std::tuple<std::vector<VertexId>, Color, Mult>> edges;
    for (int v = 0; v < n; ++v) {
        std::vector<VertexId> set;
        for (size_t i = 0; i < cliques.size(); ++i)
            if (std::find(cliques[i].begin(), cliques[i].end(), v) != cliques[i].end())
                set.push_back(names[i]);
        edges.emplace_back(std::move(set), 0, 1);
    }
    return canonical_interval(Hypergraph(std::move(names), edges)).has_value();
}

bool coconvex_member(const Graph& g) {
    Graph comp = g.complement();
    auto comps = bipartite_components(comp);
    if (!comps) return false;
    for (const auto& bc : *comps) {
        if (!side_is_interval(comp, bc.side[0], bc.side[1]) &&
            !side_is_interval(comp, bc.side[1], bc.side[0]))
            return false;
    }
    return true;
}

GraphCanonResult trivial_result() {
    GraphCanonResult res;
    res.canonical_form = "G0;";
    return res;
}

}  // namespace

std::set<ClassTag> recognize(const Graph& g) {
    std::set<ClassTag> tags;
    int n = g.size();
    if (n == 0) {
        return {ClassTag::ProperInterval, ClassTag::Interval, ClassTag::PCA,
                ClassTag::TCA, ClassTag::ConvexBipartite,
                ClassTag::CircularConvexBipartite, ClassTag::Biconvex,
                ClassTag::CoConvex, ClassTag::CoBipartite};
    }
    auto ng = closed_neighborhoods(g);
    if (canonical_interval(ng)) tags.insert(ClassTag::ProperInterval);
    if (canonical_arc(ng)) tags.insert(ClassTag::TCA);
    if (canonical_tight_arc(ng)) tags.insert(ClassTag::PCA);
    if (is_interval_graph(g)) tags.insert(ClassTag::Interval);
    if (g.complement().two_coloring()) tags.insert(ClassTag::CoBipartite);

    if (auto comps = bipartite_components(g)) {
        bool convex = true, biconvex = true;
        for (const auto& bc : *comps) {
            bool i0 = side_is_interval(g, bc.side[0], bc.side[1]);
            bool i1 = side_is_interval(g, bc.side[1], bc.side[0]);
            convex = convex && (i0 || i1);
            biconvex = biconvex && i0 && i1;
        }
        if (convex) {
            tags.insert(ClassTag::ConvexBipartite);
            tags.insert(ClassTag::CircularConvexBipartite);
        }
        if (biconvex) tags.insert(ClassTag::Biconvex);
        if (!convex && g.is_connected()) {
            const auto& bc = (*comps)[0];
            if (side_is_ca(g, bc.side[0], bc.side[1]) ||
                side_is_ca(g, bc.side[1], bc.side[0]))
                tags.insert(ClassTag::CircularConvexBipartite);
        }
    }
    if (coconvex_member(g)) tags.insert(ClassTag::CoConvex);
    if (tags.empty()) tags.insert(ClassTag::None);
    return tags;
}

std::optional<GraphCanonResult> canonical_label_proper_interval(const Graph& g) {
    if (g.size() == 0) return trivial_result();
    struct CompRes {
        std::string form;
        Labeling lab;  // positions 1..k within the component
        int size;
    };
    std::vector<CompRes> parts;
    for (const auto& comp : g.components()) {
        Graph sub = g.induced(comp);
        auto ci = canonical_interval(closed_neighborhoods(sub));
        if (!ci) return std::nullopt;
        int k = sub.size();
        Labeling l1 = ci->labeling;
        Labeling l2;
        for (const auto& [v, p] : l1.pos) l2.pos[v] = k + 1 - p;
        std::string f1 = relabel(sub, l1).adjacency_bytes();
        std::string f2 = relabel(sub, l2).adjacency_bytes();
        if (f2 < f1) parts.push_back({std::move(f2), std::move(l2), k});
        else parts.push_back({std::move(f1), std::move(l1), k});
    }
    std::stable_sort(parts.begin(), parts.end(),
                     [](const CompRes& a, const CompRes& b) { return a.form < b.form; });
    GraphCanonResult res;
    int offset = 0;
    for (const auto& part : parts) {
        for (const auto& [v, p] : part.lab.pos) res.labeling.pos[v] = offset + p;
        offset += part.size;
    }
    res.canonical_form = relabel(g, res.labeling).adjacency_bytes();
    return res;
}

std::optional<GraphCanonResult> canonical_label_pca_noncobip(const Graph& g) {
    int n = g.size();
    if (n == 0 || !g.is_connected()) return std::nullopt;
    if (g.complement().two_coloring()) return std::nullopt;
    auto ca = canonical_arc(closed_neighborhoods(g));
    if (!ca) return std::nullopt;

    std::optional<std::string> best_form;
    Labeling best_lab;
    for (int refl = 0; refl < 2; ++refl) {
        for (int s = 0; s < n; ++s) {
            Labeling lab;
            for (const auto& [v, p] : ca->labeling.pos) {
                int q = refl ? (n - p) % n : p;
                lab.pos[v] = (q + s) % n;
            }
            std::string form = relabel(g, lab).adjacency_bytes();
            if (!best_form || form < *best_form) {
                best_form = std::move(form);
                best_lab = std::move(lab);
            }
        }
    }
    GraphCanonResult res;
    res.labeling = std::move(best_lab);
    res.canonical_form = std::move(*best_form);
    return res;
}

namespace {

// Connected circular convex bigraph canonization; tries both orientations.
std::optional<std::pair<std::string, Labeling>> circ_convex_connected(
    const Graph& g, const std::vector<int>& coloring,
    const std::vector<int>& vertices) {
    int n = static_cast<int>(vertices.size());
    Graph sub = g.induced(vertices);
    if (n == 1) {
        Labeling lab;
        lab.pos[sub.name(0)] = 1;
        return std::make_pair(relabel(sub, lab).adjacency_bytes(), lab);
    }
    std::vector<int> sides[2];
    for (int v : vertices) sides[coloring[v]].push_back(v);
    // Re-index into the subgraph.
    std::vector<int> sub_side[2];
    for (int c = 0; c < 2; ++c)
        for (int v : sides[c]) sub_side[c].push_back(sub.index_of(g.name(v)));

    std::optional<std::pair<std::string, Labeling>> best;
    for (int o = 0; o < 2; ++o) {
        const auto& blue = sub_side[o];
        const auto& red = sub_side[1 - o];
        if (blue.empty()) continue;
        auto ca = canonical_arc(side_hypergraph(sub, blue, red));
        if (!ca) continue;
        int nb = static_cast<int>(blue.size());

        // Model entries in serialization order carry the red clone ranks.
        std::map<std::vector<int>, std::pair<int, Mult>> entry_of;  // points->(base,mult)
        int base = 0;
        for (const auto& e : ca->model.arcs) {
            entry_of[e.arc.points(ca->model.circle)] = {base, e.mult};
            base += static_cast<int>(e.mult);
        }

        Labeling lab;
        for (int b : blue) lab.pos[sub.name(b)] = 1 + ca->labeling.at(sub.name(b));
        // Fraternal reds (equal neighborhoods) get clone indices by name order.
        std::map<std::vector<int>, int> used;
        for (int r : red) {
            std::vector<int> img;
            for (int b : blue)
                if (sub.adjacent(r, b)) img.push_back(ca->labeling.at(sub.name(b)));
            std::sort(img.begin(), img.end());
            auto it = entry_of.find(img);
            if (it == entry_of.end())
                throw std::logic_error("red neighborhood missing from arc model");
            lab.pos[sub.name(r)] = 1 + nb + it->second.first + used[img]++;
        }
        std::string form = relabel(sub, lab).adjacency_bytes();
        if (!best || form < best->first) best = std::make_pair(std::move(form), lab);
    }
    return best;
}

}  // namespace

std::optional<GraphCanonResult> canonical_label_circular_convex(const Graph& g) {
    if (g.size() == 0) return trivial_result();
    auto col = g.two_coloring();
    if (!col) return std::nullopt;

    // Two components cannot share one circle, so disconnected members of the
    // class are plain convex: every component must have an interval side.
    auto components = g.components();
    if (components.size() > 1) {
        for (const auto& comp : components) {
            Graph sub = g.induced(comp);
            auto sides = bipartite_components(sub);
            if (!sides) return std::nullopt;
            const auto& bc = (*sides)[0];
            if (!side_is_interval(sub, bc.side[0], bc.side[1]) &&
                !side_is_interval(sub, bc.side[1], bc.side[0]))
                return std::nullopt;
        }
    }

    struct CompRes {
        std::string form;
        Labeling lab;
        int size;
    };
    std::vector<CompRes> parts;
    for (const auto& comp : components) {
        auto r = circ_convex_connected(g, *col, comp);
        if (!r) return std::nullopt;
        parts.push_back({std::move(r->first), std::move(r->second),
                         static_cast<int>(comp.size())});
    }
    std::stable_sort(parts.begin(), parts.end(),
                     [](const CompRes& a, const CompRes& b) { return a.form < b.form; });
    GraphCanonResult res;
    int offset = 0;
    for (const auto& part : parts) {
        for (const auto& [v, p] : part.lab.pos) res.labeling.pos[v] = offset + p;
        offset += part.size;
    }
    res.canonical_form = relabel(g, res.labeling).adjacency_bytes();
    return res;
}

std::optional<GraphCanonResult> canonical_label_coconvex(const Graph& g) {
    if (g.size() == 0) return trivial_result();
    if (!coconvex_member(g)) return std::nullopt;
    auto sub = canonical_label_circular_convex(g.complement());
    if (!sub) return std::nullopt;
    GraphCanonResult res;
    res.labeling = sub->labeling;
    res.canonical_form = relabel(g, res.labeling).adjacency_bytes();
    return res;
}

std::optional<GraphCanonResult> canonical_label(const Graph& g, ClassTag tag) {
    if (!recognize(g).count(tag)) return std::nullopt;
    switch (tag) {
        case ClassTag::ProperInterval:
            return canonical_label_proper_interval(g);
        case ClassTag::PCA:
        case ClassTag::TCA: {
            if (!g.is_connected()) return canonical_label_proper_interval(g);
            if (g.complement().two_coloring()) return canonical_label_coconvex(g);
            return canonical_label_pca_noncobip(g);
        }
        case ClassTag::ConvexBipartite:
        case ClassTag::CircularConvexBipartite:
        case ClassTag::Biconvex:
            return canonical_label_circular_convex(g);
        case ClassTag::CoConvex:
            return canonical_label_coconvex(g);
        default:
            return std::nullopt;
    }
}

VertexIntervalModel neighbors_to_tight_interval(const Graph& g,
                                                const std::vector<VertexId>& order) {
    int n = g.size();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order must list every vertex exactly once");
    std::vector<int> pos(n, -1);
    for (int p = 0; p < n; ++p) {
        int v = g.index_of(order[p]);
        if (v < 0 || pos[v] >= 0)
            throw std::invalid_argument("order must list every vertex exactly once");
        pos[v] = p;
    }
    VertexIntervalModel m;
    m.length = n;
    for (int v = 0; v < n; ++v) {
        int lo = pos[v], hi = pos[v], cnt = 1;
        for (int u : g.neighbors(v)) {
            lo = std::min(lo, pos[u]);
            hi = std::max(hi, pos[u]);
            ++cnt;
        }
        if (hi - lo + 1 != cnt)
            throw std::invalid_argument("closed neighborhoods are not intervals of the order");
        m.intervals.emplace_back(g.name(v), IntervalSpan::make(pos[v] + 1, hi + 1));
    }
    std::sort(m.intervals.begin(), m.intervals.end());
    return m;
}

VertexArcModel neighbors_to_tight_arc(const Graph& g,
                                      const std::vector<VertexId>& order) {
    int n = g.size();
    if (g.complement().two_coloring())
        throw std::invalid_argument("arc construction requires a non-bipartite complement");
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order must list every vertex exactly once");
    std::vector<int> pos(n, -1);
    for (int p = 0; p < n; ++p) {
        int v = g.index_of(order[p]);
        if (v < 0 || pos[v] >= 0)
            throw std::invalid_argument("order must list every vertex exactly once");
        pos[v] = p;
    }
    VertexArcModel m;
    m.circle = n;
    for (int v = 0; v < n; ++v) {
        std::vector<char> in(n, 0);
        in[pos[v]] = 1;
        int cnt = 1;
        for (int u : g.neighbors(v)) {
            in[pos[u]] = 1;
            ++cnt;
        }
        if (cnt == n)
            throw std::invalid_argument("universal vertex has no arc of neighbors");
        // The covered positions must form one circular run.
        int start = -1;
        for (int p = 0; p < n; ++p)
            if (in[p] && !in[(p + n - 1) % n]) {
                if (start >= 0)
                    throw std::invalid_argument(
                        "closed neighborhoods are not arcs of the order");
                start = p;
            }
        int end = (start + cnt - 1) % n;
        for (int k = 0; k < cnt; ++k)
            if (!in[(start + k) % n])
                throw std::invalid_argument(
                    "closed neighborhoods are not arcs of the order");
        m.arcs.emplace_back(g.name(v), Arc::span(pos[v], end));
    }
    std::sort(m.arcs.begin(), m.arcs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
}

namespace {

struct EndpointPlan {
    std::vector<int> new_start;  // per model index
    std::vector<int> new_end;
    int total = 0;
};

// Assigns clone positions: at each point, start clones ordered by increasing
// arc length, then end clones by decreasing length.
template <typename LenOf, typename StartOf, typename EndOf>
EndpointPlan plan_clones(int points, int count, LenOf len, StartOf start, EndOf end,
                         int first_point) {
    EndpointPlan plan;
    plan.new_start.assign(count, -1);
    plan.new_end.assign(count, -1);
    int cursor = 0;
    for (int x = first_point; x < first_point + points; ++x) {
        std::vector<int> starters, enders;
        for (int i = 0; i < count; ++i) {
            if (start(i) == x) starters.push_back(i);
            if (end(i) == x) enders.push_back(i);
        }
        std::sort(starters.begin(), starters.end(),
                  [&](int a, int b) { return len(a) < len(b); });
        std::sort(enders.begin(), enders.end(),
                  [&](int a, int b) { return len(a) > len(b); });
        for (int i : starters) plan.new_start[i] = cursor++;
        for (int i : enders) plan.new_end[i] = cursor++;
    }
    plan.total = cursor;
    return plan;
}

}  // namespace

VertexArcModel tight_to_proper(const VertexArcModel& m) {
    if (!classify_model(m).is_tight)
        throw std::invalid_argument("model is not tight");
    int n = m.circle;
    int count = static_cast<int>(m.arcs.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [v, a] : m.arcs) {
        if (!a.is_span() || a.covers_circle(n))
            throw std::invalid_argument(
                "every arc must be a proper nonempty span of the circle");
        if (!seen.insert({a.start, a.end}).second)
            throw std::invalid_argument("arcs must be pairwise distinct");
    }
    auto plan = plan_clones(
        n, count, [&](int i) { return m.arcs[i].second.length(n); },
        [&](int i) { return m.arcs[i].second.start; },
        [&](int i) { return m.arcs[i].second.end; }, 0);
    VertexArcModel out;
    out.circle = plan.total;
    for (int i = 0; i < count; ++i)
        out.arcs.emplace_back(m.arcs[i].first,
                              Arc::span(plan.new_start[i], plan.new_end[i]));
    return out;
}

VertexIntervalModel tight_to_proper(const VertexIntervalModel& m) {
    if (!classify_model(m).is_tight)
        throw std::invalid_argument("model is not tight");
    int count = static_cast<int>(m.intervals.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [v, s] : m.intervals) {
        if (s.is_empty()) throw std::invalid_argument("empty intervals not allowed");
        if (!seen.insert({s.lo, s.hi}).second)
            throw std::invalid_argument("intervals must be pairwise distinct");
    }
    auto plan = plan_clones(
        m.length, count, [&](int i) { return m.intervals[i].second.length(); },
        [&](int i) { return m.intervals[i].second.lo; },
        [&](int i) { return m.intervals[i].second.hi; }, 1);
    VertexIntervalModel out;
    out.length = plan.total;
    for (int i = 0; i < count; ++i)
        out.intervals.emplace_back(
            m.intervals[i].first,
            IntervalSpan::make(plan.new_start[i] + 1, plan.new_end[i] + 1));
    return out;
}

VertexArcModel clone_expand(const Graph& g, const VertexArcModel& quotient_model,
                            const std::map<VertexId, VertexId>& model_vertex_of) {
    int n = quotient_model.circle;
    int k = g.size();
    std::map<VertexId, Arc> class_arc;
    for (const auto& [v, a] : quotient_model.arcs) class_arc[v] = a;
    // Twin index within each class by vertex name order (names() is sorted).
    std::map<VertexId, int> next_index;
    VertexArcModel out;
    out.circle = 2 * k * n;
    for (const auto& v : g.names()) {
        auto it = model_vertex_of.find(v);
        if (it == model_vertex_of.end())
            throw std::invalid_argument("vertex missing from the class map");
        auto ait = class_arc.find(it->second);
        if (ait == class_arc.end())
            throw std::invalid_argument("class vertex missing from the model");
        const Arc& qa = ait->second;
        int i = next_index[it->second]++;
        Arc arc;
        switch (qa.kind) {
            case Arc::Kind::Empty: arc = Arc::empty(); break;
            case Arc::Kind::Full: arc = Arc::full(); break;
            case Arc::Kind::Span: {
                int len = 2 * k * n;
                int a = qa.start, b = qa.end;
                if (b < a) b += n;  // unroll the wrap before scaling
                arc = Arc::span((2 * k * a + i) % len, ((2 * b + 1) * k + i) % len);
                break;
            }
        }
        out.arcs.emplace_back(v, arc);
    }
    return out;
}

namespace {

// Arc model of a twin-free co-convex graph built from interval orderings of
// the complement's one-sided neighborhood hypergraphs; with tight = true the
// orderings are tight, which makes the whole model tight.
std::optional<VertexArcModel> build_coconvex_model(const Graph& q, bool tight) {
    int n = q.size();
    VertexArcModel out;
    if (n == 0) {
        out.circle = 2;
        return out;
    }
    Graph h = q.complement();
    auto comps = bipartite_components(h);
    if (!comps) return std::nullopt;

    // Deterministic component order: by smallest member name.
    auto smallest = [&](const BipComponent& bc) {
        int v = bc.side[0].empty() ? bc.side[1][0] : bc.side[0][0];
        if (!bc.side[0].empty() && !bc.side[1].empty())
            v = std::min(bc.side[0][0], bc.side[1][0]);
        return h.name(v);
    };
    std::stable_sort(comps->begin(), comps->end(),
                     [&](const BipComponent& a, const BipComponent& b) {
                         return smallest(a) < smallest(b);
                     });

    std::vector<int> u_order;            // global interval order of the U side
    std::vector<int> w_vertices;         // all W-side vertices
    std::optional<int> universal;        // isolated complement vertex (at most one)
    for (const auto& bc : *comps) {
        if (bc.side[0].size() + bc.side[1].size() == 1) {
            int v = bc.side[0].empty() ? bc.side[1][0] : bc.side[0][0];
            if (universal) return std::nullopt;  // twins would coincide
            universal = v;
            continue;
        }
        struct SideChoice {
            std::string form;
            std::vector<VertexId> names_sorted;
            Labeling lab;
            int side;
        };
        std::optional<SideChoice> chosen;
        for (int s = 0; s < 2; ++s) {
            auto hyper = side_hypergraph(h, bc.side[s], bc.side[1 - s]);
            auto canon = tight ? canonical_tight_interval(hyper)
                               : canonical_interval(hyper);
            if (!canon) continue;
            SideChoice sc;
            sc.form = canon->serialized_form;
            sc.lab = canon->labeling;
            sc.side = s;
            for (int v : bc.side[s]) sc.names_sorted.push_back(h.name(v));
            std::sort(sc.names_sorted.begin(), sc.names_sorted.end());
            if (!chosen || std::tie(sc.form, sc.names_sorted) <
                               std::tie(chosen->form, chosen->names_sorted))
                chosen = std::move(sc);
        }
        if (!chosen) return std::nullopt;
        std::vector<int> ordered(bc.side[chosen->side].size());
        for (int v : bc.side[chosen->side])
            ordered[chosen->lab.at(h.name(v)) - 1] = v;
        for (int v : ordered) u_order.push_back(v);
        for (int v : bc.side[1 - chosen->side]) w_vertices.push_back(v);
    }

    int k = static_cast<int>(u_order.size());
    int circle = 2 * k + 2;
    out.circle = circle;
    std::vector<int> u_index(n, -1);  // 1-based position in the global order
    for (int i = 0; i < k; ++i) u_index[u_order[i]] = i + 1;

    for (int i = 1; i <= k; ++i)
        out.arcs.emplace_back(q.name(u_order[i - 1]), Arc::span(i, i + k));
    for (int w : w_vertices) {
        int lo = k + 1, hi = 0;
        for (int u : h.neighbors(w)) {
            lo = std::min(lo, u_index[u]);
            hi = std::max(hi, u_index[u]);
        }
        int cnt = static_cast<int>(h.neighbors(w).size());
        if (hi - lo + 1 != cnt)
            throw std::logic_error("complement neighborhood is not an interval");
        out.arcs.emplace_back(q.name(w),
                              Arc::span((hi + k + 1) % circle, lo - 1));
    }
    if (universal) out.arcs.emplace_back(q.name(*universal), Arc::span(0, k));
    std::sort(out.arcs.begin(), out.arcs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Shared tail of the co-convex pipelines: canonical labeling, twin-free
// quotient of the canonical form, model construction, clone expansion.
std::optional<GraphCanonResult> coconvex_pipeline(const Graph& g, bool tight,
                                                  bool properize) {
    auto labres = canonical_label_coconvex(g);
    if (!labres) return std::nullopt;
    if (g.size() == 0) {
        labres->arc_model = VertexArcModel{2, {}};
        return labres;
    }
    Graph gstar = relabel(g, labres->labeling);

    // Twin classes of the canonical form; class representative = smallest name.
    auto nq = closed_neighborhoods(gstar);
    auto q = quotient(nq);
    std::vector<int> reps;
    for (const auto& cls : q.classes) reps.push_back(cls.front());
    Graph quotient_graph = gstar.induced(reps);

    auto qmodel = build_coconvex_model(quotient_graph, tight);
    if (!qmodel) return std::nullopt;
    if (properize) {
        if (!classify_model(*qmodel).is_tight)
            throw std::logic_error("co-convex tight construction is not tight");
        *qmodel = tight_to_proper(*qmodel);
    }

    int w = name_width(g.size());
    std::map<VertexId, VertexId> model_vertex_of;
    for (const auto& v : g.names()) {
        int star_index = gstar.index_of(padded_name(labres->labeling.at(v), w));
        model_vertex_of[v] = gstar.name(q.classes[q.class_of[star_index]].front());
    }
    labres->arc_model = clone_expand(g, *qmodel, model_vertex_of);
    return labres;
}

}  // namespace

std::optional<GraphCanonResult> coconvex_arc_model(const Graph& g) {
    return coconvex_pipeline(g, false, false);
}

std::optional<GraphCanonResult> proper_arc_model_pca(const Graph& g) {
    if (g.size() == 0) {
        auto res = trivial_result();
        res.interval_model = VertexIntervalModel{};
        return res;
    }
    if (!canonical_tight_arc(closed_neighborhoods(g))) return std::nullopt;

    if (!g.is_connected()) {
        // Disconnected proper circular-arc graphs are proper interval.
        auto labres = canonical_label_proper_interval(g);
        if (!labres) return std::nullopt;
        std::vector<VertexId> order(g.size());
        for (const auto& [v, p] : labres->labeling.pos) order[p - 1] = v;
        labres->interval_model =
            tight_to_proper(neighbors_to_tight_interval(g, order));
        return labres;
    }

    if (!g.complement().two_coloring()) {
        auto labres = canonical_label_pca_noncobip(g);
        if (!labres) return std::nullopt;
        auto ca = canonical_arc(closed_neighborhoods(g));
        std::vector<VertexId> order(g.size());
        for (const auto& [v, p] : ca->labeling.pos) order[p] = v;
        labres->arc_model = tight_to_proper(neighbors_to_tight_arc(g, order));
        return labres;
    }

    return coconvex_pipeline(g, true, true);
}

std::optional<GraphCanonResult> tca_arc_model(const Graph& g) {
    if (g.size() == 0) return proper_arc_model_pca(g);
    auto ng = closed_neighborhoods(g);
    if (!canonical_arc(ng)) return std::nullopt;
    if (canonical_tight_arc(ng)) return proper_arc_model_pca(g);
    return coconvex_arc_model(g);
}

std::optional<IsoResult> isomorphic(const Graph& g1, const Graph& g2, ClassTag tag) {
    auto r1 = canonical_label(g1, tag);
    auto r2 = canonical_label(g2, tag);
    if (!r1 || !r2) return std::nullopt;
    IsoResult out;
    if (r1->canonical_form != r2->canonical_form) return out;
    std::map<int, VertexId> at_position;
    for (const auto& [v, p] : r2->labeling.pos) at_position[p] = v;
    for (const auto& [v, p] : r1->labeling.pos) out.bijection[v] = at_position.at(p);
    for (int i = 0; i < g1.size(); ++i)
        for (int j = i + 1; j < g1.size(); ++j) {
            int a = g2.index_of(out.bijection.at(g1.name(i)));
            int b = g2.index_of(out.bijection.at(g1.name(j)));
            if (g1.adjacent(i, j) != g2.adjacent(a, b))
                throw std::logic_error("canonical forms agree but bijection fails");
        }
    out.isomorphic = true;
    return out;
}

}  // namespace arcanon
