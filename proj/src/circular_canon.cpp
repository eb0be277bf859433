#include "arcanon/circular_canon.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arcanon/core_model.hpp"
#include "arcanon/interval_canon.hpp"

namespace arcanon {

namespace {

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

Arc complement_arc(const Arc& a, int n) {
    switch (a.kind) {
        case Arc::Kind::Empty: return Arc::full();
        case Arc::Kind::Full: return Arc::empty();
        case Arc::Kind::Span:
            if (a.covers_circle(n)) return Arc::empty();
            return Arc::span((a.end + 1) % n, (a.start - 1 + n) % n);
    }
    return Arc::empty();
}

}  // namespace

VertexCut cut_at_vertex(const Hypergraph& h, const VertexId& x) {
    int xi = h.index_of(x);
    if (xi < 0) throw std::invalid_argument("cut vertex not in hypergraph");
    int n = h.size();

    std::vector<Hypergraph::Edge> cut_edges;
    for (const auto& e : h.edges()) {
        bool contains_x = std::binary_search(e.set.begin(), e.set.end(), xi);
        std::vector<int> comp = complement_set(e.set, n);
        bool comp_present = h.has_edge_set(comp);
        int c = comp_present ? 2 : (contains_x ? 1 : 0);
        Hypergraph::Edge img;
        img.set = contains_x ? comp : e.set;
        img.color = 3 * e.color + c;
        img.mult = e.mult;
        cut_edges.push_back(std::move(img));
    }
    VertexCut out;
    out.vertex = x;
    out.cut = Hypergraph::from_index_edges(h.names(), std::move(cut_edges));
    for (const auto& e : out.cut.edges())
        out.cut_coloring.push_back(static_cast<int>(((e.color % 3) + 3) % 3));
    return out;
}

namespace {

// Internal cut used by canonical_arc. It refines the {0,1,2} coloring by
// recording on its own bit whether the source hyperedge contains the cut
// vertex; without that bit, a complementary pair {H, V\H} whose two sides
// differ in color or multiplicity cannot be reassembled unambiguously from
// the canonical interval model. Combined color: 4h + 2*[complement present]
// + [x in H]. No two entries ever merge.
Hypergraph refined_cut(const Hypergraph& h, int xi) {
    int n = h.size();
    std::vector<Hypergraph::Edge> cut_edges;
    for (const auto& e : h.edges()) {
        bool contains_x = std::binary_search(e.set.begin(), e.set.end(), xi);
        std::vector<int> comp = complement_set(e.set, n);
        int t = (h.has_edge_set(comp) ? 2 : 0) + (contains_x ? 1 : 0);
        Hypergraph::Edge img;
        img.set = contains_x ? comp : e.set;
        img.color = 4 * e.color + t;
        img.mult = e.mult;
        cut_edges.push_back(std::move(img));
    }
    return Hypergraph::from_index_edges(h.names(), std::move(cut_edges));
}

ArcSystem rebuild_arcs(const IntervalSystem& m) {
    int n = m.length;
    ArcSystem out;
    out.circle = n;
    for (const auto& e : m.intervals) {
        long long t = ((e.color % 4) + 4) % 4;
        Color source_color = (e.color - t) / 4;
        Arc arc = e.span.is_empty() ? Arc::empty()
                                    : Arc::span(e.span.lo - 1, e.span.hi - 1);
        if (t & 1) arc = complement_arc(arc, n);
        out.arcs.push_back({arc, source_color, e.mult});
    }
    out.normalize();
    return out;
}

}  // namespace

std::optional<ArcCanonResult> canonical_arc(const Hypergraph& h) {
    int n = h.size();
    if (n < 1) throw std::domain_error("circle size must be at least 1");

    std::optional<IntervalCanonResult> best;
    for (int xi = 0; xi < n; ++xi) {
        auto canon = canonical_interval(refined_cut(h, xi));
        if (!canon) continue;
        if (!best || model_key(canon->model) < model_key(best->model))
            best = std::move(canon);
    }
    if (!best) return std::nullopt;

    ArcCanonResult res;
    res.model = rebuild_arcs(best->model);
    for (const auto& [v, p] : best->labeling.pos) res.labeling.pos[v] = p - 1;
    res.serialized_form = serialize(res.model);
    return res;
}

std::optional<ArcCanonResult> canonical_tight_arc(const Hypergraph& h) {
    Color reserved = tightened_reserved_color(h);
    auto canon = canonical_arc(tightened(h));
    if (!canon) return std::nullopt;

    ArcCanonResult res;
    res.model.circle = canon->model.circle;
    for (const auto& e : canon->model.arcs)
        if (e.color != reserved) res.model.arcs.push_back(e);
    res.labeling = canon->labeling;
    res.serialized_form = serialize(res.model);
    if (!classify_model(res.model).is_tight)
        throw std::logic_error("tightened arc canonization produced a non-tight model");
    return res;
}

namespace {

// Column names with fixed width keep the lexicographic vertex order equal to
// the numeric column order.
std::vector<VertexId> column_names(int cols) {
    int width = 1;
    for (int c = cols; c >= 10; c /= 10) ++width;
    std::vector<VertexId> names;
    for (int j = 0; j < cols; ++j) {
        std::ostringstream os;
        os << j;
        std::string s = os.str();
        names.push_back(std::string(width - s.size(), '0') + s);
    }
    return names;
}

Hypergraph matrix_hypergraph(const BinaryMatrix& m) {
    std::vector<Hypergraph::Edge> edges;
    for (int r = 0; r < m.rows; ++r) {
        Hypergraph::Edge e;
        for (int j = 0; j < m.cols; ++j)
            if (m.cell[r][j]) e.set.push_back(j);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_index_edges(column_names(m.cols), std::move(edges));
}

std::vector<int> perm_from_labeling(const BinaryMatrix& m, const Labeling& lab,
                                    int base) {
    auto names = column_names(m.cols);
    std::vector<int> perm(m.cols, -1);
    for (int j = 0; j < m.cols; ++j) perm[lab.at(names[j]) - base] = j;
    return perm;
}

bool row_consecutive(const BinaryMatrix& m, int r, const std::vector<int>& perm,
                     bool circular) {
    std::vector<char> bits(m.cols, 0);
    int ones = 0;
    for (int p = 0; p < m.cols; ++p) {
        bits[p] = m.cell[r][perm[p]];
        ones += bits[p];
    }
    if (ones == 0 || ones == m.cols) return true;
    int blocks = 0;
    for (int p = 0; p < m.cols; ++p) {
        int prev = p == 0 ? m.cols - 1 : p - 1;
        if (bits[p] && !bits[prev]) ++blocks;
    }
    if (circular) return blocks == 1;
    // linear: one block not wrapping around
    return blocks == 1 && !(bits[0] && bits[m.cols - 1]);
}

}  // namespace

std::optional<std::vector<int>> circular_ones(const BinaryMatrix& m) {
    if (m.cols == 0) {
        for (int r = 0; r < m.rows; ++r)
            if (!m.cell[r].empty()) throw std::invalid_argument("ragged matrix");
        return std::vector<int>{};
    }
    auto canon = canonical_arc(matrix_hypergraph(m));
    if (!canon) return std::nullopt;
    auto perm = perm_from_labeling(m, canon->labeling, 0);
    for (int r = 0; r < m.rows; ++r)
        if (!row_consecutive(m, r, perm, true))
            throw std::logic_error("circular-ones permutation failed verification");
    return perm;
}

std::optional<std::vector<int>> consecutive_ones(const BinaryMatrix& m) {
    if (m.cols == 0) return std::vector<int>{};
    auto canon = canonical_interval(matrix_hypergraph(m));
    if (!canon) return std::nullopt;
    auto perm = perm_from_labeling(m, canon->labeling, 1);
    for (int r = 0; r < m.rows; ++r)
        if (!row_consecutive(m, r, perm, false))
            throw std::logic_error("consecutive-ones permutation failed verification");
    return perm;
}

}  // namespace arcanon
