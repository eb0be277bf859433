#include "arcanon/interval_canon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arcanon/core_model.hpp"
#include "arcanon/pq_tree.hpp"

namespace arcanon {

namespace {

IntervalSystem build_model(const Hypergraph& h, const std::vector<int>& order) {
    int n = h.size();
    std::vector<int> pos(n, 0);
    for (int p = 0; p < n; ++p) pos[order[p]] = p + 1;
    IntervalSystem m;
    m.length = n;
    for (const auto& e : h.edges()) {
        IntervalEntry entry;
        entry.color = e.color;
        entry.mult = e.mult;
        if (e.set.empty()) {
            entry.span = IntervalSpan::empty();
        } else {
            int lo = n + 1, hi = 0;
            for (int v : e.set) {
                lo = std::min(lo, pos[v]);
                hi = std::max(hi, pos[v]);
            }
            if (hi - lo + 1 != static_cast<int>(e.set.size()))
                throw std::logic_error("hyperedge not consecutive in PQ frontier");
            entry.span = IntervalSpan::make(lo, hi);
        }
        m.intervals.push_back(entry);
    }
    m.normalize();
    return m;
}

}  // namespace

std::optional<IntervalCanonResult> canonical_interval(const Hypergraph& h) {
    int n = h.size();

    std::set<std::vector<int>> constraints;
    for (const auto& e : h.edges())
        if (static_cast<int>(e.set.size()) >= 2 &&
            static_cast<int>(e.set.size()) <= n - 1)
            constraints.insert(e.set);

    PQTree tree(n);
    for (const auto& c : constraints)
        if (!tree.reduce(c)) return std::nullopt;

    std::vector<PQTree::SigEdge> sig;
    for (const auto& e : h.edges())
        if (!e.set.empty()) sig.push_back({e.set, e.color, e.mult});

    std::vector<int> order = tree.canonical_frontier(sig);
    std::vector<int> reversed(order.rbegin(), order.rend());

    IntervalSystem fwd = build_model(h, order);
    IntervalSystem bwd = build_model(h, reversed);
    bool use_bwd = model_key(bwd) < model_key(fwd);

    IntervalCanonResult res;
    res.model = use_bwd ? std::move(bwd) : std::move(fwd);
    const auto& chosen = use_bwd ? reversed : order;
    for (int p = 0; p < n; ++p) res.labeling.pos[h.name(chosen[p])] = p + 1;
    res.serialized_form = serialize(res.model);
    return res;
}

std::optional<IntervalCanonResult> canonical_tight_interval(const Hypergraph& h) {
    Color reserved = tightened_reserved_color(h);
    auto canon = canonical_interval(tightened(h));
    if (!canon) return std::nullopt;

    IntervalCanonResult res;
    res.model.length = canon->model.length;
    for (const auto& e : canon->model.intervals)
        if (e.color != reserved) res.model.intervals.push_back(e);
    res.labeling = canon->labeling;
    res.serialized_form = serialize(res.model);
    if (!classify_model(res.model).is_tight)
        throw std::logic_error("tightened canonization produced a non-tight model");
    return res;
}

std::optional<Labeling> canonical_labeling_interval_hypergraph(const Hypergraph& h) {
    auto canon = canonical_interval(h);
    if (!canon) return std::nullopt;
    return canon->labeling;
}

std::optional<DualCanonResult> canonical_labeling_dual_interval(const Hypergraph& h) {
    // Dual vertices are the edge entry copies; star(x) collects them per
    // original vertex.
    Hypergraph dual = dual_hypergraph(h);
    auto mu = canonical_interval(dual);
    if (!mu) return std::nullopt;

    // Names used by dual_hypergraph: "e<i>.<copy>" per entry copy.
    std::vector<std::vector<int>> star(h.size());
    for (size_t ei = 0; ei < h.edges().size(); ++ei) {
        const auto& e = h.edges()[ei];
        for (Mult c = 0; c < e.mult; ++c) {
            std::ostringstream os;
            os << "e" << ei << "." << c;
            int p = mu->labeling.at(os.str());
            for (int x : e.set) star[x].push_back(p);
        }
    }
    for (auto& s : star) std::sort(s.begin(), s.end());

    // Twins share stars; rank ties by vertex name order.
    std::vector<std::pair<std::vector<int>, int>> keyed(h.size());
    std::map<std::vector<int>, int> twin_rank;
    for (int x = 0; x < h.size(); ++x) keyed[x] = {star[x], twin_rank[star[x]]++};

    std::vector<int> idx(h.size());
    for (int x = 0; x < h.size(); ++x) idx[x] = x;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return keyed[a] < keyed[b]; });

    DualCanonResult res;
    std::vector<int> pos(h.size());
    for (int p = 0; p < h.size(); ++p) {
        res.labeling.pos[h.name(idx[p])] = p + 1;
        pos[idx[p]] = p + 1;
    }

    // Canonical form: the relabeled hypergraph, serialized.
    std::vector<std::tuple<std::vector<int>, Color, Mult>> rows;
    for (const auto& e : h.edges()) {
        std::vector<int> img;
        for (int v : e.set) img.push_back(pos[v]);
        std::sort(img.begin(), img.end());
        rows.emplace_back(std::move(img), e.color, e.mult);
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    os << "D" << h.size();
    for (const auto& [img, color, mult] : rows) {
        os << ";";
        for (size_t i = 0; i < img.size(); ++i) os << (i ? " " : "") << img[i];
        os << "," << color << "," << mult;
    }
    res.canonical_form = os.str();
    return res;
}

}  // namespace arcanon
