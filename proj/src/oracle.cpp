#include "arcanon/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace arcanon {
namespace oracle {

namespace {

void require(bool cond) {
    if (!cond) throw std::invalid_argument("SizeLimit");
}

// Bit masks over vertex positions; perm[p] = vertex index at position p.
std::vector<unsigned> edge_masks_by_position(const Hypergraph& h,
                                             const std::vector<int>& perm) {
    int n = h.size();
    std::vector<int> pos_of(n);
    for (int p = 0; p < n; ++p) pos_of[perm[p]] = p;
    std::vector<unsigned> masks;
    masks.reserve(h.edges().size());
    for (const auto& e : h.edges()) {
        unsigned m = 0;
        for (int v : e.set) m |= 1u << pos_of[v];
        masks.push_back(m);
    }
    return masks;
}

bool mask_is_interval(unsigned m) {
    if (m == 0) return true;
    while (!(m & 1u)) m >>= 1;
    return (m & (m + 1)) == 0;
}

bool mask_is_arc(unsigned m, int n) {
    unsigned all = (n == 32) ? ~0u : ((1u << n) - 1);
    if (m == 0 || m == all) return true;
    unsigned rot = ((m << 1) | (m >> (n - 1))) & all;
    return __builtin_popcount(m ^ rot) == 2;
}

// Extreme points of an arc mask (must be a nonempty proper arc).
std::pair<int, int> arc_ends(unsigned m, int n) {
    int start = -1;
    for (int p = 0; p < n; ++p) {
        bool prev = m & (1u << ((p + n - 1) % n));
        bool cur = m & (1u << p);
        if (cur && !prev) start = p;
    }
    int len = __builtin_popcount(m);
    return {start, (start + len - 1) % n};
}

bool masks_tight_arc(const std::vector<unsigned>& masks, int n) {
    unsigned all = (n == 32) ? ~0u : ((1u << n) - 1);
    for (size_t i = 0; i < masks.size(); ++i) {
        unsigned a = masks[i];
        if (a == all) continue;  // whole-circle exemption
        if (a == 0) continue;
        auto [alo, ahi] = arc_ends(a, n);
        for (size_t j = 0; j < masks.size(); ++j) {
            unsigned b = masks[j];
            if (b == 0 || b == a) continue;
            if ((b & a) != b) continue;  // b not inside a
            auto [blo, bhi] = arc_ends(b, n);
            if (blo != alo && bhi != ahi) return false;
        }
    }
    return true;
}

std::vector<VertexId> names_for(const Hypergraph& h, const std::vector<int>& perm) {
    std::vector<VertexId> out;
    out.reserve(perm.size());
    for (int v : perm) out.push_back(h.name(v));
    return out;
}

std::vector<int> perm_for(const Hypergraph& h, const std::vector<VertexId>& order) {
    std::vector<int> perm;
    perm.reserve(order.size());
    for (const auto& v : order) {
        int i = h.index_of(v);
        if (i < 0) throw std::invalid_argument("order names unknown vertex");
        perm.push_back(i);
    }
    return perm;
}

}  // namespace

bool order_is_interval(const Hypergraph& h, const std::vector<VertexId>& order) {
    auto masks = edge_masks_by_position(h, perm_for(h, order));
    return std::all_of(masks.begin(), masks.end(), mask_is_interval);
}

bool order_is_arc(const Hypergraph& h, const std::vector<VertexId>& order) {
    int n = h.size();
    auto masks = edge_masks_by_position(h, perm_for(h, order));
    return std::all_of(masks.begin(), masks.end(),
                       [n](unsigned m) { return mask_is_arc(m, n); });
}

bool order_is_tight_arc(const Hypergraph& h, const std::vector<VertexId>& order) {
    int n = h.size();
    auto masks = edge_masks_by_position(h, perm_for(h, order));
    if (!std::all_of(masks.begin(), masks.end(),
                     [n](unsigned m) { return mask_is_arc(m, n); }))
        return false;
    return masks_tight_arc(masks, n);
}

std::optional<std::vector<VertexId>> brute_force_interval(const Hypergraph& h) {
    int n = h.size();
    require(n <= 9);
    if (n == 0) return std::vector<VertexId>{};
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        auto masks = edge_masks_by_position(h, perm);
        if (std::all_of(masks.begin(), masks.end(), mask_is_interval))
            return names_for(h, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

namespace {

template <typename Check>
std::optional<std::vector<VertexId>> circular_search(const Hypergraph& h,
                                                     Check check) {
    int n = h.size();
    require(n <= 9);
    if (n == 0) return std::vector<VertexId>{};
    if (n == 1) {
        std::vector<int> perm{0};
        if (check(perm)) return names_for(h, perm);
        return std::nullopt;
    }
    // Fix vertex 0 at position 0 (rotations) and halve by reflection.
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        if (n >= 3 && rest.front() > rest.back()) continue;  // reflection dedup
        std::vector<int> perm;
        perm.push_back(0);
        perm.insert(perm.end(), rest.begin(), rest.end());
        if (check(perm)) return names_for(h, perm);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<VertexId>> brute_force_ca(const Hypergraph& h) {
    int n = h.size();
    return circular_search(h, [&](const std::vector<int>& perm) {
        auto masks = edge_masks_by_position(h, perm);
        return std::all_of(masks.begin(), masks.end(),
                           [n](unsigned m) { return mask_is_arc(m, n); });
    });
}

std::optional<std::vector<VertexId>> brute_force_tight_ca(const Hypergraph& h) {
    int n = h.size();
    return circular_search(h, [&](const std::vector<int>& perm) {
        auto masks = edge_masks_by_position(h, perm);
        if (!std::all_of(masks.begin(), masks.end(),
                         [n](unsigned m) { return mask_is_arc(m, n); }))
            return false;
        return masks_tight_arc(masks, n);
    });
}

std::optional<std::map<VertexId, VertexId>> brute_force_iso(const Graph& g1,
                                                            const Graph& g2) {
    require(g1.size() <= 8 && g2.size() <= 8);
    if (g1.size() != g2.size()) return std::nullopt;
    if (g1.num_edges() != g2.num_edges()) return std::nullopt;
    int n = g1.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (g1.adjacent(i, j) != g2.adjacent(perm[i], perm[j])) ok = false;
        if (ok) {
            std::map<VertexId, VertexId> out;
            for (int i = 0; i < n; ++i) out[g1.name(i)] = g2.name(perm[i]);
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<Graph> brute_force_ssp(const Hypergraph& h) {
    int n = h.size();
    require(n <= 6);
    std::vector<Graph> out;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

    // Target: multiset of (set, mult); colors must all be 0 to be realizable.
    for (const auto& e : h.edges())
        if (e.color != 0) return out;
    std::map<std::vector<int>, Mult> want;
    for (const auto& e : h.edges()) want[e.set] += e.mult;

    for (unsigned bits = 0; bits < (1u << slots.size()); ++bits) {
        std::vector<std::vector<int>> nbhd(n);
        for (int v = 0; v < n; ++v) nbhd[v].push_back(v);
        for (size_t s = 0; s < slots.size(); ++s) {
            if (bits & (1u << s)) {
                nbhd[slots[s].first].push_back(slots[s].second);
                nbhd[slots[s].second].push_back(slots[s].first);
            }
        }
        std::map<std::vector<int>, Mult> got;
        for (int v = 0; v < n; ++v) {
            std::sort(nbhd[v].begin(), nbhd[v].end());
            got[nbhd[v]] += 1;
        }
        if (got == want) {
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (size_t s = 0; s < slots.size(); ++s)
                if (bits & (1u << s))
                    edges.emplace_back(h.name(slots[s].first), h.name(slots[s].second));
            out.emplace_back(h.names(), edges);
        }
    }
    return out;
}

std::vector<std::vector<VertexId>> enumerate_tight_orderings(const Hypergraph& h) {
    int n = h.size();
    require(n <= 7);
    std::vector<std::vector<VertexId>> out;
    if (n == 0) return out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        auto masks = edge_masks_by_position(h, perm);
        bool arcs = std::all_of(masks.begin(), masks.end(),
                                [n](unsigned m) { return mask_is_arc(m, n); });
        if (arcs && masks_tight_arc(masks, n)) out.push_back(names_for(h, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace oracle
}  // namespace arcanon
