#pragma once

#include <optional>
#include <vector>

#include "arcanon/hypergraph.hpp"

namespace arcanon {
namespace oracle {

// Exhaustive reference implementations for small instances. Each throws
// std::invalid_argument("SizeLimit") above its stated bound.

// Linear order of the vertex names making every hyperedge an interval,
// searched over all n! orders; n <= 9.
std::optional<std::vector<VertexId>> brute_force_interval(const Hypergraph& h);

// Circular order making every hyperedge an arc, searched over the (n-1)!/2
// circular orders up to rotation and reflection; n <= 9.
std::optional<std::vector<VertexId>> brute_force_ca(const Hypergraph& h);

// Same search restricted to tight orderings (containment of a nonempty
// hyperedge forces a shared extreme point; whole-circle arcs exempt).
std::optional<std::vector<VertexId>> brute_force_tight_ca(const Hypergraph& h);

// Exhaustive isomorphism search; n <= 8.
std::optional<std::map<VertexId, VertexId>> brute_force_iso(const Graph& g1,
                                                            const Graph& g2);

// All graphs G on V(h) with closed neighborhood hypergraph equal to h,
// by enumerating all 2^(n choose 2) edge sets; n <= 6.
std::vector<Graph> brute_force_ssp(const Hypergraph& h);

// All tight arc orderings (as vertex sequences; every rotation and
// reflection listed separately); n <= 7.
std::vector<std::vector<VertexId>> enumerate_tight_orderings(const Hypergraph& h);

// Checks for a fixed order; shared by the searches and usable from tests.
bool order_is_interval(const Hypergraph& h, const std::vector<VertexId>& order);
bool order_is_arc(const Hypergraph& h, const std::vector<VertexId>& order);
bool order_is_tight_arc(const Hypergraph& h, const std::vector<VertexId>& order);

}  // namespace oracle
}  // namespace arcanon
