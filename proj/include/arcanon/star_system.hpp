#pragma once

#include <optional>

#include "arcanon/hypergraph.hpp"

namespace arcanon {

// Search Star System Problem: find a graph G with closed neighborhood
// hypergraph exactly equal to h. Every solver verifies N[G] = h before
// returning, so a returned graph is always a genuine solution.

// Unique solution when one exists (exact reconstruction).
std::optional<Graph> ssp_proper_interval(const Hypergraph& h);

// Connected inputs whose tightened hypergraph is circular-arc and whose
// complement is not interval; at most one of the cyclic pairing shifts can
// succeed, and the solution is exact.
std::optional<Graph> ssp_pca_noncobip(const Hypergraph& h);

// Complement components are paired as (interval hypergraph, its dual); the
// solution is unique up to isomorphism.
std::optional<Graph> ssp_coconvex(const Hypergraph& h);

// Dispatcher: proper interval, then non-co-bipartite proper circular-arc,
// then co-convex; the first verified solution wins.
std::optional<Graph> ssp_ca(const Hypergraph& h);

}  // namespace arcanon
