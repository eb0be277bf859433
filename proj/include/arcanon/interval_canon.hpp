#pragma once

#include <optional>
#include <string>

#include "arcanon/hypergraph.hpp"
#include "arcanon/types.hpp"

namespace arcanon {

struct IntervalCanonResult {
    IntervalSystem model;
    Labeling labeling;  // vertex -> position in [1..n]
    std::string serialized_form;
};

// Canonical interval representation of an edge-colored interval hypergraph:
// isomorphic inputs (any renaming of vertices, any reordering of hyperedge
// lists) receive byte-identical models and serialized forms. Returns nullopt
// when h is not an interval hypergraph.
std::optional<IntervalCanonResult> canonical_interval(const Hypergraph& h);

// Canonizes the tightened hypergraph and strips the reserved color; the
// result is a tight interval model of h, or nullopt when h has no tight
// interval representation.
std::optional<IntervalCanonResult> canonical_tight_interval(const Hypergraph& h);

// Canonical labeling of an interval hypergraph (the labeling of
// canonical_interval).
std::optional<Labeling> canonical_labeling_interval_hypergraph(const Hypergraph& h);

// Canonical labeling for duals of interval hypergraphs: canonize h*, pull the
// labeling back through the canonical map x -> x*. canonical_form is equal
// exactly for isomorphic inputs in the class.
struct DualCanonResult {
    Labeling labeling;
    std::string canonical_form;
};
std::optional<DualCanonResult> canonical_labeling_dual_interval(const Hypergraph& h);

}  // namespace arcanon
