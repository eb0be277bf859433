#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcanon/hypergraph.hpp"
#include "arcanon/types.hpp"

namespace arcanon {

// The per-vertex cut used to reduce arc representations to interval
// representations: each hyperedge H maps to H if x is outside it and to V\H
// otherwise, so the cut vertex lies in no image. The cut color records
// whether the complement of the source is itself a hyperedge (value 2), with
// value 1 for complemented sources and 0 otherwise; it combines with the
// source color h as 3h + c. Images that coincide as sets with equal combined
// color merge by adding multiplicities.
struct VertexCut {
    VertexId vertex;
    Hypergraph cut;                  // edges carry the combined color 3h + c
    std::vector<int> cut_coloring;   // c value in {0,1,2} per cut edge entry
};
VertexCut cut_at_vertex(const Hypergraph& h, const VertexId& x);

struct ArcCanonResult {
    ArcSystem model;
    Labeling labeling;  // vertex -> position in Z_n
    std::string serialized_form;
};

// Canonical arc representation of an edge-colored circular-arc hypergraph:
// canonizes the cut at every vertex as an interval hypergraph and keeps the
// lexicographically least result, then re-closes the segment into the circle
// and undoes the complementations. Isomorphic inputs receive byte-identical
// models. Returns nullopt when h is not a CA hypergraph; throws
// std::domain_error when h has no vertices.
std::optional<ArcCanonResult> canonical_arc(const Hypergraph& h);

// Tight variant via the tightened hypergraph; reserved-color arcs stripped.
std::optional<ArcCanonResult> canonical_tight_arc(const Hypergraph& h);

// Circular-ones / consecutive-ones for binary matrices: columns are vertices,
// rows are hyperedges. The returned permutation lists the original column of
// each new position; every positive answer is re-verified row by row.
std::optional<std::vector<int>> circular_ones(const BinaryMatrix& m);
std::optional<std::vector<int>> consecutive_ones(const BinaryMatrix& m);

}  // namespace arcanon
