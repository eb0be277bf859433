#pragma once

#include <string>
#include <vector>

#include "arcanon/hypergraph.hpp"
#include "arcanon/types.hpp"

namespace arcanon {

// {N[v]}: equal closed neighborhoods merge with multiplicity equal to the
// twin-class size; all colors 0.
Hypergraph closed_neighborhoods(const Graph& g);
// {N(v)}: isolated vertices contribute the empty hyperedge.
Hypergraph open_neighborhoods(const Graph& g);

// Each hyperedge H becomes V\H, inheriting color and multiplicity.
Hypergraph complement_hypergraph(const Hypergraph& h);

// Dual hypergraph H*. A hyperedge of multiplicity m becomes m twin vertices;
// a k-vertex twin class becomes a hyperedge of multiplicity k. Dual vertices
// are named deterministically from the sorted edge list. Colors are dropped
// (the dual is defined for set structure; inputs used with it are uncolored).
Hypergraph dual_hypergraph(const Hypergraph& h);

// H union { A\B : A,B in H, B strictly contained in A, B nonempty }; added
// difference sets get multiplicity 1 and the reserved color
// (max input color)+1 so callers can strip them after ordering.
Hypergraph tightened(const Hypergraph& h);
Color tightened_reserved_color(const Hypergraph& h);

// Twin classes (vertices lying in exactly the same hyperedges). The quotient
// keeps one vertex per class (the smallest name); hyperedges map to class
// sets with colors and multiplicities preserved.
struct QuotientResult {
    Hypergraph quotient;
    std::vector<int> class_of;                 // original index -> class index
    std::vector<std::vector<int>> classes;     // class index -> original indices
    std::vector<VertexId> class_name;          // class index -> quotient name
};
QuotientResult quotient(const Hypergraph& h);

// Hyperedge partition under strict intersection (overlap with union != V, or
// inclusion), plus the facts that defeat strict connectivity.
struct StrictComponents {
    std::vector<std::vector<int>> strict_components;  // indices into edges()
    std::vector<std::vector<int>> components;         // under plain intersection
    bool has_isolated_vertex = false;
    bool has_empty_edge = false;
    bool has_full_edge = false;
    bool strictly_connected = false;  // one strict component, none of the above
    bool connected = false;           // one plain component, no isolated vertex
};
StrictComponents strict_components(const Hypergraph& h);

// Splits a hypergraph into its connected components (vertex supports plus the
// hyperedges they carry). Empty hyperedges and isolated vertices are reported
// separately since they belong to no component.
struct HypergraphComponent {
    std::vector<int> vertices;  // indices into h.names()
    Hypergraph sub;             // induced sub-hypergraph on those vertices
};
struct HypergraphSplit {
    std::vector<HypergraphComponent> components;
    std::vector<int> isolated_vertices;
    bool has_empty_edge = false;
};
HypergraphSplit split_components(const Hypergraph& h);

// Bipartite incidence graph; a multiplicity-k hyperedge contributes k
// fraternal hyperedge-side vertices with deterministic fresh names.
struct IncidenceGraph {
    Graph graph;
    std::vector<VertexId> vertex_side;
    std::vector<VertexId> edge_side;
};
IncidenceGraph incidence_graph(const Hypergraph& h);

// True iff the labeling is a color- and multiplicity-preserving isomorphism
// from h onto the model. On failure `reason` names the first violation.
struct ValidationResult {
    bool ok = false;
    std::string reason;
};
ValidationResult validate_model(const Hypergraph& h, const IntervalSystem& m,
                                const Labeling& lab);
ValidationResult validate_model(const Hypergraph& h, const ArcSystem& m,
                                const Labeling& lab);

// Tightness (containment of a nonempty member forces a shared extreme point;
// arcs covering the whole circle are exempt) and properness (members pairwise
// incomparable by inclusion, multiplicities >= 2 count as comparable).
struct ModelClass {
    bool is_tight = false;
    bool is_proper = false;
};
ModelClass classify_model(const IntervalSystem& m);
ModelClass classify_model(const ArcSystem& m);
ModelClass classify_model(const VertexArcModel& m);
ModelClass classify_model(const VertexIntervalModel& m);

// Intersection graphs of per-vertex models.
Graph intersection_graph(const VertexArcModel& m);
Graph intersection_graph(const VertexIntervalModel& m);

}  // namespace arcanon
