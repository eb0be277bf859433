#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "arcanon/hypergraph.hpp"
#include "arcanon/types.hpp"

namespace arcanon {

enum class ClassTag {
    ProperInterval,
    Interval,
    PCA,
    TCA,
    ConvexBipartite,
    CircularConvexBipartite,
    Biconvex,
    CoConvex,
    CoBipartite,
    None,
};
std::string to_string(ClassTag tag);
std::optional<ClassTag> class_tag_from_string(const std::string& s);

// Every tag whose defining test passes. ProperInterval, PCA and TCA go
// through the closed neighborhood hypergraph; the bipartite family tests one
// side's neighborhood hypergraph per component; Interval uses the maximal
// clique ordering characterization.
std::set<ClassTag> recognize(const Graph& g);

struct GraphCanonResult {
    Labeling labeling;           // to [1..n], or Z_n for circular labelings
    std::string canonical_form;  // adjacency bytes of the relabeled graph
    std::optional<VertexArcModel> arc_model;
    std::optional<VertexIntervalModel> interval_model;
};

// Canonical labelings; equal canonical_form exactly for isomorphic members.
std::optional<GraphCanonResult> canonical_label_proper_interval(const Graph& g);
// Connected proper circular-arc graphs with non-bipartite complement; the
// minimum over the 2n rotated/reflected arc orderings of the neighborhood
// hypergraph.
std::optional<GraphCanonResult> canonical_label_pca_noncobip(const Graph& g);
// (Circular) convex bipartite graphs.
std::optional<GraphCanonResult> canonical_label_circular_convex(const Graph& g);
// Complements of convex bipartite graphs.
std::optional<GraphCanonResult> canonical_label_coconvex(const Graph& g);
// Dispatch over the supported classes (PCA/TCA route through the proper
// interval, non-co-bipartite, or co-convex labelers as appropriate).
std::optional<GraphCanonResult> canonical_label(const Graph& g, ClassTag tag);

// Canonical arc model of a co-convex graph (not necessarily tight or proper).
std::optional<GraphCanonResult> coconvex_arc_model(const Graph& g);

// Canonical proper model of a proper circular-arc graph. Disconnected inputs
// are proper interval and receive an interval model; connected inputs receive
// an arc model.
std::optional<GraphCanonResult> proper_arc_model_pca(const Graph& g);

// Canonical (not necessarily proper) arc or interval model of a concave-round
// graph: proper pipeline when proper circular-arc, co-convex pipeline
// otherwise.
std::optional<GraphCanonResult> tca_arc_model(const Graph& g);

// v -> N+[v] over an interval/arc ordering of the closed neighborhood
// hypergraph. Throws std::invalid_argument when the order is not such an
// ordering (or, for arcs, when the complement is bipartite).
VertexIntervalModel neighbors_to_tight_interval(const Graph& g,
                                                const std::vector<VertexId>& order);
VertexArcModel neighbors_to_tight_arc(const Graph& g,
                                      const std::vector<VertexId>& order);

// Splits every point into per-arc endpoint clones (starts by increasing
// length, then ends by decreasing length); the result is proper and has the
// same intersection structure. Throws std::invalid_argument when the model is
// not tight, has empty or whole-circle members, or repeats an arc.
VertexArcModel tight_to_proper(const VertexArcModel& m);
VertexIntervalModel tight_to_proper(const VertexIntervalModel& m);

// Expands a per-twin-class arc model to all vertices of g on the circle
// Z_{2kn}: model point p widens to [2kp, 2kp+2k-1] and the i-th member (by
// name order) of a class with arc [a,b] receives [2ka+i, (2b+1)k+i].
// model_vertex_of maps every vertex of g to its class vertex in the model.
VertexArcModel clone_expand(const Graph& g, const VertexArcModel& quotient_model,
                            const std::map<VertexId, VertexId>& model_vertex_of);

// Isomorphism through canonical forms: nullopt when either graph is outside
// the class; otherwise the verified bijection when the forms agree.
struct IsoResult {
    bool isomorphic = false;
    std::map<VertexId, VertexId> bijection;
};
std::optional<IsoResult> isomorphic(const Graph& g1, const Graph& g2, ClassTag tag);

}  // namespace arcanon
