#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arcanon {

// External vertex names. Totally ordered (lexicographically) so that all
// constructions have deterministic output.
using VertexId = std::string;
using Color = long long;
using Mult = long long;

// An arc on the discrete circle Z_n. A Span [start,end] denotes the clockwise
// closed segment from start to end; it may cover all n points (such a span is
// set-equal to Full but remembers its extreme points). Full has no extreme
// points; Empty is the empty set.
struct Arc {
    enum class Kind { Empty, Full, Span };
    Kind kind = Kind::Empty;
    int start = 0;
    int end = 0;

    static Arc empty() { return Arc{Kind::Empty, 0, 0}; }
    static Arc full() { return Arc{Kind::Full, 0, 0}; }
    static Arc span(int s, int e) { return Arc{Kind::Span, s, e}; }

    bool is_empty() const { return kind == Kind::Empty; }
    bool is_full() const { return kind == Kind::Full; }
    bool is_span() const { return kind == Kind::Span; }

    // Number of points covered on a circle of size n.
    int length(int n) const;
    bool contains(int p, int n) const;
    std::vector<int> points(int n) const;
    // True if the covered point set is all of Z_n (Full, or an n-point span).
    bool covers_circle(int n) const { return length(n) == n; }

    // Total order used in serializations: spans by (start,end), then full,
    // then empty.
    std::array<long long, 3> sort_key() const;
    bool operator==(const Arc&) const = default;
};

// An integer interval inside the segment [1,n]; (0,0) encodes the empty
// interval.
struct IntervalSpan {
    int lo = 0;
    int hi = 0;

    static IntervalSpan empty() { return IntervalSpan{0, 0}; }
    static IntervalSpan make(int lo, int hi) { return IntervalSpan{lo, hi}; }

    bool is_empty() const { return lo == 0; }
    int length() const { return is_empty() ? 0 : hi - lo + 1; }
    bool contains(int p) const { return !is_empty() && lo <= p && p <= hi; }
    std::vector<int> points() const;
    bool operator==(const IntervalSpan&) const = default;
    auto operator<=>(const IntervalSpan&) const = default;
};

// Colored interval system: the model object for hypergraph interval
// representations. Entries are kept sorted by (span, color) and entries with
// equal span and color are merged by adding multiplicities.
struct IntervalEntry {
    IntervalSpan span;
    Color color = 0;
    Mult mult = 1;
    bool operator==(const IntervalEntry&) const = default;
};
struct IntervalSystem {
    int length = 0;
    std::vector<IntervalEntry> intervals;
    void normalize();
    bool operator==(const IntervalSystem&) const = default;
};

// Colored arc system: the model object for hypergraph arc representations.
struct ArcEntry {
    Arc arc;
    Color color = 0;
    Mult mult = 1;
    bool operator==(const ArcEntry&) const = default;
};
struct ArcSystem {
    int circle = 0;
    std::vector<ArcEntry> arcs;
    void normalize();
    bool operator==(const ArcSystem&) const = default;
};

// A bijection from vertex names to model positions ([1..n] for interval
// models, Z_n = {0..n-1} for arc models).
struct Labeling {
    std::map<VertexId, int> pos;
    int at(const VertexId& v) const { return pos.at(v); }
    bool operator==(const Labeling&) const = default;
};

// Per-vertex intersection models of graphs.
struct VertexArcModel {
    int circle = 0;
    std::vector<std::pair<VertexId, Arc>> arcs;  // sorted by vertex name
    bool operator==(const VertexArcModel&) const = default;
};
struct VertexIntervalModel {
    int length = 0;
    std::vector<std::pair<VertexId, IntervalSpan>> intervals;
    bool operator==(const VertexIntervalModel&) const = default;
};

struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<char>> cell;  // 0/1 values

    static BinaryMatrix make(int rows, int cols);
    bool operator==(const BinaryMatrix&) const = default;
};

// Deterministic text serializations; equal strings <=> equal models.
std::string serialize(const IntervalSystem& m);
std::string serialize(const ArcSystem& m);

// Comparison keys for lexicographic minimization over candidate models.
std::vector<std::array<long long, 4>> model_key(const IntervalSystem& m);
std::vector<std::array<long long, 5>> model_key(const ArcSystem& m);

}  // namespace arcanon
