#include "arcanon/types.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arcanon {

int Arc::length(int n) const {
    switch (kind) {
        case Kind::Empty: return 0;
        case Kind::Full: return n;
        case Kind::Span: return (end - start + n) % n + 1;
    }
    return 0;
}

bool Arc::contains(int p, int n) const {
    switch (kind) {
        case Kind::Empty: return false;
        case Kind::Full: return true;
        case Kind::Span: {
            int rel = (p - start + n) % n;
            return rel <= (end - start + n) % n;
        }
    }
    return false;
}

std::vector<int> Arc::points(int n) const {
    std::vector<int> out;
    if (kind == Kind::Empty) return out;
    if (kind == Kind::Full) {
        out.resize(n);
        for (int i = 0; i < n; ++i) out[i] = i;
        return out;
    }
    int len = length(n);
    out.reserve(len);
    for (int i = 0; i < len; ++i) out.push_back((start + i) % n);
    std::sort(out.begin(), out.end());
    return out;
}

std::array<long long, 3> Arc::sort_key() const {
    switch (kind) {
        case Kind::Span: return {0, start, end};
        case Kind::Full: return {1, 0, 0};
        case Kind::Empty: return {2, 0, 0};
    }
    return {3, 0, 0};
}

std::vector<int> IntervalSpan::points() const {
    std::vector<int> out;
    if (is_empty()) return out;
    for (int p = lo; p <= hi; ++p) out.push_back(p);
    return out;
}

void IntervalSystem::normalize() {
    std::sort(intervals.begin(), intervals.end(),
              [](const IntervalEntry& a, const IntervalEntry& b) {
                  return std::tie(a.span.lo, a.span.hi, a.color) <
                         std::tie(b.span.lo, b.span.hi, b.color);
              });
    std::vector<IntervalEntry> merged;
    for (const auto& e : intervals) {
        if (!merged.empty() && merged.back().span == e.span &&
            merged.back().color == e.color) {
            merged.back().mult += e.mult;
        } else {
            merged.push_back(e);
        }
    }
    intervals = std::move(merged);
}

void ArcSystem::normalize() {
    std::sort(arcs.begin(), arcs.end(), [](const ArcEntry& a, const ArcEntry& b) {
        auto ka = a.arc.sort_key();
        auto kb = b.arc.sort_key();
        return std::tie(ka, a.color) < std::tie(kb, b.color);
    });
    std::vector<ArcEntry> merged;
    for (const auto& e : arcs) {
        if (!merged.empty() && merged.back().arc == e.arc &&
            merged.back().color == e.color) {
            merged.back().mult += e.mult;
        } else {
            merged.push_back(e);
        }
    }
    arcs = std::move(merged);
}

BinaryMatrix BinaryMatrix::make(int rows, int cols) {
    BinaryMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.cell.assign(rows, std::vector<char>(cols, 0));
    return m;
}

std::vector<std::array<long long, 4>> model_key(const IntervalSystem& m) {
    std::vector<std::array<long long, 4>> key;
    key.reserve(m.intervals.size() + 1);
    key.push_back({m.length, 0, 0, 0});
    for (const auto& e : m.intervals)
        key.push_back({e.span.lo, e.span.hi, e.color, e.mult});
    return key;
}

std::vector<std::array<long long, 5>> model_key(const ArcSystem& m) {
    std::vector<std::array<long long, 5>> key;
    key.reserve(m.arcs.size() + 1);
    key.push_back({m.circle, 0, 0, 0, 0});
    for (const auto& e : m.arcs) {
        auto k = e.arc.sort_key();
        key.push_back({k[0], k[1], k[2], e.color, e.mult});
    }
    return key;
}

std::string serialize(const IntervalSystem& m) {
    std::ostringstream os;
    os << "I" << m.length;
    for (const auto& e : m.intervals)
        os << ";" << e.span.lo << "," << e.span.hi << "," << e.color << "," << e.mult;
    return os.str();
}

std::string serialize(const ArcSystem& m) {
    std::ostringstream os;
    os << "A" << m.circle;
    for (const auto& e : m.arcs) {
        os << ";";
        switch (e.arc.kind) {
            case Arc::Kind::Empty: os << "-"; break;
            case Arc::Kind::Full: os << "*"; break;
            case Arc::Kind::Span: os << e.arc.start << "," << e.arc.end; break;
        }
        os << "," << e.color << "," << e.mult;
    }
    return os.str();
}

}  // namespace arcanon
