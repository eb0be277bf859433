#pragma once

#include <memory>
#include <vector>

#include "arcanon/types.hpp"

namespace arcanon {

// PQ-tree over leaves 0..n-1. Admissible frontiers are the leaf orders
// obtained by permuting children of P-nodes and reversing children of
// Q-nodes; reduce() intersects the admissible set with the orders making a
// given leaf set consecutive.
class PQTree {
public:
    explicit PQTree(int n);
    PQTree(PQTree&&) noexcept;
    PQTree& operator=(PQTree&&) noexcept;
    ~PQTree();

    int leaf_count() const { return n_; }
    bool valid() const { return valid_; }

    // Returns false and invalidates the tree when no admissible frontier can
    // make s consecutive. Sets of size <= 1 or >= n are no-ops.
    bool reduce(const std::vector<int>& s);

    // Some admissible frontier.
    std::vector<int> frontier() const;

    // Canonical frontier: P-children are ordered by the serialized sub-model
    // of the colored edges lying inside their subtree (subtrees carrying no
    // edge go last), Q-nodes take the direction with the smaller serialized
    // sub-model. Produces equal output models for isomorphic inputs.
    struct SigEdge {
        std::vector<int> set;  // sorted leaf indices
        Color color = 0;
        Mult mult = 1;
    };
    std::vector<int> canonical_frontier(const std::vector<SigEdge>& edges) const;

    struct Node;  // exposed for the implementation file only

private:
    std::unique_ptr<Node> root_;
    int n_ = 0;
    bool valid_ = true;
};

}  // namespace arcanon
