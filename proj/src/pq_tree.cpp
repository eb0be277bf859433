#include "arcanon/pq_tree.hpp"

#include <algorithm>
#include <unordered_map>

namespace arcanon {

struct PQTree::Node {
    enum class Kind { Leaf, P, Q };
    Kind kind = Kind::Leaf;
    int leaf = -1;
    std::vector<std::unique_ptr<Node>> children;

    static std::unique_ptr<Node> make_leaf(int v) {
        auto n = std::make_unique<Node>();
        n->kind = Kind::Leaf;
        n->leaf = v;
        return n;
    }
    static std::unique_ptr<Node> make(Kind k, std::vector<std::unique_ptr<Node>> ch) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->children = std::move(ch);
        return n;
    }
};

namespace {

using Node = PQTree::Node;
using NodePtr = std::unique_ptr<Node>;
using Kind = Node::Kind;

struct Counts {
    std::unordered_map<const Node*, int> leaves;
    std::unordered_map<const Node*, int> in_s;
};

int count_dfs(const Node* node, const std::vector<char>& in_s, Counts& c) {
    if (node->kind == Kind::Leaf) {
        c.leaves[node] = 1;
        c.in_s[node] = in_s[node->leaf] ? 1 : 0;
        return c.in_s[node];
    }
    int total = 0, leaves = 0;
    for (const auto& ch : node->children) {
        total += count_dfs(ch.get(), in_s, c);
        leaves += c.leaves[ch.get()];
    }
    c.leaves[node] = leaves;
    c.in_s[node] = total;
    return total;
}

enum class Label { Empty, Full, Partial };

Label label_of(const Node* node, const Counts& c) {
    int k = c.in_s.at(node);
    if (k == 0) return Label::Empty;
    if (k == c.leaves.at(node)) return Label::Full;
    return Label::Partial;
}

// Groups 0, 1 or many nodes into a single block.
NodePtr wrap(std::vector<NodePtr> nodes) {
    if (nodes.empty()) return nullptr;
    if (nodes.size() == 1) return std::move(nodes.front());
    return Node::make(Kind::P, std::move(nodes));
}

// Flattens a partial node into a block sequence running from its empty side
// to its full side. Empty result signals failure.
bool make_partial(NodePtr node, const Counts& c, std::vector<NodePtr>& out) {
    if (node->kind == Kind::Leaf) return false;  // leaves are never partial

    if (node->kind == Kind::P) {
        std::vector<NodePtr> empties, fulls;
        NodePtr partial;
        for (auto& ch : node->children) {
            switch (label_of(ch.get(), c)) {
                case Label::Empty: empties.push_back(std::move(ch)); break;
                case Label::Full: fulls.push_back(std::move(ch)); break;
                case Label::Partial:
                    if (partial) return false;
                    partial = std::move(ch);
                    break;
            }
        }
        if (auto e = wrap(std::move(empties))) out.push_back(std::move(e));
        if (partial && !make_partial(std::move(partial), c, out)) return false;
        if (auto f = wrap(std::move(fulls))) out.push_back(std::move(f));
        return true;
    }

    // Q-node: children must read E* Pa? F* in one of the two directions.
    for (int attempt = 0; attempt < 2; ++attempt) {
        bool ok = true;
        int state = 0;  // 0 = empties, 1 = after partial, 2 = fulls
        for (const auto& ch : node->children) {
            Label l = label_of(ch.get(), c);
            if (state == 0) {
                if (l == Label::Empty) continue;
                state = (l == Label::Partial) ? 1 : 2;
            } else if (state == 1) {
                if (l == Label::Full) state = 2;
                else { ok = false; break; }
            } else {
                if (l != Label::Full) { ok = false; break; }
            }
        }
        if (ok) {
            for (auto& ch : node->children) {
                if (label_of(ch.get(), c) == Label::Partial) {
                    if (!make_partial(std::move(ch), c, out)) return false;
                } else {
                    out.push_back(std::move(ch));
                }
            }
            return true;
        }
        std::reverse(node->children.begin(), node->children.end());
    }
    return false;
}

// Rewrites the pertinent root so the s-leaves become consecutive.
bool apply_root(Node* node, const Counts& c) {
    if (label_of(node, c) == Label::Full) return true;

    if (node->kind == Kind::P) {
        std::vector<NodePtr> empties, fulls, partials;
        for (auto& ch : node->children) {
            switch (label_of(ch.get(), c)) {
                case Label::Empty: empties.push_back(std::move(ch)); break;
                case Label::Full: fulls.push_back(std::move(ch)); break;
                case Label::Partial: partials.push_back(std::move(ch)); break;
            }
        }
        if (partials.size() > 2) return false;

        if (partials.empty()) {
            NodePtr f = wrap(std::move(fulls));
            node->children = std::move(empties);
            if (f) node->children.push_back(std::move(f));
            return true;
        }

        std::vector<NodePtr> seq;
        if (!make_partial(std::move(partials[0]), c, seq)) return false;
        if (auto f = wrap(std::move(fulls))) seq.push_back(std::move(f));
        if (partials.size() == 2) {
            std::vector<NodePtr> tail;
            if (!make_partial(std::move(partials[1]), c, tail)) return false;
            std::reverse(tail.begin(), tail.end());
            for (auto& b : tail) seq.push_back(std::move(b));
        }
        NodePtr q = seq.size() == 1 ? std::move(seq.front())
                                    : Node::make(Kind::Q, std::move(seq));
        if (empties.empty()) {
            *node = std::move(*q);
        } else {
            node->children = std::move(empties);
            node->children.push_back(std::move(q));
        }
        return true;
    }

    if (node->kind == Kind::Q) {
        // Pattern E* Pa? F* Pa? E* over the fixed child sequence.
        enum { LE, LP, FF, RP, RE } state = LE;
        for (const auto& ch : node->children) {
            Label l = label_of(ch.get(), c);
            switch (state) {
                case LE:
                    if (l == Label::Empty) break;
                    state = (l == Label::Partial) ? LP : FF;
                    break;
                case LP:
                    if (l == Label::Full) state = FF;
                    else if (l == Label::Partial) state = RP;
                    else return false;
                    break;
                case FF:
                    if (l == Label::Full) break;
                    state = (l == Label::Partial) ? RP : RE;
                    break;
                case RP:
                    if (l == Label::Empty) state = RE;
                    else return false;
                    break;
                case RE:
                    if (l != Label::Empty) return false;
                    break;
            }
        }
        std::vector<NodePtr> seq;
        bool before_full = true;
        for (auto& ch : node->children) {
            Label l = label_of(ch.get(), c);
            if (l == Label::Partial) {
                std::vector<NodePtr> blocks;
                if (!make_partial(std::move(ch), c, blocks)) return false;
                if (!before_full) std::reverse(blocks.begin(), blocks.end());
                for (auto& b : blocks) seq.push_back(std::move(b));
                if (!before_full) continue;
                before_full = false;  // at most one partial on the left
                continue;
            }
            if (l == Label::Full) before_full = false;
            seq.push_back(std::move(ch));
        }
        node->children = std::move(seq);
        return true;
    }
    return false;
}

// Splices out single-child nodes and turns two-child Q-nodes into P-nodes.
void normalize(NodePtr& node) {
    if (!node || node->kind == Kind::Leaf) return;
    for (auto& ch : node->children) normalize(ch);
    std::vector<NodePtr> flat;
    for (auto& ch : node->children) {
        if (ch->kind != Kind::Leaf && ch->children.size() == 1)
            flat.push_back(std::move(ch->children.front()));
        else
            flat.push_back(std::move(ch));
    }
    node->children = std::move(flat);
    if (node->children.size() == 1) {
        NodePtr only = std::move(node->children.front());
        node = std::move(only);
        return;
    }
    if (node->kind == Kind::Q && node->children.size() == 2) node->kind = Kind::P;
}

void collect_leaves(const Node* node, std::vector<int>& out) {
    if (node->kind == Kind::Leaf) {
        out.push_back(node->leaf);
        return;
    }
    for (const auto& ch : node->children) collect_leaves(ch.get(), out);
}

}  // namespace

PQTree::PQTree(int n) : n_(n) {
    if (n <= 0) {
        root_ = nullptr;
        return;
    }
    if (n == 1) {
        root_ = Node::make_leaf(0);
        return;
    }
    std::vector<NodePtr> leaves;
    leaves.reserve(n);
    for (int v = 0; v < n; ++v) leaves.push_back(Node::make_leaf(v));
    root_ = Node::make(Kind::P, std::move(leaves));
}

PQTree::PQTree(PQTree&&) noexcept = default;
PQTree& PQTree::operator=(PQTree&&) noexcept = default;
PQTree::~PQTree() = default;

bool PQTree::reduce(const std::vector<int>& s) {
    if (!valid_) return false;
    if (static_cast<int>(s.size()) <= 1 || static_cast<int>(s.size()) >= n_)
        return true;

    std::vector<char> in_s(n_, 0);
    for (int v : s) in_s[v] = 1;
    Counts c;
    count_dfs(root_.get(), in_s, c);

    // Descend to the deepest node containing all of s.
    Node* pert = root_.get();
    int want = static_cast<int>(s.size());
    for (;;) {
        Node* next = nullptr;
        for (const auto& ch : pert->children)
            if (c.in_s.at(ch.get()) == want) {
                next = ch.get();
                break;
            }
        if (!next || next->kind == Kind::Leaf) break;
        pert = next;
    }

    if (!apply_root(pert, c)) {
        valid_ = false;
        return false;
    }
    normalize(root_);
    return true;
}

std::vector<int> PQTree::frontier() const {
    std::vector<int> out;
    if (root_) collect_leaves(root_.get(), out);
    return out;
}

namespace {

// Serialized sub-model of the edges lying entirely inside a leaf sequence,
// with 1-based coordinates relative to the sequence.
std::vector<long long> region_sig(const std::vector<int>& leaves,
                                  const std::vector<PQTree::SigEdge>& edges,
                                  int n) {
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < leaves.size(); ++i) pos[leaves[i]] = static_cast<int>(i);
    std::vector<std::array<long long, 4>> tuples;
    for (const auto& e : edges) {
        if (e.set.empty()) continue;
        int lo = n, hi = -1;
        bool inside = true;
        for (int v : e.set) {
            if (pos[v] < 0) {
                inside = false;
                break;
            }
            lo = std::min(lo, pos[v]);
            hi = std::max(hi, pos[v]);
        }
        if (inside) tuples.push_back({lo + 1, hi + 1, e.color, e.mult});
    }
    std::sort(tuples.begin(), tuples.end());
    std::vector<long long> sig;
    sig.reserve(1 + 4 * tuples.size());
    sig.push_back(static_cast<long long>(leaves.size()));
    for (const auto& t : tuples) sig.insert(sig.end(), t.begin(), t.end());
    return sig;
}

struct CanonLayout {
    std::vector<int> leaves;
};

CanonLayout canonize(const Node* node, const std::vector<PQTree::SigEdge>& edges,
                     int n) {
    CanonLayout out;
    if (node->kind == Kind::Leaf) {
        out.leaves = {node->leaf};
        return out;
    }
    std::vector<CanonLayout> kids;
    kids.reserve(node->children.size());
    for (const auto& ch : node->children) kids.push_back(canonize(ch.get(), edges, n));

    if (node->kind == Kind::P) {
        struct Keyed {
            int empty_flag;
            std::vector<long long> sig;
            size_t idx;
        };
        std::vector<Keyed> keys;
        for (size_t i = 0; i < kids.size(); ++i) {
            auto sig = region_sig(kids[i].leaves, edges, n);
            // Subtrees carrying no hyperedge (beyond their size entry) sort
            // last: isolated vertices end up after covered ones.
            int empty_flag = sig.size() == 1 ? 1 : 0;
            keys.push_back({empty_flag, std::move(sig), i});
        }
        std::stable_sort(keys.begin(), keys.end(), [](const Keyed& a, const Keyed& b) {
            return std::tie(a.empty_flag, a.sig) < std::tie(b.empty_flag, b.sig);
        });
        for (const auto& k : keys)
            out.leaves.insert(out.leaves.end(), kids[k.idx].leaves.begin(),
                              kids[k.idx].leaves.end());
        return out;
    }

    // Q-node: fixed sequence or its reversal, whichever serializes smaller.
    std::vector<int> fwd, bwd;
    for (const auto& k : kids) fwd.insert(fwd.end(), k.leaves.begin(), k.leaves.end());
    for (auto it = kids.rbegin(); it != kids.rend(); ++it)
        bwd.insert(bwd.end(), it->leaves.begin(), it->leaves.end());
    out.leaves = region_sig(bwd, edges, n) < region_sig(fwd, edges, n) ? bwd : fwd;
    return out;
}

}  // namespace

std::vector<int> PQTree::canonical_frontier(const std::vector<SigEdge>& edges) const {
    if (!root_) return {};
    return canonize(root_.get(), edges, n_).leaves;
}

}  // namespace arcanon
