#ifndef ACTIONGRAPH_PLANAR_TREE_HPP
#define ACTIONGRAPH_PLANAR_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <actiongraph/errors.hpp>

namespace actiongraph {

// Full enumeration beyond this gets unwieldy (C_12 = 208012 trees already).
inline constexpr std::size_t kDefaultEnumerationGuard = 12;

/**
 * Rooted tree with an ordered child sequence at every node. Child order is
 * significant: two trees that differ only in the order of siblings compare
 * unequal. Equality is structural.
 */
struct PlanarTree {
    std::vector<PlanarTree> children;

    friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

// Balanced word over '(' and ')'; the canonical text form of a PlanarTree.
using DyckWord = std::string;

inline std::size_t node_count(const PlanarTree& t) {
    std::size_t n = 1;
    for (const PlanarTree& c : t.children) n += node_count(c);
    return n;
}

inline std::size_t edge_count(const PlanarTree& t) { return node_count(t) - 1; }

namespace detail {

inline void append_dyck(const PlanarTree& t, std::string& out) {
    for (const PlanarTree& c : t.children) {
        out.push_back('(');
        append_dyck(c, out);
        out.push_back(')');
    }
}

inline void preorder_visit(const PlanarTree& t, std::vector<const PlanarTree*>& order) {
    order.push_back(&t);
    for (const PlanarTree& c : t.children) preorder_visit(c, order);
}

inline std::size_t orient_visit(const PlanarTree& node, std::size_t node_label,
                                std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::size_t next = node_label + 1;
    for (const PlanarTree& c : node.children) {
        pairs.emplace_back(node_label, next);
        next = orient_visit(c, next, pairs);
    }
    return next;
}

// Appends a childless node as the new last child of the index-th node on the
// rightmost path. Throws if the path is shorter than that.
inline void attach_in_place(PlanarTree& t, std::size_t index) {
    PlanarTree* node = &t;
    for (std::size_t i = 0; i < index; ++i) {
        if (node->children.empty())
            throw std::out_of_range("attach index " + std::to_string(index) +
                                    " is past the end of the rightmost path");
        node = &node->children.back();
    }
    node->children.emplace_back();
}

}  // namespace detail

/** Serialization: '(' on descending into a child, ')' on returning. */
inline DyckWord to_dyck(const PlanarTree& t) {
    std::string out;
    out.reserve(2 * edge_count(t));
    detail::append_dyck(t, out);
    return out;
}

/**
 * Strict inverse of to_dyck. Anything that is not a balanced word over '('
 * and ')' is rejected with the zero-based offending position.
 */
inline PlanarTree parse_dyck(std::string_view word) {
    std::vector<PlanarTree> stack(1);
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        const char ch = word[pos];
        if (ch == '(') {
            stack.emplace_back();
        } else if (ch == ')') {
            if (stack.size() == 1)
                throw DyckParseError(DyckParseError::Kind::NegativeBalance, pos,
                                     "')' at position " + std::to_string(pos) +
                                         " has no matching '('");
            PlanarTree finished = std::move(stack.back());
            stack.pop_back();
            stack.back().children.push_back(std::move(finished));
        } else {
            throw DyckParseError(DyckParseError::Kind::IllegalCharacter, pos,
                                 "illegal character '" + std::string(1, ch) + "' at position " +
                                     std::to_string(pos));
        }
    }
    if (stack.size() != 1)
        throw DyckParseError(DyckParseError::Kind::UnbalancedFinal, word.size(),
                             std::to_string(stack.size() - 1) + " unclosed '(' at end of word");
    return std::move(stack.back());
}

/** Nodes in depth-first preorder, children left to right; index = label. */
inline std::vector<const PlanarTree*> preorder_nodes(const PlanarTree& t) {
    std::vector<const PlanarTree*> order;
    order.reserve(node_count(t));
    detail::preorder_visit(t, order);
    return order;
}

/** The labeling scheme: root gets 0, then preorder, children left to right. */
inline std::unordered_map<const PlanarTree*, std::size_t> preorder_labels(const PlanarTree& t) {
    const std::vector<const PlanarTree*> order = preorder_nodes(t);
    std::unordered_map<const PlanarTree*, std::size_t> labels;
    labels.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) labels.emplace(order[i], i);
    return labels;
}

/**
 * One (source, target) pair of preorder labels per edge, directed so that
 * the source label is the smaller one. Parents precede their children in
 * preorder, so the parent end is always the source.
 */
inline std::vector<std::pair<std::size_t, std::size_t>> orient_edges(const PlanarTree& t) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(edge_count(t));
    detail::orient_visit(t, 0, pairs);
    return pairs;
}

/**
 * Root-to-(preorder-last) chain, obtained by repeatedly taking the last
 * child. These are exactly the nodes a new edge may be attached to without
 * disturbing the preorder labels of existing nodes.
 */
inline std::vector<const PlanarTree*> rightmost_path(const PlanarTree& t) {
    std::vector<const PlanarTree*> path{&t};
    const PlanarTree* cur = &t;
    while (!cur->children.empty()) {
        cur = &cur->children.back();
        path.push_back(cur);
    }
    return path;
}

/**
 * Grows t by one edge: a new childless node becomes the last child of
 * rightmost_path(t)[index]. The new node ends up preorder-last, so it takes
 * label edge_count(t) + 1 and terminates the new rightmost path.
 */
inline PlanarTree attach_at(const PlanarTree& t, std::size_t index) {
    PlanarTree out = t;
    detail::attach_in_place(out, index);
    return out;
}

/**
 * Deletes the preorder-last node (always a childless last child) and reports
 * the rightmost-path index of its parent, so that
 * attach_at(result.first, result.second) reconstructs t exactly.
 */
inline std::pair<PlanarTree, std::size_t> remove_last(const PlanarTree& t) {
    if (t.children.empty())
        throw std::invalid_argument("the single-node tree has no removable node");
    PlanarTree out = t;
    PlanarTree* node = &out;
    std::size_t index = 0;
    while (!node->children.back().children.empty()) {
        node = &node->children.back();
        ++index;
    }
    node->children.pop_back();
    return {std::move(out), index};
}

/**
 * Every planar rooted tree with exactly `edges` edges, ordered by Dyck word
 * (lexicographic, '(' < ')', ascending). Built bottom-up by splitting off
 * the first child's subtree, which cannot produce duplicates; the canonical
 * order is imposed afterwards. (No loop order over the decomposition yields
 * lex order directly: the comparison descends into the first subtree, across
 * size groups.)
 */
inline std::vector<PlanarTree> enumerate_trees(std::size_t edges,
                                               std::size_t guard = kDefaultEnumerationGuard) {
    if (edges > guard)
        throw GuardExceededError(edges, guard,
                                 "enumerating trees with " + std::to_string(edges) +
                                     " edges exceeds the guard of " + std::to_string(guard));

    std::vector<std::vector<PlanarTree>> by_edges(edges + 1);
    by_edges[0].push_back(PlanarTree{});
    for (std::size_t n = 1; n <= edges; ++n) {
        std::vector<PlanarTree>& out = by_edges[n];
        // every word of semilength n decomposes uniquely as "(" A ")" B
        for (std::size_t first = n; first-- > 0;) {
            const std::size_t rest = n - 1 - first;
            for (const PlanarTree& a : by_edges[first]) {
                for (const PlanarTree& b : by_edges[rest]) {
                    PlanarTree t;
                    t.children.reserve(1 + b.children.size());
                    t.children.push_back(a);
                    t.children.insert(t.children.end(), b.children.begin(), b.children.end());
                    out.push_back(std::move(t));
                }
            }
        }
    }

    std::vector<PlanarTree> trees = std::move(by_edges[edges]);
    std::vector<std::pair<DyckWord, std::size_t>> order;
    order.reserve(trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i) order.emplace_back(to_dyck(trees[i]), i);
    std::sort(order.begin(), order.end());
    std::vector<PlanarTree> sorted;
    sorted.reserve(trees.size());
    for (const auto& [word, i] : order) sorted.push_back(std::move(trees[i]));
    return sorted;
}

}  // namespace actiongraph

#endif  // ACTIONGRAPH_PLANAR_TREE_HPP
