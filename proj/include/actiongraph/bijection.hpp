#ifndef ACTIONGRAPH_BIJECTION_HPP
#define ACTIONGRAPH_BIJECTION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <actiongraph/action_graph.hpp>
#include <actiongraph/catalan.hpp>
#include <actiongraph/errors.hpp>
#include <actiongraph/planar_tree.hpp>

namespace actiongraph {

inline constexpr std::uint32_t kDefaultBijectionGuard = 12;

/**
 * Lookup from creation provenance to the vertex it produced: the pair
 * (parent_source, creator_terminal) identifies a vertex uniquely, because
 * each path spawns exactly one vertex. Build once per graph and reuse;
 * the bare tree structure cannot distinguish sibling leaves, so inverting
 * the leaf/tree map needs this.
 */
class ProvenanceIndex {
public:
    explicit ProvenanceIndex(const ActionGraph& g) {
        index_.reserve(g.vertex_count());
        for (const VertexRecord& rec : g.vertices())
            if (!rec.is_root()) index_.emplace(key(rec.parent_source, rec.creator_terminal), rec.id);
    }

    /** The vertex adjoined for the path from `initial` down to `terminal`. */
    VertexId vertex_created_by(VertexId initial, VertexId terminal) const {
        const auto it = index_.find(key(initial, terminal));
        if (it == index_.end())
            throw std::invalid_argument("no vertex was created by the path " +
                                        std::to_string(initial) + " -> " + std::to_string(terminal));
        return it->second;
    }

private:
    static std::uint64_t key(VertexId a, VertexId b) noexcept {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    std::unordered_map<std::uint64_t, VertexId> index_;
};

/**
 * The planar tree a vertex encodes, by recursion on provenance: the root
 * maps to the single-node tree, and a vertex spawned by the path u -> v maps
 * to the tree of v grown by one edge at rightmost-path position depth(u).
 * Defined for every vertex (each was a leaf of its own generation); the
 * result has label(v) edges.
 */
inline PlanarTree vertex_to_tree(const ActionGraph& g, VertexId v) {
    const VertexRecord& rec = g.vertex(v);
    if (rec.is_root()) return PlanarTree{};
    PlanarTree t = vertex_to_tree(g, rec.creator_terminal);
    detail::attach_in_place(t, g.vertex(rec.parent_source).depth);
    return t;
}

/** Forward direction of the correspondence; defined on leaves of g only. */
inline PlanarTree leaf_to_tree(const ActionGraph& g, VertexId leaf) {
    if (g.vertex(leaf).label != g.generation())
        throw std::invalid_argument("vertex " + std::to_string(leaf) +
                                    " is not a leaf of the generation-" +
                                    std::to_string(g.generation()) + " graph");
    return vertex_to_tree(g, leaf);
}

/**
 * Inverse direction: peel preorder-last nodes off the tree down to a single
 * node, then replay the attachments against the graph. The ancestors of the
 * current vertex line up index-for-index with the rightmost path of its
 * tree, so attachment index j selects the ancestor at depth j as the initial
 * vertex of the creating path.
 */
inline VertexId tree_to_leaf(const ActionGraph& g, const ProvenanceIndex& provenance,
                             const PlanarTree& t) {
    if (edge_count(t) > g.generation())
        throw std::invalid_argument("tree has " + std::to_string(edge_count(t)) +
                                    " edges but the graph only reaches generation " +
                                    std::to_string(g.generation()));

    std::vector<std::size_t> attach_indices;
    PlanarTree work = t;
    while (!work.children.empty()) {
        std::pair<PlanarTree, std::size_t> removed = remove_last(work);
        attach_indices.push_back(removed.second);
        work = std::move(removed.first);
    }
    std::reverse(attach_indices.begin(), attach_indices.end());

    VertexId v = g.root();
    std::vector<VertexId> chain{v};  // ancestors of v, root first
    for (std::size_t j : attach_indices) {
        const VertexId w = provenance.vertex_created_by(chain[j], v);
        chain.resize(j + 1);
        chain.push_back(w);
        v = w;
    }
    return v;
}

/** Convenience overload; builds the provenance index on the fly. */
inline VertexId tree_to_leaf(const ActionGraph& g, const PlanarTree& t) {
    return tree_to_leaf(g, ProvenanceIndex(g), t);
}

/** Outcome of an exhaustive correspondence check at one generation. */
struct BijectionReport {
    std::uint32_t generation = 0;
    BigInt leaf_count;
    BigInt tree_count;
    std::vector<VertexId> roundtrip_failures;  // leaves that fail tree_to_leaf(leaf_to_tree(.))
    bool image_complete = false;               // every enumerated tree is hit
    bool injective = false;                    // no two leaves map to the same tree

    bool success() const {
        return leaf_count == tree_count && roundtrip_failures.empty() && image_complete &&
               injective;
    }
};

/**
 * Builds the generation-k graph, maps every leaf to its tree, and verifies
 * the correspondence exhaustively: injectivity, image equal to the full
 * enumeration, and the leaf -> tree -> leaf roundtrip.
 */
inline BijectionReport check_bijection(std::uint32_t k,
                                       std::uint32_t guard = kDefaultBijectionGuard) {
    if (k > guard)
        throw GuardExceededError(k, guard,
                                 "exhaustive check at generation " + std::to_string(k) +
                                     " exceeds the guard of " + std::to_string(guard));

    const ActionGraph g = build(k, k);
    const ProvenanceIndex provenance(g);
    const std::vector<PlanarTree> trees = enumerate_trees(k, k);

    BijectionReport report;
    report.generation = k;
    report.leaf_count = leaves(g).size();
    report.tree_count = trees.size();

    std::vector<DyckWord> images;
    images.reserve(leaves(g).size());
    for (VertexId leaf : leaves(g)) {
        const PlanarTree t = leaf_to_tree(g, leaf);
        if (tree_to_leaf(g, provenance, t) != leaf) report.roundtrip_failures.push_back(leaf);
        images.push_back(to_dyck(t));
    }
    std::sort(images.begin(), images.end());
    report.injective = std::adjacent_find(images.begin(), images.end()) == images.end();

    std::vector<DyckWord> expected;
    expected.reserve(trees.size());
    for (const PlanarTree& t : trees) expected.push_back(to_dyck(t));
    std::sort(expected.begin(), expected.end());
    report.image_complete = images == expected;

    return report;
}

}  // namespace actiongraph

#endif  // ACTIONGRAPH_BIJECTION_HPP
