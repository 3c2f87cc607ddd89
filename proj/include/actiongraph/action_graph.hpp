#ifndef ACTIONGRAPH_ACTION_GRAPH_HPP
#define ACTIONGRAPH_ACTION_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <actiongraph/catalan.hpp>
#include <actiongraph/errors.hpp>

namespace actiongraph {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// build() refuses to go past this by default: generation 16 already holds
// about fifty million vertices.
inline constexpr std::uint32_t kDefaultBuildGuard = 16;

/**
 * One vertex of an action graph.
 *
 * Besides the tree structure (parent_source is the source of the unique
 * nontrivial incoming edge), each non-root vertex records how it came to
 * exist: it was adjoined for the path running from parent_source down to
 * creator_terminal, a vertex of the previous generation. That provenance is
 * what makes the leaf/tree correspondence invertible.
 */
struct VertexRecord {
    VertexId id = 0;
    std::uint32_t label = 0;                // generation at which the vertex appeared
    VertexId parent_source = kNoVertex;     // kNoVertex exactly on the root
    VertexId creator_terminal = kNoVertex;  // kNoVertex exactly on the root
    std::uint32_t depth = 0;                // nontrivial edges between root and here
    std::vector<VertexId> children;         // outgoing edge targets, in creation order

    bool is_root() const noexcept { return parent_source == kNoVertex; }
};

/**
 * A directed path, pinned down by its endpoints. The graphs here are trees,
 * so the initial vertex determines the whole edge sequence; initial equal to
 * terminal encodes the trivial path (the implicit loop edge at a vertex).
 */
struct PathRecord {
    VertexId initial;
    VertexId terminal;

    bool is_trivial() const noexcept { return initial == terminal; }
    friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

/**
 * The generation-k action graph: a labeled directed tree grown from a single
 * root vertex. Going from generation j to j+1 adjoins one new vertex (and
 * one new edge) per path that ends at a label-j vertex.
 *
 * A default-constructed value is the generation-0 graph, so no instance is
 * ever structurally invalid. Once built, a graph is immutable; every query
 * is read-only and safe to run concurrently.
 */
class ActionGraph {
public:
    ActionGraph() {
        VertexRecord root;
        vertices_.push_back(std::move(root));
        by_label_.push_back({0});
    }

    std::uint32_t generation() const noexcept { return generation_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    // Nontrivial edges only; the implicit per-vertex loops are not stored.
    std::size_t nontrivial_edge_count() const noexcept { return vertices_.size() - 1; }

    VertexId root() const noexcept { return 0; }

    const std::vector<VertexRecord>& vertices() const noexcept { return vertices_; }

    const VertexRecord& vertex(VertexId id) const {
        if (id >= vertices_.size())
            throw std::out_of_range("unknown vertex id " + std::to_string(id));
        return vertices_[id];
    }

    /** Ids of all vertices carrying the given label, in creation order. */
    const std::vector<VertexId>& with_label(std::uint32_t label) const {
        if (label >= by_label_.size())
            throw std::out_of_range("no vertices labeled " + std::to_string(label) +
                                    " in a generation-" + std::to_string(generation_) + " graph");
        return by_label_[label];
    }

    friend ActionGraph grow(ActionGraph g);

private:
    std::uint32_t generation_ = 0;
    std::vector<VertexRecord> vertices_;
    std::vector<std::vector<VertexId>> by_label_;
};

/** The generation-0 graph: one root vertex labeled 0, no nontrivial edges. */
inline ActionGraph initial_graph() { return ActionGraph(); }

/**
 * One growth step. For each vertex v of the newest generation, taken in
 * creation order, and for each path ending at v -- equivalently each
 * ancestor-or-self u of v, taken root first -- a new vertex is adjoined with
 * parent_source u and creator_terminal v. Everything already present is
 * left untouched, so the result extends the input id-for-id.
 *
 * Pass an rvalue to reuse the input's storage.
 */
inline ActionGraph grow(ActionGraph g) {
    const std::uint32_t k = g.generation_;
    const std::vector<VertexId>& frontier = g.by_label_[k];

    std::size_t new_count = 0;
    for (VertexId v : frontier) new_count += g.vertices_[v].depth + std::size_t{1};
    g.vertices_.reserve(g.vertices_.size() + new_count);

    std::vector<VertexId> adjoined;
    adjoined.reserve(new_count);

    std::vector<VertexId> chain;
    for (VertexId v : frontier) {
        chain.clear();
        for (VertexId u = v;;) {
            chain.push_back(u);
            const VertexRecord& rec = g.vertices_[u];
            if (rec.is_root()) break;
            u = rec.parent_source;
        }
        std::reverse(chain.begin(), chain.end());  // root first
        for (VertexId u : chain) {
            const VertexId id = static_cast<VertexId>(g.vertices_.size());
            VertexRecord rec;
            rec.id = id;
            rec.label = k + 1;
            rec.parent_source = u;
            rec.creator_terminal = v;
            rec.depth = g.vertices_[u].depth + 1;
            g.vertices_.push_back(std::move(rec));
            g.vertices_[u].children.push_back(id);
            adjoined.push_back(id);
        }
    }

    g.by_label_.push_back(std::move(adjoined));
    ++g.generation_;
    return g;
}

/**
 * The generation-k graph, i.e. grow() applied k times to initial_graph().
 * Deterministic: ids, orderings, and provenance are identical on every run.
 */
inline ActionGraph build(std::uint32_t k, std::uint32_t guard = kDefaultBuildGuard) {
    if (k > guard)
        throw GuardExceededError(k, guard,
                                 "generation " + std::to_string(k) + " exceeds the build guard of " +
                                     std::to_string(guard));
    ActionGraph g;
    for (std::uint32_t step = 0; step < k; ++step) g = grow(std::move(g));
    return g;
}

/** Chain from the root down to v, both inclusive; labels strictly increase. */
inline std::vector<VertexId> ancestors(const ActionGraph& g, VertexId v) {
    std::vector<VertexId> chain;
    chain.reserve(g.vertex(v).depth + std::size_t{1});
    for (VertexId u = v;;) {
        chain.push_back(u);
        const VertexRecord& rec = g.vertex(u);
        if (rec.is_root()) break;
        u = rec.parent_source;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

/**
 * All paths with terminal vertex v: one per ancestor-or-self of v, ordered
 * by the initial vertex's depth, the trivial path last.
 */
inline std::vector<PathRecord> paths_ending_at(const ActionGraph& g, VertexId v) {
    std::vector<PathRecord> paths;
    const std::vector<VertexId> chain = ancestors(g, v);
    paths.reserve(chain.size());
    for (VertexId u : chain) paths.push_back(PathRecord{u, v});
    return paths;
}

/**
 * Number of directed paths whose initial vertex is labeled a and whose
 * terminal vertex is labeled b. For a == b these are the trivial paths, one
 * per label-a vertex. Counts by walking parent links; no path is materialized.
 */
inline BigInt count_paths_between_labels(const ActionGraph& g, std::uint32_t a, std::uint32_t b) {
    if (a > b || b > g.generation())
        throw std::out_of_range("label range [" + std::to_string(a) + ", " + std::to_string(b) +
                                "] is invalid for a generation-" + std::to_string(g.generation()) +
                                " graph");
    const std::vector<VertexId>& targets = g.with_label(b);
    if (a == b) return BigInt(targets.size());

    // Labels strictly increase along any root-to-vertex chain, so a vertex
    // has at most one ancestor with a given label.
    const std::vector<VertexRecord>& vs = g.vertices();
    BigInt count = 0;
    for (VertexId w : targets) {
        VertexId u = w;
        while (!vs[u].is_root() && vs[u].label > a) u = vs[u].parent_source;
        if (vs[u].label == a) ++count;
    }
    return count;
}

/**
 * The newest generation's vertices, in creation order. These are exactly the
 * valence-1 non-root vertices (for the generation-0 graph, the root itself).
 */
inline const std::vector<VertexId>& leaves(const ActionGraph& g) {
    return g.with_label(g.generation());
}

}  // namespace actiongraph

#endif  // ACTIONGRAPH_ACTION_GRAPH_HPP
