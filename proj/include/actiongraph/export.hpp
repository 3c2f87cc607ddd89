#ifndef ACTIONGRAPH_EXPORT_HPP
#define ACTIONGRAPH_EXPORT_HPP

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include <actiongraph/action_graph.hpp>
#include <actiongraph/planar_tree.hpp>

namespace actiongraph {

/**
 * Graphviz document: one node statement per vertex (named v<id>, labeled
 * with the vertex's generation) and one edge statement per non-root vertex,
 * both in id order. Byte-stable across runs.
 */
inline void write_dot(const ActionGraph& g, std::ostream& out) {
    out << "digraph actiongraph {\n";
    for (const VertexRecord& rec : g.vertices())
        out << "  v" << rec.id << " [label=\"" << rec.label << "\"];\n";
    for (const VertexRecord& rec : g.vertices())
        if (!rec.is_root()) out << "  v" << rec.parent_source << " -> v" << rec.id << ";\n";
    out << "}\n";
}

/**
 * JSON document with top-level keys generation, vertices, counts, in that
 * order. Vertex objects carry id, label, parentSource, creatorTerminal,
 * depth; the root's parentSource and creatorTerminal are null. Per-label
 * counts are decimal strings (they outgrow doubles quickly). Streamed and
 * compact; one trailing newline.
 */
inline void write_json(const ActionGraph& g, std::ostream& out) {
    out << "{\"generation\":" << g.generation() << ",\"vertices\":[";
    bool first = true;
    for (const VertexRecord& rec : g.vertices()) {
        if (!first) out << ',';
        first = false;
        out << "{\"id\":" << rec.id << ",\"label\":" << rec.label << ",\"parentSource\":";
        if (rec.is_root())
            out << "null";
        else
            out << rec.parent_source;
        out << ",\"creatorTerminal\":";
        if (rec.is_root())
            out << "null";
        else
            out << rec.creator_terminal;
        out << ",\"depth\":" << rec.depth << '}';
    }
    out << "],\"counts\":{";
    for (std::uint32_t label = 0; label <= g.generation(); ++label) {
        if (label != 0) out << ',';
        out << '"' << label << "\":\"" << g.with_label(label).size() << '"';
    }
    out << "}}\n";
}

/** Nested-array form of a tree: each node is the JSON array of its children. */
inline void write_tree_json(const PlanarTree& t, std::ostream& out) {
    out << '[';
    bool first = true;
    for (const PlanarTree& c : t.children) {
        if (!first) out << ',';
        first = false;
        write_tree_json(c, out);
    }
    out << ']';
}

inline std::string dot_string(const ActionGraph& g) {
    std::ostringstream out;
    write_dot(g, out);
    return out.str();
}

inline std::string json_string(const ActionGraph& g) {
    std::ostringstream out;
    write_json(g, out);
    return out.str();
}

inline std::string tree_json_string(const PlanarTree& t) {
    std::ostringstream out;
    write_tree_json(t, out);
    return out.str();
}

}  // namespace actiongraph

#endif  // ACTIONGRAPH_EXPORT_HPP
