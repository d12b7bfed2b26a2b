#include "commring/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "commring/errors.hpp"

namespace commring {

std::string write_dimacs(const SimpleGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "c label " << v + 1 << " " << g.label(v) << "\n";
    for (int u = 0; u < g.vertex_count(); ++u) {
        const BitVec& row = g.row(u);
        for (int v = row.find_next(u); v >= 0; v = row.find_next(v))
            out << "e " << u + 1 << " " << v + 1 << "\n";
    }
    return out.str();
}

SimpleGraph read_dimacs_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int m = -1, edges = -1, seen_edges = 0;
    SimpleGraph g;
    std::vector<int> labels;
    bool any_label = false;

    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto bad = [&](const std::string& why) {
            throw ParseError("DIMACS line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "c") {
            std::string kind;
            if (m >= 0 && (ls >> kind) && kind == "label") {
                int v, lab;
                if (ls >> v >> lab) {
                    if (v < 1 || v > m) bad("label vertex out of range");
                    labels[v - 1] = lab;
                    any_label = true;
                }
            }
        } else if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> m >> edges) || fmt != "edge")
                bad("expected 'p edge <vertices> <edges>'");
            if (m < 0) bad("negative vertex count");
            g = SimpleGraph(m);
            labels.assign(m, 0);
        } else if (tag == "e") {
            if (m < 0) bad("edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) bad("expected 'e <u> <v>'");
            if (u < 1 || u > m || v < 1 || v > m) bad("vertex out of range");
            if (u == v) bad("self-loop");
            if (!g.adjacent(u - 1, v - 1)) ++seen_edges;
            g.add_edge(u - 1, v - 1);
        } else {
            bad("unknown line type '" + tag + "'");
        }
    }
    if (m < 0) throw ParseError("DIMACS input has no problem line");
    if (edges >= 0 && seen_edges != edges)
        throw ParseError("DIMACS edge count mismatch: header says " +
                         std::to_string(edges) + ", found " +
                         std::to_string(seen_edges));
    if (any_label) g.set_labels(std::move(labels));
    return g;
}

SimpleGraph read_dimacs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_dimacs_text(buf.str());
}

std::string write_dot(const SimpleGraph& g) {
    std::ostringstream out;
    out << "graph commuting {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v;
        if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
        out << ";\n";
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        const BitVec& row = g.row(u);
        for (int v = row.find_next(u); v >= 0; v = row.find_next(v))
            out << "  v" << u << " -- v" << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace commring
