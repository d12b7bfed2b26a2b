#include <doctest.h>

#include "commring/errors.hpp"
#include "commring/graph_io.hpp"
#include "commring/ring.hpp"

using namespace commring;

TEST_CASE("DIMACS output is canonical and re-reads identically") {
    SimpleGraph g = commuting_graph(presentation_E(3));
    std::string text = write_dimacs(g);
    SimpleGraph back = read_dimacs_text(text);
    CHECK(back == g);
    CHECK(back.has_labels());
    for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(back.label(v) == g.label(v));
    CHECK(write_dimacs(back) == text);
}

TEST_CASE("DIMACS header") {
    SimpleGraph g(3);
    g.add_edge(0, 2);
    std::string text = write_dimacs(g);
    CHECK(text.rfind("p edge 3 1\n", 0) == 0);
    CHECK(text.find("e 1 3\n") != std::string::npos);
}

TEST_CASE("DIMACS parser rejects malformed input") {
    CHECK_THROWS_AS(read_dimacs_text(""), ParseError);
    CHECK_THROWS_AS(read_dimacs_text("e 1 2\n"), ParseError);  // edge first
    CHECK_THROWS_AS(read_dimacs_text("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(read_dimacs_text("p edge 2 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(read_dimacs_text("p edge 2 2\ne 1 2\n"), ParseError);
    CHECK_THROWS_AS(read_dimacs_text("p edge 2 0\nq 1 2\n"), ParseError);
}

TEST_CASE("DIMACS parser tolerates comments and duplicate edges") {
    SimpleGraph g = read_dimacs_text(
        "c free-form comment\np edge 3 2\ne 1 2\ne 2 1\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("DOT output carries labels") {
    SimpleGraph g = commuting_graph(presentation_E(2));
    std::string dot = write_dot(g);
    CHECK(dot.rfind("graph commuting {", 0) == 0);
    CHECK(dot.find("v0 [label=\"1\"];") != std::string::npos);
    CHECK(dot.find("--") == std::string::npos);  // 3K1 has no edges
}
