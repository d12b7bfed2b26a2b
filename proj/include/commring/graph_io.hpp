#pragma once

#include <string>

#include "commring/graph.hpp"

namespace commring {

/// DIMACS edge format: "p edge <vertices> <edges>" then one "e i j" line per
/// edge, 1-indexed, i < j. Vertex labels, when present, are recorded as
/// "c label <i> <element>" comment lines and restored on import.
std::string write_dimacs(const SimpleGraph& g);
SimpleGraph read_dimacs_text(const std::string& text);
SimpleGraph read_dimacs_file(const std::string& path);

/// DOT output; vertex labels are the ring element indices when present.
std::string write_dot(const SimpleGraph& g);

}  // namespace commring
