#pragma once

#include <iosfwd>
#include <string>

#include "commring/ring.hpp"

namespace commring {

/// Serialises a ring in the versioned "commring/1" text format: a JSON
/// object with fields format, order, name, add, mul in that order. The
/// writer is canonical, so write(read(s)) == s for files it produced.
std::string write_ring_text(const FiniteRing& r);
void write_ring_file(const FiniteRing& r, const std::string& path);

/// Parses and validates a commring/1 object.
/// Throws ParseError on malformed input and the validate_ring errors on
/// tables that are not a ring.
FiniteRing read_ring_text(const std::string& text);
FiniteRing read_ring_file(const std::string& path);

}  // namespace commring
