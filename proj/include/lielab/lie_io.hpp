#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lielab/algebra.hpp"

namespace lielab {

// `.lie` text: "dim N", optional "name <string>", then "i j k p/q" lines
// meaning coefficient p/q of x_k in [x_i,x_j] with i<j. '#' starts a comment.
// Format problems raise ParseError; a bad table raises JacobiViolation.
LieAlgebra parse_lie(std::string_view text);
LieAlgebra read_lie_file(const std::string& path);

// Canonical text: brackets sorted by (i, j, k); parse_lie(write_lie(g)) == g.
std::string write_lie(const LieAlgebra& g);

// FNV-1a of the canonical text, as 16 hex digits.
std::string structure_hash(const LieAlgebra& g);

}  // namespace lielab
