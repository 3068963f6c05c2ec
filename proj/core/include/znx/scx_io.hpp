#pragma once

// ".scx" complex files:
//   scx 1
//   v <vertex_count>
//   <one maximal face per line, sorted 0-based ids separated by spaces>
// The writer emits maximal faces in lexicographic order.

#include <iosfwd>
#include <string>

#include "znx/complex.hpp"

namespace znx {

SimplicialComplex read_scx(std::istream& in);
SimplicialComplex read_scx_file(const std::string& path);
void write_scx(std::ostream& out, const SimplicialComplex& c);
void write_scx_file(const std::string& path, const SimplicialComplex& c);
std::string to_scx(const SimplicialComplex& c);

}  // namespace znx
