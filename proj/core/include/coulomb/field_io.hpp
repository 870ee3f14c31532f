#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "coulomb/grid.hpp"

namespace coulomb {

// Plain-text field format:
//
//   grid3 nx ny nz ox oy oz hx hy hz
//   <one line per cell, x fastest: 1 value (scalar) or 3 values (vector)>
//
// All numbers are written with %.17g so a write/read cycle is exact.

/// %.17g formatting used by every writer in the library.
std::string format_number(double v);

void write_field(std::ostream& os, const ScalarField& f);
void write_field(std::ostream& os, const VectorField3& f);

/// Throws FormatError on malformed input or a component count mismatch.
ScalarField read_scalar_field(std::istream& is);
VectorField3 read_vector_field(std::istream& is);

/// Comma-separated table with a header row.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Re-emits a JSON document with every floating-point number in %.17g and
/// the given indent; key order is preserved. Throws FormatError on bad JSON.
std::string canonical_json(std::string_view json_text, int indent = 2);

}  // namespace coulomb
