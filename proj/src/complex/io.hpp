#pragma once

#include <cstdint>
#include <string>

#include "complex/triangulation.hpp"

namespace hexcol {

// Text format:
//   # comment
//   vertices N
//   pentachoron i1 i2 i3 i4 i5
// Facets of other dimensions use `tetrahedron`, `triangle`, `edge`, `vertex`
// or the generic `simplex`. Every vertex 1..N must be used.
Triangulation parse_text(const std::string& document);

// {"vertices": N, "pentachora": [[...], ...]}; "facets" is accepted as the
// key for any dimension.
Triangulation parse_json(const std::string& document);

// Dispatches on the first non-blank character ('{' means JSON).
Triangulation parse_triangulation(const std::string& document);

std::string serialize_text(const Triangulation& t);
std::string serialize_json(const Triangulation& t);

Triangulation load_triangulation(const std::string& path);

// FNV-1a of the text serialization, as 16 hex digits.
std::string fingerprint(const Triangulation& t);

}  // namespace hexcol
