#pragma once

#include <string>
#include <vector>

#include "surfcode/linear_code.hpp"
#include "surfcode/projective.hpp"

namespace surfcode {

// Whole-file helpers; throw ParseError on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Homogeneous polynomial files:
//   field: GF(4;t^2+t+1)
//   degree: 3
//   3 0 0 0 1
//   0 0 3 0 t+1
// One term per line: exponents (3 or 4 of them, consistently) followed by a
// coefficient in the field's element syntax.  '#' starts a comment.
std::string poly_to_text(const HomogPoly& f);
HomogPoly poly_from_text(const std::string& text);
HomogPoly poly_from_file(const std::string& path);

// Generator matrix files:
//   7 4 2
//   1 0 0 0 0 1 1
//   ...
// Header line "n k q"; for extension fields a "field: GF(...)" line follows
// the header.  Loaded rows are row-reduced again, so k must match the rank.
std::string matrix_to_text(const LinearCode& C);
LinearCode matrix_from_text(const std::string& text);
LinearCode matrix_from_file(const std::string& path);

// Point list files: a "field:" header line, then one x0:x1:x2:x3 per line.
std::string points_to_text(const Field& F, const std::vector<Point>& pts);
std::vector<Point> points_from_text(const std::string& text);

}  // namespace surfcode
