#pragma once

// Text instance files.
//
// Matrix form:        Euclidean form:
//   p                   EUC2D
//   w11 ... w1p         p
//   ...                 x1 y1
//   wp1 ... wpp         ...
//
// Lines starting with '#' are comments. Labels are implicit (1..p).

#include <iosfwd>
#include <string>

#include "hamtsp/core.hpp"

namespace hamtsp {

// Throws kParseError or kSymmetryViolation.
Instance parse_instance(std::istream& in, std::string name = {});
Instance read_instance_file(const std::string& path);

// Writes the Euclidean form when the instance carries coordinates. Numbers use
// the shortest round-tripping representation.
void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

std::string format_number(double x);

}  // namespace hamtsp
