// Point files: an extension tower followed by one matrix per generator.
#pragma once

#include <string>

#include "irrep/pipeline.hpp"

namespace irrep {

// Line-oriented, '#' comments:
//   tower: t1 = t^2 - 2            (optional, ordered; t is the level variable,
//                                   earlier level names may appear in coefficients)
//   matrix X: [[1, t1], [0, -t1]]  (one per generator, entries are expressions
//                                   in the tower variables)
//   witness: tr[M2 * s2(M3,M4)]    (optional)
// Field, dimension and generator names come from the presentation.
RepresentationPoint parse_point(const std::string& text, const Presentation& pres);

// canonical re-emission; parses back to an equivalent point
std::string print_point(const RepresentationPoint& point);

}  // namespace irrep
