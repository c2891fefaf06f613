// Finitely presented algebra descriptions and their line-oriented file format.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irrep/freealg.hpp"

namespace irrep {

struct Presentation {
  FieldSpec field;
  std::uint32_t n = 1;              // target representation dimension
  std::vector<std::string> gens;    // generator names, order fixes indices
  std::vector<NcPolynomial> relations;
  std::vector<std::string> hints;   // word-set hints, verbatim lines
};

// Line-oriented format, '#' comments:
//   field: QQ | GF(p)
//   dimension: n
//   generators: X Y Z
//   relation: <expression>     (repeatable)
//   hint: <text>               (repeatable)
Presentation parse_presentation(const std::string& text);

// canonical re-emission; parses back to an equal Presentation
std::string print_presentation(const Presentation& p);

// builds one relation from an expression over the presentation's generators
NcPolynomial parse_relation(const std::string& text, const FieldSpec& field,
                            const std::vector<std::string>& gens, int line = 1, int col = 1);

}  // namespace irrep
