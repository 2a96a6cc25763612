#pragma once

#include <string>

#include "json.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// Lattice files are JSON objects:
//   {"rank": 2, "gram": [[4, 9], [9, 8]], "labels": ["f4", "f8"]}
// `labels` is optional.  Gram entries are JSON integers or decimal strings
// (for values beyond 64 bits).  Errors name the offending field and index.
IntegralLattice parse_lattice(const std::string& text);
IntegralLattice load_lattice_file(const std::string& path);
nlohmann::ordered_json lattice_to_json(const IntegralLattice& lattice);

// Integer combination of basis labels, e.g. "5*f4 - 1*f8" or "f8-2*e":
//   expr := [sign] term (("+" | "-") term)*
//   term := [integer "*"] label
// Whitespace is ignored.  Labels are the lattice's basis names (v1..vr when
// the lattice has none).
LatticeVector parse_vector_expr(const IntegralLattice& lattice, const std::string& expr);
std::string format_vector_expr(const IntegralLattice& lattice, const LatticeVector& v);

// Parses a decimal integer of any size; throws InputError naming `what`.
Integer parse_integer(const std::string& text, const std::string& what);

}  // namespace k3lat
