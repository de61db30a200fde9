#pragma once

#include <string>

#include "hadamat/matrix.hpp"

namespace hadamat {

/// Textual matrix format, version "hadamat-matrix v1":
///
///   hadamat-matrix v1
///   order 60
///   dim 3
///   scale 0
///   1 z60^20 z60^40
///   ...
///
/// Entries are whitespace-separated tokens: integer literals, pure roots
/// `zM^k` (M must divide the header order), or full coefficient lists
/// `[c0,c1,...]` of exactly phi(order) rationals written `p` or `p/q`.
/// Files are newline-terminated UTF-8, no BOM. print followed by parse is
/// the identity; parse rejects wrong entry counts and wrong-length
/// coefficient lists.
CycloMatrix parse_matrix(const std::string& text);
std::string print_matrix(const CycloMatrix& m);

/// One entry in the format's token syntax (canonical form: integer if
/// rational integer, zM^k if a pure root, coefficient list otherwise).
std::string entry_to_string(const CycloNum& x);
CycloNum parse_entry(const std::string& token, int order);

} // namespace hadamat
