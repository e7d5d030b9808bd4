#pragma once

#include <string>
#include <string_view>

#include "mlat/quantale.hpp"

namespace mlat {

/// MLAT v1:
///
///   MLAT 1
///   n <N>
///   names <N labels>      (optional)
///   leq
///   <N rows of N tokens in {0,1}; row i column j is 1 iff i <= j>
///   mul
///   <N rows of N element indices in [0, N)>
///
/// ASCII, LF line endings, tokens separated by spaces or tabs. Throws
/// ParseError (with line and column) for malformed text and
/// ValidationError when the order or table violates the axioms.
MultLattice parse_mlat(std::string_view text);

/// Canonical MLAT text; parse_mlat(emit_mlat(M)) == M.
std::string emit_mlat(const MultLattice& M);

/// Hasse diagram in Graphviz DOT, edges lower -> upper.
std::string emit_dot(const MultLattice& M);

/// Reads and parses a file. Throws Error{InvalidArgument} when the file
/// cannot be read.
MultLattice read_mlat_file(const std::string& path);

}  // namespace mlat
