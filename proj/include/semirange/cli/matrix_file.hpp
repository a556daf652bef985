#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "semirange/types.hpp"

namespace semirange::cli {

/// {"A": [[[re, im], ...], ...], "T": [[[re, im], ...], ...], "q": [re, im]}
struct MatrixFile {
  ComplexMatrix a;
  ComplexMatrix t;
  std::optional<QValue> q;
};

/// Throws Error(ParseError) with the byte offset for malformed JSON and the
/// field name for schema violations.
MatrixFile parse_matrix_file(std::string_view text);
MatrixFile load_matrix_file(const std::string& path);
std::string dump_matrix_file(const MatrixFile& file);

/// "re,im" or "re".
QValue parse_q(std::string_view text);

}  // namespace semirange::cli
