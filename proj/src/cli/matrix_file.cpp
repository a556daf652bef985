#include "semirange/cli/matrix_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semirange/errors.hpp"

namespace semirange::cli {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Complex parse_complex(const json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
    schema_error(where + ": expected [re, im]");
  }
  return {node[0].get<double>(), node[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& doc, const char* key) {
  if (!doc.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
  const json& rows = doc[key];
  if (!rows.is_array() || rows.empty()) schema_error(std::string(key) + ": expected a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      schema_error(std::string(key) + ": row " + std::to_string(i) + " does not have " + std::to_string(n) +
                   " entries");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = parse_complex(row[static_cast<size_t>(j)],
                              std::string(key) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return m;
}

json dump_complex(Complex z) { return json::array({z.real(), z.imag()}); }

json dump_matrix(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(dump_complex(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

QValue checked_q(Complex q) {
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag()) || std::abs(q) > 1.0 + 1e-12) {
    throw Error(ErrorKind::ParseError, "q must satisfy |q| <= 1");
  }
  return QValue(q);
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "malformed matrix file at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) schema_error("matrix file must be a JSON object");
  MatrixFile file;
  file.a = parse_matrix(doc, "A");
  file.t = parse_matrix(doc, "T");
  if (file.a.rows() != file.t.rows()) {
    throw Error(ErrorKind::ParseError, "A is " + std::to_string(file.a.rows()) + "x" + std::to_string(file.a.rows()) +
                                           " but T is " + std::to_string(file.t.rows()) + "x" +
                                           std::to_string(file.t.rows()));
  }
  if (doc.contains("q")) file.q = checked_q(parse_complex(doc["q"], "q"));
  return file;
}

MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

std::string dump_matrix_file(const MatrixFile& file) {
  json doc;
  doc["A"] = dump_matrix(file.a);
  doc["T"] = dump_matrix(file.t);
  if (file.q) doc["q"] = dump_complex(file.q->value());
  return doc.dump(2) + "\n";
}

QValue parse_q(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return checked_q({parse_double(text), 0.0});
  return checked_q({parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))});
}

}  // namespace semirange::cli
