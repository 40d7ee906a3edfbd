#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bloch/statemap.hpp"
#include "bloch/types.hpp"

namespace bloch {

/// Thrown on file and parse failures (CLI exit 74).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// 17 significant digits: enough to round-trip any binary64 value.
inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Flat JSON array of reals. Emitted by hand so the 17-digit convention is
/// byte-stable regardless of the JSON library's float formatting.
inline std::string vector_to_json(const RVector& v) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << format_real(v[i]);
  }
  out << ']';
  return out.str();
}

/// Nested row-major JSON array with complex entries as [re, im] pairs.
inline std::string matrix_to_json(const CMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (int r = 0; r < m.rows(); ++r) {
    if (r > 0) out << ", ";
    out << '[';
    for (int c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ", ";
      out << '[' << format_real(m(r, c).real()) << ", " << format_real(m(r, c).imag()) << ']';
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

inline RVector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw IoError("expected a JSON array of reals");
  RVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw IoError("vector entry " + std::to_string(i) + " is not a number");
    v[static_cast<int>(i)] = j[i].get<double>();
  }
  return v;
}

inline CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw IoError("expected a nested JSON array (matrix)");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw IoError("matrix rows must be non-empty arrays");
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw IoError("matrix row " + std::to_string(r) + " has inconsistent length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = j[r][c];
      if (cell.is_number()) {
        m(r, c) = cplx(cell.get<double>(), 0.0);
      } else if (cell.is_array() && cell.size() == 2 && cell[0].is_number() &&
                 cell[1].is_number()) {
        m(r, c) = cplx(cell[0].get<double>(), cell[1].get<double>());
      } else {
        throw IoError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                      ") must be a real number or an [re, im] pair");
      }
    }
  }
  return m;
}

inline nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("JSON parse error: ") + e.what());
  }
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

/// Accepts either inline JSON (text starting with '[') or a file path.
inline nlohmann::json load_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '[') return parse_json_text(arg);
  return load_json_file(arg);
}

}  // namespace bloch
