#ifndef QHOL_SRC_JSON_UTIL_HPP
#define QHOL_SRC_JSON_UTIL_HPP

#include <limits>
#include <string>

#include "json.hpp"
#include "qhol/error.hpp"
#include "qhol/qmatrix.hpp"
#include "qhol/scalar.hpp"

namespace qhol::detail {

using nlohmann::json;

inline Complex json_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorCode::FormatError, "expected a number or [re, im] pair");
}

inline json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline double json_radius(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string() && (j.get<std::string>() == "+inf" || j.get<std::string>() == "inf")) {
    return std::numeric_limits<double>::infinity();
  }
  throw Error(ErrorCode::FormatError, "radii must be numbers or \"+inf\"");
}

inline bool is_complex_scalar(const json& j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

/// A scalar (single-parameter matrix) or a full rows x cols array.
inline Eigen::MatrixXcd json_matrix(const json& j, int rows, int cols) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows)) {
    throw Error(ErrorCode::FormatError, "expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " array");
  }
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != static_cast<std::size_t>(cols)) {
      throw Error(ErrorCode::FormatError, "expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " array");
    }
    for (int c = 0; c < cols; ++c) m(i, c) = json_complex(j[i][c]);
  }
  return m;
}

inline QMatrix json_qmatrix(const json& j, int n) {
  if (is_complex_scalar(j)) return QMatrix::single_parameter(n, json_complex(j));
  return QMatrix(json_matrix(j, n, n));
}

}  // namespace qhol::detail

#endif
