#include "qhol/qmatrix.hpp"

#include <sstream>

#include "qhol/error.hpp"

namespace qhol {

QMatrixReport validate_qmatrix(const Eigen::MatrixXcd& q, QMatrixMode mode, double tol) {
  QMatrixReport report;
  auto flag = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };
  if (q.rows() != q.cols()) {
    flag("matrix is not square");
    return report;
  }
  const auto n = q.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(q(i, i) - Complex(1.0)) > tol) {
      std::ostringstream os;
      os << "q_" << i + 1 << i + 1 << " != 1";
      flag(os.str());
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!std::isfinite(std::abs(q(i, j))) || std::abs(q(i, j) * q(j, i) - Complex(1.0)) > tol) {
        std::ostringstream os;
        os << "q_" << i + 1 << j + 1 << " * q_" << j + 1 << i + 1 << " != 1";
        flag(os.str());
      }
      if (mode == QMatrixMode::unimodular) {
        for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
          if (std::abs(std::abs(q(a, b)) - 1.0) > tol) {
            std::ostringstream os;
            os << "|q_" << a + 1 << b + 1 << "| != 1";
            flag(os.str());
          }
        }
      }
    }
  }
  return report;
}

QMatrix::QMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  auto report = validate_qmatrix(entries_);
  if (!report.ok) {
    std::string msg = "q matrix is not multiplicatively antisymmetric:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw Error(ErrorCode::InvalidQMatrix, msg);
  }
}

QMatrix QMatrix::commutative(int n) {
  return QMatrix(Eigen::MatrixXcd::Ones(n, n));
}

QMatrix QMatrix::single_parameter(int n, Complex q) {
  std::vector<Complex> upper(static_cast<std::size_t>(n * (n - 1) / 2), q);
  return from_upper(n, upper);
}

QMatrix QMatrix::from_upper(int n, const std::vector<Complex>& upper) {
  if (upper.size() != static_cast<std::size_t>(n * (n - 1) / 2)) {
    throw Error(ErrorCode::DimensionMismatch, "upper triangle has wrong length");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(n, n);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = upper[idx++];
      m(j, i) = 1.0 / m(i, j);
    }
  }
  return QMatrix(std::move(m));
}

bool QMatrix::is_unimodular(double tol) const {
  return validate_qmatrix(entries_, QMatrixMode::unimodular, tol).ok;
}

bool QMatrix::is_commutative(double tol) const {
  if (size() == 0) return true;
  return (entries_.array() - Complex(1.0)).abs().maxCoeff() <= tol;
}

bool QMatrix::same_as(const QMatrix& other, double tol) const {
  if (size() != other.size()) return false;
  if (size() == 0) return true;
  return (entries_ - other.entries_).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qhol
