#ifndef QHOL_QMATRIX_HPP
#define QHOL_QMATRIX_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qhol/scalar.hpp"

namespace qhol {

enum class QMatrixMode { general, unimodular };

struct QMatrixReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks q_ii = 1 and q_ij q_ji = 1; in unimodular mode also |q_ij| = 1.
QMatrixReport validate_qmatrix(const Eigen::MatrixXcd& q,
                               QMatrixMode mode = QMatrixMode::general,
                               double tol = kModulusTolerance);

/// A multiplicatively antisymmetric matrix parameterizing x_i x_j = q_ij x_j x_i.
class QMatrix {
 public:
  QMatrix() = default;
  /// Throws InvalidQMatrix if `entries` fails general validation.
  explicit QMatrix(Eigen::MatrixXcd entries);

  /// All entries equal to one: the commutative case.
  static QMatrix commutative(int n);
  /// q_ij = q for i < j, q_ji = 1/q.
  static QMatrix single_parameter(int n, Complex q);
  /// Builds the full matrix from the strictly upper triangle (row-major,
  /// i < j) and fills in the reciprocals.
  static QMatrix from_upper(int n, const std::vector<Complex>& upper);

  int size() const noexcept { return static_cast<int>(entries_.rows()); }
  /// Entry for letters a, b in 1..n.
  Complex operator()(int a, int b) const { return entries_(a - 1, b - 1); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

  bool is_unimodular(double tol = kModulusTolerance) const;
  bool is_commutative(double tol = kModulusTolerance) const;
  /// Entrywise agreement to the modulus tolerance.
  bool same_as(const QMatrix& other, double tol = kModulusTolerance) const;

 private:
  Eigen::MatrixXcd entries_;
};

}  // namespace qhol

#endif
