#ifndef QHOL_ORE_HPP
#define QHOL_ORE_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "qhol/qseries.hpp"

namespace qhol {

/// Coefficient algebra A = O_q(C^m) with an endomorphism sigma and a
/// sigma-derivation delta, both given by generator images and extended
/// multiplicatively (sigma) or by the twisted Leibniz rule (delta).
struct OreSpec {
  QMatrix q;
  std::vector<QSeries> sigma;  // sigma(x_i)
  std::vector<QSeries> delta;  // delta(x_i)

  /// Throws IncompatibleSpecs if the image counts or algebras disagree.
  void check() const;
  bool same_as(const OreSpec& other) const;
};

/// sigma applied to an element of A.
QSeries apply_sigma(const OreSpec& spec, const QSeries& a);
/// delta applied to an element of A: for a monomial x_{l_1} ... x_{l_d},
/// sum_p sigma(x_{l_1} ... x_{l_{p-1}}) delta(x_{l_p}) x_{l_{p+1}} ... x_{l_d}.
QSeries apply_delta(const OreSpec& spec, const QSeries& a);

/// sum_d a_d z^d in A[z; sigma, delta], coefficients on the left.
class OrePoly {
 public:
  OrePoly() = default;
  explicit OrePoly(std::shared_ptr<const OreSpec> spec);

  /// The variable z.
  static OrePoly variable(std::shared_ptr<const OreSpec> spec);
  /// a z^0.
  static OrePoly coefficient(std::shared_ptr<const OreSpec> spec, const QSeries& a);

  const std::shared_ptr<const OreSpec>& spec() const noexcept { return spec_; }
  const std::map<int, QSeries>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Highest z-degree, -1 for zero.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  /// Adds a z^d.
  void add(int d, const QSeries& a);

  OrePoly& operator+=(const OrePoly& other);
  OrePoly& operator-=(const OrePoly& other);
  OrePoly& operator*=(Complex c);

  bool compatible(const OrePoly& other) const;
  bool approx_equal(const OrePoly& other, double rel_tol = kRelativeTolerance) const;

 private:
  std::shared_ptr<const OreSpec> spec_;
  std::map<int, QSeries> coeffs_;
};

/// Product via z a = sigma(a) z + delta(a). Throws IncompatibleSpecs.
OrePoly ore_mul(const OrePoly& p, const OrePoly& r);
OrePoly ore_pow(const OrePoly& p, long exponent);

inline OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
inline OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
inline OrePoly operator*(const OrePoly& a, const OrePoly& b) { return ore_mul(a, b); }

/// Checks sigma(ab) = sigma(a) sigma(b) and delta(ab) = delta(a) b + sigma(a) delta(b)
/// on all monomial pairs with total degree <= sample_degree.
bool validate_sigma_derivation(const OreSpec& spec, int sample_degree);

/// Enveloping algebra of the Lie algebra with [x, y] = y as C[y][x; id, y d/dy].
std::shared_ptr<const OreSpec> ug_spec();

/// Coefficients c_ij of an element of U(g) in the basis x^i y^j (x on the left).
std::map<std::pair<int, int>, Complex> ug_xy_coefficients(const OrePoly& a);
/// Builds sum c_ij x^i y^j as an Ore polynomial.
OrePoly ug_from_xy(const std::map<std::pair<int, int>, Complex>& coefficients);

}  // namespace qhol

#endif
