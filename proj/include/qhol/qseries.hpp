#ifndef QHOL_QSERIES_HPP
#define QHOL_QSERIES_HPP

#include "qhol/qmatrix.hpp"
#include "qhol/terms.hpp"
#include "qhol/word.hpp"

namespace qhol {

enum class Support { nonnegative, integer };

/// A finitely supported element sum c_k x^k of the quantum polynomial
/// algebra (nonnegative exponents) or quantum Laurent algebra (integer
/// exponents) attached to a q matrix.
class QSeries {
 public:
  QSeries() = default;
  /// Integer support requires a unimodular q (InvalidQMatrix otherwise).
  explicit QSeries(QMatrix q, Support support = Support::nonnegative);

  static QSeries constant(const QMatrix& q, Complex c, Support support = Support::nonnegative);
  static QSeries monomial(const QMatrix& q, const ExponentVector& k, Complex c = 1.0,
                          Support support = Support::nonnegative);
  /// x_i, 1-based.
  static QSeries generator(const QMatrix& q, int i, Support support = Support::nonnegative);

  int generators() const noexcept { return q_.size(); }
  const QMatrix& q() const noexcept { return q_; }
  Support support() const noexcept { return support_; }
  const TermMap<ExponentVector>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Complex coefficient(const ExponentVector& k) const { return terms_.coefficient(k); }

  /// Throws NegativeExponentInPolydiskMode / LengthMismatch on bad keys.
  void add_term(const ExponentVector& k, Complex c);

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(Complex c);

  bool approx_equal(const QSeries& other, double rel_tol = kRelativeTolerance) const;
  /// Same q (to tolerance) and same support mode.
  bool same_algebra(const QSeries& other) const;

 private:
  void check_compatible(const QSeries& other) const;

  QMatrix q_;
  Support support_ = Support::nonnegative;
  TermMap<ExponentVector> terms_;
};

/// c(k, l) with x^k x^l = c(k, l) x^{k+l}: prod_{i>j} q_ij^{k_i l_j}.
Complex bicharacter(const QMatrix& q, const ExponentVector& k, const ExponentVector& l);

/// Product in the quantum algebra, extended bilinearly from monomials.
/// Throws QMatrixMismatch if the operands live in different algebras.
QSeries qmul(const QSeries& a, const QSeries& b);

/// Non-negative integer power; negative powers are allowed for monomials of
/// Laurent series only (NotInvertible otherwise).
QSeries qpow(const QSeries& a, long exponent);

inline QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
inline QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return qmul(a, b); }
inline QSeries operator*(Complex c, QSeries a) { return a *= c; }

}  // namespace qhol

#endif
