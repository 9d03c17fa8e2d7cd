#include "qhol/qseries.hpp"

#include "qhol/error.hpp"

namespace qhol {

QSeries::QSeries(QMatrix q, Support support) : q_(std::move(q)), support_(support) {
  if (support_ == Support::integer && !q_.is_unimodular()) {
    throw Error(ErrorCode::InvalidQMatrix, "Laurent support needs |q_ij| = 1 for all i, j");
  }
}

QSeries QSeries::constant(const QMatrix& q, Complex c, Support support) {
  return monomial(q, ExponentVector(static_cast<std::size_t>(q.size())), c, support);
}

QSeries QSeries::monomial(const QMatrix& q, const ExponentVector& k, Complex c, Support support) {
  QSeries out(q, support);
  out.add_term(k, c);
  return out;
}

QSeries QSeries::generator(const QMatrix& q, int i, Support support) {
  if (i < 1 || i > q.size()) throw Error(ErrorCode::IndexOutOfRange, "generator index outside 1..n");
  ExponentVector k(static_cast<std::size_t>(q.size()));
  k[i - 1] = 1;
  return monomial(q, k, 1.0, support);
}

void QSeries::add_term(const ExponentVector& k, Complex c) {
  if (k.size() != static_cast<std::size_t>(q_.size())) {
    throw Error(ErrorCode::LengthMismatch, "exponent vector length differs from n");
  }
  if (support_ == Support::nonnegative && !k.is_nonnegative()) {
    throw Error(ErrorCode::NegativeExponentInPolydiskMode, "negative exponent " + to_string(k) + " in polynomial mode");
  }
  terms_.add(k, c);
}

void QSeries::check_compatible(const QSeries& other) const {
  if (!same_algebra(other)) throw Error(ErrorCode::QMatrixMismatch, "operands use different q matrices or supports");
}

bool QSeries::same_algebra(const QSeries& other) const {
  return support_ == other.support_ && q_.same_as(other.q_);
}

QSeries& QSeries::operator+=(const QSeries& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) terms_.add(k, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  check_compatible(other);
  for (const auto& [k, c] : other.terms_) terms_.add(k, -c);
  return *this;
}

QSeries& QSeries::operator*=(Complex c) {
  terms_.scale(c);
  return *this;
}

bool QSeries::approx_equal(const QSeries& other, double rel_tol) const {
  return same_algebra(other) && terms_.approx_equal(other.terms_, rel_tol);
}

Complex bicharacter(const QMatrix& q, const ExponentVector& k, const ExponentVector& l) {
  Complex c(1.0);
  const int n = q.size();
  for (int i = 1; i <= n; ++i) {
    if (k[i - 1] == 0) continue;
    for (int j = 1; j < i; ++j) {
      const long e = static_cast<long>(k[i - 1]) * l[j - 1];
      if (e != 0) c *= ipow(q(i, j), e);
    }
  }
  return c;
}

QSeries qmul(const QSeries& a, const QSeries& b) {
  if (!a.same_algebra(b)) throw Error(ErrorCode::QMatrixMismatch, "operands use different q matrices or supports");
  QSeries out(a.q(), a.support());
  for (const auto& [k, ck] : a.terms()) {
    for (const auto& [l, cl] : b.terms()) {
      out.add_term(k + l, ck * cl * bicharacter(a.q(), k, l));
    }
  }
  return out;
}

QSeries qpow(const QSeries& a, long exponent) {
  if (exponent < 0) {
    if (a.support() != Support::integer || a.terms().size() != 1) {
      throw Error(ErrorCode::NotInvertible, "negative powers need a Laurent monomial");
    }
    const auto& [k, c] = *a.terms().begin();
    // (c x^k)^{-1} = c^{-1} c(-k, k)^{-1} x^{-k}, since x^{-k} x^k = c(-k, k) x^0.
    ExponentVector minus_k = ExponentVector(k.size()) - k;
    QSeries inv = QSeries::monomial(a.q(), minus_k, 1.0 / (c * bicharacter(a.q(), minus_k, k)), Support::integer);
    return qpow(inv, -exponent);
  }
  QSeries result = QSeries::constant(a.q(), 1.0, a.support());
  QSeries base = a;
  while (exponent > 0) {
    if (exponent & 1) result = qmul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = qmul(base, base);
  }
  return result;
}

}  // namespace qhol
