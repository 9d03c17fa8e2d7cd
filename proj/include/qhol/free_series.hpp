#ifndef QHOL_FREE_SERIES_HPP
#define QHOL_FREE_SERIES_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qhol/qseries.hpp"
#include "qhol/terms.hpp"
#include "qhol/word.hpp"

namespace qhol {

/// A noncommutative polynomial sum c_alpha zeta_alpha in n free generators.
class FreeSeries {
 public:
  FreeSeries() = default;
  explicit FreeSeries(int n) : n_(n) {}

  static FreeSeries constant(int n, Complex c);
  static FreeSeries monomial(int n, const Word& w, Complex c = 1.0);
  /// zeta_i, 1-based.
  static FreeSeries generator(int n, int i);

  int generators() const noexcept { return n_; }
  const TermMap<Word>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Complex coefficient(const Word& w) const { return terms_.coefficient(w); }
  /// Largest word length in the support, -1 for zero.
  int degree() const;

  void add_term(const Word& w, Complex c);

  FreeSeries& operator+=(const FreeSeries& other);
  FreeSeries& operator-=(const FreeSeries& other);
  FreeSeries& operator*=(Complex c);

  bool approx_equal(const FreeSeries& other, double rel_tol = kRelativeTolerance) const {
    return n_ == other.n_ && terms_.approx_equal(other.terms_, rel_tol);
  }
  friend bool operator==(const FreeSeries&, const FreeSeries&) = default;

 private:
  int n_ = 0;
  TermMap<Word> terms_;
};

/// Concatenation product. Throws GeneratorCountMismatch.
FreeSeries fmul(const FreeSeries& f, const FreeSeries& g);
FreeSeries fpow(const FreeSeries& f, long exponent);

inline FreeSeries operator+(FreeSeries a, const FreeSeries& b) { return a += b; }
inline FreeSeries operator-(FreeSeries a, const FreeSeries& b) { return a -= b; }
inline FreeSeries operator*(const FreeSeries& a, const FreeSeries& b) { return fmul(a, b); }
inline FreeSeries operator*(Complex c, FreeSeries a) { return a *= c; }

/// zeta_i -> z_i into the commutative polynomial algebra.
QSeries abelianize(const FreeSeries& f);

using MatrixTuple = std::vector<Eigen::MatrixXcd>;

/// sum c_alpha a_{alpha_1} ... a_{alpha_d}, with the empty word sent to the
/// identity. Throws DimensionMismatch on ragged or non-square tuples.
Eigen::MatrixXcd eval_matrices(const FreeSeries& f, std::span<const Eigen::MatrixXcd> a);

/// g(f_1, ..., f_m): substitutes f_i for the i-th generator of g.
/// Throws ArityMismatch.
FreeSeries superpose(const FreeSeries& g, std::span<const FreeSeries> f);

/// Point evaluation of a commutative polynomial. Throws ArityMismatch.
Complex eval_commutative(const QSeries& p, const Eigen::VectorXcd& point);

}  // namespace qhol

#endif
