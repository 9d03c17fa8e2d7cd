#ifndef QHOL_SMASH_HPP
#define QHOL_SMASH_HPP

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qhol/ore.hpp"
#include "qhol/qseries.hpp"
#include "qhol/terms.hpp"

namespace qhol {

/// Data of a smash product A #_S B where A = O_{q_A} and B = O_{q_B} are
/// quantum polynomial (or Laurent) algebras, S = Z_+^p (or Z^p when B has
/// Laurent support) with p = number of generators of B, and the monomial
/// w^l of B is homogeneous of degree l. Generator j of S acts on A through
/// the endomorphism with images action[j][i] = e_j . x_i.
struct SmashSpec {
  QMatrix a_q;
  Support a_support = Support::nonnegative;
  QMatrix b_q;
  Support b_support = Support::nonnegative;
  std::vector<std::vector<QSeries>> action;
  /// Set by make_qproduct_spec: the action is z_i -> q_ij^{-1} z_i.
  bool qproduct = false;

  void check() const;
  bool same_as(const SmashSpec& other) const;
};

/// s . a for s in S.
QSeries act(const SmashSpec& spec, const ExponentVector& s, const QSeries& a);

using BiExponent = std::pair<ExponentVector, ExponentVector>;

struct BiExponentOrder {
  bool operator()(const BiExponent& x, const BiExponent& y) const {
    const long dx = x.first.total() + x.second.total(), dy = y.first.total() + y.second.total();
    if (dx != dy) return dx < dy;
    return x < y;
  }
};

/// sum c_{k,l} x^k (x) w^l in A #_S B.
class SmashElement {
 public:
  SmashElement() = default;
  explicit SmashElement(std::shared_ptr<const SmashSpec> spec);

  static SmashElement term(std::shared_ptr<const SmashSpec> spec, const ExponentVector& a, const ExponentVector& b,
                           Complex c = 1.0);
  static SmashElement unit(std::shared_ptr<const SmashSpec> spec);
  /// a (x) 1 and 1 (x) b.
  static SmashElement left(std::shared_ptr<const SmashSpec> spec, const QSeries& a);
  static SmashElement right(std::shared_ptr<const SmashSpec> spec, const QSeries& b);

  const std::shared_ptr<const SmashSpec>& spec() const noexcept { return spec_; }
  const TermMap<BiExponent, BiExponentOrder>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Complex coefficient(const ExponentVector& a, const ExponentVector& b) const { return terms_.coefficient({a, b}); }

  /// Throws GradingUndefined for B monomials outside the grading semigroup.
  void add_term(const ExponentVector& a, const ExponentVector& b, Complex c);

  SmashElement& operator+=(const SmashElement& other);
  SmashElement& operator-=(const SmashElement& other);
  SmashElement& operator*=(Complex c);

  bool compatible(const SmashElement& other) const;
  bool approx_equal(const SmashElement& other, double rel_tol = kRelativeTolerance) const {
    return compatible(other) && terms_.approx_equal(other.terms_, rel_tol);
  }

 private:
  std::shared_ptr<const SmashSpec> spec_;
  TermMap<BiExponent, BiExponentOrder> terms_;
};

/// (a (x) b_s)(a' (x) b') = a (s . a') (x) b_s b'. Throws IncompatibleSpecs.
SmashElement smash_mul(const SmashElement& u, const SmashElement& v);
SmashElement smash_pow(const SmashElement& u, long exponent);

inline SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
inline SmashElement operator-(SmashElement a, const SmashElement& b) { return a -= b; }
inline SmashElement operator*(const SmashElement& a, const SmashElement& b) { return smash_mul(a, b); }

/// A = C[z_1..z_m], B = C[w_1..w_n] (Laurent in group mode) with
/// z_i w_j = q_ij w_j z_i, i.e. w_j acts by z_i -> q_ij^{-1} z_i.
/// Group mode requires |q_ij| = 1 (NonUnimodularGroupMode otherwise).
std::shared_ptr<const SmashSpec> make_qproduct_spec(const Eigen::MatrixXcd& q, Support mode);

/// smash_mul restricted to specs built by make_qproduct_spec.
SmashElement qprod_domains_mul(const SmashElement& a, const SmashElement& b);

/// Compares ore_mul over (sigma, delta = 0) with smash_mul over the Z_+
/// action of sigma on all monomials a z^b, c z^d with |a|, b, |c|, d <=
/// degree_bound. Throws NotApplicable if delta != 0.
bool ore_vs_smash_check(const OreSpec& spec, int degree_bound);

}  // namespace qhol

#endif
