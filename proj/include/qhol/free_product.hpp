#ifndef QHOL_FREE_PRODUCT_HPP
#define QHOL_FREE_PRODUCT_HPP

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "qhol/free_series.hpp"
#include "qhol/qmatrix.hpp"
#include "qhol/terms.hpp"

namespace qhol {

/// One tensor slot of an alternating word: a monomial x^k with k != 0 in
/// the augmentation ideal of factor `factor` (1-based).
struct Block {
  int factor = 0;
  ExponentVector monomial;
  friend auto operator<=>(const Block&, const Block&) = default;
  friend bool operator==(const Block&, const Block&) = default;
};

using AlternatingWord = std::vector<Block>;

struct AlternatingOrder {
  bool operator()(const AlternatingWord& a, const AlternatingWord& b) const;
};

/// Finitely supported element of the free product of augmented quantum
/// polynomial algebras A_1, ..., A_N, written in the basis of alternating
/// words (adjacent blocks lie in different factors).
class FreeProductElement {
 public:
  FreeProductElement() = default;
  /// Factor algebras O_{q_i}(C^{m_i}).
  explicit FreeProductElement(std::vector<QMatrix> factors);

  static FreeProductElement unit(std::vector<QMatrix> factors, Complex c = 1.0);
  /// Zero element over the same factors.
  FreeProductElement zero() const;
  /// N univariate commutative factors.
  static std::vector<QMatrix> univariate_factors(int count);

  int factor_count() const noexcept { return static_cast<int>(factors_->size()); }
  const std::vector<QMatrix>& factors() const noexcept { return *factors_; }
  const TermMap<AlternatingWord, AlternatingOrder>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Complex coefficient(const AlternatingWord& w) const { return terms_.coefficient(w); }

  /// Throws FactorMismatch for non-alternating words or constant blocks.
  void add_term(const AlternatingWord& w, Complex c);

  FreeProductElement& operator+=(const FreeProductElement& other);
  FreeProductElement& operator-=(const FreeProductElement& other);
  FreeProductElement& operator*=(Complex c);

  bool same_factors(const FreeProductElement& other) const;
  bool approx_equal(const FreeProductElement& other, double rel_tol = kRelativeTolerance) const {
    return same_factors(other) && terms_.approx_equal(other.terms_, rel_tol);
  }

 private:
  std::shared_ptr<const std::vector<QMatrix>> factors_ = std::make_shared<const std::vector<QMatrix>>();
  TermMap<AlternatingWord, AlternatingOrder> terms_;
};

/// Concatenation, multiplying the boundary monomials inside their factor
/// when the boundary factor indices coincide. Throws FactorMismatch.
FreeProductElement freeprod_mul(const FreeProductElement& u, const FreeProductElement& v);
FreeProductElement freeprod_pow(const FreeProductElement& u, long exponent);

/// The generator x_j of factor i as an element of the free product.
FreeProductElement freeprod_generator(const FreeProductElement& like, int factor, int variable);

/// sum |c| tau^{d} prod_b ||x^{k_b}||_b over alternating words of length d,
/// where factor i carries the weighted norm w_{q_i}(k) rho_i^k.
/// Throws BadParams for tau < 1, non-positive radii, or wrong counts.
double freeprod_norm(const FreeProductElement& u, const std::vector<Eigen::VectorXd>& factor_rho, double tau);

/// Expands each block (i, x^k) into k copies of letter i. Throws
/// NonUnivariateFactor unless every factor has one variable.
FreeSeries freeprod_flatten(const FreeProductElement& u);

/// Inverse of freeprod_flatten: maximal runs of a letter become blocks.
FreeProductElement freeprod_from_free(const FreeSeries& f);

}  // namespace qhol

#endif
