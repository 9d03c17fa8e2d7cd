#ifndef QHOL_SAMPLING_HPP
#define QHOL_SAMPLING_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "qhol/free_product.hpp"
#include "qhol/free_series.hpp"
#include "qhol/qmatrix.hpp"
#include "qhol/qseries.hpp"
#include "qhol/word.hpp"

namespace qhol {

/// Random instance generation shared by the property suites and tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() noexcept { return rng_; }

  int uniform_int(int lo, int hi);
  double uniform(double lo, double hi);
  Complex complex_coefficient();
  /// Unit modulus, uniformly distributed phase.
  Complex phase();

  /// Entries q_ij (i < j) with modulus in [lo, hi] and random phase.
  QMatrix qmatrix(int n, double lo = 0.25, double hi = 3.0);
  QMatrix unimodular_qmatrix(int n);
  /// Every |q_ij| <= 1 for i < j.
  QMatrix small_qmatrix(int n);

  Word word(int n, int length);
  ExponentVector exponent(int n, int total);
  ExponentVector laurent_exponent(int n, int bound);
  Permutation permutation(std::size_t d);
  Eigen::VectorXd radii(int n, double lo, double hi);

  FreeSeries free_series(int n, int max_degree, int max_terms);
  QSeries q_series(const QMatrix& q, int max_degree, int max_terms, Support support = Support::nonnegative);
  FreeProductElement freeprod(const std::vector<QMatrix>& factors, int max_blocks, int max_block_degree,
                              int max_terms);

 private:
  std::mt19937_64 rng_;
};

}  // namespace qhol

#endif
