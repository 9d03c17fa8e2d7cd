#include "qhol/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qhol {

int Sampler::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

Complex Sampler::complex_coefficient() { return {uniform(-2.0, 2.0), uniform(-2.0, 2.0)}; }

Complex Sampler::phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

QMatrix Sampler::qmatrix(int n, double lo, double hi) {
  std::vector<Complex> upper;
  for (int i = 0; i < n * (n - 1) / 2; ++i) {
    // log-uniform modulus so that |q| < 1 and |q| > 1 are equally likely around 1
    const double m = std::exp(uniform(std::log(lo), std::log(hi)));
    upper.push_back(m * phase());
  }
  return QMatrix::from_upper(n, upper);
}

QMatrix Sampler::unimodular_qmatrix(int n) {
  std::vector<Complex> upper;
  for (int i = 0; i < n * (n - 1) / 2; ++i) upper.push_back(phase());
  return QMatrix::from_upper(n, upper);
}

QMatrix Sampler::small_qmatrix(int n) {
  std::vector<Complex> upper;
  for (int i = 0; i < n * (n - 1) / 2; ++i) upper.push_back(uniform(0.1, 1.0) * phase());
  return QMatrix::from_upper(n, upper);
}

Word Sampler::word(int n, int length) {
  std::vector<int> letters(static_cast<std::size_t>(length));
  for (auto& l : letters) l = uniform_int(1, n);
  return Word(std::move(letters));
}

ExponentVector Sampler::exponent(int n, int total) {
  ExponentVector k(static_cast<std::size_t>(n));
  for (int i = 0; i < total; ++i) ++k[static_cast<std::size_t>(uniform_int(0, n - 1))];
  return k;
}

ExponentVector Sampler::laurent_exponent(int n, int bound) {
  ExponentVector k(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = uniform_int(-bound, bound);
  return k;
}

Permutation Sampler::permutation(std::size_t d) {
  std::vector<int> images(d);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng_);
  return Permutation(std::move(images));
}

Eigen::VectorXd Sampler::radii(int n, double lo, double hi) {
  Eigen::VectorXd r(n);
  for (int i = 0; i < n; ++i) r(i) = uniform(lo, hi);
  return r;
}

FreeSeries Sampler::free_series(int n, int max_degree, int max_terms) {
  FreeSeries f(n);
  const int terms = uniform_int(1, max_terms);
  for (int t = 0; t < terms; ++t) f.add_term(word(n, uniform_int(0, max_degree)), complex_coefficient());
  return f;
}

QSeries Sampler::q_series(const QMatrix& q, int max_degree, int max_terms, Support support) {
  QSeries a(q, support);
  const int n = q.size();
  const int terms = uniform_int(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    ExponentVector k = support == Support::integer ? laurent_exponent(n, std::max(1, max_degree / n))
                                                   : exponent(n, uniform_int(0, max_degree));
    a.add_term(k, complex_coefficient());
  }
  return a;
}

FreeProductElement Sampler::freeprod(const std::vector<QMatrix>& factors, int max_blocks, int max_block_degree,
                                     int max_terms) {
  FreeProductElement u(factors);
  const int count = static_cast<int>(factors.size());
  const int terms = uniform_int(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    AlternatingWord w;
    const int blocks = uniform_int(0, max_blocks);
    for (int b = 0; b < blocks; ++b) {
      int f = uniform_int(1, count);
      if (!w.empty() && f == w.back().factor) {
        if (count == 1) break;
        f = f % count + 1;
      }
      const int m = factors[static_cast<std::size_t>(f - 1)].size();
      w.push_back(Block{f, exponent(m, uniform_int(1, max_block_degree))});
    }
    u.add_term(w, complex_coefficient());
  }
  return u;
}

}  // namespace qhol
