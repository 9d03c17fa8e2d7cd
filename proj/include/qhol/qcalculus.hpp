#ifndef QHOL_QCALCULUS_HPP
#define QHOL_QCALCULUS_HPP

#include <string_view>

#include "qhol/cocycle.hpp"
#include "qhol/free_series.hpp"
#include "qhol/qseries.hpp"

namespace qhol {

enum class WeightMethod {
  closed_form_large,  // |q_ij| >= 1 for all i < j: w_q == 1
  closed_form_small,  // |q_ij| <= 1 for all i < j: prod |q_ij|^{k_i k_j}
  dynamic_program,    // mixed moduli
};

std::string_view to_string(WeightMethod m) noexcept;

struct Weight {
  double value = 1.0;
  WeightMethod method = WeightMethod::closed_form_large;
};

/// w_q(k) = min over rearrangements sigma of |lambda(sigma, delta(k))|.
Weight weight_wq(const QMatrix& q, const ExponentVector& k);

struct NormalForm {
  Complex coefficient{1.0};
  ExponentVector k;
};

/// (c, k) with x_w = c x^k, accumulated by stably sorting w via adjacent
/// swaps, each swap of (b, a) with b > a contributing q_ba.
NormalForm normal_form_word(const QMatrix& q, const Word& w);

/// The algebra map zeta_i -> x_i from free polynomials onto the quantum
/// polynomial algebra.
QSeries project_pi(const FreeSeries& f, const QMatrix& q);

/// The linear section c_k x^k -> c_k lambda_k zeta_{alpha_k}, with alpha_k
/// the compact word chosen by compact_word and x^k = lambda_k x_{alpha_k}.
FreeSeries section_kappa(const QSeries& a);

}  // namespace qhol

#endif
