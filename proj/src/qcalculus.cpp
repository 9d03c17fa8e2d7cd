#include "qhol/qcalculus.hpp"

#include "qhol/error.hpp"

namespace qhol {

std::string_view to_string(WeightMethod m) noexcept {
  switch (m) {
    case WeightMethod::closed_form_large: return "closed-form (|q_ij| >= 1 for i < j)";
    case WeightMethod::closed_form_small: return "closed-form (|q_ij| <= 1 for i < j)";
    case WeightMethod::dynamic_program: return "dynamic-program (mixed moduli)";
  }
  return "unknown";
}

Weight weight_wq(const QMatrix& q, const ExponentVector& k) {
  if (!k.is_nonnegative()) throw Error(ErrorCode::NegativeExponent, "w_q(k) needs k >= 0");
  const int n = q.size();
  if (k.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::LengthMismatch, "k length differs from n");
  bool all_large = true, all_small = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double m = std::abs(q(i, j));
      all_large = all_large && m >= 1.0;
      all_small = all_small && m <= 1.0;
    }
  }
  if (all_large) return {1.0, WeightMethod::closed_form_large};
  if (all_small) {
    double w = 1.0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        w *= ipow(std::abs(q(i, j)), static_cast<std::int64_t>(k[i - 1]) * k[j - 1]);
    return {w, WeightMethod::closed_form_small};
  }
  return {minimal_arrangement(q, k).weight, WeightMethod::dynamic_program};
}

NormalForm normal_form_word(const QMatrix& q, const Word& w) {
  const int n = q.size();
  NormalForm out{1.0, word_content(w, n)};
  // Insertion sort: each adjacent swap moves a smaller letter left past b.
  std::vector<int> letters = w.letters();
  for (std::size_t i = 1; i < letters.size(); ++i) {
    for (std::size_t p = i; p > 0 && letters[p - 1] > letters[p]; --p) {
      out.coefficient *= q(letters[p - 1], letters[p]);
      std::swap(letters[p - 1], letters[p]);
    }
  }
  return out;
}

QSeries project_pi(const FreeSeries& f, const QMatrix& q) {
  if (f.generators() != q.size()) throw Error(ErrorCode::GeneratorCountMismatch, "q size differs from generator count");
  QSeries out(q);
  for (const auto& [w, c] : f.terms()) {
    auto nf = normal_form_word(q, w);
    out.add_term(nf.k, c * nf.coefficient);
  }
  return out;
}

FreeSeries section_kappa(const QSeries& a) {
  if (a.support() != Support::nonnegative) throw Error(ErrorCode::ModeMismatch, "the section is defined on polynomial support");
  const QMatrix& q = a.q();
  FreeSeries out(q.size());
  for (const auto& [k, c] : a.terms()) {
    const Word alpha = compact_word(q, k);
    out.add_term(alpha, c * rewrite_coefficient(q, delta(k), alpha));
  }
  return out;
}

}  // namespace qhol
