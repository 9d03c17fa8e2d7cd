#include "qhol/seminorms.hpp"

#include <string>

#include "qhol/error.hpp"
#include "qhol/qcalculus.hpp"

namespace qhol {

std::string_view to_string(NormVariant v) noexcept {
  switch (v) {
    case NormVariant::free_entire: return "free_entire";
    case NormVariant::free_polydisk: return "free_polydisk";
    case NormVariant::q_polydisk: return "q_polydisk";
    case NormVariant::q_polyannulus: return "q_polyannulus";
    case NormVariant::free_product: return "free_product";
    case NormVariant::ug_envelope: return "ug_envelope";
  }
  return "unknown";
}

NormVariant parse_norm_variant(std::string_view name) {
  for (auto v : {NormVariant::free_entire, NormVariant::free_polydisk, NormVariant::q_polydisk,
                 NormVariant::q_polyannulus, NormVariant::free_product, NormVariant::ug_envelope}) {
    if (to_string(v) == name) return v;
  }
  throw Error(ErrorCode::BadParams, "unknown norm variant '" + std::string(name) + "'");
}

namespace {

void require_radii(const Eigen::VectorXd& rho, int n, const char* what) {
  if (rho.size() != n) {
    throw Error(ErrorCode::BadParams, std::string(what) + " needs " + std::to_string(n) + " entries");
  }
  if ((rho.array() <= 0.0).any() || !rho.allFinite()) {
    throw Error(ErrorCode::BadParams, std::string(what) + " entries must be positive and finite");
  }
}

double scalar_of(const Eigen::VectorXd& v, const char* what) {
  if (v.size() < 1) throw Error(ErrorCode::BadParams, std::string("missing ") + what);
  return v(0);
}

double monomial_weight(const Eigen::VectorXd& rho, const ExponentVector& k) {
  double out = 1.0;
  for (Eigen::Index i = 0; i < rho.size(); ++i) out *= ipow(rho(i), k[static_cast<std::size_t>(i)]);
  return out;
}

double word_weight(const Eigen::VectorXd& rho, const Word& w) {
  double out = 1.0;
  for (int letter : w) out *= rho(letter - 1);
  return out;
}

template <typename Element, typename Mul>
SubmultiplicativeCheck submult(const NormParams& p, const Element& f, const Element& g, Mul mul, double tol) {
  SubmultiplicativeCheck out;
  out.norm_f = norm(p, f);
  out.norm_g = norm(p, g);
  out.norm_product = norm(p, mul(f, g));
  const double denom = out.norm_f * out.norm_g;
  out.ratio = denom > 0.0 ? out.norm_product / denom : 0.0;
  out.holds = approx_le(out.norm_product, denom, tol);
  return out;
}

}  // namespace

double norm_free_entire(const FreeSeries& f, double rho) {
  if (!(rho > 0.0)) throw Error(ErrorCode::NonpositiveRho, "rho must be positive");
  double total = 0.0;
  for (const auto& [w, c] : f.terms()) total += std::abs(c) * ipow(rho, static_cast<std::int64_t>(w.size()));
  return total;
}

double norm_free_polydisk(const FreeSeries& f, const Eigen::VectorXd& rho, double tau) {
  require_radii(rho, f.generators(), "rho");
  if (!(tau >= 1.0)) throw Error(ErrorCode::BadParams, "tau must be >= 1");
  double total = 0.0;
  for (const auto& [w, c] : f.terms()) total += std::abs(c) * word_weight(rho, w) * ipow(tau, s_count(w) + 1);
  return total;
}

double norm_free_taylor(const FreeSeries& f, const Eigen::VectorXd& rho) {
  require_radii(rho, f.generators(), "rho");
  double total = 0.0;
  for (const auto& [w, c] : f.terms()) total += std::abs(c) * word_weight(rho, w);
  return total;
}

double norm_q_polydisk(const QSeries& a, const Eigen::VectorXd& rho) {
  if (a.support() != Support::nonnegative) throw Error(ErrorCode::ModeMismatch, "polydisk norms need polynomial support");
  require_radii(rho, a.generators(), "rho");
  double total = 0.0;
  for (const auto& [k, c] : a.terms()) total += std::abs(c) * weight_wq(a.q(), k).value * monomial_weight(rho, k);
  return total;
}

double norm_q_polyannulus(const QSeries& a, const Eigen::VectorXd& rho, const Eigen::VectorXd& tau) {
  require_radii(rho, a.generators(), "rho");
  require_radii(tau, a.generators(), "tau");
  if ((rho.array() >= tau.array()).any()) throw Error(ErrorCode::BadParams, "polyannulus norms need rho < tau");
  double total = 0.0;
  for (const auto& [k, c] : a.terms()) {
    total += std::abs(c) * monomial_weight(rho, k.negative_part()) * monomial_weight(tau, k.positive_part());
  }
  return total;
}

double norm_ug(const OrePoly& a, int n_cutoff, double t) {
  if (!(t > 0.0) || n_cutoff < 0) throw Error(ErrorCode::BadParams, "U(g) norms need t > 0 and n >= 0");
  double total = 0.0;
  for (const auto& [ij, c] : ug_xy_coefficients(a)) {
    if (ij.second <= n_cutoff) total += std::abs(c) * ipow(t, ij.first);
  }
  return total;
}

double norm(const NormParams& p, const FreeSeries& f) {
  switch (p.variant) {
    case NormVariant::free_entire: return norm_free_entire(f, scalar_of(p.rho, "rho"));
    case NormVariant::free_polydisk: return norm_free_polydisk(f, p.rho, scalar_of(p.tau, "tau"));
    default: throw Error(ErrorCode::ModeMismatch, "norm variant " + std::string(to_string(p.variant)) + " does not apply to free series");
  }
}

double norm(const NormParams& p, const QSeries& a) {
  switch (p.variant) {
    case NormVariant::q_polydisk: return norm_q_polydisk(a, p.rho);
    case NormVariant::q_polyannulus: return norm_q_polyannulus(a, p.rho, p.tau);
    default: throw Error(ErrorCode::ModeMismatch, "norm variant " + std::string(to_string(p.variant)) + " does not apply to q series");
  }
}

double norm(const NormParams& p, const FreeProductElement& u) {
  if (p.variant != NormVariant::free_product) {
    throw Error(ErrorCode::ModeMismatch, "norm variant " + std::string(to_string(p.variant)) + " does not apply to free products");
  }
  return freeprod_norm(u, p.factor_rho, scalar_of(p.tau, "tau"));
}

SubmultiplicativeCheck check_submultiplicative(const NormParams& p, const FreeSeries& f, const FreeSeries& g,
                                               double tol) {
  return submult(p, f, g, fmul, tol);
}

SubmultiplicativeCheck check_submultiplicative(const NormParams& p, const QSeries& f, const QSeries& g, double tol) {
  return submult(p, f, g, qmul, tol);
}

SubmultiplicativeCheck check_submultiplicative(const NormParams& p, const FreeProductElement& f,
                                               const FreeProductElement& g, double tol) {
  return submult(p, f, g, freeprod_mul, tol);
}

InequalityCheck check_kappa_bound(const QSeries& a, const Eigen::VectorXd& rho, double tau, double tol) {
  InequalityCheck out;
  out.lhs = norm_free_polydisk(section_kappa(a), rho, tau);
  out.rhs = ipow(tau, a.generators()) * norm_q_polydisk(a, rho);
  out.holds = approx_le(out.lhs, out.rhs, tol);
  return out;
}

InequalityCheck check_taylor_comparison(const Word& alpha, const Eigen::VectorXd& rho, double tau, double tol) {
  if (!(tau >= 1.0)) throw Error(ErrorCode::BadParams, "tau must be >= 1");
  require_radii(rho, static_cast<int>(rho.size()), "rho");
  alpha.check_alphabet(static_cast<int>(rho.size()));
  Eigen::VectorXd shifted = rho * tau * tau;
  if (shifted.size() > 0) shifted(0) = rho(0);
  InequalityCheck out;
  out.lhs = word_weight(rho, alpha) * ipow(tau, s_count(alpha) + 1);
  out.rhs = tau * word_weight(shifted, alpha);
  out.holds = approx_le(out.lhs, out.rhs, tol);
  return out;
}

EquicontinuityReport check_equicontinuity(const Eigen::VectorXcd& scaling, int degree_bound,
                                          EquicontinuityMode mode, double rho, double r) {
  if (degree_bound < 0) throw Error(ErrorCode::BadParams, "degree bound must be nonnegative");
  if ((scaling.array() == Complex(0.0)).any()) throw Error(ErrorCode::BadParams, "scalings must be nonzero");
  if (!(rho > 0.0) || !(r > 0.0)) throw Error(ErrorCode::BadParams, "radii must be positive");
  const auto n = static_cast<std::size_t>(scaling.size());
  const Eigen::VectorXd moduli = scaling.cwiseAbs();

  EquicontinuityReport report;
  report.worst = ExponentVector(n);
  std::vector<int> k(n, 0);
  // ||sigma(z^k)||_rho / ||z^k||_rho = prod |scaling_i|^{k_i}, independent of rho.
  auto visit = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == n) {
      double ratio = 1.0;
      for (std::size_t i = 0; i < n; ++i) ratio *= ipow(moduli(static_cast<Eigen::Index>(i)), k[i]);
      double worst = ratio;
      if (mode == EquicontinuityMode::group) worst = std::max(ratio, 1.0 / ratio);
      if (!approx_equal(ratio, 1.0)) report.isometric = false;
      if (worst > report.max_ratio) {
        report.max_ratio = worst;
        report.worst = ExponentVector(k);
      }
      return;
    }
    for (int e = 0; e <= left; ++e) {
      k[pos] = e;
      self(self, pos + 1, left - e);
    }
    k[pos] = 0;
  };
  visit(visit, 0, degree_bound);

  report.holds = approx_le(report.max_ratio, 1.0);
  if (!report.holds) {
    double m = moduli.size() ? moduli.maxCoeff() : 1.0;
    if (mode == EquicontinuityMode::group && moduli.size()) m = std::max(m, 1.0 / moduli.minCoeff());
    for (int d = 1; d <= degree_bound; ++d) report.growth.push_back(ipow(m * rho / r, d));
  }
  return report;
}

}  // namespace qhol
