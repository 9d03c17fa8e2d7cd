#ifndef QHOL_SEMINORMS_HPP
#define QHOL_SEMINORMS_HPP

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qhol/free_product.hpp"
#include "qhol/free_series.hpp"
#include "qhol/ore.hpp"
#include "qhol/qseries.hpp"

namespace qhol {

enum class NormVariant { free_entire, free_polydisk, q_polydisk, q_polyannulus, free_product, ug_envelope };

std::string_view to_string(NormVariant v) noexcept;
/// Throws BadParams for unknown names.
NormVariant parse_norm_variant(std::string_view name);

/// Evaluation point of one seminorm family. Scalar parameters use the first
/// entry of `rho` / `tau`.
struct NormParams {
  NormVariant variant = NormVariant::free_entire;
  Eigen::VectorXd rho;
  Eigen::VectorXd tau;
  std::vector<Eigen::VectorXd> factor_rho;  // free_product
  int n_cutoff = 0;                         // ug_envelope
  double t = 1.0;                           // ug_envelope
};

/// sum |c_alpha| rho^{|alpha|}.
double norm_free_entire(const FreeSeries& f, double rho);

/// sum |c_alpha| rho_alpha tau^{s(alpha)+1}.
double norm_free_polydisk(const FreeSeries& f, const Eigen::VectorXd& rho, double tau);

/// Taylor's norm sum |c_alpha| rho_alpha.
double norm_free_taylor(const FreeSeries& f, const Eigen::VectorXd& rho);

/// sum |c_k| w_q(k) rho^k.
double norm_q_polydisk(const QSeries& a, const Eigen::VectorXd& rho);

/// sum |c_k| rho^{k^-} tau^{k^+}; requires 0 < rho < tau componentwise.
double norm_q_polyannulus(const QSeries& a, const Eigen::VectorXd& rho, const Eigen::VectorXd& tau);

/// sum over i and j <= n_cutoff of |c_ij| t^i, with a = sum c_ij x^i y^j.
double norm_ug(const OrePoly& a, int n_cutoff, double t);

double norm(const NormParams& p, const FreeSeries& f);
double norm(const NormParams& p, const QSeries& a);
double norm(const NormParams& p, const FreeProductElement& u);

struct SubmultiplicativeCheck {
  bool holds = true;
  double ratio = 0.0;  // ||fg|| / (||f|| ||g||), 0 when either factor vanishes
  double norm_product = 0.0;
  double norm_f = 0.0;
  double norm_g = 0.0;
};

SubmultiplicativeCheck check_submultiplicative(const NormParams& p, const FreeSeries& f, const FreeSeries& g,
                                               double tol = kRelativeTolerance);
SubmultiplicativeCheck check_submultiplicative(const NormParams& p, const QSeries& f, const QSeries& g,
                                               double tol = kRelativeTolerance);
SubmultiplicativeCheck check_submultiplicative(const NormParams& p, const FreeProductElement& f,
                                               const FreeProductElement& g, double tol = kRelativeTolerance);

struct InequalityCheck {
  bool holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// ||kappa(a)||_{rho,tau} <= tau^n ||a||_rho.
InequalityCheck check_kappa_bound(const QSeries& a, const Eigen::VectorXd& rho, double tau,
                                  double tol = kRelativeTolerance);

/// rho_alpha tau^{s(alpha)+1} <= tau rho'_alpha with
/// rho' = (rho_1, tau^2 rho_2, ..., tau^2 rho_n).
InequalityCheck check_taylor_comparison(const Word& alpha, const Eigen::VectorXd& rho, double tau,
                                        double tol = kRelativeTolerance);

enum class EquicontinuityMode { semigroup, group };

struct EquicontinuityReport {
  bool holds = true;
  bool isometric = true;     // every ratio equals one
  double max_ratio = 1.0;    // max over |k| <= bound of ||sigma(z^k)|| / ||z^k||
  ExponentVector worst;      // a monomial attaining max_ratio
  /// When the condition fails: g_k = (m rho / r)^k, k = 1..bound, where m is
  /// the largest scaling modulus (or inverse modulus in group mode).
  std::vector<double> growth;
};

/// sigma(z_i) = scaling_i z_i on monomials of total degree <= degree_bound,
/// compared in the polydisk norms. Semigroup mode asks for
/// ||sigma(a)|| <= ||a||; group mode asks the same of sigma^{-1} too.
EquicontinuityReport check_equicontinuity(const Eigen::VectorXcd& scaling, int degree_bound,
                                          EquicontinuityMode mode, double rho = 0.99, double r = 0.995);

}  // namespace qhol

#endif
