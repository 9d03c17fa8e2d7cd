#include "qhol/suites.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "qhol/cocycle.hpp"
#include "qhol/ore.hpp"
#include "qhol/qcalculus.hpp"
#include "qhol/sampling.hpp"
#include "qhol/seminorms.hpp"
#include "qhol/smash.hpp"

namespace qhol {

namespace {

double relative_error(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string vec_text(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ')';
  return os.str();
}

std::string qtext(const QMatrix& q) {
  std::ostringstream os;
  os.precision(6);
  os << '[';
  for (int i = 1; i <= q.size(); ++i)
    for (int j = i + 1; j <= q.size(); ++j) os << (os.tellp() > 1 ? " " : "") << 'q' << i << j << '=' << q(i, j);
  os << ']';
  return os.str();
}

/// Records the largest violation measure and its witness.
struct Tracker {
  SuiteReport& report;
  double limit;

  void observe(double value, const std::function<std::string()>& witness) {
    ++report.instances;
    if (value > report.worst || report.worst_instance.empty()) {
      if (value > report.worst) report.worst = value;
      report.worst_instance = witness();
    }
    if (!(value <= limit)) report.passed = false;
  }
};

QMatrix pick_q(Sampler& s, const SuiteOptions& o, int n) {
  if (o.config) return o.config->q;
  return s.qmatrix(n);
}

int pick_n(Sampler& s, const SuiteOptions& o, int max_n) {
  if (o.config) return o.config->n;
  return s.uniform_int(1, max_n);
}

void for_each_exponent(int n, int max_total, const std::function<void(const ExponentVector&)>& fn) {
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == cur.size()) {
      fn(ExponentVector(cur));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_total);
}

void for_each_word(int n, int max_length, const std::function<void(const Word&)>& fn) {
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    fn(Word(cur));
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int l = 1; l <= n; ++l) {
      cur.push_back(l);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

// lambda(sigma tau, alpha) = lambda(sigma, tau(alpha)) lambda(tau, alpha)
SuiteReport suite_cocycle(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "cocycle";
  Sampler s(o.seed);
  const int max_len = o.max_degree.value_or(8);
  Tracker t{r, kRelativeTolerance};
  for (int i = 0; i < 1000; ++i) {
    const int n = pick_n(s, o, 4);
    const QMatrix q = pick_q(s, o, n);
    const Word alpha = s.word(n, s.uniform_int(0, max_len));
    const Permutation sigma = s.permutation(alpha.size()), tau = s.permutation(alpha.size());
    const Complex lhs = cocycle_lambda(q, sigma * tau, alpha);
    const Complex rhs = cocycle_lambda(q, sigma, apply_permutation(tau, alpha)) * cocycle_lambda(q, tau, alpha);
    t.observe(relative_error(lhs, rhs), [&] { return "alpha=" + to_string(alpha) + " " + qtext(q); });
  }
  return r;
}

SuiteReport suite_submult(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "submult";
  Sampler s(o.seed);
  const int deg = o.max_degree.value_or(4);
  const double limit = 1.0 + kRelativeTolerance;
  Tracker t{r, limit};
  auto record = [&](const SubmultiplicativeCheck& c, NormVariant v, const std::string& f, const std::string& g) {
    t.observe(c.ratio, [&] { return std::string(to_string(v)) + ": f=" + f + " g=" + g; });
  };
  for (int i = 0; i < 1000; ++i) {
    const int n = s.uniform_int(1, 3);
    NormParams p;
    p.variant = NormVariant::free_entire;
    p.rho = s.radii(1, 0.1, 3.0);
    FreeSeries f = s.free_series(n, deg, 4), g = s.free_series(n, deg, 4);
    record(check_submultiplicative(p, f, g), p.variant, serialize(f), serialize(g));

    p.variant = NormVariant::free_polydisk;
    p.rho = s.radii(n, 0.1, 3.0);
    p.tau = Eigen::VectorXd::Constant(1, s.uniform(1.0, 4.0));
    record(check_submultiplicative(p, f, g), p.variant, serialize(f), serialize(g));
  }
  for (int i = 0; i < 1000; ++i) {
    const int n = pick_n(s, o, 3);
    const QMatrix q = pick_q(s, o, n);
    NormParams p;
    p.variant = NormVariant::q_polydisk;
    p.rho = s.radii(n, 0.1, 3.0);
    QSeries a = s.q_series(q, deg, 4), b = s.q_series(q, deg, 4);
    record(check_submultiplicative(p, a, b), p.variant, serialize(a), serialize(b));
  }
  for (int i = 0; i < 1000; ++i) {
    const int n = s.uniform_int(1, 3);
    const QMatrix q = o.config && o.config->q.is_unimodular() ? o.config->q : s.unimodular_qmatrix(n);
    const int m = q.size();
    NormParams p;
    p.variant = NormVariant::q_polyannulus;
    p.rho = s.radii(m, 0.1, 1.0);
    p.tau = p.rho + s.radii(m, 0.1, 2.0);
    QSeries a = s.q_series(q, deg, 4, Support::integer), b = s.q_series(q, deg, 4, Support::integer);
    record(check_submultiplicative(p, a, b), p.variant, serialize(a), serialize(b));
  }
  return r;
}

SuiteReport suite_pikappa(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "pikappa";
  Sampler s(o.seed);
  const int deg = o.max_degree.value_or(6);
  Tracker t{r, 0.5};  // 0 = agreement, 1 = mismatch
  auto check = [&](const QSeries& a) {
    const QSeries back = project_pi(section_kappa(a), a.q());
    t.observe(back.approx_equal(a) ? 0.0 : 1.0, [&] { return "a=" + serialize(a) + " " + qtext(a.q()); });
  };
  std::vector<QMatrix> qs;
  if (o.config) {
    qs.push_back(o.config->q);
  } else {
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i < 3; ++i) qs.push_back(s.qmatrix(n));
  }
  for (const auto& q : qs) {
    for_each_exponent(q.size(), deg, [&](const ExponentVector& k) { check(QSeries::monomial(q, k)); });
    for (int i = 1; i <= q.size(); ++i) {
      for (int j = 1; j <= q.size(); ++j) {
        FreeSeries rel = FreeSeries::monomial(q.size(), Word{i, j});
        rel.add_term(Word{j, i}, -q(i, j));
        const QSeries image = project_pi(rel, q);
        t.observe(image.is_zero() ? 0.0 : 1.0, [&] { return "relation " + std::to_string(i) + "," + std::to_string(j); });
      }
    }
  }
  for (int i = 0; i < 200; ++i) {
    const QMatrix& q = qs[static_cast<std::size_t>(s.uniform_int(0, static_cast<int>(qs.size()) - 1))];
    check(s.q_series(q, deg, 6));
  }
  return r;
}

SuiteReport suite_kappabound(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "kappabound";
  Sampler s(o.seed);
  const int deg = o.max_degree.value_or(5);
  Tracker t{r, 1.0 + kRelativeTolerance};
  for (int i = 0; i < 500; ++i) {
    const int n = pick_n(s, o, 3);
    const QMatrix q = pick_q(s, o, n);
    const QSeries a = s.q_series(q, deg, 4);
    const Eigen::VectorXd rho = s.radii(n, 0.1, 3.0);
    const double tau = s.uniform(1.0, 4.0);
    const InequalityCheck c = check_kappa_bound(a, rho, tau);
    t.observe(c.rhs > 0.0 ? c.lhs / c.rhs : 0.0,
              [&] { return "a=" + serialize(a) + " rho=" + vec_text(rho) + " tau=" + std::to_string(tau); });
  }
  return r;
}

SuiteReport suite_taylor(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "taylor";
  Sampler s(o.seed);
  const int deg = o.max_degree.value_or(8);
  Tracker t{r, 1.0 + kRelativeTolerance};
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<Eigen::VectorXd, double>> params;
    for (int i = 0; i < 50; ++i) params.emplace_back(s.radii(n, 0.1, 3.0), s.uniform(1.0, 4.0));
    for_each_word(n, deg, [&](const Word& w) {
      for (const auto& [rho, tau] : params) {
        const InequalityCheck c = check_taylor_comparison(w, rho, tau);
        t.observe(c.rhs > 0.0 ? c.lhs / c.rhs : 0.0,
                  [&] { return "alpha=" + to_string(w) + " rho=" + vec_text(rho) + " tau=" + std::to_string(tau); });
      }
    });
  }
  return r;
}

// Unimodular scalings are isometric; |q| = 1/2 gives unbounded growth.
SuiteReport suite_equicont(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "equicont";
  Sampler s(o.seed);
  const int deg = o.max_degree.value_or(40);
  for (int i = 0; i < 20; ++i) {
    const int n = s.uniform_int(1, 3);
    Eigen::VectorXcd scaling(n);
    for (int j = 0; j < n; ++j) scaling(j) = s.phase();
    const auto rep = check_equicontinuity(scaling, std::min(deg, 12), EquicontinuityMode::group);
    ++r.instances;
    if (!rep.holds || !rep.isometric) {
      r.passed = false;
      r.worst_instance = "unimodular scaling not isometric at k=" + to_string(rep.worst);
    }
  }
  const double q = 0.5, rho = 0.99, rr = 0.995;
  const auto rep = check_equicontinuity(Eigen::VectorXcd::Constant(1, 1.0 / q), deg, EquicontinuityMode::semigroup,
                                        rho, rr);
  ++r.instances;
  int crossing = 0;
  for (std::size_t k = 0; k < rep.growth.size(); ++k) {
    if (rep.growth[k] > 1e6) {
      crossing = static_cast<int>(k) + 1;
      break;
    }
  }
  r.worst = rep.growth.empty() ? 1.0 : rep.growth.back();
  r.notes.push_back("|q|=1/2, rho=0.99, r=0.995: growth exceeds 1e6 at k=" + std::to_string(crossing));
  if (rep.holds || crossing == 0) {
    r.passed = false;
    r.worst_instance = "no unbounded growth detected up to degree " + std::to_string(deg);
  }
  return r;
}

SuiteReport suite_ore_smash(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "ore-smash";
  Sampler s(o.seed);
  const int deg = o.max_degree.value_or(5);
  for (int i = 0; i < 6; ++i) {
    const int m = o.config ? o.config->n : s.uniform_int(1, 2);
    OreSpec spec;
    spec.q = o.config ? o.config->q : s.qmatrix(m);
    for (int j = 1; j <= m; ++j) {
      spec.sigma.push_back(s.uniform(0.3, 2.0) * s.phase() * QSeries::generator(spec.q, j));
      spec.delta.emplace_back(spec.q);
    }
    ++r.instances;
    if (!ore_vs_smash_check(spec, deg)) {
      r.passed = false;
      r.worst_instance = "diagonal sigma over " + qtext(spec.q);
    }
  }
  return r;
}

SuiteReport suite_assoc(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "assoc";
  Sampler s(o.seed);
  const int deg = o.max_degree.value_or(3);
  Tracker t{r, 0.5};
  auto observe = [&](bool ok, const std::string& algebra, const std::string& witness) {
    t.observe(ok ? 0.0 : 1.0, [&] { return algebra + ": " + witness; });
  };
  for (int i = 0; i < 200; ++i) {
    const int n = s.uniform_int(1, 3);
    const FreeSeries f = s.free_series(n, deg, 3), g = s.free_series(n, deg, 3), h = s.free_series(n, deg, 3);
    observe(fmul(fmul(f, g), h).approx_equal(fmul(f, fmul(g, h))), "free", serialize(f));

    const int m = pick_n(s, o, 3);
    const QMatrix q = pick_q(s, o, m);
    const QSeries a = s.q_series(q, deg, 3), b = s.q_series(q, deg, 3), c = s.q_series(q, deg, 3);
    observe(qmul(qmul(a, b), c).approx_equal(qmul(a, qmul(b, c))), "q-polynomial", serialize(a));

    const QMatrix u = s.unimodular_qmatrix(m);
    const QSeries la = s.q_series(u, deg, 3, Support::integer), lb = s.q_series(u, deg, 3, Support::integer),
                  lc = s.q_series(u, deg, 3, Support::integer);
    observe(qmul(qmul(la, lb), lc).approx_equal(qmul(la, qmul(lb, lc))), "q-Laurent", serialize(la));

    std::vector<QMatrix> factors;
    for (int k = s.uniform_int(1, 3); k > 0; --k) factors.push_back(s.qmatrix(s.uniform_int(1, 2)));
    const auto x = s.freeprod(factors, 3, 2, 3), y = s.freeprod(factors, 3, 2, 3), z = s.freeprod(factors, 3, 2, 3);
    observe(freeprod_mul(freeprod_mul(x, y), z).approx_equal(freeprod_mul(x, freeprod_mul(y, z))), "free product",
            serialize(x));

    std::map<std::pair<int, int>, Complex> ca, cb, cc;
    for (int k = 0; k < 3; ++k) {
      ca[{s.uniform_int(0, deg), s.uniform_int(0, deg)}] += s.complex_coefficient();
      cb[{s.uniform_int(0, deg), s.uniform_int(0, deg)}] += s.complex_coefficient();
      cc[{s.uniform_int(0, deg), s.uniform_int(0, deg)}] += s.complex_coefficient();
    }
    const OrePoly pa = ug_from_xy(ca), pb = ug_from_xy(cb), pc = ug_from_xy(cc);
    observe(ore_mul(ore_mul(pa, pb), pc).approx_equal(ore_mul(pa, ore_mul(pb, pc))), "U(g)",
            serialize(pa, OreNames{"y", "x", true}));

    Eigen::MatrixXcd qp(m, s.uniform_int(1, 2));
    for (Eigen::Index ii = 0; ii < qp.rows(); ++ii)
      for (Eigen::Index jj = 0; jj < qp.cols(); ++jj) qp(ii, jj) = s.uniform(0.3, 2.0) * s.phase();
    const auto spec = make_qproduct_spec(qp, Support::nonnegative);
    auto smash_elem = [&] {
      SmashElement e(spec);
      for (int k = 0; k < 3; ++k) {
        e.add_term(s.exponent(m, s.uniform_int(0, deg)), s.exponent(static_cast<int>(qp.cols()), s.uniform_int(0, deg)),
                   s.complex_coefficient());
      }
      return e;
    };
    const SmashElement sa = smash_elem(), sb = smash_elem(), sc = smash_elem();
    observe(smash_mul(smash_mul(sa, sb), sc).approx_equal(smash_mul(sa, smash_mul(sb, sc))), "smash",
            serialize(sa, SmashNames{}));
  }
  return r;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"cocycle", suite_cocycle},   {"submult", suite_submult},     {"pikappa", suite_pikappa},
      {"kappabound", suite_kappabound}, {"taylor", suite_taylor}, {"equicont", suite_equicont},
      {"ore-smash", suite_ore_smash},   {"assoc", suite_assoc},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(options);
  }
  throw Error(ErrorCode::BadParams, "unknown suite '" + std::string(name) + "'");
}

}  // namespace qhol
