#include "qhol/ore.hpp"

#include "qhol/error.hpp"

namespace qhol {

void OreSpec::check() const {
  const auto m = static_cast<std::size_t>(q.size());
  if (sigma.size() != m || delta.size() != m) {
    throw Error(ErrorCode::IncompatibleSpecs, "sigma and delta need one image per generator");
  }
  for (const auto* images : {&sigma, &delta}) {
    for (const auto& img : *images) {
      if (img.support() != Support::nonnegative || !img.q().same_as(q)) {
        throw Error(ErrorCode::IncompatibleSpecs, "generator images must lie in the coefficient algebra");
      }
    }
  }
}

bool OreSpec::same_as(const OreSpec& other) const {
  if (!q.same_as(other.q) || sigma.size() != other.sigma.size() || delta.size() != other.delta.size()) return false;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!sigma[i].approx_equal(other.sigma[i]) || !delta[i].approx_equal(other.delta[i])) return false;
  }
  return true;
}

namespace {

QSeries sigma_monomial(const OreSpec& spec, const ExponentVector& k) {
  QSeries out = QSeries::constant(spec.q, 1.0);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] != 0) out = qmul(out, qpow(spec.sigma[i], k[i]));
  }
  return out;
}

QSeries delta_monomial(const OreSpec& spec, const ExponentVector& k) {
  QSeries out(spec.q);
  const Word letters = delta(k);
  ExponentVector suffix = k;
  QSeries prefix_sigma = QSeries::constant(spec.q, 1.0);
  for (int letter : letters) {
    --suffix[letter - 1];
    // The prefix and suffix of delta(k) are sorted, so x_prefix = x^prefix.
    out += qmul(qmul(prefix_sigma, spec.delta[letter - 1]), QSeries::monomial(spec.q, suffix));
    prefix_sigma = qmul(prefix_sigma, spec.sigma[letter - 1]);
  }
  return out;
}

}  // namespace

QSeries apply_sigma(const OreSpec& spec, const QSeries& a) {
  QSeries out(spec.q);
  for (const auto& [k, c] : a.terms()) out += c * sigma_monomial(spec, k);
  return out;
}

QSeries apply_delta(const OreSpec& spec, const QSeries& a) {
  QSeries out(spec.q);
  for (const auto& [k, c] : a.terms()) out += c * delta_monomial(spec, k);
  return out;
}

OrePoly::OrePoly(std::shared_ptr<const OreSpec> spec) : spec_(std::move(spec)) {
  if (!spec_) throw Error(ErrorCode::IncompatibleSpecs, "missing Ore specification");
  spec_->check();
}

OrePoly OrePoly::variable(std::shared_ptr<const OreSpec> spec) {
  OrePoly out(std::move(spec));
  out.add(1, QSeries::constant(out.spec_->q, 1.0));
  return out;
}

OrePoly OrePoly::coefficient(std::shared_ptr<const OreSpec> spec, const QSeries& a) {
  OrePoly out(std::move(spec));
  out.add(0, a);
  return out;
}

void OrePoly::add(int d, const QSeries& a) {
  if (d < 0) throw Error(ErrorCode::NegativeExponent, "negative power of the Ore variable");
  if (!a.q().same_as(spec_->q) || a.support() != Support::nonnegative) {
    throw Error(ErrorCode::IncompatibleSpecs, "coefficient outside the coefficient algebra");
  }
  auto [it, inserted] = coeffs_.try_emplace(d, a);
  if (!inserted) it->second += a;
  if (it->second.is_zero()) coeffs_.erase(it);
}

bool OrePoly::compatible(const OrePoly& other) const {
  return spec_ == other.spec_ || (spec_ && other.spec_ && spec_->same_as(*other.spec_));
}

OrePoly& OrePoly::operator+=(const OrePoly& other) {
  if (!compatible(other)) throw Error(ErrorCode::IncompatibleSpecs, "Ore polynomials over different specifications");
  for (const auto& [d, a] : other.coeffs_) add(d, a);
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& other) {
  if (!compatible(other)) throw Error(ErrorCode::IncompatibleSpecs, "Ore polynomials over different specifications");
  for (const auto& [d, a] : other.coeffs_) add(d, Complex(-1.0) * a);
  return *this;
}

OrePoly& OrePoly::operator*=(Complex c) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
  }
  return *this;
}

bool OrePoly::approx_equal(const OrePoly& other, double rel_tol) const {
  if (!compatible(other)) return false;
  const QSeries zero(spec_->q);
  for (const auto* side : {&coeffs_, &other.coeffs_}) {
    for (const auto& [d, a] : *side) {
      auto mine = coeffs_.find(d);
      auto theirs = other.coeffs_.find(d);
      const QSeries& x = mine == coeffs_.end() ? zero : mine->second;
      const QSeries& y = theirs == other.coeffs_.end() ? zero : theirs->second;
      if (!x.approx_equal(y, rel_tol)) return false;
    }
  }
  return true;
}

OrePoly ore_mul(const OrePoly& p, const OrePoly& r) {
  if (!p.compatible(r)) throw Error(ErrorCode::IncompatibleSpecs, "Ore polynomials over different specifications");
  const OreSpec& spec = *p.spec();
  OrePoly out(p.spec());
  for (const auto& [j, b] : r.coefficients()) {
    // z^i b = sum_m c_m z^m, built by left multiplication with z.
    std::map<int, QSeries> moved{{0, b}};
    int reached = 0;
    for (const auto& [i, a] : p.coefficients()) {
      for (; reached < i; ++reached) {
        std::map<int, QSeries> next;
        for (const auto& [m, c] : moved) {
          for (auto [deg, term] : {std::pair{m + 1, apply_sigma(spec, c)}, std::pair{m, apply_delta(spec, c)}}) {
            if (term.is_zero()) continue;
            auto [it, inserted] = next.try_emplace(deg, term);
            if (!inserted) it->second += term;
          }
        }
        moved = std::move(next);
      }
      for (const auto& [m, c] : moved) out.add(m + j, qmul(a, c));
    }
  }
  return out;
}

OrePoly ore_pow(const OrePoly& p, long exponent) {
  if (exponent < 0) throw Error(ErrorCode::NotInvertible, "negative power in an Ore extension");
  OrePoly out = OrePoly::coefficient(p.spec(), QSeries::constant(p.spec()->q, 1.0));
  for (long i = 0; i < exponent; ++i) out = ore_mul(out, p);
  return out;
}

namespace {

void monomials_up_to(int m, int degree, ExponentVector& current, std::size_t pos, std::vector<ExponentVector>& out) {
  if (pos == static_cast<std::size_t>(m)) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    current[pos] = e;
    monomials_up_to(m, degree - e, current, pos + 1, out);
  }
  current[pos] = 0;
}

}  // namespace

bool validate_sigma_derivation(const OreSpec& spec, int sample_degree) {
  spec.check();
  const int m = spec.q.size();
  std::vector<ExponentVector> monomials;
  ExponentVector scratch(static_cast<std::size_t>(m));
  monomials_up_to(m, sample_degree, scratch, 0, monomials);
  for (const auto& k : monomials) {
    for (const auto& l : monomials) {
      if (k.total() + l.total() > sample_degree) continue;
      const QSeries a = QSeries::monomial(spec.q, k);
      const QSeries b = QSeries::monomial(spec.q, l);
      const QSeries ab = qmul(a, b);
      if (!apply_sigma(spec, ab).approx_equal(qmul(apply_sigma(spec, a), apply_sigma(spec, b)))) return false;
      const QSeries leibniz = qmul(apply_delta(spec, a), b) + qmul(apply_sigma(spec, a), apply_delta(spec, b));
      if (!apply_delta(spec, ab).approx_equal(leibniz)) return false;
    }
  }
  return true;
}

std::shared_ptr<const OreSpec> ug_spec() {
  static const auto spec = [] {
    const QMatrix q = QMatrix::commutative(1);
    const QSeries y = QSeries::generator(q, 1);
    auto s = std::make_shared<OreSpec>(OreSpec{q, {y}, {y}});
    s->check();
    return std::shared_ptr<const OreSpec>(std::move(s));
  }();
  return spec;
}

namespace {
double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}
}  // namespace

std::map<std::pair<int, int>, Complex> ug_xy_coefficients(const OrePoly& a) {
  // y^j x^m = (x - j)^m y^j, from y x = (x - 1) y.
  std::map<std::pair<int, int>, Complex> out;
  for (const auto& [m, coeff] : a.coefficients()) {
    for (const auto& [k, c] : coeff.terms()) {
      const int j = k[0];
      for (int i = 0; i <= m; ++i) {
        const Complex term = c * binomial(m, i) * ipow(static_cast<double>(-j), m - i);
        if (std::abs(term) < kPruneThreshold) continue;
        auto& slot = out[{i, j}];
        slot += term;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
  return out;
}

OrePoly ug_from_xy(const std::map<std::pair<int, int>, Complex>& coefficients) {
  const auto spec = ug_spec();
  const OrePoly x = OrePoly::variable(spec);
  OrePoly out(spec);
  for (const auto& [ij, c] : coefficients) {
    const auto [i, j] = ij;
    const OrePoly yj = OrePoly::coefficient(spec, QSeries::monomial(spec->q, ExponentVector{j}, c));
    out += ore_mul(ore_pow(x, i), yj);
  }
  return out;
}

}  // namespace qhol
