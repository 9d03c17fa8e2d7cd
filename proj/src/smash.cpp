#include "qhol/smash.hpp"

#include "qhol/error.hpp"

namespace qhol {

void SmashSpec::check() const {
  if (action.size() != static_cast<std::size_t>(b_q.size())) {
    throw Error(ErrorCode::GradingUndefined, "one action generator per generator of B is required");
  }
  for (const auto& images : action) {
    if (images.size() != static_cast<std::size_t>(a_q.size())) {
      throw Error(ErrorCode::IncompatibleSpecs, "each action generator needs one image per generator of A");
    }
    for (const auto& img : images) {
      if (!img.q().same_as(a_q) || img.support() != a_support) {
        throw Error(ErrorCode::IncompatibleSpecs, "action images must lie in A");
      }
    }
  }
}

bool SmashSpec::same_as(const SmashSpec& other) const {
  if (!a_q.same_as(other.a_q) || !b_q.same_as(other.b_q) || a_support != other.a_support ||
      b_support != other.b_support || action.size() != other.action.size()) {
    return false;
  }
  for (std::size_t j = 0; j < action.size(); ++j) {
    if (action[j].size() != other.action[j].size()) return false;
    for (std::size_t i = 0; i < action[j].size(); ++i)
      if (!action[j][i].approx_equal(other.action[j][i])) return false;
  }
  return true;
}

namespace {

QSeries apply_endomorphism(const std::vector<QSeries>& images, const QSeries& a) {
  QSeries out(a.q(), a.support());
  for (const auto& [k, c] : a.terms()) {
    QSeries term = QSeries::constant(a.q(), c, a.support());
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) term = qmul(term, qpow(images[i], k[i]));
    out += term;
  }
  return out;
}

std::vector<QSeries> inverse_images(const std::vector<QSeries>& images) {
  std::vector<QSeries> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto& img = images[i];
    ExponentVector e(images.size());
    e[i] = 1;
    if (img.terms().size() != 1 || img.terms().begin()->first != e) {
      throw Error(ErrorCode::GradingUndefined, "negative degrees need a diagonal action");
    }
    out.push_back(QSeries::monomial(img.q(), e, 1.0 / img.terms().begin()->second, img.support()));
  }
  return out;
}

}  // namespace

QSeries act(const SmashSpec& spec, const ExponentVector& s, const QSeries& a) {
  if (s.size() != spec.action.size()) throw Error(ErrorCode::GradingUndefined, "degree outside the grading semigroup");
  QSeries out = a;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == 0) continue;
    const auto images = s[j] > 0 ? spec.action[j] : inverse_images(spec.action[j]);
    for (int r = 0; r < std::abs(s[j]); ++r) out = apply_endomorphism(images, out);
  }
  return out;
}

SmashElement::SmashElement(std::shared_ptr<const SmashSpec> spec) : spec_(std::move(spec)) {
  if (!spec_) throw Error(ErrorCode::IncompatibleSpecs, "missing smash specification");
  spec_->check();
}

SmashElement SmashElement::term(std::shared_ptr<const SmashSpec> spec, const ExponentVector& a,
                                 const ExponentVector& b, Complex c) {
  SmashElement out(std::move(spec));
  out.add_term(a, b, c);
  return out;
}

SmashElement SmashElement::unit(std::shared_ptr<const SmashSpec> spec) {
  const auto m = static_cast<std::size_t>(spec->a_q.size());
  const auto p = static_cast<std::size_t>(spec->b_q.size());
  return term(std::move(spec), ExponentVector(m), ExponentVector(p));
}

SmashElement SmashElement::left(std::shared_ptr<const SmashSpec> spec, const QSeries& a) {
  SmashElement out(std::move(spec));
  const ExponentVector zero(static_cast<std::size_t>(out.spec_->b_q.size()));
  for (const auto& [k, c] : a.terms()) out.add_term(k, zero, c);
  return out;
}

SmashElement SmashElement::right(std::shared_ptr<const SmashSpec> spec, const QSeries& b) {
  SmashElement out(std::move(spec));
  const ExponentVector zero(static_cast<std::size_t>(out.spec_->a_q.size()));
  for (const auto& [l, c] : b.terms()) out.add_term(zero, l, c);
  return out;
}

void SmashElement::add_term(const ExponentVector& a, const ExponentVector& b, Complex c) {
  if (a.size() != static_cast<std::size_t>(spec_->a_q.size())) throw Error(ErrorCode::LengthMismatch, "A exponent has wrong length");
  if (b.size() != static_cast<std::size_t>(spec_->b_q.size())) throw Error(ErrorCode::GradingUndefined, "B exponent has wrong length");
  if (spec_->a_support == Support::nonnegative && !a.is_nonnegative()) {
    throw Error(ErrorCode::NegativeExponentInPolydiskMode, "negative exponent in A");
  }
  if (spec_->b_support == Support::nonnegative && !b.is_nonnegative()) {
    throw Error(ErrorCode::GradingUndefined, "negative degree outside the grading semigroup");
  }
  terms_.add({a, b}, c);
}

bool SmashElement::compatible(const SmashElement& other) const {
  return spec_ == other.spec_ || (spec_ && other.spec_ && spec_->same_as(*other.spec_));
}

SmashElement& SmashElement::operator+=(const SmashElement& other) {
  if (!compatible(other)) throw Error(ErrorCode::IncompatibleSpecs, "smash elements over different specifications");
  for (const auto& [key, c] : other.terms_) terms_.add(key, c);
  return *this;
}

SmashElement& SmashElement::operator-=(const SmashElement& other) {
  if (!compatible(other)) throw Error(ErrorCode::IncompatibleSpecs, "smash elements over different specifications");
  for (const auto& [key, c] : other.terms_) terms_.add(key, -c);
  return *this;
}

SmashElement& SmashElement::operator*=(Complex c) {
  terms_.scale(c);
  return *this;
}

SmashElement smash_mul(const SmashElement& u, const SmashElement& v) {
  if (!u.compatible(v)) throw Error(ErrorCode::IncompatibleSpecs, "smash elements over different specifications");
  const SmashSpec& spec = *u.spec();
  SmashElement out(u.spec());
  for (const auto& [left, cu] : u.terms()) {
    const auto& [a, s] = left;
    const QSeries xa = QSeries::monomial(spec.a_q, a, 1.0, spec.a_support);
    for (const auto& [right, cv] : v.terms()) {
      const auto& [a2, b2] = right;
      const QSeries moved = act(spec, s, QSeries::monomial(spec.a_q, a2, 1.0, spec.a_support));
      const QSeries prod = qmul(xa, moved);
      const Complex cb = bicharacter(spec.b_q, s, b2);
      const ExponentVector b = s + b2;
      for (const auto& [k, c] : prod.terms()) out.add_term(k, b, cu * cv * cb * c);
    }
  }
  return out;
}

SmashElement smash_pow(const SmashElement& u, long exponent) {
  if (exponent < 0) throw Error(ErrorCode::NotInvertible, "negative power in a smash product");
  SmashElement out = SmashElement::unit(u.spec());
  for (long i = 0; i < exponent; ++i) out = smash_mul(out, u);
  return out;
}

std::shared_ptr<const SmashSpec> make_qproduct_spec(const Eigen::MatrixXcd& q, Support mode) {
  const int m = static_cast<int>(q.rows());
  const int n = static_cast<int>(q.cols());
  if (mode == Support::integer) {
    for (Eigen::Index i = 0; i < q.size(); ++i) {
      if (std::abs(std::abs(q(i)) - 1.0) > kModulusTolerance) {
        throw Error(ErrorCode::NonUnimodularGroupMode, "group mode needs |q_ij| = 1");
      }
    }
  }
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    if (q(i) == Complex(0.0)) throw Error(ErrorCode::BadParams, "q_ij must be nonzero");
  }
  auto spec = std::make_shared<SmashSpec>();
  spec->a_q = QMatrix::commutative(m);
  spec->a_support = mode;
  spec->b_q = QMatrix::commutative(n);
  spec->b_support = mode;
  spec->qproduct = true;
  for (int j = 0; j < n; ++j) {
    std::vector<QSeries> images;
    for (int i = 0; i < m; ++i) {
      ExponentVector e(static_cast<std::size_t>(m));
      e[i] = 1;
      images.push_back(QSeries::monomial(spec->a_q, e, 1.0 / q(i, j), mode));
    }
    spec->action.push_back(std::move(images));
  }
  spec->check();
  return spec;
}

SmashElement qprod_domains_mul(const SmashElement& a, const SmashElement& b) {
  if (!a.spec() || !a.spec()->qproduct) throw Error(ErrorCode::IncompatibleSpecs, "not a q-product of domains");
  return smash_mul(a, b);
}

bool ore_vs_smash_check(const OreSpec& spec, int degree_bound) {
  spec.check();
  for (const auto& d : spec.delta) {
    if (!d.is_zero()) throw Error(ErrorCode::NotApplicable, "the comparison needs delta = 0");
  }
  auto ore = std::make_shared<const OreSpec>(spec);
  auto smash = std::make_shared<SmashSpec>();
  smash->a_q = spec.q;
  smash->b_q = QMatrix::commutative(1);
  smash->action = {spec.sigma};
  smash->check();
  std::shared_ptr<const SmashSpec> smash_c = smash;

  const int m = spec.q.size();
  std::vector<ExponentVector> monomials;
  // All exponents with total degree <= degree_bound.
  std::vector<int> cur(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == cur.size()) {
      monomials.emplace_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, degree_bound);

  auto ore_term = [&](const ExponentVector& a, int b) {
    OrePoly p(ore);
    p.add(b, QSeries::monomial(spec.q, a));
    return p;
  };
  for (const auto& a : monomials) {
    for (int b = 0; b <= degree_bound; ++b) {
      const OrePoly lhs = ore_term(a, b);
      const SmashElement slhs = SmashElement::term(smash_c, a, ExponentVector{b});
      for (const auto& c : monomials) {
        for (int d = 0; d <= degree_bound; ++d) {
          const OrePoly op = ore_mul(lhs, ore_term(c, d));
          const SmashElement sp = smash_mul(slhs, SmashElement::term(smash_c, c, ExponentVector{d}));
          // Map a (x) z^k to a z^k.
          OrePoly mapped(ore);
          for (const auto& [key, coeff] : sp.terms()) mapped.add(key.second[0], QSeries::monomial(spec.q, key.first, coeff));
          if (!mapped.approx_equal(op)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qhol
