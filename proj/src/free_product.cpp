#include "qhol/free_product.hpp"

#include "qhol/error.hpp"
#include "qhol/qcalculus.hpp"
#include "qhol/qseries.hpp"

namespace qhol {

bool AlternatingOrder::operator()(const AlternatingWord& a, const AlternatingWord& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  long da = 0, db = 0;
  for (const auto& blk : a) da += blk.monomial.total();
  for (const auto& blk : b) db += blk.monomial.total();
  if (da != db) return da < db;
  return a < b;
}

FreeProductElement::FreeProductElement(std::vector<QMatrix> factors)
    : factors_(std::make_shared<const std::vector<QMatrix>>(std::move(factors))) {}

FreeProductElement FreeProductElement::unit(std::vector<QMatrix> factors, Complex c) {
  FreeProductElement out(std::move(factors));
  out.add_term({}, c);
  return out;
}

FreeProductElement FreeProductElement::zero() const {
  FreeProductElement out;
  out.factors_ = factors_;
  return out;
}

std::vector<QMatrix> FreeProductElement::univariate_factors(int count) {
  return std::vector<QMatrix>(static_cast<std::size_t>(count), QMatrix::commutative(1));
}

void FreeProductElement::add_term(const AlternatingWord& w, Complex c) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& blk = w[i];
    if (blk.factor < 1 || blk.factor > factor_count()) throw Error(ErrorCode::FactorMismatch, "block factor index out of range");
    if (i > 0 && w[i - 1].factor == blk.factor) throw Error(ErrorCode::FactorMismatch, "adjacent blocks share a factor");
    if (blk.monomial.size() != static_cast<std::size_t>((*factors_)[blk.factor - 1].size()) ||
        !blk.monomial.is_nonnegative() || blk.monomial.is_zero()) {
      throw Error(ErrorCode::FactorMismatch, "block monomial must be a nonconstant monomial of its factor");
    }
  }
  terms_.add(w, c);
}

bool FreeProductElement::same_factors(const FreeProductElement& other) const {
  if (factors_ == other.factors_) return true;
  if (factors_->size() != other.factors_->size()) return false;
  for (std::size_t i = 0; i < factors_->size(); ++i)
    if (!(*factors_)[i].same_as((*other.factors_)[i])) return false;
  return true;
}

FreeProductElement& FreeProductElement::operator+=(const FreeProductElement& other) {
  if (!same_factors(other)) throw Error(ErrorCode::FactorMismatch, "free product elements over different factors");
  for (const auto& [w, c] : other.terms_) terms_.add(w, c);
  return *this;
}

FreeProductElement& FreeProductElement::operator-=(const FreeProductElement& other) {
  if (!same_factors(other)) throw Error(ErrorCode::FactorMismatch, "free product elements over different factors");
  for (const auto& [w, c] : other.terms_) terms_.add(w, -c);
  return *this;
}

FreeProductElement& FreeProductElement::operator*=(Complex c) {
  terms_.scale(c);
  return *this;
}

FreeProductElement freeprod_mul(const FreeProductElement& u, const FreeProductElement& v) {
  if (!u.same_factors(v)) throw Error(ErrorCode::FactorMismatch, "free product elements over different factors");
  FreeProductElement out = u.zero();
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      Complex c = ca * cb;
      AlternatingWord w = a;
      auto rest = b.begin();
      if (!w.empty() && !b.empty() && w.back().factor == b.front().factor) {
        const QMatrix& q = u.factors()[w.back().factor - 1];
        c *= bicharacter(q, w.back().monomial, b.front().monomial);
        w.back().monomial = w.back().monomial + b.front().monomial;
        ++rest;
      }
      w.insert(w.end(), rest, b.end());
      out.add_term(w, c);
    }
  }
  return out;
}

FreeProductElement freeprod_pow(const FreeProductElement& u, long exponent) {
  if (exponent < 0) throw Error(ErrorCode::NotInvertible, "negative power in a free product");
  FreeProductElement out = u.zero();
  out.add_term({}, 1.0);
  for (long i = 0; i < exponent; ++i) out = freeprod_mul(out, u);
  return out;
}

FreeProductElement freeprod_generator(const FreeProductElement& like, int factor, int variable) {
  if (factor < 1 || factor > like.factor_count()) throw Error(ErrorCode::IndexOutOfRange, "factor index out of range");
  const int m = like.factors()[factor - 1].size();
  if (variable < 1 || variable > m) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  FreeProductElement out = like.zero();
  ExponentVector k(static_cast<std::size_t>(m));
  k[variable - 1] = 1;
  out.add_term({Block{factor, k}}, 1.0);
  return out;
}

double freeprod_norm(const FreeProductElement& u, const std::vector<Eigen::VectorXd>& factor_rho, double tau) {
  if (!(tau >= 1.0)) throw Error(ErrorCode::BadParams, "tau must be >= 1");
  if (factor_rho.size() != static_cast<std::size_t>(u.factor_count())) {
    throw Error(ErrorCode::BadParams, "one radius vector per factor is required");
  }
  for (std::size_t i = 0; i < factor_rho.size(); ++i) {
    if (factor_rho[i].size() != u.factors()[i].size() || (factor_rho[i].array() <= 0.0).any()) {
      throw Error(ErrorCode::BadParams, "factor radii must be positive, one per variable");
    }
  }
  double total = 0.0;
  for (const auto& [w, c] : u.terms()) {
    double term = std::abs(c) * ipow(tau, static_cast<std::int64_t>(w.size()));
    for (const auto& blk : w) {
      const auto& rho = factor_rho[blk.factor - 1];
      term *= weight_wq(u.factors()[blk.factor - 1], blk.monomial).value;
      for (Eigen::Index i = 0; i < rho.size(); ++i) term *= ipow(rho(i), blk.monomial[static_cast<std::size_t>(i)]);
    }
    total += term;
  }
  return total;
}

FreeSeries freeprod_flatten(const FreeProductElement& u) {
  for (const auto& q : u.factors()) {
    if (q.size() != 1) throw Error(ErrorCode::NonUnivariateFactor, "flattening needs univariate factors");
  }
  FreeSeries out(u.factor_count());
  for (const auto& [w, c] : u.terms()) {
    std::vector<int> letters;
    for (const auto& blk : w) letters.insert(letters.end(), static_cast<std::size_t>(blk.monomial[0]), blk.factor);
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

FreeProductElement freeprod_from_free(const FreeSeries& f) {
  FreeProductElement out(FreeProductElement::univariate_factors(f.generators()));
  for (const auto& [w, c] : f.terms()) {
    AlternatingWord blocks;
    for (int letter : w) {
      if (!blocks.empty() && blocks.back().factor == letter) {
        ++blocks.back().monomial[0];
      } else {
        blocks.push_back(Block{letter, ExponentVector{1}});
      }
    }
    out.add_term(blocks, c);
  }
  return out;
}

}  // namespace qhol
