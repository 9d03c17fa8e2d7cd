#include "qhol/free_series.hpp"

#include "qhol/error.hpp"

namespace qhol {

FreeSeries FreeSeries::constant(int n, Complex c) { return monomial(n, Word{}, c); }

FreeSeries FreeSeries::monomial(int n, const Word& w, Complex c) {
  FreeSeries out(n);
  out.add_term(w, c);
  return out;
}

FreeSeries FreeSeries::generator(int n, int i) { return monomial(n, Word{i}); }

int FreeSeries::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(std::prev(terms_.end())->first.size());
}

void FreeSeries::add_term(const Word& w, Complex c) {
  w.check_alphabet(n_);
  terms_.add(w, c);
}

FreeSeries& FreeSeries::operator+=(const FreeSeries& other) {
  if (n_ != other.n_) throw Error(ErrorCode::GeneratorCountMismatch, "free series over different generator counts");
  for (const auto& [w, c] : other.terms_) terms_.add(w, c);
  return *this;
}

FreeSeries& FreeSeries::operator-=(const FreeSeries& other) {
  if (n_ != other.n_) throw Error(ErrorCode::GeneratorCountMismatch, "free series over different generator counts");
  for (const auto& [w, c] : other.terms_) terms_.add(w, -c);
  return *this;
}

FreeSeries& FreeSeries::operator*=(Complex c) {
  terms_.scale(c);
  return *this;
}

FreeSeries fmul(const FreeSeries& f, const FreeSeries& g) {
  if (f.generators() != g.generators()) {
    throw Error(ErrorCode::GeneratorCountMismatch, "free series over different generator counts");
  }
  FreeSeries out(f.generators());
  for (const auto& [u, cu] : f.terms())
    for (const auto& [v, cv] : g.terms()) out.add_term(u + v, cu * cv);
  return out;
}

FreeSeries fpow(const FreeSeries& f, long exponent) {
  if (exponent < 0) throw Error(ErrorCode::NotInvertible, "negative power in the free algebra");
  FreeSeries out = FreeSeries::constant(f.generators(), 1.0);
  for (long i = 0; i < exponent; ++i) out = fmul(out, f);
  return out;
}

QSeries abelianize(const FreeSeries& f) {
  const int n = f.generators();
  QSeries out(QMatrix::commutative(n));
  for (const auto& [w, c] : f.terms()) out.add_term(word_content(w, n), c);
  return out;
}

Eigen::MatrixXcd eval_matrices(const FreeSeries& f, std::span<const Eigen::MatrixXcd> a) {
  if (static_cast<int>(a.size()) != f.generators()) {
    throw Error(ErrorCode::DimensionMismatch, "tuple length differs from generator count");
  }
  if (a.empty()) {
    // n = 0: only constants; evaluate in 1x1 matrices.
    return Eigen::MatrixXcd::Constant(1, 1, f.coefficient(Word{}));
  }
  const auto m = a.front().rows();
  for (const auto& ai : a) {
    if (ai.rows() != m || ai.cols() != m) throw Error(ErrorCode::DimensionMismatch, "tuple entries must be square of a common size");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
  for (const auto& [w, c] : f.terms()) {
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(m, m);
    for (int letter : w) prod = prod * a[letter - 1];
    out += c * prod;
  }
  return out;
}

FreeSeries superpose(const FreeSeries& g, std::span<const FreeSeries> f) {
  if (static_cast<int>(f.size()) != g.generators()) {
    throw Error(ErrorCode::ArityMismatch, "g has " + std::to_string(g.generators()) + " generators but " +
                                              std::to_string(f.size()) + " substitutions were given");
  }
  if (f.empty()) throw Error(ErrorCode::ArityMismatch, "superposition needs at least one substitution");
  const int n = f.front().generators();
  for (const auto& fi : f) {
    if (fi.generators() != n) throw Error(ErrorCode::ArityMismatch, "substituted series differ in generator count");
  }
  FreeSeries out(n);
  for (const auto& [w, c] : g.terms()) {
    FreeSeries term = FreeSeries::constant(n, c);
    for (int letter : w) term = fmul(term, f[letter - 1]);
    out += term;
  }
  return out;
}

Complex eval_commutative(const QSeries& p, const Eigen::VectorXcd& point) {
  if (point.size() != p.generators()) throw Error(ErrorCode::ArityMismatch, "point dimension differs from generator count");
  if (p.support() != Support::nonnegative) throw Error(ErrorCode::ModeMismatch, "point evaluation needs polynomial support");
  if (!p.q().is_commutative()) throw Error(ErrorCode::ModeMismatch, "point evaluation needs a commutative algebra");
  Complex out(0.0);
  for (const auto& [k, c] : p.terms()) {
    Complex term = c;
    for (Eigen::Index i = 0; i < point.size(); ++i) term *= ipow(point(i), k[static_cast<std::size_t>(i)]);
    out += term;
  }
  return out;
}

}  // namespace qhol
