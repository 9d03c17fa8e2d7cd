#include <doctest.h>

#include "convert.hpp"
#include "qhol/error.hpp"
#include "qhol/ore.hpp"
#include "qhol/qcalculus.hpp"
#include "qhol/sampling.hpp"
#include "qhol/seminorms.hpp"

using namespace qhol;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

}  // namespace

TEST_SUITE("seminorms") {
  TEST_CASE("free entire norm") {
    CHECK(norm_free_entire(FreeSeries::monomial(2, Word{1, 2}), 2.0) == doctest::Approx(4.0));
    CHECK(norm_free_entire(FreeSeries::constant(2, 1.0), 0.3) == doctest::Approx(1.0));
    CHECK_THROWS_AS(norm_free_entire(FreeSeries::constant(2, 1.0), 0.0), Error);
  }

  TEST_CASE("free polydisk norm") {
    CHECK(norm_free_polydisk(FreeSeries::monomial(2, Word{1, 2, 1}), vec({0.5, 1.0 / 3.0}), 2.0) ==
          doctest::Approx(2.0 / 3.0));
    CHECK(norm_free_polydisk(FreeSeries::constant(2, 1.0), vec({0.5, 0.5}), 3.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS((norm_free_polydisk(FreeSeries::generator(2, 1), vec({0.5}), 2.0)), Error);
    CHECK_THROWS_AS((norm_free_polydisk(FreeSeries::generator(2, 1), vec({0.5, 0.5}), 0.5)), Error);
    CHECK_THROWS_AS((norm_free_polydisk(FreeSeries::generator(2, 1), vec({0.5, -1.0}), 2.0)), Error);
    Sampler s(41);
    for (int i = 0; i < 50; ++i) {
      const FreeSeries f = s.free_series(3, 5, 5);
      const Eigen::VectorXd rho = s.radii(3, 0.1, 3.0);
      const double tau = s.uniform(1.0, 3.0);
      CHECK(oracle::close(norm_free_polydisk(f, rho, tau), oracle::norm_free_polydisk(testing::to_oracle(f), rho, tau)));
    }
  }

  TEST_CASE("q polydisk norm") {
    const QMatrix half = QMatrix::single_parameter(2, 0.5);
    CHECK(norm_q_polydisk(QSeries::monomial(half, ExponentVector{1, 1}), vec({1.0, 1.0})) == doctest::Approx(0.5));
    Sampler s(42);
    for (int i = 0; i < 30; ++i) {
      const QMatrix q = s.qmatrix(3);
      const QSeries a = s.q_series(q, 4, 4);
      const Eigen::VectorXd rho = s.radii(3, 0.1, 3.0);
      CHECK(oracle::close(norm_q_polydisk(a, rho), oracle::norm_q_polydisk(q.entries(), testing::to_oracle(a), rho)));
    }
  }

  TEST_CASE("q polyannulus norm") {
    Sampler s(43);
    const QMatrix u = s.unimodular_qmatrix(2);
    const QSeries a = QSeries::monomial(u, ExponentVector{1, -2}, 1.0, Support::integer);
    CHECK(norm_q_polyannulus(a, vec({0.5, 0.5}), vec({2.0, 2.0})) == doctest::Approx(8.0));
    CHECK(norm_q_polyannulus(QSeries::constant(u, 1.0, Support::integer), vec({0.5, 0.5}), vec({2.0, 2.0})) ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS((norm_q_polyannulus(a, vec({2.0, 0.5}), vec({1.0, 2.0}))), Error);
  }

  TEST_CASE("enveloping algebra norm") {
    std::map<std::pair<int, int>, Complex> c{{{2, 3}, 1.0}, {{1, 1}, 2.0}};
    const OrePoly a = ug_from_xy(c);
    const double t = 1.7;
    CHECK(norm_ug(a, 2, t) == doctest::Approx(2.0 * t));
    CHECK(norm_ug(a, 3, t) == doctest::Approx(t * t + 2.0 * t));
    CHECK(norm_ug(OrePoly(ug_spec()), 3, t) == 0.0);
    CHECK_THROWS_AS(norm_ug(a, 2, 0.0), Error);
  }

  TEST_CASE("submultiplicativity checks") {
    NormParams p;
    p.variant = NormVariant::free_polydisk;
    p.rho = vec({0.7, 1.3});
    p.tau = vec({2.5});
    const FreeSeries one = FreeSeries::constant(2, 1.0);
    CHECK(check_submultiplicative(p, one, one).ratio == doctest::Approx(1.0));
    const auto merge =
        check_submultiplicative(p, FreeSeries::monomial(2, Word{1, 2}), FreeSeries::monomial(2, Word{2, 1}));
    CHECK(merge.holds);
    CHECK(merge.ratio == doctest::Approx(1.0 / 2.5));
    p.variant = NormVariant::q_polydisk;
    CHECK_THROWS_AS(check_submultiplicative(p, one, one), Error);
    CHECK(parse_norm_variant("q_polyannulus") == NormVariant::q_polyannulus);
    CHECK_THROWS_AS(parse_norm_variant("sup"), Error);
  }

  TEST_CASE("kappa bound") {
    const QMatrix half = QMatrix::single_parameter(2, 0.5);
    const auto tight = check_kappa_bound(QSeries::monomial(half, ExponentVector{1, 1}), vec({1.0, 1.0}), 2.0);
    CHECK(tight.holds);
    CHECK(tight.lhs == doctest::Approx(2.0));
    CHECK(tight.rhs == doctest::Approx(2.0));
    const auto constant = check_kappa_bound(QSeries::constant(half, 1.0), vec({1.0, 1.0}), 3.0);
    CHECK(constant.holds);
    CHECK(constant.lhs == doctest::Approx(1.0));
    CHECK(constant.rhs == doctest::Approx(9.0));
    Sampler s(44);
    for (int n = 1; n <= 3; ++n) {
      for (const QMatrix& q : {s.unimodular_qmatrix(n), QMatrix::single_parameter(n, 0.6)}) {
        for (const auto& k : testing::exponents_up_to(n, 6)) {
          CHECK(check_kappa_bound(QSeries::monomial(q, ExponentVector(k)), s.radii(n, 0.2, 2.0), s.uniform(1.0, 3.0))
                    .holds);
        }
      }
    }
  }

  TEST_CASE("Taylor comparison") {
    const Eigen::VectorXd rho = vec({0.8, 1.5, 0.4});
    const double tau = 1.9;
    const auto ones = check_taylor_comparison(Word{1, 1, 1}, rho, tau);
    CHECK(ones.lhs == doctest::Approx(ones.rhs));
    const auto empty = check_taylor_comparison(Word{}, rho, tau);
    CHECK(empty.lhs == doctest::Approx(1.0));
    CHECK(empty.rhs == doctest::Approx(tau));
    CHECK(check_taylor_comparison(Word{2, 1, 3, 1, 2}, rho, tau).holds);
  }

  TEST_CASE("equicontinuity") {
    Eigen::VectorXcd big(2);
    big << 2.0, Complex(0.0, 1.5);
    // sigma(z_i) = scaling_i^{-1} z_i is contractive for |scaling| >= 1
    Eigen::VectorXcd inv = big.cwiseInverse();
    CHECK(check_equicontinuity(inv, 10, EquicontinuityMode::semigroup).holds);
    Eigen::VectorXcd unit(2);
    unit << Complex(0.0, 1.0), std::polar(1.0, 0.3);
    const auto iso = check_equicontinuity(unit, 10, EquicontinuityMode::group);
    CHECK(iso.holds);
    CHECK(iso.isometric);
    const auto bad = check_equicontinuity(Eigen::VectorXcd::Constant(1, 2.0), 40, EquicontinuityMode::semigroup);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.growth.size() == 40);
    CHECK(bad.growth[0] == doctest::Approx(2.0 * 0.99 / 0.995));
    CHECK(bad.growth.back() > 1e6);
    CHECK_FALSE(check_equicontinuity(inv, 5, EquicontinuityMode::group).holds);
  }
}
