#include <doctest.h>

#include "convert.hpp"
#include "qhol/error.hpp"
#include "qhol/cocycle.hpp"
#include "qhol/qcalculus.hpp"
#include "qhol/sampling.hpp"

using namespace qhol;

TEST_SUITE("qcalculus") {
  TEST_CASE("weight closed forms") {
    const auto big = weight_wq(QMatrix::single_parameter(3, 2.0), ExponentVector{2, 1, 3});
    CHECK(big.value == 1.0);
    CHECK(big.method == WeightMethod::closed_form_large);
    const auto small = weight_wq(QMatrix::single_parameter(2, 0.5), ExponentVector{2, 3});
    CHECK(small.value == doctest::Approx(1.0 / 64.0).epsilon(1e-12));
    CHECK(small.method == WeightMethod::closed_form_small);
    const auto mixed = weight_wq(QMatrix::from_upper(3, {0.5, 2.0, 0.5}), ExponentVector{1, 1, 1});
    CHECK(mixed.method == WeightMethod::dynamic_program);
    CHECK_THROWS_AS((weight_wq(QMatrix::commutative(2), ExponentVector{1})), Error);
    CHECK(to_string(WeightMethod::closed_form_small) == "closed-form (|q_ij| <= 1 for i < j)");
  }

  TEST_CASE("weight agrees with brute force") {
    Sampler s(5);
    for (int n = 1; n <= 3; ++n) {
      std::vector<QMatrix> qs{s.qmatrix(n), s.small_qmatrix(n), s.unimodular_qmatrix(n),
                              QMatrix::single_parameter(n, 0.7 * s.phase())};
      for (const auto& q : qs) {
        for (const auto& k : testing::exponents_up_to(n, 5)) {
          CHECK(oracle::close(weight_wq(q, ExponentVector(k)).value, oracle::brute_weight(q.entries(), k).weight));
        }
      }
    }
  }

  TEST_CASE("normal form of words") {
    const Complex q{0.4, 0.2};
    const QMatrix qm = QMatrix::single_parameter(2, q);
    auto nf = normal_form_word(qm, Word{2, 1});
    CHECK(approx_equal(nf.coefficient, 1.0 / q));
    CHECK(nf.k == ExponentVector{1, 1});
    nf = normal_form_word(qm, Word{1, 1, 2});
    CHECK(nf.coefficient == Complex(1.0));
    nf = normal_form_word(qm, Word{2, 1, 1});
    CHECK(approx_equal(nf.coefficient, 1.0 / (q * q)));
    CHECK(nf.k == ExponentVector{2, 1});
    Sampler s(9);
    for (int i = 0; i < 200; ++i) {
      const QMatrix r = s.qmatrix(3);
      const Word w = s.word(3, s.uniform_int(0, 7));
      auto sorted = w.letters();
      std::sort(sorted.begin(), sorted.end());
      CHECK(oracle::close(normal_form_word(r, w).coefficient, oracle::rewrite(r.entries(), w.letters(), sorted)));
    }
  }

  TEST_CASE("q-polynomial products") {
    const Complex q{0.6, -0.3};
    const QMatrix qm = QMatrix::single_parameter(2, q);
    const QSeries x1 = QSeries::generator(qm, 1), x2 = QSeries::generator(qm, 2);
    CHECK(qmul(x1, x2).coefficient(ExponentVector{1, 1}) == Complex(1.0));
    CHECK(approx_equal(qmul(x2, x1).coefficient(ExponentVector{1, 1}), 1.0 / q));
    CHECK((qmul(x1, x2) - q * qmul(x2, x1)).is_zero());

    const QMatrix one = QMatrix::commutative(1);
    const QSeries a = QSeries::constant(one, 1.0) + QSeries::generator(one, 1);
    const QSeries sq = qmul(a, a);
    CHECK(sq.coefficient(ExponentVector{0}) == Complex(1.0));
    CHECK(sq.coefficient(ExponentVector{1}) == Complex(2.0));
    CHECK(sq.coefficient(ExponentVector{2}) == Complex(1.0));

    Sampler s(10);
    for (int i = 0; i < 100; ++i) {
      const QMatrix r = s.qmatrix(3);
      const QSeries f = s.q_series(r, 3, 3), g = s.q_series(r, 3, 3);
      CHECK(testing::same_poly(testing::to_oracle(qmul(f, g)),
                               oracle::qproduct(r.entries(), testing::to_oracle(f), testing::to_oracle(g))));
    }
  }

  TEST_CASE("Laurent products") {
    Sampler s(13);
    const QMatrix u = s.unimodular_qmatrix(2);
    const QSeries a = QSeries::monomial(u, ExponentVector{1, 0}, 1.0, Support::integer);
    const QSeries b = QSeries::monomial(u, ExponentVector{0, -1}, 1.0, Support::integer);
    const QSeries ab = qmul(a, b);
    REQUIRE(ab.terms().size() == 1);
    CHECK(ab.terms().begin()->first == ExponentVector{1, -1});
    CHECK(std::abs(ab.terms().begin()->second) == doctest::Approx(1.0));
    const QSeries inv = qpow(a, -1);
    CHECK(qmul(a, inv).approx_equal(QSeries::constant(u, 1.0, Support::integer)));
    CHECK_THROWS_AS(qpow(a + b, -1), Error);
    CHECK_THROWS_AS(QSeries(QMatrix::single_parameter(2, 0.5), Support::integer), Error);
  }

  TEST_CASE("support and algebra guards") {
    const QMatrix q = QMatrix::single_parameter(2, 0.5);
    QSeries a(q);
    CHECK_THROWS_AS((a.add_term(ExponentVector{-1, 0}, 1.0)), Error);
    CHECK_THROWS_AS((a.add_term(ExponentVector{1}, 1.0)), Error);
    const QSeries b = QSeries::generator(QMatrix::single_parameter(2, 0.25), 1);
    CHECK_THROWS_AS(qmul(QSeries::generator(q, 1), b), Error);
  }

  TEST_CASE("projection examples") {
    const Complex q{0.5, 0.1};
    const QMatrix qm = QMatrix::single_parameter(2, q);
    FreeSeries rel = FreeSeries::monomial(2, Word{1, 2});
    rel.add_term(Word{2, 1}, -q);
    CHECK(project_pi(rel, qm).is_zero());
    const QSeries p = project_pi(FreeSeries::monomial(2, Word{2, 2, 2}), qm);
    CHECK(p.coefficient(ExponentVector{0, 3}) == Complex(1.0));
    CHECK_THROWS_AS(project_pi(FreeSeries::generator(3, 1), qm), Error);
  }

  TEST_CASE("projection agrees with oracle") {
    Sampler s(14);
    for (int i = 0; i < 100; ++i) {
      const QMatrix q = s.qmatrix(3);
      const FreeSeries f = s.free_series(3, 5, 5);
      CHECK(testing::same_poly(testing::to_oracle(project_pi(f, q)), oracle::project(q.entries(), testing::to_oracle(f), 3)));
    }
  }

  TEST_CASE("section examples") {
    const QMatrix half = QMatrix::single_parameter(2, 0.5);
    const FreeSeries k = section_kappa(QSeries::monomial(half, ExponentVector{1, 1}));
    REQUIRE(k.terms().size() == 1);
    CHECK(k.coefficient(Word{2, 1}) == Complex(0.5));
    const FreeSeries c = section_kappa(QSeries::monomial(QMatrix::commutative(3), ExponentVector{2, 0, 1}));
    CHECK(c.coefficient(Word{1, 1, 3}) == Complex(1.0));
    const FreeSeries one = section_kappa(QSeries::constant(half, 3.0));
    CHECK(one.coefficient(Word{}) == Complex(3.0));
    Sampler s(15);
    const QMatrix u = s.unimodular_qmatrix(2);
    CHECK_THROWS_AS((section_kappa(QSeries::monomial(u, ExponentVector{-1, 0}, 1.0, Support::integer))), Error);
  }

  TEST_CASE("section lands on compact minimizers and splits the projection") {
    Sampler s(16);
    for (int n = 1; n <= 3; ++n) {
      const QMatrix q = s.qmatrix(n);
      for (const auto& k : testing::exponents_up_to(n, 5)) {
        const FreeSeries f = section_kappa(QSeries::monomial(q, ExponentVector(k)));
        REQUIRE(f.terms().size() == 1);
        const auto& [w, c] = *f.terms().begin();
        CHECK(oracle::compact(w.letters()));
        CHECK(oracle::brute_weight(q.entries(), k).minimizers.count(w.letters()) == 1);
        CHECK(oracle::close(c, oracle::rewrite(q.entries(), oracle::delta(k), w.letters())));
        CHECK(project_pi(f, q).approx_equal(QSeries::monomial(q, ExponentVector(k))));
      }
    }
  }
}
