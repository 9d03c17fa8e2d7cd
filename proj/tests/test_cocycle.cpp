#include <doctest.h>

#include "convert.hpp"
#include "qhol/error.hpp"
#include "qhol/cocycle.hpp"
#include "qhol/qmatrix.hpp"
#include "qhol/sampling.hpp"

using namespace qhol;

namespace {

std::set<oracle::Letters> as_set(const std::vector<Word>& words) {
  std::set<oracle::Letters> out;
  for (const auto& w : words) out.insert(w.letters());
  return out;
}

}  // namespace

TEST_SUITE("cocycle") {
  TEST_CASE("q-matrix validation") {
    const Eigen::MatrixXcd ones = Eigen::MatrixXcd::Ones(3, 3);
    CHECK(validate_qmatrix(ones, QMatrixMode::general).ok);
    CHECK(validate_qmatrix(ones, QMatrixMode::unimodular).ok);
    Eigen::MatrixXcd m(2, 2);
    m << 1.0, 2.0, 0.5, 1.0;
    CHECK(validate_qmatrix(m, QMatrixMode::general).ok);
    CHECK_FALSE(validate_qmatrix(m, QMatrixMode::unimodular).ok);
    m(1, 0) = 2.0;
    const auto report = validate_qmatrix(m, QMatrixMode::general);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.violations.empty());
    CHECK_THROWS_AS((QMatrix(m)), Error);
    Eigen::MatrixXcd d(2, 2);
    d << 2.0, 1.0, 1.0, 1.0;
    CHECK_FALSE(validate_qmatrix(d, QMatrixMode::general).ok);
  }

  TEST_CASE("lambda examples") {
    const Complex q{0.3, 0.7};
    const QMatrix qm = QMatrix::single_parameter(2, q);
    CHECK(cocycle_lambda(qm, Permutation::identity(3), Word{2, 1, 2}) == Complex(1.0));
    CHECK(approx_equal(cocycle_lambda(qm, Permutation::transposition(1, 2, 2), Word{1, 2}), q));
    CHECK_THROWS_AS((cocycle_lambda(qm, Permutation::identity(2), Word{1})), Error);
  }

  TEST_CASE("lambda agrees with the swap oracle") {
    Sampler s(11);
    for (int i = 0; i < 300; ++i) {
      const int n = s.uniform_int(1, 4);
      const QMatrix q = s.qmatrix(n);
      const Word w = s.word(n, s.uniform_int(0, 7));
      const Permutation p = s.permutation(w.size());
      CHECK(oracle::close(cocycle_lambda(q, p, w), oracle::lambda(q.entries(), p.images(), w.letters())));
    }
  }

  TEST_CASE("cocycle identity on random instances") {
    Sampler s(12);
    for (int i = 0; i < 300; ++i) {
      const int n = s.uniform_int(1, 4);
      const QMatrix q = s.qmatrix(n);
      const Word a = s.word(n, s.uniform_int(0, 8));
      const Permutation p = s.permutation(a.size()), t = s.permutation(a.size());
      CHECK(approx_equal(cocycle_lambda(q, p * t, a),
                         cocycle_lambda(q, p, apply_permutation(t, a)) * cocycle_lambda(q, t, a)));
    }
  }

  TEST_CASE("rewrite coefficient") {
    const QMatrix q = QMatrix::single_parameter(2, 0.5);
    CHECK(approx_equal(rewrite_coefficient(q, Word{1, 2}, Word{2, 1}), Complex(0.5)));
    CHECK(approx_equal(rewrite_coefficient(q, Word{2, 1}, Word{1, 2}), Complex(2.0)));
    CHECK_THROWS_AS((rewrite_coefficient(q, Word{1, 1}, Word{1, 2})), Error);
  }

  TEST_CASE("multinomial counts") {
    CHECK(multinomial_count(ExponentVector{2, 2}) == 6);
    CHECK(multinomial_count(ExponentVector{0, 0}) == 1);
    CHECK(multinomial_count(ExponentVector{3, 2, 1}) == 60);
    CHECK(multinomial_count(ExponentVector{30, 30}, 1000) == 1000);
  }

  TEST_CASE("minimizing words examples") {
    const QMatrix half = QMatrix::single_parameter(2, 0.5);
    const auto mw = minimizing_words(half, ExponentVector{1, 1});
    CHECK(mw.weight == doctest::Approx(0.5));
    REQUIRE(mw.words.size() == 1);
    CHECK(mw.words[0] == Word{2, 1});

    Sampler s(3);
    const QMatrix u = s.unimodular_qmatrix(3);
    const auto all = minimizing_words(u, ExponentVector{1, 2, 1});
    CHECK(all.weight == doctest::Approx(1.0));
    CHECK(all.words.size() == 12);

    const auto single = minimizing_words(half, ExponentVector{0, 3});
    CHECK(single.weight == doctest::Approx(1.0));
    CHECK(single.words == std::vector<Word>{Word{2, 2, 2}});

    CHECK_THROWS_AS((minimizing_words(half, ExponentVector{6, 6}, 100)), Error);
    CHECK_THROWS_AS((minimizing_words(half, ExponentVector{-1, 1})), Error);
  }

  TEST_CASE("minimizing words agree with brute force") {
    Sampler s(21);
    for (int n = 1; n <= 3; ++n) {
      for (int rep = 0; rep < 4; ++rep) {
        const QMatrix q = rep == 0 ? s.unimodular_qmatrix(n) : s.qmatrix(n);
        for (const auto& k : testing::exponents_up_to(n, 5)) {
          const auto brute = oracle::brute_weight(q.entries(), k);
          const auto mw = minimizing_words(q, ExponentVector(k));
          CHECK(oracle::close(mw.weight, brute.weight));
          CHECK(as_set(mw.words) == brute.minimizers);
          const auto arr = minimal_arrangement(q, ExponentVector(k));
          CHECK(oracle::close(arr.weight, brute.weight));
          CHECK(arr.word == mw.words.front());
        }
      }
    }
  }

  TEST_CASE("compactify step") {
    const QMatrix ones = QMatrix::commutative(2);
    const Word out = compactify_step(ones, Word{1, 2, 1}, 1);
    CHECK((out == Word{1, 1, 2} || out == Word{2, 1, 1}));
    CHECK_THROWS_AS((compactify_step(ones, Word{1, 1, 2}, 1)), Error);

    const QMatrix half = QMatrix::single_parameter(2, 0.5);
    Sampler s(4);
    for (const auto& k : testing::exponents_up_to(2, 6)) {
      const auto brute = oracle::brute_weight(half.entries(), k);
      for (const auto& w : brute.minimizers) {
        const Word word(w);
        for (int j : bnc(word, 2)) {
          const Word next = compactify_step(half, word, j);
          CHECK(brute.minimizers.count(next.letters()) == 1);
          CHECK(count_maximal_j_subwords(next, j) == count_maximal_j_subwords(word, j) - 1);
        }
      }
    }
  }

  TEST_CASE("compact word examples") {
    CHECK(compact_word(QMatrix::single_parameter(2, 0.5), ExponentVector{1, 1}) == Word{2, 1});
    CHECK(compact_word(QMatrix::commutative(2), ExponentVector{2, 1}) == Word{1, 1, 2});
    CHECK(compact_word(QMatrix::commutative(3), ExponentVector{0, 0, 0}).empty());
  }

  TEST_CASE("compact word is the smallest compact minimizer") {
    Sampler s(8);
    for (int n = 1; n <= 3; ++n) {
      for (int rep = 0; rep < 4; ++rep) {
        const QMatrix q = s.qmatrix(n, 0.5, 2.0);
        for (const auto& k : testing::exponents_up_to(n, 5)) {
          const auto brute = oracle::brute_weight(q.entries(), k);
          oracle::Letters best;
          bool found = false;
          for (const auto& w : brute.minimizers) {
            if (oracle::compact(w)) {
              best = w;
              found = true;
              break;
            }
          }
          REQUIRE(found);
          CHECK(compact_word(q, ExponentVector(k)).letters() == best);
        }
      }
    }
  }

  TEST_CASE("compactification trace") {
    const QMatrix ones = QMatrix::commutative(2);
    const auto trace = compactify(ones, Word{1, 2, 1, 2});
    CHECK(is_compact(trace.result));
    CHECK(word_content(trace.result, 2) == ExponentVector{2, 2});
    CHECK_THROWS_AS((compactify(QMatrix::single_parameter(2, 0.5), Word{1, 2})), Error);
  }
}
