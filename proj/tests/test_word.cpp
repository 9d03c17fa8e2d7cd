#include <doctest.h>

#include "qhol/error.hpp"
#include "qhol/sampling.hpp"
#include "qhol/word.hpp"

using namespace qhol;

TEST_SUITE("word") {
  TEST_CASE("adjacent letter changes") {
    CHECK(s_count(Word{1, 1, 2, 2}) == 1);
    CHECK(s_count(Word{}) == -1);
    CHECK(s_count(Word{1, 2, 1}) == 2);
    CHECK(s_count(Word{3}) == 0);
  }

  TEST_CASE("delta and content") {
    CHECK(delta(ExponentVector{2, 1}) == Word{1, 1, 2});
    CHECK(delta(ExponentVector{0, 0}).empty());
    CHECK(delta(ExponentVector{1, 0, 2}) == Word{1, 3, 3});
    CHECK(word_content(Word{2, 1, 2}, 2) == ExponentVector{1, 2});
    CHECK(word_content(Word{}, 3) == ExponentVector{0, 0, 0});
    CHECK(word_content(delta(ExponentVector{3, 1}), 2) == ExponentVector{3, 1});
    CHECK_THROWS_AS((delta(ExponentVector{1, -1})), Error);
    CHECK_THROWS_AS((word_content(Word{1, 4}, 3)), Error);
  }

  TEST_CASE("permutation action") {
    CHECK(apply_permutation(Permutation::identity(3), Word{1, 2, 1}) == Word{1, 2, 1});
    CHECK(apply_permutation(Permutation::transposition(1, 2, 2), Word{1, 2}) == Word{2, 1});
    CHECK(apply_permutation(cycle_sigma(1, 3, 3), Word{1, 2, 3}) == Word{3, 1, 2});
    CHECK_THROWS_AS((apply_permutation(Permutation::identity(2), Word{1, 2, 3})), Error);
    CHECK_THROWS_AS((Permutation(std::vector<int>{1, 1})), Error);
    CHECK_THROWS_AS((Permutation(std::vector<int>{0, 1})), Error);
  }

  TEST_CASE("cycles") {
    CHECK(cycle_sigma(1, 2, 2) == Permutation::transposition(1, 2, 2));
    const Permutation c = cycle_sigma(2, 4, 5);
    CHECK(c.images() == std::vector<int>{1, 3, 4, 2, 5});
    for (int s = 1; s <= 5; ++s)
      for (int t = s + 1; t <= 5; ++t) CHECK(cycle_sigma(s, t, 5) * cycle_sigma(t, s, 5) == Permutation::identity(5));
    CHECK_THROWS_AS(cycle_sigma(0, 2, 3), Error);
    CHECK_THROWS_AS(cycle_sigma(1, 4, 3), Error);
  }

  TEST_CASE("composition matches sequential action") {
    Sampler s(7);
    for (int i = 0; i < 200; ++i) {
      const Word w = s.word(3, s.uniform_int(0, 7));
      const Permutation a = s.permutation(w.size()), b = s.permutation(w.size());
      CHECK(apply_permutation(a * b, w) == apply_permutation(a, apply_permutation(b, w)));
      CHECK(apply_permutation(a.inverse(), apply_permutation(a, w)) == w);
    }
  }

  TEST_CASE("maximal runs and compactness") {
    CHECK(count_maximal_j_subwords(Word{1, 1, 2, 2, 1}, 1) == 2);
    CHECK(count_maximal_j_subwords(Word{1, 1, 2, 2, 1}, 2) == 1);
    CHECK(count_maximal_j_subwords(Word{}, 1) == 0);
    CHECK(is_compact(Word{2, 2, 1, 1, 1}));
    CHECK_FALSE(is_compact(Word{1, 2, 1}));
    CHECK(is_compact(Word{}));
    CHECK(bnc(Word{1, 2, 1, 3, 2}, 3) == std::set<int>{1, 2});
    CHECK(bc(Word{1, 2, 1, 3, 2}, 3) == std::set<int>{3});
  }

  TEST_CASE("exponent vectors") {
    const ExponentVector k{2, -1, 0};
    CHECK(k.total() == 1);
    CHECK_FALSE(k.is_nonnegative());
    CHECK(k.positive_part() == ExponentVector{2, 0, 0});
    CHECK(k.negative_part() == ExponentVector{0, -1, 0});
    CHECK(k.positive_part() + k.negative_part() == k);
    CHECK(to_string(k) == "(2,-1,0)");
    CHECK(to_string(Word{1, 2}) == "(1,2)");
    CHECK_THROWS_AS((ExponentVector{1} + ExponentVector({1, 2})), Error);
  }

  TEST_CASE("alphabet check") {
    CHECK_NOTHROW((Word{1, 2}.check_alphabet(2)));
    CHECK_THROWS_AS((Word{1, 3}.check_alphabet(2)), Error);
    CHECK_THROWS_AS((Word{0}.check_alphabet(2)), Error);
  }
}
