#ifndef QHOL_COCYCLE_HPP
#define QHOL_COCYCLE_HPP

#include <cstddef>
#include <vector>

#include "qhol/qmatrix.hpp"
#include "qhol/word.hpp"

namespace qhol {

inline constexpr std::size_t kDefaultPermutationCap = 50000;

/// lambda(sigma, alpha): the scalar with x_alpha = lambda * x_{sigma(alpha)},
/// i.e. the product of q_{alpha_i alpha_j} over inversions i < j,
/// sigma(i) > sigma(j).
Complex cocycle_lambda(const QMatrix& q, const Permutation& sigma, const Word& w);

/// The coefficient c with x_from = c * x_to. Both words must have equal
/// content; the value does not depend on which permutation realizes `to`.
Complex rewrite_coefficient(const QMatrix& q, const Word& from, const Word& to);

/// Number of distinct arrangements |k|! / (k_1! ... k_n!), saturating at
/// `saturate_at`.
std::size_t multinomial_count(const ExponentVector& k, std::size_t saturate_at = SIZE_MAX);

struct MinimizingWords {
  double weight = 1.0;     // w_q(k)
  std::vector<Word> words;  // W(k), lexicographically sorted
};

/// Enumerates every distinct rearrangement beta of delta(k), computes c(beta)
/// with x_{delta(k)} = c(beta) x_beta, and returns the minimum modulus with
/// all words attaining it (relative band kModulusTolerance).
/// Throws CapExceeded if the arrangement count exceeds `cap`.
MinimizingWords minimizing_words(const QMatrix& q, const ExponentVector& k,
                                 std::size_t cap = kDefaultPermutationCap);

struct MinimalArrangement {
  double weight = 1.0;
  Word word;  // lexicographically smallest element of W(k)
};

/// Exact minimization over arrangements by dynamic programming over the
/// letter counts already placed; cost is polynomial in prod(k_i + 1).
MinimalArrangement minimal_arrangement(const QMatrix& q, const ExponentVector& k);

/// One step of the compactification procedure: moves the leftmost maximal
/// j-run rightwards until it abuts the next j-run, through the cycles
/// sigma_{t,s}, sigma_{t-1,s-1}, ... . Throws NotApplicable if N(w, j) < 2.
/// Membership of `w` in W(k) is the caller's responsibility.
Word compactify_step(const QMatrix& q, const Word& w, int j);

/// The lexicographically smallest compact word in W(k), found by scanning
/// the orderings of the letters present in k.
Word compact_word(const QMatrix& q, const ExponentVector& k);

struct CompactificationTrace {
  Word start;                   // element of W(k) the iteration starts from
  Word result;                  // compact element of W(k)
  std::vector<int> steps;       // compactify_step calls spent on each letter
};

/// Iterated compactify_step: starts from `start` (must lie in W(k)) and
/// merges the runs of each letter in bnc in turn.
CompactificationTrace compactify(const QMatrix& q, const Word& start);
/// Same, starting from the lexicographically smallest element of W(k).
CompactificationTrace compactify(const QMatrix& q, const ExponentVector& k);

}  // namespace qhol

#endif
