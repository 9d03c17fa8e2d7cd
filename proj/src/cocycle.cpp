#include "qhol/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qhol/error.hpp"

namespace qhol {

Complex cocycle_lambda(const QMatrix& q, const Permutation& sigma, const Word& w) {
  if (sigma.size() != w.size()) throw Error(ErrorCode::LengthMismatch, "permutation degree differs from word length");
  w.check_alphabet(q.size());
  Complex lambda(1.0);
  const auto& img = sigma.images();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (img[i] > img[j]) lambda *= q(w[i], w[j]);
    }
  }
  return lambda;
}

Complex rewrite_coefficient(const QMatrix& q, const Word& from, const Word& to) {
  if (from.size() != to.size()) throw Error(ErrorCode::LengthMismatch, "words differ in length");
  const int n = q.size();
  if (word_content(from, n) != word_content(to, n)) {
    throw Error(ErrorCode::NotApplicable, "words differ in content");
  }
  // Match the m-th occurrence of each letter in `from` with its m-th
  // occurrence in `to`.
  std::vector<std::vector<int>> slots(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = to.size(); i-- > 0;) slots[to[i]].push_back(static_cast<int>(i) + 1);
  std::vector<int> images(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto& s = slots[from[i]];
    images[i] = s.back();
    s.pop_back();
  }
  return cocycle_lambda(q, Permutation(std::move(images)), from);
}

std::size_t multinomial_count(const ExponentVector& k, std::size_t saturate_at) {
  // Product of binomials C(k_1+...+k_i, k_i), each computed exactly.
  std::size_t total = 1;
  long placed = 0;
  for (int ki : k) {
    if (ki < 0) throw Error(ErrorCode::NegativeExponent, "multinomial of negative exponent");
    for (int m = 1; m <= ki; ++m) {
      ++placed;
      // total * placed / m stays integral for binomial accumulation.
      const auto p = static_cast<unsigned __int128>(total) * static_cast<unsigned>(placed);
      const auto next = p / static_cast<unsigned>(m);
      if (next >= saturate_at) return saturate_at;
      total = static_cast<std::size_t>(next);
    }
  }
  return total;
}

MinimizingWords minimizing_words(const QMatrix& q, const ExponentVector& k, std::size_t cap) {
  if (!k.is_nonnegative()) throw Error(ErrorCode::NegativeExponent, "W(k) needs k >= 0");
  if (k.size() != static_cast<std::size_t>(q.size())) throw Error(ErrorCode::LengthMismatch, "k length differs from n");
  const std::size_t count = multinomial_count(k, cap + 1);
  if (count > cap) {
    throw Error(ErrorCode::CapExceeded,
                "more than " + std::to_string(cap) + " arrangements of delta" + to_string(k));
  }
  const Word base = delta(k);
  std::vector<int> letters = base.letters();
  std::vector<std::pair<double, Word>> scored;
  scored.reserve(count);
  do {
    Word beta(letters);
    scored.emplace_back(std::abs(rewrite_coefficient(q, base, beta)), std::move(beta));
  } while (std::next_permutation(letters.begin(), letters.end()));

  MinimizingWords out;
  out.weight = std::numeric_limits<double>::infinity();
  for (const auto& [m, w] : scored) out.weight = std::min(out.weight, m);
  for (auto& [m, w] : scored) {
    if (m <= out.weight * (1.0 + kModulusTolerance)) out.words.push_back(std::move(w));
  }
  return out;
}

MinimalArrangement minimal_arrangement(const QMatrix& q, const ExponentVector& k) {
  if (!k.is_nonnegative()) throw Error(ErrorCode::NegativeExponent, "w_q(k) needs k >= 0");
  const int n = q.size();
  if (k.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::LengthMismatch, "k length differs from n");

  // Mixed-radix index over placed counts u, 0 <= u_i <= k_i.
  std::vector<std::size_t> stride(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 0; i < n; ++i) {
    stride[i + 1] = stride[i] * static_cast<std::size_t>(k[i] + 1);
    if (stride[i + 1] > (std::size_t{1} << 26)) throw Error(ErrorCode::TooLarge, "exponent too large for arrangement search");
  }
  const std::size_t states = stride[n];
  Eigen::MatrixXd logq(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) logq(a, b) = std::log(std::abs(q.entries()(a, b)));

  auto decode = [&](std::size_t idx) {
    std::vector<int> u(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) u[i] = static_cast<int>((idx / stride[i]) % static_cast<std::size_t>(k[i] + 1));
    return u;
  };
  // Placing letter b next puts it before every remaining copy of each a < b;
  // each such pair is reversed relative to delta(k) and costs log|q_ab|.
  auto step_cost = [&](const std::vector<int>& u, int b) {
    double c = 0.0;
    for (int a = 0; a < b; ++a) c += (k[a] - u[a]) * logq(a, b);
    return c;
  };

  // togo[idx]: minimal cost to finish from state idx. States are processed
  // from full to empty; successors always have larger index.
  std::vector<double> togo(states, std::numeric_limits<double>::infinity());
  togo[states - 1] = 0.0;
  for (std::size_t idx = states - 1; idx-- > 0;) {
    const auto u = decode(idx);
    for (int b = 0; b < n; ++b) {
      if (u[b] < k[b]) togo[idx] = std::min(togo[idx], step_cost(u, b) + togo[idx + stride[b]]);
    }
  }

  // Greedy lexicographic reconstruction along optimal transitions.
  std::vector<int> letters;
  std::size_t idx = 0;
  const double band = 1e-12 * (1.0 + std::abs(togo[0]));
  while (idx != states - 1) {
    const auto u = decode(idx);
    for (int b = 0; b < n; ++b) {
      if (u[b] < k[b] && step_cost(u, b) + togo[idx + stride[b]] <= togo[idx] + band) {
        letters.push_back(b + 1);
        idx += stride[b];
        break;
      }
    }
  }
  MinimalArrangement out;
  out.word = Word(std::move(letters));
  out.weight = std::abs(rewrite_coefficient(q, delta(k), out.word));
  return out;
}

Word compactify_step(const QMatrix& q, const Word& w, int j) {
  w.check_alphabet(q.size());
  if (count_maximal_j_subwords(w, j) < 2) {
    throw Error(ErrorCode::NotApplicable, "letter " + std::to_string(j) + " has fewer than two maximal runs");
  }
  // w = (beta_1, gamma_1, beta_2, gamma_2, beta_3) with gamma_1, gamma_2 the
  // two leftmost maximal j-runs. Positions are 1-based: r = |beta_1|,
  // s = r + |gamma_1|, t = s + |beta_2|.
  std::size_t p = 0;
  while (w[p] != j) ++p;
  const int r = static_cast<int>(p);
  while (p < w.size() && w[p] == j) ++p;
  const int s = static_cast<int>(p);
  while (w[p] != j) ++p;
  const int t = static_cast<int>(p);

  Word current = w;
  for (int i = 0; i < s - r; ++i) {
    current = apply_permutation(cycle_sigma(t - i, s - i, w.size()), current);
  }
  return current;
}

Word compact_word(const QMatrix& q, const ExponentVector& k) {
  const double weight = minimal_arrangement(q, k).weight;
  const Word base = delta(k);
  std::vector<int> order;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] > 0) order.push_back(static_cast<int>(i) + 1);
  do {
    std::vector<int> letters;
    for (int letter : order) letters.insert(letters.end(), static_cast<std::size_t>(k[letter - 1]), letter);
    Word candidate(std::move(letters));
    if (std::abs(rewrite_coefficient(q, base, candidate)) <= weight * (1.0 + kModulusTolerance)) return candidate;
  } while (std::next_permutation(order.begin(), order.end()));
  // Unreachable when W(k) contains a compact word.
  throw Error(ErrorCode::NotApplicable, "no compact minimizing word for k = " + to_string(k));
}

CompactificationTrace compactify(const QMatrix& q, const Word& start) {
  const int n = q.size();
  const ExponentVector k = word_content(start, n);
  const double w = minimal_arrangement(q, k).weight;
  if (!approx_equal(std::abs(rewrite_coefficient(q, delta(k), start)), w)) {
    throw Error(ErrorCode::NotApplicable, "compactification needs a minimizing word");
  }
  CompactificationTrace trace;
  trace.start = start;
  trace.steps.assign(static_cast<std::size_t>(n), 0);
  Word current = start;
  for (auto open = bnc(current, n); !open.empty(); open = bnc(current, n)) {
    const int j = *open.begin();
    while (count_maximal_j_subwords(current, j) >= 2) {
      current = compactify_step(q, current, j);
      ++trace.steps[j - 1];
    }
  }
  trace.result = std::move(current);
  return trace;
}

CompactificationTrace compactify(const QMatrix& q, const ExponentVector& k) {
  return compactify(q, minimal_arrangement(q, k).word);
}

}  // namespace qhol
