#ifndef QHOL_TESTS_ORACLES_HPP
#define QHOL_TESTS_ORACLES_HPP

// Reference implementations used to cross-check the library. They work
// directly from the defining relations (adjacent swaps, string rewriting,
// brute-force enumeration) and share no code with the library algorithms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using Letters = std::vector<int>;
using QTable = Eigen::MatrixXcd;  // q(a-1, b-1) for letters a, b

inline bool close(C a, C b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-12;
}

inline bool close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-12;
}

/// Coefficient c with x_from = c x_to, obtained by bubble-sorting `from`
/// into `to` one adjacent swap at a time (x_a x_b = q_ab x_b x_a).
inline C rewrite(const QTable& q, const Letters& from, const Letters& to) {
  // occurrence-stable target positions
  std::map<int, std::vector<int>> slots;
  for (int p = static_cast<int>(to.size()) - 1; p >= 0; --p) slots[to[p]].push_back(p);
  std::vector<int> target(from.size());
  Letters cur = from;
  for (std::size_t p = 0; p < from.size(); ++p) {
    auto& s = slots[from[p]];
    target[p] = s.back();
    s.pop_back();
  }
  C c = 1.0;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (target[p] > target[p + 1]) {
        c *= q(cur[p] - 1, cur[p + 1] - 1);
        std::swap(cur[p], cur[p + 1]);
        std::swap(target[p], target[p + 1]);
        swapped = true;
      }
    }
  }
  return c;
}

/// sigma(alpha) with sigma(alpha)_{sigma(i)} = alpha_i.
inline Letters act(const std::vector<int>& sigma, const Letters& alpha) {
  Letters out(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) out[static_cast<std::size_t>(sigma[i] - 1)] = alpha[i];
  return out;
}

/// lambda(sigma, alpha) through the swap oracle.
inline C lambda(const QTable& q, const std::vector<int>& sigma, const Letters& alpha) {
  return rewrite(q, alpha, act(sigma, alpha));
}

inline Letters sorted_letters(Letters w) {
  std::sort(w.begin(), w.end());
  return w;
}

inline Letters delta(const std::vector<int>& k) {
  Letters w;
  for (std::size_t i = 0; i < k.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(k[i]), static_cast<int>(i) + 1);
  return w;
}

inline std::vector<int> content(const Letters& w, int n) {
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  for (int l : w) ++k[static_cast<std::size_t>(l - 1)];
  return k;
}

/// All words with content k, each with c(w): x_{delta(k)} = c(w) x_w.
inline std::vector<std::pair<Letters, C>> shuffles(const QTable& q, const std::vector<int>& k) {
  std::vector<std::pair<Letters, C>> out;
  const Letters base = delta(k);
  Letters w = base;
  do {
    out.emplace_back(w, rewrite(q, base, w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

struct BruteWeight {
  double weight = 1.0;
  std::set<Letters> minimizers;
};

inline BruteWeight brute_weight(const QTable& q, const std::vector<int>& k, double rel = 1e-9) {
  const auto all = shuffles(q, k);
  BruteWeight b;
  b.weight = std::abs(all.front().second);
  for (const auto& [w, c] : all) b.weight = std::min(b.weight, std::abs(c));
  for (const auto& [w, c] : all)
    if (close(std::abs(c), b.weight, rel)) b.minimizers.insert(w);
  return b;
}

inline bool compact(const Letters& w) {
  std::set<int> seen;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p > 0 && w[p] == w[p - 1]) continue;
    if (!seen.insert(w[p]).second) return false;
  }
  return true;
}

inline int adjacent_changes(const Letters& w) {
  if (w.empty()) return -1;
  int s = 0;
  for (std::size_t p = 1; p < w.size(); ++p) s += w[p] != w[p - 1];
  return s;
}

/// Sparse polynomials keyed by words or exponent vectors.
using WordPoly = std::map<Letters, C>;
using ExpPoly = std::map<std::vector<int>, C>;

/// Projection to the q-polynomial algebra, word by word.
inline ExpPoly project(const QTable& q, const WordPoly& f, int n) {
  ExpPoly out;
  for (const auto& [w, c] : f) out[content(w, n)] += c * rewrite(q, w, sorted_letters(w));
  return out;
}

/// Product of q-polynomials via words: x^k x^l = x_{delta(k) delta(l)}.
inline ExpPoly qproduct(const QTable& q, const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  const int n = static_cast<int>(q.rows());
  for (const auto& [k, c] : a) {
    for (const auto& [l, d] : b) {
      Letters w = delta(k);
      const Letters v = delta(l);
      w.insert(w.end(), v.begin(), v.end());
      out[content(w, n)] += c * d * rewrite(q, w, sorted_letters(w));
    }
  }
  return out;
}

inline double pow_vec(const Eigen::VectorXd& rho, const std::vector<int>& k) {
  double r = 1.0;
  for (std::size_t i = 0; i < k.size(); ++i) r *= std::pow(rho(static_cast<Eigen::Index>(i)), k[i]);
  return r;
}

inline double norm_free_entire(const WordPoly& f, double rho) {
  double s = 0.0;
  for (const auto& [w, c] : f) s += std::abs(c) * std::pow(rho, static_cast<double>(w.size()));
  return s;
}

inline double norm_free_polydisk(const WordPoly& f, const Eigen::VectorXd& rho, double tau) {
  double s = 0.0;
  for (const auto& [w, c] : f) {
    double t = std::abs(c) * std::pow(tau, adjacent_changes(w) + 1);
    for (int l : w) t *= rho(l - 1);
    s += t;
  }
  return s;
}

inline double norm_q_polydisk(const QTable& q, const ExpPoly& a, const Eigen::VectorXd& rho) {
  double s = 0.0;
  for (const auto& [k, c] : a) s += std::abs(c) * brute_weight(q, k).weight * pow_vec(rho, k);
  return s;
}

inline double norm_q_polyannulus(const ExpPoly& a, const Eigen::VectorXd& rho, const Eigen::VectorXd& tau) {
  double s = 0.0;
  for (const auto& [k, c] : a) {
    double t = std::abs(c);
    for (std::size_t i = 0; i < k.size(); ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      t *= k[i] < 0 ? std::pow(rho(ii), k[i]) : std::pow(tau(ii), k[i]);
    }
    s += t;
  }
  return s;
}

/// U(g) with [x, y] = y, in the basis x^i y^j, by rewriting yx -> xy - y.
class EnvelopingOracle {
 public:
  using Basis = std::map<std::pair<int, int>, C>;

  Basis normal(const std::string& word) {
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
    Basis out;
    const auto pos = word.find("yx");
    if (pos == std::string::npos) {
      const auto i = static_cast<int>(std::count(word.begin(), word.end(), 'x'));
      out[{i, static_cast<int>(word.size()) - i}] = 1.0;
    } else {
      const std::string swapped = word.substr(0, pos) + "xy" + word.substr(pos + 2);
      const std::string dropped = word.substr(0, pos) + "y" + word.substr(pos + 2);
      for (const auto& [ij, c] : normal(swapped)) out[ij] += c;
      for (const auto& [ij, c] : normal(dropped)) out[ij] -= c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == C(0.0) ? out.erase(it) : std::next(it);
    return memo_[word] = out;
  }

  Basis product(const Basis& a, const Basis& b) {
    Basis out;
    for (const auto& [ij, c] : a) {
      for (const auto& [kl, d] : b) {
        const std::string w = std::string(ij.first, 'x') + std::string(ij.second, 'y') + std::string(kl.first, 'x') +
                              std::string(kl.second, 'y');
        for (const auto& [e, v] : normal(w)) out[e] += c * d * v;
      }
    }
    return out;
  }

  static double norm(const Basis& a, int n, double t) {
    double s = 0.0;
    for (const auto& [ij, c] : a)
      if (ij.second <= n) s += std::abs(c) * std::pow(t, ij.first);
    return s;
  }

 private:
  std::map<std::string, Basis> memo_;
};

/// f(A_1, ..., A_n) by summing word products.
inline Eigen::MatrixXcd evaluate(const WordPoly& f, const std::vector<Eigen::MatrixXcd>& a) {
  const Eigen::Index d = a.front().rows();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [w, c] : f) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
    for (int l : w) m = m * a[static_cast<std::size_t>(l - 1)];
    out += c * m;
  }
  return out;
}

}  // namespace oracle

#endif
