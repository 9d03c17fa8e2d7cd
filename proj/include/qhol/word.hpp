#ifndef QHOL_WORD_HPP
#define QHOL_WORD_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace qhol {

/// A word over the alphabet {1..n}; letters are 1-based. The empty word is
/// the unit monomial.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) : letters_(letters) {}
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  /// 1-based position access, matching the usual alpha_i indexing.
  int at(std::size_t position) const { return letters_.at(position - 1); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<int>& letters() const noexcept { return letters_; }

  /// Throws IndexOutOfRange unless every letter lies in 1..n.
  void check_alphabet(int n) const;

  friend Word operator+(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// Multi-index k in Z^n (nonnegative in polydisk contexts).
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
  ExponentVector(std::initializer_list<int> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  /// |k| = k_1 + ... + k_n.
  long total() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }
  bool is_nonnegative() const;
  bool is_zero() const;
  /// k^+ and k^- (componentwise max/min with zero).
  ExponentVector positive_part() const;
  ExponentVector negative_part() const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> entries_;
};

/// Canonical term order: total degree first, then lexicographic.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    const long da = a.total(), db = b.total();
    if (da != db) return da < db;
    return a < b;
  }
};

/// A bijection of {1..d}, stored as images[i-1] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws IndexOutOfRange if `images` is not a permutation of 1..d.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t d);
  /// Transposition (i j) in S_d.
  static Permutation transposition(int i, int j, std::size_t d);

  std::size_t size() const noexcept { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  /// Composition (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// s(alpha): number of i with alpha_i != alpha_{i+1}; equals |alpha|-1 when
/// |alpha| <= 1.
int s_count(const Word& w);

/// delta(k) = (1,...,1, 2,...,2, ..., n,...,n) with k_i copies of i.
Word delta(const ExponentVector& k);

/// Letter multiplicities; inverse of delta on sorted words.
ExponentVector word_content(const Word& w, int n);

/// sigma(alpha) = alpha o sigma^{-1}: the letter at position i moves to sigma(i).
Word apply_permutation(const Permutation& sigma, const Word& w);

/// The cycle (s s+1 ... t) in S_d for s < t; for s > t the inverse cycle
/// sigma_{t,s}^{-1}. s == t yields the identity.
Permutation cycle_sigma(int s, int t, std::size_t d);

/// N(alpha, j): number of maximal nonempty runs of letter j.
int count_maximal_j_subwords(const Word& w, int j);

/// Letters j in 1..n with N(alpha, j) >= 2.
std::set<int> bnc(const Word& w, int n);
/// Complement of bnc in 1..n.
std::set<int> bc(const Word& w, int n);

/// True iff every letter occupies a single run.
bool is_compact(const Word& w);

std::string to_string(const Word& w);
std::string to_string(const ExponentVector& k);

}  // namespace qhol

#endif
