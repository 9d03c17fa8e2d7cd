#include "qhol/word.hpp"

#include <algorithm>

#include "qhol/error.hpp"

namespace qhol {

void Word::check_alphabet(int n) const {
  for (int letter : letters_) {
    if (letter < 1 || letter > n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "letter " + std::to_string(letter) + " outside 1.." + std::to_string(n));
    }
  }
}

Word operator+(const Word& a, const Word& b) {
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

bool ExponentVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e >= 0; });
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

ExponentVector ExponentVector::positive_part() const {
  ExponentVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = std::max(entries_[i], 0);
  return out;
}

ExponentVector ExponentVector::negative_part() const {
  ExponentVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = std::min(entries_[i], 0);
  return out;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "exponent vectors differ in length");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "exponent vectors differ in length");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[v - 1]) {
      throw Error(ErrorCode::IndexOutOfRange, "not a permutation of 1..d");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<int> images(d);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int i, int j, std::size_t d) {
  if (i < 1 || j < 1 || static_cast<std::size_t>(std::max(i, j)) > d) {
    throw Error(ErrorCode::IndexOutOfRange, "transposition index outside 1..d");
  }
  auto p = identity(d);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw Error(ErrorCode::LengthMismatch, "composing permutations of different degree");
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(out));
}

int s_count(const Word& w) {
  if (w.size() <= 1) return static_cast<int>(w.size()) - 1;
  int changes = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) changes += (w[i] != w[i + 1]);
  return changes;
}

Word delta(const ExponentVector& k) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0) throw Error(ErrorCode::NegativeExponent, "delta(k) needs k >= 0");
    letters.insert(letters.end(), static_cast<std::size_t>(k[i]), static_cast<int>(i) + 1);
  }
  return Word(std::move(letters));
}

ExponentVector word_content(const Word& w, int n) {
  w.check_alphabet(n);
  ExponentVector k(static_cast<std::size_t>(n));
  for (int letter : w) ++k[letter - 1];
  return k;
}

Word apply_permutation(const Permutation& sigma, const Word& w) {
  if (sigma.size() != w.size()) throw Error(ErrorCode::LengthMismatch, "permutation degree differs from word length");
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[sigma.images()[i] - 1] = w[i];
  return Word(std::move(out));
}

Permutation cycle_sigma(int s, int t, std::size_t d) {
  const auto dd = static_cast<int>(d);
  if (s < 1 || t < 1 || s > dd || t > dd) {
    throw Error(ErrorCode::IndexOutOfRange, "cycle endpoints outside 1..d");
  }
  auto images = Permutation::identity(d).images();
  if (s < t) {
    for (int i = s; i < t; ++i) images[i - 1] = i + 1;
    images[t - 1] = s;
  } else if (s > t) {
    // inverse of the cycle (t ... s)
    for (int i = t + 1; i <= s; ++i) images[i - 1] = i - 1;
    images[t - 1] = s;
  }
  return Permutation(std::move(images));
}

int count_maximal_j_subwords(const Word& w, int j) {
  int runs = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == j && (i == 0 || w[i - 1] != j)) ++runs;
  }
  return runs;
}

std::set<int> bnc(const Word& w, int n) {
  std::set<int> out;
  for (int j = 1; j <= n; ++j) {
    if (count_maximal_j_subwords(w, j) >= 2) out.insert(j);
  }
  return out;
}

std::set<int> bc(const Word& w, int n) {
  std::set<int> out;
  for (int j = 1; j <= n; ++j) {
    if (count_maximal_j_subwords(w, j) < 2) out.insert(j);
  }
  return out;
}

bool is_compact(const Word& w) {
  std::set<int> closed;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i] != w[i - 1]) closed.insert(w[i - 1]);
    if (closed.count(w[i])) return false;
  }
  return true;
}

namespace {
template <typename Range>
std::string join(const Range& r) {
  std::string out = "(";
  bool first = true;
  for (int v : r) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}
}  // namespace

std::string to_string(const Word& w) { return join(w); }
std::string to_string(const ExponentVector& k) { return join(k); }

}  // namespace qhol
