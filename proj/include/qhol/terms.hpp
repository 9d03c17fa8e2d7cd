#ifndef QHOL_TERMS_HPP
#define QHOL_TERMS_HPP

#include <map>

#include "qhol/scalar.hpp"
#include "qhol/word.hpp"

namespace qhol {

/// Sparse coefficient map in canonical (degree, lexicographic) order. Terms
/// whose modulus falls below kPruneThreshold are never stored.
template <typename Key, typename Compare = DegLex>
class TermMap {
 public:
  using map_type = std::map<Key, Complex, Compare>;

  void add(const Key& key, Complex c) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
  }
  void scale(Complex c) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= c;
      it = std::abs(it->second) < kPruneThreshold ? terms_.erase(it) : std::next(it);
    }
  }
  Complex coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Complex(0.0) : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }
  const map_type& map() const noexcept { return terms_; }

  /// Coefficientwise agreement on the union of supports.
  bool approx_equal(const TermMap& other, double rel_tol = kRelativeTolerance) const {
    for (const auto& [k, c] : terms_)
      if (!qhol::approx_equal(c, other.coefficient(k), rel_tol)) return false;
    for (const auto& [k, c] : other.terms_)
      if (!qhol::approx_equal(c, coefficient(k), rel_tol)) return false;
    return true;
  }

  friend bool operator==(const TermMap&, const TermMap&) = default;

 private:
  map_type terms_;
};

}  // namespace qhol

#endif
