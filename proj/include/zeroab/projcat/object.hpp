#pragma once

#include <cstddef>
#include <numeric>
#include <ostream>
#include <vector>

#include "zeroab/error.hpp"

namespace zeroab {

// A finite direct sum of indecomposable projectives, stored as the
// multiplicity vector (n_1, ..., n_m) of P_1, ..., P_m. Over the integers
// m = 1 and the single entry is the rank.
//
// The expanded summand order is canonical: all copies of P_1 first, then
// P_2, and so on. Matrix rows and columns of morphisms follow this order.
class Object {
public:
  Object() = default;
  explicit Object(std::vector<std::size_t> multiplicities) : mult_(std::move(multiplicities)) {}

  static Object free(std::size_t rank) { return Object({rank}); }

  [[nodiscard]] std::size_t m() const noexcept { return mult_.size(); }
  [[nodiscard]] const std::vector<std::size_t> &multiplicities() const noexcept { return mult_; }
  // multiplicity of P_i, 1-based
  [[nodiscard]] std::size_t multiplicity(std::size_t i) const { return mult_.at(i - 1); }
  [[nodiscard]] std::size_t size() const {
    return std::accumulate(mult_.begin(), mult_.end(), std::size_t{0});
  }
  [[nodiscard]] bool is_zero() const { return size() == 0; }

  // Label (1-based index i of P_i) of every summand in canonical order.
  [[nodiscard]] std::vector<std::size_t> labels() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t i = 0; i < mult_.size(); ++i) out.insert(out.end(), mult_[i], i + 1);
    return out;
  }

  // Positions of the summands whose label is at least k. These span
  // Hom(P_k, X), the value of X at vertex k.
  [[nodiscard]] std::vector<std::size_t> positions_at_least(std::size_t k) const {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i)
      for (std::size_t c = 0; c < mult_[i]; ++c, ++pos)
        if (i + 1 >= k) out.push_back(pos);
    return out;
  }

  // Labels of the nonzero summands, ascending.
  [[nodiscard]] std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mult_.size(); ++i)
      if (mult_[i] != 0) out.push_back(i + 1);
    return out;
  }

  friend bool operator==(const Object &, const Object &) = default;

  friend std::ostream &operator<<(std::ostream &os, const Object &x) {
    os << '(';
    for (std::size_t i = 0; i < x.mult_.size(); ++i) os << (i ? "," : "") << x.mult_[i];
    return os << ')';
  }

private:
  std::vector<std::size_t> mult_;
};

// Concatenates label lists back into a multiplicity vector; labels must be
// sorted ascending.
inline Object object_from_labels(std::size_t m, const std::vector<std::size_t> &labels) {
  std::vector<std::size_t> mult(m, 0);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    require(labels[k] >= 1 && labels[k] <= m, ErrorKind::Validation, "label out of range");
    require(k == 0 || labels[k - 1] <= labels[k], ErrorKind::Validation, "labels not sorted");
    ++mult[labels[k] - 1];
  }
  return Object(std::move(mult));
}

} // namespace zeroab
