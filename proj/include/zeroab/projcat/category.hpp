#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "zeroab/projcat/morphism.hpp"
#include "zeroab/projcat/ring.hpp"

namespace zeroab {

// The configured base category: proj Z when T is Integer, otherwise proj of
// the triangular algebra over the field T.
template <ExactScalar T> class Category {
public:
  static constexpr bool integral = std::is_same_v<T, Integer>;

  Category()
    requires(integral)
  = default;

  Category(std::size_t m, ScalarContext<T> ctx)
    requires(!integral)
      : m_(m), ctx_(std::move(ctx)) {
    require(m >= 1 && m <= max_triangular_size, ErrorKind::Validation,
            "triangular size m must lie in [1, 64]");
  }

  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] const ScalarContext<T> &scalars() const noexcept { return ctx_; }
  [[nodiscard]] T one() const { return ctx_.one(); }
  [[nodiscard]] T from_int(long v) const { return ctx_.from_int(v); }

  [[nodiscard]] RingConfig config() const {
    if constexpr (integral)
      return RingConfig::integers();
    else if constexpr (std::is_same_v<T, Rational>)
      return RingConfig::triangular(m_, FieldKind::Rational);
    else
      return RingConfig::triangular(m_, FieldKind::Prime, ctx_.characteristic());
  }

  [[nodiscard]] Object object(std::vector<std::size_t> mult) const {
    require(mult.size() == m_, ErrorKind::Validation, "multiplicity vector has wrong length");
    return Object(std::move(mult));
  }
  // P_i; over the integers P_1 = Z.
  [[nodiscard]] Object indecomposable(std::size_t i) const {
    require(i >= 1 && i <= m_, ErrorKind::Validation, "indecomposable index out of range");
    std::vector<std::size_t> mult(m_, 0);
    mult[i - 1] = 1;
    return Object(std::move(mult));
  }
  // The additive generator P_1 + ... + P_m (Z over the integers).
  [[nodiscard]] Object generator() const { return Object(std::vector<std::size_t>(m_, 1)); }
  [[nodiscard]] Object zero_object() const { return Object(std::vector<std::size_t>(m_, 0)); }

  void check(const Object &x) const {
    require(x.m() == m_, ErrorKind::Validation, "object belongs to a different category");
  }

  [[nodiscard]] Morphism<T> identity(const Object &x) const {
    check(x);
    return Morphism<T>(x, x, Matrix<T>::identity(x.size(), one()));
  }
  [[nodiscard]] Morphism<T> zero(const Object &x, const Object &y) const {
    check(x);
    check(y);
    return Morphism<T>(x, y, Matrix<T>(y.size(), x.size()));
  }
  [[nodiscard]] Morphism<T> morphism(const Object &x, const Object &y, Matrix<T> mat) const {
    check(x);
    check(y);
    return Morphism<T>(x, y, std::move(mat));
  }
  // Morphism from small integer entries (tests and demos).
  [[nodiscard]] Morphism<T> morphism(const Object &x, const Object &y,
                                     std::initializer_list<std::initializer_list<long>> rows) const {
    Matrix<T> mat(y.size(), x.size());
    require(rows.size() == y.size(), ErrorKind::DimensionMismatch, "row count mismatch");
    std::size_t i = 0;
    for (const auto &row : rows) {
      require(row.size() == x.size(), ErrorKind::DimensionMismatch, "column count mismatch");
      std::size_t j = 0;
      for (long v : row) mat(i, j++) = from_int(v);
      ++i;
    }
    return morphism(x, y, std::move(mat));
  }

  [[nodiscard]] HomSpace hom(const Object &x, const Object &y) const {
    check(x);
    check(y);
    return HomSpace(x, y);
  }

private:
  std::size_t m_ = 1;
  ScalarContext<T> ctx_{};
};

// ---------------------------------------------------------------------------
// Duality. The transpose of a matrix between projectives, combined with the
// relabelling P_i -> P_{m+1-i}, sends proj of the triangular algebra to its
// opposite, which we identify with proj of the same algebra. Within each
// block the summand order is kept, so dual is an involution.

// For each summand position of x, its position in dual(x).
inline std::vector<std::size_t> dual_positions(const Object &x) {
  const auto &mult = x.multiplicities();
  const std::size_t m = mult.size();
  // start[j] = first position of the label-j block of dual(x); that block
  // holds the copies of P_{m+1-j}
  std::vector<std::size_t> start(m + 2, 0);
  for (std::size_t j = 1; j <= m; ++j) start[j + 1] = start[j] + mult[m - j];
  std::vector<std::size_t> out;
  out.reserve(x.size());
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t t = 0; t < mult[i - 1]; ++t) out.push_back(start[m + 1 - i] + t);
  return out;
}

inline Object dual(const Object &x) {
  std::vector<std::size_t> mult(x.multiplicities().rbegin(), x.multiplicities().rend());
  return Object(std::move(mult));
}

template <ExactScalar T> Morphism<T> dual(const Morphism<T> &f) {
  const auto px = dual_positions(f.source());
  const auto py = dual_positions(f.target());
  Matrix<T> d(f.source().size(), f.target().size());
  for (std::size_t r = 0; r < f.target().size(); ++r)
    for (std::size_t c = 0; c < f.source().size(); ++c) d(px[c], py[r]) = f.matrix()(r, c);
  return Morphism<T>(dual(f.target()), dual(f.source()), std::move(d));
}

// ---------------------------------------------------------------------------
// Biproducts. X + Y is re-sorted into canonical order; summands of X come
// before those of Y carrying the same label.

template <ExactScalar T> struct Biproduct {
  Object object;
  Morphism<T> i1, i2, p1, p2;
};

template <ExactScalar T>
Biproduct<T> direct_sum(const Category<T> &C, const Object &x, const Object &y) {
  C.check(x);
  C.check(y);
  std::vector<std::size_t> mult(C.m());
  for (std::size_t i = 0; i < C.m(); ++i) mult[i] = x.multiplicities()[i] + y.multiplicities()[i];
  Object s(std::move(mult));
  Matrix<T> i1(s.size(), x.size()), i2(s.size(), y.size());
  std::size_t pos = 0, px = 0, py = 0;
  for (std::size_t i = 0; i < C.m(); ++i) {
    for (std::size_t t = 0; t < x.multiplicities()[i]; ++t) i1(pos++, px++) = C.one();
    for (std::size_t t = 0; t < y.multiplicities()[i]; ++t) i2(pos++, py++) = C.one();
  }
  Morphism<T> in1(x, s, i1), in2(y, s, i2);
  Morphism<T> pr1(s, x, i1.transpose()), pr2(s, y, i2.transpose());
  return {s, std::move(in1), std::move(in2), std::move(pr1), std::move(pr2)};
}

// f + g : X + X' -> Y + Y'
template <ExactScalar T>
Morphism<T> direct_sum(const Category<T> &C, const Morphism<T> &f, const Morphism<T> &g) {
  const auto s = direct_sum(C, f.source(), g.source());
  const auto t = direct_sum(C, f.target(), g.target());
  return t.i1 * f * s.p1 + t.i2 * g * s.p2;
}

// [a b] : X + Y -> Z
template <ExactScalar T>
Morphism<T> copair(const Category<T> &C, const Morphism<T> &a, const Morphism<T> &b) {
  require(a.target() == b.target(), ErrorKind::DimensionMismatch, "copair: targets differ");
  const auto s = direct_sum(C, a.source(), b.source());
  return a * s.p1 + b * s.p2;
}

// [a; b] : Z -> X + Y
template <ExactScalar T>
Morphism<T> pair(const Category<T> &C, const Morphism<T> &a, const Morphism<T> &b) {
  require(a.source() == b.source(), ErrorKind::DimensionMismatch, "pair: sources differ");
  const auto s = direct_sum(C, a.target(), b.target());
  return s.i1 * a + s.i2 * b;
}

// ---------------------------------------------------------------------------
// Injective reflector and projective coreflector. In proj of the triangular
// algebra the injectives are add P_m and the projective objects add P_1; the
// canonical maps use the scalar 1 on every summand.

template <ExactScalar T> void require_enough_injectives(const Category<T> &) {
  if constexpr (Category<T>::integral)
    fail(ErrorKind::NoEnoughInjectives, "proj Z has no nonzero injective object");
}
template <ExactScalar T> void require_enough_projectives(const Category<T> &) {
  if constexpr (Category<T>::integral)
    fail(ErrorKind::NoEnoughProjectives, "proj Z has no nonzero projective object");
}

template <ExactScalar T> Object injective_hull(const Category<T> &C, const Object &x) {
  require_enough_injectives(C);
  C.check(x);
  std::vector<std::size_t> mult(C.m(), 0);
  mult.back() = x.size();
  return Object(std::move(mult));
}

template <ExactScalar T> Object projective_cover(const Category<T> &C, const Object &x) {
  require_enough_projectives(C);
  C.check(x);
  std::vector<std::size_t> mult(C.m(), 0);
  mult.front() = x.size();
  return Object(std::move(mult));
}

// eta_X : X -> X_Inj
template <ExactScalar T> Morphism<T> eta(const Category<T> &C, const Object &x) {
  return Morphism<T>(x, injective_hull(C, x), Matrix<T>::identity(x.size(), C.one()));
}

// epsilon_X : X_Proj -> X
template <ExactScalar T> Morphism<T> epsilon(const Category<T> &C, const Object &x) {
  return Morphism<T>(projective_cover(C, x), x, Matrix<T>::identity(x.size(), C.one()));
}

// f_Inj : X_Inj -> Y_Inj, the unique map with eta_Y f = f_Inj eta_X.
template <ExactScalar T> Morphism<T> injective_map(const Category<T> &C, const Morphism<T> &f) {
  return Morphism<T>(injective_hull(C, f.source()), injective_hull(C, f.target()), f.matrix());
}

// f_Proj : X_Proj -> Y_Proj with f epsilon_X = epsilon_Y f_Proj.
template <ExactScalar T> Morphism<T> projective_map(const Category<T> &C, const Morphism<T> &f) {
  return Morphism<T>(projective_cover(C, f.source()), projective_cover(C, f.target()), f.matrix());
}

struct ObjectClass {
  bool injective = false;
  bool projective = false;
  friend bool operator==(const ObjectClass &, const ObjectClass &) = default;
};

template <ExactScalar T> ObjectClass classify(const Category<T> &C, const Object &x) {
  C.check(x);
  if (x.is_zero()) return {true, true};
  if constexpr (Category<T>::integral) {
    return {false, false};
  } else {
    const auto supp = x.support();
    const bool inj = std::all_of(supp.begin(), supp.end(), [&](std::size_t i) { return i == C.m(); });
    const bool proj = std::all_of(supp.begin(), supp.end(), [](std::size_t i) { return i == 1; });
    return {inj, proj};
  }
}

} // namespace zeroab
