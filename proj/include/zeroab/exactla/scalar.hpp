#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include "zeroab/error.hpp"

namespace zeroab {

using Integer = mpz_class;
using Rational = mpq_class;

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Residue class modulo a prime. A default-constructed value is the zero of
// every prime field (modulus 0); binary operations adopt the nonzero modulus
// of either operand, so `Modular{}` can be used as an additive identity in
// generic code.
class Modular {
public:
  constexpr Modular() noexcept = default;
  constexpr Modular(std::int64_t value, std::uint32_t modulus)
      : value_(reduce(value, modulus)), modulus_(modulus) {
    if (modulus == 0) throw Error(ErrorKind::Validation, "modulus must be positive");
  }

  [[nodiscard]] constexpr std::uint32_t value() const noexcept { return value_; }
  [[nodiscard]] constexpr std::uint32_t modulus() const noexcept { return modulus_; }

  friend constexpr Modular operator+(Modular a, Modular b) noexcept {
    const std::uint32_t p = join(a, b);
    if (p == 0) return {};
    std::uint64_t s = std::uint64_t{a.value_} + b.value_;
    if (s >= p) s -= p;
    return raw(static_cast<std::uint32_t>(s), p);
  }
  friend constexpr Modular operator-(Modular a) noexcept {
    if (a.value_ == 0) return a;
    return raw(a.modulus_ - a.value_, a.modulus_);
  }
  friend constexpr Modular operator-(Modular a, Modular b) noexcept { return a + (-b); }
  friend constexpr Modular operator*(Modular a, Modular b) noexcept {
    const std::uint32_t p = join(a, b);
    if (p == 0 || a.value_ == 0 || b.value_ == 0) return p == 0 ? Modular{} : raw(0, p);
    return raw(static_cast<std::uint32_t>(std::uint64_t{a.value_} * b.value_ % p), p);
  }
  Modular &operator+=(Modular b) noexcept { return *this = *this + b; }
  Modular &operator-=(Modular b) noexcept { return *this = *this - b; }
  Modular &operator*=(Modular b) noexcept { return *this = *this * b; }

  friend constexpr bool operator==(Modular a, Modular b) noexcept { return a.value_ == b.value_; }

  [[nodiscard]] Modular inverse() const {
    if (value_ == 0) throw Error(ErrorKind::Precondition, "inverse of zero");
    // extended Euclid on (value, modulus)
    std::int64_t r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return Modular(s0, modulus_);
  }

  friend std::ostream &operator<<(std::ostream &os, Modular a) { return os << a.value_; }

private:
  static constexpr std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
    if (p == 0) return 0;
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  }
  static constexpr std::uint32_t join(Modular a, Modular b) noexcept {
    return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
  }
  static constexpr Modular raw(std::uint32_t v, std::uint32_t p) noexcept {
    Modular m;
    m.value_ = v;
    m.modulus_ = p;
    return m;
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

template <class T> inline constexpr bool is_field_v = false;
template <> inline constexpr bool is_field_v<Rational> = true;
template <> inline constexpr bool is_field_v<Modular> = true;

template <class T>
concept FieldScalar = is_field_v<T>;

template <class T>
concept ExactScalar = FieldScalar<T> || std::is_same_v<T, Integer>;

inline bool is_zero(const Integer &x) { return sgn(x) == 0; }
inline bool is_zero(const Rational &x) { return sgn(x) == 0; }
constexpr bool is_zero(Modular x) noexcept { return x.value() == 0; }

inline Rational inverse(const Rational &x) {
  if (sgn(x) == 0) throw Error(ErrorKind::Precondition, "inverse of zero");
  return Rational(1) / x;
}
inline Modular inverse(Modular x) { return x.inverse(); }

// Scalar context: supplies the unit and integer embedding for a scalar type.
// The zero of every type is its value-initialized value.
template <class T> class ScalarContext;

template <> class ScalarContext<Integer> {
public:
  [[nodiscard]] Integer one() const { return Integer(1); }
  [[nodiscard]] Integer from_int(long v) const { return Integer(v); }
  [[nodiscard]] std::string name() const { return "Z"; }
};

template <> class ScalarContext<Rational> {
public:
  [[nodiscard]] Rational one() const { return Rational(1); }
  [[nodiscard]] Rational from_int(long v) const { return Rational(v); }
  [[nodiscard]] std::string name() const { return "Q"; }
};

template <> class ScalarContext<Modular> {
public:
  explicit ScalarContext(std::uint32_t p) : p_(p) {
    require(is_prime(p), ErrorKind::Validation, "field characteristic must be prime");
  }
  [[nodiscard]] Modular one() const { return Modular(1, p_); }
  [[nodiscard]] Modular from_int(long v) const { return Modular(v, p_); }
  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] std::string name() const { return "F" + std::to_string(p_); }

private:
  std::uint32_t p_;
};

inline std::string to_string(const Integer &x) { return x.get_str(); }
inline std::string to_string(const Rational &x) { return x.get_str(); }
inline std::string to_string(Modular x) { return std::to_string(x.value()); }

} // namespace zeroab
