#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "zeroab/error.hpp"
#include "zeroab/exactla/scalar.hpp"

namespace zeroab {

enum class RingKind { Integer, Triangular };
enum class FieldKind { Rational, Prime };

inline constexpr std::size_t max_triangular_size = 64;

// Which base category is in use: proj Z, or proj of the lower triangular
// m x m matrix algebra over Q or F_p.
struct RingConfig {
  RingKind kind = RingKind::Integer;
  std::size_t m = 1;
  FieldKind field = FieldKind::Rational;
  std::uint32_t p = 0;

  static RingConfig integers() { return {}; }
  static RingConfig triangular(std::size_t m, FieldKind field, std::uint32_t p = 0) {
    RingConfig c{RingKind::Triangular, m, field, field == FieldKind::Prime ? p : 0};
    c.validate();
    return c;
  }

  void validate() const {
    if (kind == RingKind::Integer) {
      require(m == 1, ErrorKind::Validation, "integer ring has no size parameter");
      return;
    }
    require(m >= 1 && m <= max_triangular_size, ErrorKind::Validation,
            "triangular size m must lie in [1, 64]");
    if (field == FieldKind::Prime)
      require(is_prime(p), ErrorKind::Validation, "field characteristic must be prime");
  }

  // Inline form: "z", "tri:m=3:f=q", "tri:m=4:f=p5".
  [[nodiscard]] std::string shorthand() const {
    if (kind == RingKind::Integer) return "z";
    std::string s = "tri:m=" + std::to_string(m) + ":f=";
    return s + (field == FieldKind::Rational ? "q" : "p" + std::to_string(p));
  }

  static RingConfig parse_shorthand(std::string_view text) {
    auto number = [&](std::string_view digits) {
      std::uint64_t v = 0;
      const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      require(res.ec == std::errc{} && res.ptr == digits.data() + digits.size() && !digits.empty(),
              ErrorKind::Validation, "bad number in ring shorthand: " + std::string(text));
      return v;
    };
    if (text == "z" || text == "Z") return integers();
    require(text.substr(0, 4) == "tri:", ErrorKind::Validation,
            "unknown ring shorthand: " + std::string(text));
    std::string_view rest = text.substr(4);
    const auto colon = rest.find(':');
    require(colon != std::string_view::npos && rest.substr(0, 2) == "m=", ErrorKind::Validation,
            "ring shorthand must look like tri:m=<m>:f=<q|pN>");
    const std::uint64_t m = number(rest.substr(2, colon - 2));
    std::string_view f = rest.substr(colon + 1);
    require(f.substr(0, 2) == "f=", ErrorKind::Validation,
            "ring shorthand must look like tri:m=<m>:f=<q|pN>");
    f = f.substr(2);
    if (f == "q") return triangular(m, FieldKind::Rational);
    require(!f.empty() && f[0] == 'p', ErrorKind::Validation, "field must be q or p<prime>");
    const std::uint64_t p = number(f.substr(1));
    require(p < (1ull << 31), ErrorKind::Validation, "field characteristic too large");
    return triangular(m, FieldKind::Prime, static_cast<std::uint32_t>(p));
  }

  friend bool operator==(const RingConfig &, const RingConfig &) = default;
};

} // namespace zeroab
