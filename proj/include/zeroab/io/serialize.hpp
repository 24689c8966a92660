#pragma once

// JSON encoding of rings, scalars, objects, morphisms and functors.
//
//   integers   "123"                        (decimal strings; JSON integers accepted on input)
//   rationals  {"num": "-3", "den": "4"}
//   F_p        plain integers in [0, p)
//   ring       "z" | "tri:m=3:f=q" | {"kind": "integer"} | {"kind": "triangular", "m": 3, "field": "q"|"p", "p": 5}
//   object     n (over Z) | [n_1, ..., n_m]
//   morphism   {"source": n, "target": n, "matrix": [[...]]}                            over Z
//              {"source": [..], "target": [..], "blocks": [{"from_index": i, "to_index": j, "matrix": [[...]]}]}
//              a block holds the entries from the copies of P_i to the copies of P_j;
//              absent blocks are zero.

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>
#include "zeroab/fpfun/functor.hpp"
#include "zeroab/projcat/category.hpp"
#include "zeroab/projcat/ring.hpp"

namespace zeroab::io {

using json = nlohmann::json;

inline void expect_keys(const json &j, std::initializer_list<const char *> required,
                        std::initializer_list<const char *> optional, const std::string &where) {
  require(j.is_object(), ErrorKind::Validation, where + ": expected an object");
  for (const char *k : required) require(j.contains(k), ErrorKind::Validation, where + ": missing field '" + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool known = std::any_of(required.begin(), required.end(), [&](const char *k) { return it.key() == k; }) ||
                       std::any_of(optional.begin(), optional.end(), [&](const char *k) { return it.key() == k; });
    require(known, ErrorKind::Validation, where + ": unknown field '" + it.key() + "'");
  }
}

inline std::size_t get_size(const json &j, const std::string &where) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0), ErrorKind::Validation,
          where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

// --- rings ----------------------------------------------------------------

inline json to_json(const RingConfig &r) { return r.shorthand(); }

inline RingConfig ring_from_json(const json &j) {
  if (j.is_string()) return RingConfig::parse_shorthand(j.get<std::string>());
  expect_keys(j, {"kind"}, {"m", "field", "p"}, "ring");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "integer" || kind == "z") {
    require(!j.contains("m") && !j.contains("field") && !j.contains("p"), ErrorKind::Validation,
            "ring: the integer ring takes no parameters");
    return RingConfig::integers();
  }
  require(kind == "triangular", ErrorKind::Validation, "ring: kind must be 'integer' or 'triangular'");
  require(j.contains("m") && j.contains("field"), ErrorKind::Validation, "ring: triangular needs m and field");
  const std::size_t m = get_size(j.at("m"), "ring.m");
  const std::string field = j.at("field").get<std::string>();
  if (field == "q") {
    require(!j.contains("p"), ErrorKind::Validation, "ring: p given for the rational field");
    return RingConfig::triangular(m, FieldKind::Rational);
  }
  require(field == "p" && j.contains("p"), ErrorKind::Validation, "ring: field must be 'q' or 'p' with p");
  const std::size_t p = get_size(j.at("p"), "ring.p");
  require(p < (std::size_t{1} << 31), ErrorKind::Validation, "ring: p too large");
  return RingConfig::triangular(m, FieldKind::Prime, static_cast<std::uint32_t>(p));
}

// --- scalars --------------------------------------------------------------

inline Integer integer_from_json(const json &j, const std::string &where) {
  if (j.is_number_integer()) return Integer(j.dump());
  require(j.is_string(), ErrorKind::Validation, where + ": integers are encoded as decimal strings");
  const std::string s = j.get<std::string>();
  const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  require(s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; }),
          ErrorKind::Validation, where + ": not a decimal integer: " + s);
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

inline json to_json(const Integer &x) { return x.get_str(); }
inline json to_json(const Rational &x) { return {{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}}; }
inline json to_json(Modular x) { return x.value(); }

template <ExactScalar T> T scalar_from_json(const json &j, const ScalarContext<T> &ctx, const std::string &where) {
  if constexpr (std::is_same_v<T, Integer>) {
    (void)ctx;
    return integer_from_json(j, where);
  } else if constexpr (std::is_same_v<T, Rational>) {
    (void)ctx;
    if (!j.is_object()) return Rational(integer_from_json(j, where));
    expect_keys(j, {"num", "den"}, {}, where);
    const Integer num = integer_from_json(j.at("num"), where + ".num");
    const Integer den = integer_from_json(j.at("den"), where + ".den");
    require(den != 0, ErrorKind::Validation, where + ": zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } else {
    require(j.is_number_integer(), ErrorKind::Validation, where + ": prime-field scalars are plain integers");
    const long long v = j.get<long long>();
    require(v >= 0 && v < static_cast<long long>(ctx.characteristic()), ErrorKind::Validation,
            where + ": residue out of range [0, p)");
    return ctx.from_int(static_cast<long>(v));
  }
}

template <ExactScalar T> json to_json(const Matrix<T> &a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <ExactScalar T>
Matrix<T> matrix_from_json(const json &j, std::size_t rows, std::size_t cols, const ScalarContext<T> &ctx,
                           const std::string &where) {
  require(j.is_array() && j.size() == rows, ErrorKind::Validation,
          where + ": expected " + std::to_string(rows) + " rows");
  Matrix<T> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(j[i].is_array() && j[i].size() == cols, ErrorKind::Validation,
            where + ": row " + std::to_string(i) + " should have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = scalar_from_json<T>(j[i][c], ctx, where);
  }
  return out;
}

// --- objects and morphisms ------------------------------------------------------

template <ExactScalar T> json object_to_json(const Object &x) {
  if constexpr (std::is_same_v<T, Integer>) return x.size();
  else return x.multiplicities();
}

template <ExactScalar T> Object object_from_json(const Category<T> &C, const json &j, const std::string &where) {
  if constexpr (Category<T>::integral) {
    return Object::free(get_size(j, where));
  } else {
    require(j.is_array() && j.size() == C.m(), ErrorKind::Validation,
            where + ": expected a multiplicity array of length " + std::to_string(C.m()));
    std::vector<std::size_t> mult;
    for (const auto &v : j) mult.push_back(get_size(v, where));
    return Object(std::move(mult));
  }
}

namespace detail {
inline std::size_t block_start(const Object &x, std::size_t label) {
  std::size_t s = 0;
  for (std::size_t i = 1; i < label; ++i) s += x.multiplicity(i);
  return s;
}
} // namespace detail

template <ExactScalar T> json to_json(const Morphism<T> &f) {
  if constexpr (std::is_same_v<T, Integer>) {
    return {{"source", f.source().size()}, {"target", f.target().size()}, {"matrix", to_json(f.matrix())}};
  } else {
    const Object &x = f.source(), &y = f.target();
    json blocks = json::array();
    for (std::size_t i = 1; i <= x.m(); ++i)
      for (std::size_t j = i; j <= y.m(); ++j) {
        const std::size_t r0 = detail::block_start(y, j), c0 = detail::block_start(x, i);
        Matrix<T> b(y.multiplicity(j), x.multiplicity(i));
        for (std::size_t r = 0; r < b.rows(); ++r)
          for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = f.matrix()(r0 + r, c0 + c);
        if (b.rows() == 0 || b.cols() == 0 || b.is_zero()) continue;
        blocks.push_back({{"from_index", i}, {"to_index", j}, {"matrix", to_json(b)}});
      }
    return {{"source", x.multiplicities()}, {"target", y.multiplicities()}, {"blocks", std::move(blocks)}};
  }
}

template <ExactScalar T>
Morphism<T> morphism_from_json(const Category<T> &C, const json &j, const std::string &where) {
  if constexpr (Category<T>::integral) {
    expect_keys(j, {"source", "target", "matrix"}, {}, where);
    const Object x = object_from_json(C, j.at("source"), where + ".source");
    const Object y = object_from_json(C, j.at("target"), where + ".target");
    return Morphism<T>(x, y, matrix_from_json<T>(j.at("matrix"), y.size(), x.size(), C.scalars(), where + ".matrix"));
  } else {
    expect_keys(j, {"source", "target"}, {"blocks"}, where);
    const Object x = object_from_json(C, j.at("source"), where + ".source");
    const Object y = object_from_json(C, j.at("target"), where + ".target");
    Matrix<T> mat(y.size(), x.size());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (j.contains("blocks")) {
      require(j.at("blocks").is_array(), ErrorKind::Validation, where + ".blocks: expected an array");
      for (const auto &b : j.at("blocks")) {
        expect_keys(b, {"from_index", "to_index", "matrix"}, {}, where + ".blocks[]");
        const std::size_t i = get_size(b.at("from_index"), where + ".from_index");
        const std::size_t t = get_size(b.at("to_index"), where + ".to_index");
        require(i >= 1 && i <= C.m() && t >= 1 && t <= C.m(), ErrorKind::Validation,
                where + ": block index out of range");
        require(seen.insert({i, t}).second, ErrorKind::Validation, where + ": duplicate block");
        const Matrix<T> blk = matrix_from_json<T>(b.at("matrix"), y.multiplicity(t), x.multiplicity(i), C.scalars(),
                                                  where + ".blocks[].matrix");
        require(t >= i || blk.is_zero(), ErrorKind::Validation,
                where + ": support violation, Hom(P_" + std::to_string(i) + ", P_" + std::to_string(t) + ") = 0");
        const std::size_t r0 = detail::block_start(y, t), c0 = detail::block_start(x, i);
        for (std::size_t r = 0; r < blk.rows(); ++r)
          for (std::size_t c = 0; c < blk.cols(); ++c) mat(r0 + r, c0 + c) = blk(r, c);
      }
    }
    return Morphism<T>(x, y, std::move(mat));
  }
}

template <ExactScalar T> json to_json(const FpFunctor<T> &F) { return {{"presentation", to_json(F.presentation)}}; }

template <ExactScalar T>
FpFunctor<T> functor_from_json(const Category<T> &C, const json &j, const std::string &where) {
  expect_keys(j, {"presentation"}, {}, where);
  return {morphism_from_json(C, j.at("presentation"), where + ".presentation")};
}

template <ExactScalar T> json to_json(const FpMorphism<T> &a) {
  return {{"source", to_json(a.source)}, {"target", to_json(a.target)}, {"a", to_json(a.a)}, {"b", to_json(a.b)}};
}

inline json to_json(const ModuleDescriptor &d) {
  json t = json::array();
  for (const auto &x : d.torsion) t.push_back(to_json(x));
  return {{"free_rank", d.free_rank}, {"torsion", std::move(t)}};
}

template <class T> json to_json(const std::optional<T> &x) { return x ? to_json(*x) : json(nullptr); }

} // namespace zeroab::io
