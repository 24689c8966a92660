#pragma once

// Seeded generators for objects and morphisms; all randomized checks draw
// from std::mt19937_64 so a seed reproduces a run exactly.

#include <random>
#include <type_traits>

#include "zeroab/projcat/category.hpp"

namespace zeroab {

using Rng = std::mt19937_64;

inline long uniform_int(Rng &rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Integers in [-bound, bound]; rationals mostly integral with occasional
// halves and thirds; prime-field elements uniform.
template <ExactScalar T> T random_scalar(const Category<T> &C, Rng &rng, long bound = 9) {
  if constexpr (std::is_same_v<T, Integer>) {
    return Integer(uniform_int(rng, -bound, bound));
  } else if constexpr (std::is_same_v<T, Rational>) {
    Rational q(uniform_int(rng, -bound, bound), uniform_int(rng, 1, 3));
    q.canonicalize();
    return q;
  } else {
    return C.from_int(uniform_int(rng, 0, static_cast<long>(C.scalars().characteristic()) - 1));
  }
}

// Object with between min_size and max_size summands in total.
template <ExactScalar T>
Object random_object(const Category<T> &C, Rng &rng, std::size_t min_size, std::size_t max_size) {
  const std::size_t n = static_cast<std::size_t>(uniform_int(rng, long(min_size), long(max_size)));
  std::vector<std::size_t> mult(C.m(), 0);
  for (std::size_t k = 0; k < n; ++k) ++mult[static_cast<std::size_t>(uniform_int(rng, 0, long(C.m()) - 1))];
  return Object(std::move(mult));
}

template <ExactScalar T>
Morphism<T> random_morphism(const Category<T> &C, Rng &rng, const Object &x, const Object &y,
                            long bound = 9) {
  const HomSpace h = C.hom(x, y);
  std::vector<T> coords(h.dimension());
  for (auto &c : coords) c = random_scalar(C, rng, bound);
  return h.template element<T>(coords);
}

} // namespace zeroab
