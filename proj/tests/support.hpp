#pragma once

// Shared helpers for the test binaries: category shortcuts and the bridge
// from library morphisms to the oracle's representation encoding.

#include "zeroab/oracle/oracle.hpp"
#include "zeroab/zeroab.hpp"

namespace zt {

using namespace zeroab;

inline Category<Integer> Z() { return {}; }
inline Category<Rational> TriQ(std::size_t m) { return {m, ScalarContext<Rational>{}}; }
inline Category<Modular> TriP(std::size_t m, std::uint32_t p) { return {m, ScalarContext<Modular>(p)}; }

inline Morphism<Integer> zmap(std::size_t from, std::size_t to,
                              std::initializer_list<std::initializer_list<long>> rows) {
  return Z().morphism(Object::free(from), Object::free(to), rows);
}

inline oracle::RepModule rep(const Object &x, std::uint32_t p) {
  return oracle::projective_module(x.multiplicities(), p);
}

inline oracle::RepMap rep(const Morphism<Modular> &f, std::uint32_t p) {
  oracle::Mat<Modular> m = oracle::zeros<Modular>(f.target().size(), f.source().size());
  for (std::size_t i = 0; i < f.target().size(); ++i)
    for (std::size_t j = 0; j < f.source().size(); ++j) m[i][j] = Modular(f.matrix()(i, j).value(), p);
  return oracle::from_blocks(f.source().multiplicities(), f.target().multiplicities(), m);
}

inline oracle::Mat<long long> small_ints(const Matrix<Integer> &a) {
  oracle::Mat<long long> m = oracle::zeros<long long>(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_si();
  return m;
}

template <class T> oracle::LinearMap<T> linear_map(const Matrix<T> &a) {
  oracle::LinearMap<T> out{a.cols(), a.rows(), oracle::zeros<T>(a.rows(), a.cols())};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.m[i][j] = a(i, j);
  return out;
}

} // namespace zt
