#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zeroab/projcat/factorization.hpp"

namespace zeroab {

// A finitely generated module over Z (free rank plus invariant factors) or,
// over a field, a vector space (free_rank is the dimension).
struct ModuleDescriptor {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion; // invariant factors > 1, each dividing the next

  [[nodiscard]] bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const ModuleDescriptor &, const ModuleDescriptor &) = default;

  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &d : torsion) {
      os << (first ? "" : " + ") << "Z/" << d;
      first = false;
    }
    if (free_rank > 0) os << (first ? "" : " + ") << "Z^" << free_rank;
    return os.str();
  }
  friend std::ostream &operator<<(std::ostream &os, const ModuleDescriptor &d) { return os << d.to_string(); }
};

inline ModuleDescriptor direct_sum(const ModuleDescriptor &a, const ModuleDescriptor &b) {
  ModuleDescriptor out{a.free_rank + b.free_rank, a.torsion};
  out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
  // a sorted list of invariant factors is not a divisibility chain in
  // general; recombine through the Smith form of the diagonal
  if (!out.torsion.empty()) {
    Matrix<Integer> d(out.torsion.size(), out.torsion.size());
    for (std::size_t i = 0; i < out.torsion.size(); ++i) d(i, i) = out.torsion[i];
    out.torsion.clear();
    for (const auto &x : smith(d).invariant_factors)
      if (x != 1) out.torsion.push_back(x);
  }
  return out;
}

// The functor F = coker C(-, f) presented by f : P1 -> P0 (written mr(f)).
template <ExactScalar T> struct FpFunctor {
  Morphism<T> presentation;

  [[nodiscard]] const Object &relations() const { return presentation.source(); }  // P1
  [[nodiscard]] const Object &generators() const { return presentation.target(); } // P0
  friend bool operator==(const FpFunctor &, const FpFunctor &) = default;
};

template <ExactScalar T> FpFunctor<T> mr(const Morphism<T> &f) { return {f}; }

// C(-, X), presented by 0 -> X.
template <ExactScalar T> FpFunctor<T> representable(const Category<T> &C, const Object &x) {
  return {C.zero(C.zero_object(), x)};
}

// E(-, X) = coker C(-, eta_X).
template <ExactScalar T> FpFunctor<T> effaceable_e(const Category<T> &C, const Object &x) {
  return {eta(C, x)};
}

// A natural transformation given by a commutative square b f = f' a; two
// squares are equal as transformations when b - b' = f' t for some t.
template <ExactScalar T> struct FpMorphism {
  FpFunctor<T> source;
  FpFunctor<T> target;
  Morphism<T> a; // P1 -> P1'
  Morphism<T> b; // P0 -> P0'

  FpMorphism() = default;
  FpMorphism(FpFunctor<T> src, FpFunctor<T> tgt, Morphism<T> a_, Morphism<T> b_)
      : source(std::move(src)), target(std::move(tgt)), a(std::move(a_)), b(std::move(b_)) {
    require(a.source() == source.relations() && a.target() == target.relations() &&
                b.source() == source.generators() && b.target() == target.generators(),
            ErrorKind::DimensionMismatch, "square maps do not match the presentations");
    require(b * source.presentation == target.presentation * a, ErrorKind::Precondition,
            "square does not commute");
  }
};

template <ExactScalar T> FpMorphism<T> identity(const Category<T> &C, const FpFunctor<T> &F) {
  return {F, F, C.identity(F.relations()), C.identity(F.generators())};
}

template <ExactScalar T>
FpMorphism<T> zero_nat(const Category<T> &C, const FpFunctor<T> &F, const FpFunctor<T> &G) {
  return {F, G, C.zero(F.relations(), G.relations()), C.zero(F.generators(), G.generators())};
}

template <ExactScalar T> FpMorphism<T> operator*(const FpMorphism<T> &beta, const FpMorphism<T> &alpha) {
  require(alpha.target == beta.source, ErrorKind::DimensionMismatch, "natural transformations not composable");
  return {alpha.source, beta.target, beta.a * alpha.a, beta.b * alpha.b};
}

template <ExactScalar T> FpMorphism<T> operator-(const FpMorphism<T> &x, const FpMorphism<T> &y) {
  return {x.source, x.target, x.a - y.a, x.b - y.b};
}

template <ExactScalar T> FpMorphism<T> operator+(const FpMorphism<T> &x, const FpMorphism<T> &y) {
  return {x.source, x.target, x.a + y.a, x.b + y.b};
}

// Homotopy witness t with b - b' = f' t, if the squares are equal.
template <ExactScalar T>
std::optional<Morphism<T>> homotopy(const Category<T> &C, const FpMorphism<T> &x, const FpMorphism<T> &y) {
  require(x.source == y.source && x.target == y.target, ErrorKind::DimensionMismatch,
          "homotopy: transformations are not parallel");
  return solve_for<T>(C, x.source.generators(), x.target.relations(), x.target.presentation,
                      std::nullopt, x.b - y.b);
}

template <ExactScalar T>
bool homotopic(const Category<T> &C, const FpMorphism<T> &x, const FpMorphism<T> &y) {
  return homotopy(C, x, y).has_value();
}

template <ExactScalar T> bool is_zero_nat(const Category<T> &C, const FpMorphism<T> &x) {
  return homotopic(C, x, zero_nat(C, x.source, x.target));
}

// sigma : G -> F with alpha sigma = 1_G (up to homotopy). Solved directly as
// one linear system in (a', b', t): b' g = f a' and b_alpha b' - g t = 1.
template <ExactScalar T>
std::optional<FpMorphism<T>> section(const Category<T> &C, const FpMorphism<T> &alpha) {
  const auto &F = alpha.source;
  const auto &G = alpha.target;
  MorphismSystem<T> sys(C);
  const auto a = sys.add_unknown(G.relations(), F.relations());
  const auto b = sys.add_unknown(G.generators(), F.generators());
  const auto t = sys.add_unknown(G.generators(), G.relations());
  sys.add_equation({{b, std::nullopt, G.presentation}, {a, -F.presentation, std::nullopt}},
                   C.zero(G.relations(), F.generators()));
  sys.add_equation({{b, alpha.b, std::nullopt}, {t, -G.presentation, std::nullopt}},
                   C.identity(G.generators()));
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return FpMorphism<T>(G, F, (*sol)[a], (*sol)[b]);
}

// rho : G -> F with rho alpha = 1_F (up to homotopy).
template <ExactScalar T>
std::optional<FpMorphism<T>> retraction(const Category<T> &C, const FpMorphism<T> &alpha) {
  const auto &F = alpha.source;
  const auto &G = alpha.target;
  MorphismSystem<T> sys(C);
  const auto a = sys.add_unknown(G.relations(), F.relations());
  const auto b = sys.add_unknown(G.generators(), F.generators());
  const auto t = sys.add_unknown(F.generators(), F.relations());
  sys.add_equation({{b, std::nullopt, G.presentation}, {a, -F.presentation, std::nullopt}},
                   C.zero(G.relations(), F.generators()));
  sys.add_equation({{b, std::nullopt, alpha.b}, {t, -F.presentation, std::nullopt}},
                   C.identity(F.generators()));
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return FpMorphism<T>(G, F, (*sol)[a], (*sol)[b]);
}

template <ExactScalar T> bool is_iso_nat(const Category<T> &C, const FpMorphism<T> &alpha) {
  return section(C, alpha).has_value() && retraction(C, alpha).has_value();
}

// F = 0 exactly when its presentation is a split epimorphism.
template <ExactScalar T> bool is_zero(const Category<T> &C, const FpFunctor<T> &F) {
  return is_split_epi(C, F.presentation);
}

} // namespace zeroab
