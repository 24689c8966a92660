// The E table of proj Lambda_m and the four term sequence of the canonical
// map P_1 -> P_2 evaluated at each vertex.

#include <iostream>

#include "zeroab/zeroab.hpp"

using namespace zeroab;

int main() {
  const std::size_t m = 4;
  const Category<Rational> C(m, ScalarContext<Rational>{});

  std::cout << "dim E(P_i, P_j), m = " << m << "\n";
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) std::cout << ' ' << e_group(C, C.indecomposable(i), C.indecomposable(j)).dimension();
    std::cout << "\n";
  }

  const auto f = C.morphism(C.indecomposable(1), C.indecomposable(2), {{1}});
  std::cout << "\nf : P_1 -> P_2, bimorphism " << std::boolalpha << is_bimorphism(f) << ", iso " << is_iso(C, f) << "\n";
  const auto s = nsles(C, f);
  std::cout << "0 -> C(-,X) -> C(-,Y) -> E(-,X) -> E(-,Y) -> 0\n";
  for (const auto &p : s.points) {
    std::cout << "  at P_" << p.vertex << ": dims";
    for (auto d : p.dims) std::cout << ' ' << d;
    std::cout << ", ranks";
    for (auto r : p.ranks) std::cout << ' ' << r;
    std::cout << (p.exact ? ", exact" : ", NOT exact") << "\n";
  }
}
