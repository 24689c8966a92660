// Split coker f over Z into torsion and free parts and print the witnesses.

#include <iostream>

#include "zeroab/zeroab.hpp"

using namespace zeroab;

int main() {
  const Category<Integer> C;
  const auto f = C.morphism(Object::free(3), Object::free(3), {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto g = C.morphism(Object::free(2), Object::free(3), {{2, 0}, {0, 3}, {0, 0}});

  for (const auto &h : {f, g}) {
    const auto split = split_module(C, h);
    std::cout << "presentation\n" << h.matrix() << "\n";
    std::cout << "  coker       = " << evaluate(C, mr(h), C.generator()) << "\n";
    std::cout << "  torsion     = " << split.torsion_part << "\n";
    std::cout << "  projective  = " << split.projective_part << "\n";
    const auto &d = split.decomposition;
    std::cout << "  bimorphism part\n" << d.bimorphism_part.matrix() << "\n";
    std::cout << "  orthogonal: " << std::boolalpha << orthogonality_holds(C, d) << "\n\n";
  }
}
