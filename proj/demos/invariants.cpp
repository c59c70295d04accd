// Small tour: torus closures, a trefoil, and its shape decomposition.
#include <iostream>

#include "qyb/knots.hpp"

using namespace qyb;

int main() {
    RData glq2 = build(RFamily::glq(2));
    TowerRep two = make_tower(glq2, 2);

    std::cout << "GLq(2) torus closures Q(sigma_1^n):\n";
    for (int n = 0; n <= 5; ++n) {
        BraidWord w{2, std::vector<int>(n, 1)};
        std::cout << "  n=" << n << "  " << closure_invariant(w, two).str() << "\n";
    }

    BraidWord trefoil{2, {1, 1, 1}};
    std::cout << "\nnormalized trefoil (GLq(2)): " << normalized_invariant(trefoil, two).str() << "\n";
    std::cout << "skein oracle agrees:        "
              << (HeckeWordAlgebra::normalized(trefoil, 2) == normalized_invariant(trefoil, two) ? "yes" : "no")
              << "\n";

    std::cout << "\nshape decomposition of the sigma_1 closure:\n";
    for (const auto& entry : idempotent_decomposition({2, {1}}, two))
        std::cout << "  " << partition_str(entry.shape) << "  C = " << entry.coefficient.str()
                  << "  qdim = " << qdim_hecke(entry.shape, 2).str() << "\n";

    RData so3 = build(RFamily::soq(3));
    TowerRep bmw2 = make_tower(so3, 2);
    std::cout << "\nSOq(3) (BMW) trefoil, normalized: " << normalized_invariant(trefoil, bmw2).str() << "\n";
    return 0;
}
