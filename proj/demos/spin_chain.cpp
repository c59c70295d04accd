// Periodic XXZ chain from the GLq(2) Baxterized R-matrix: commuting transfer
// matrices, the local Hamiltonian, and the algebraic charges.
#include <iostream>

#include "qyb/chains.hpp"

using namespace qyb;

int main() {
    RData r = build(RFamily::glq(2));
    ChainSpec chain{baxterize_hecke(r), 4, std::nullopt};

    TensorOp t2 = transfer_matrix(chain, Rat(2));
    TensorOp t3 = transfer_matrix(chain, Rat(3));
    std::cout << "[t(2), t(3)] = 0: " << (t2 * t3 == t3 * t2 ? "yes" : "no") << "\n";

    TensorOp H = chain_hamiltonian(chain);
    std::cout << "[H, t(2)] = 0:    " << (H * t2 == t2 * H ? "yes" : "no") << "\n";
    std::cout << "H nonzeros on V^4: " << H.nnz() << "\n";

    TowerRep tower = make_tower(r, 4);
    auto gens = periodic_generators(tower);
    TensorOp I0 = commuting_charge(tower, gens, 0);
    TensorOp I1 = commuting_charge(tower, gens, 1);
    std::cout << "[I0, I1] = 0:     " << (I0 * I1 == I1 * I0 ? "yes" : "no") << "\n";

    ChainSpec yang{rational_limit(RFamily::glq(2), RationalForm::Yang), 4, std::nullopt};
    TensorOp y1 = transfer_matrix(yang, Rat(1));
    TensorOp y2 = transfer_matrix(yang, Rat(1, 2));
    std::cout << "Yang chain commutes: " << (y1 * y2 == y2 * y1 ? "yes" : "no") << "\n";
    return 0;
}
