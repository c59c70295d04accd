#pragma once

#include "baxter.hpp"
#include "towers.hpp"

namespace qyb {

// Periodic integrable chain built from a spectral R-matrix.  The optional
// twist is a diagonal matrix satisfying (4.5a); the family's quantum-trace
// matrix D qualifies and is the one built-in choice.
struct ChainSpec {
    BaxterR base;
    int M = 2;                       // chain sites
    std::optional<SiteWeights> twist;  // applied in the auxiliary space at every site

    int N() const { return base.op.N(); }
};

// t(theta0) = Tr_aux( D_a R_{1a} D_a R_{2a} ... D_a R_{Ma} ) on V^{x M}.
inline TensorOp transfer_matrix(const ChainSpec& c, const Rat& theta0) {
    int n = c.M + 1;  // auxiliary space is site M+1
    int N = c.N();
    TensorOp P = TensorOp::permutation(N);
    TensorOp R = P * c.base.at(theta0);
    TensorOp acc = TensorOp::identity(N, n);
    TensorOp twist_op = c.twist ? site_diag(*c.twist, n, n) : TensorOp::identity(N, n);
    for (int k = 1; k <= c.M; ++k) acc = acc * twist_op * embed_pair(R, k, n, n);
    return acc.weighted_partial_trace({n});
}

inline CheckReport commutativity_check(const ChainSpec& c, const std::vector<std::pair<Rat, Rat>>& pairs) {
    CheckReport rep;
    for (const auto& [a, b] : pairs) {
        TensorOp ta = transfer_matrix(c, a), tb = transfer_matrix(c, b);
        rep.add("[t(" + rat_str(a) + "), t(" + rat_str(b) + ")] = 0", ta * tb == tb * ta);
    }
    return rep;
}

// H = sum_k h'_{k,k+1} with the periodic wrap h_{M,M+1} = h_{M,1}; the
// density comes from the Baxterized family, twisted per (hami2).
inline TensorOp chain_hamiltonian(const ChainSpec& c) {
    TensorOp h = hamiltonian_density(c.base);
    int N = c.N();
    TensorOp H(N, c.M);
    for (int k = 1; k <= c.M; ++k) {
        int a = k, b = (k % c.M) + 1;
        TensorOp hk = (b == a + 1) ? embed(h, a, c.M) : embed_pair(h, a, b, c.M);
        if (c.twist) {
            TensorOp w = site_diag(*c.twist, a, c.M);
            hk = w * hk * w.inverse();
        }
        H = H + hk;
    }
    return H;
}

// I_k = sum_{i=1}^M sigma_i sigma_{i+1} ... sigma_{i+k}, periodic indexing
// with sigma_M = X sigma_1 X^{-1}, X = sigma_{M-1} ... sigma_1  (sigM).
inline std::vector<TensorOp> periodic_generators(const TowerRep& t) {
    std::vector<TensorOp> gens = t.sigma;
    TensorOp X = TensorOp::identity(t.N(), t.n);
    for (int i = t.n - 1; i >= 1; --i) X = X * t.s(i);
    gens.push_back(X * t.s(1) * X.inverse());
    return gens;
}

inline TensorOp commuting_charge(const TowerRep& t, const std::vector<TensorOp>& gens, int k) {
    int M = t.n;
    if (k > M - 2) throw std::domain_error("commuting_charge: k exceeds M - 2");
    TensorOp acc(t.N(), M);
    for (int i = 1; i <= M; ++i) {
        TensorOp term = gens[(i - 1) % M];
        for (int j = 1; j <= k; ++j) term = term * gens[(i - 1 + j) % M];
        acc = acc + term;
    }
    return acc;
}

inline CheckReport commuting_charges_check(const TowerRep& t, int k_max) {
    CheckReport rep;
    auto gens = periodic_generators(t);
    std::vector<TensorOp> charges;
    for (int k = 0; k <= k_max; ++k) charges.push_back(commuting_charge(t, gens, k));
    for (size_t a = 0; a < charges.size(); ++a)
        for (size_t b = a + 1; b < charges.size(); ++b)
            rep.add("[I" + std::to_string(a) + ", I" + std::to_string(b) + "] = 0",
                    charges[a] * charges[b] == charges[b] * charges[a]);
    if (charges.size() == 1) rep.add("single charge: vacuous", true);
    return rep;
}

}  // namespace qyb
