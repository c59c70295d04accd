#pragma once

#include "qcombin.hpp"

namespace qyb {

// Fundamental reflection-equation matrix L = R21 R12 = RHat^2, realized on
// (quantum site 1) x (matrix sites 2..m+1), with the shifted copies
// L_{k+1} = RHat_k L_k RHat_k^{-1} along the matrix sites.
struct REInstance {
    RData base;
    int m = 0;                   // number of matrix sites
    int n = 0;                   // total sites = m + 1
    std::vector<TensorOp> L;     // L[k-1] = L_{underline k}
    std::vector<TensorOp> asym;  // A_{1->k} on the matrix sites, embedded, k = 1..m

    const TensorOp& Lk(int k) const { return L.at(k - 1); }
};

inline REInstance fundamental_re(const RData& r, int m_sites) {
    if (r.is_bmw()) throw std::domain_error("fundamental_re: Hecke kind required");
    REInstance inst;
    inst.base = r;
    inst.m = m_sites;
    inst.n = m_sites + 1;
    inst.L.push_back(embed(r.rhat * r.rhat, 1, inst.n));
    for (int k = 2; k <= m_sites; ++k) {
        TensorOp rk = embed(r.rhat, k, inst.n), rki = embed(r.rhat_inv, k, inst.n);
        inst.L.push_back(rk * inst.L.back() * rki);
    }
    TowerRep tm = make_tower(r, m_sites);
    auto as = symmetrizers(tm, SymKind::Antisym, m_sites);
    for (int k = 1; k <= m_sites; ++k) inst.asym.push_back(embed_block(as[k - 1], 2, inst.n));
    return inst;
}

// Exact residual of the left reflection equation RHat L1 RHat L1 = L1 RHat L1 RHat
// (RHat acting on the first two matrix sites; needs m >= 2).
inline TensorOp re_residual(const REInstance& inst) {
    if (inst.m < 2) throw std::domain_error("re_residual: two matrix sites required");
    TensorOp rh = embed(inst.base.rhat, 2, inst.n);
    const TensorOp& L1 = inst.Lk(1);
    return rh * L1 * rh * L1 - L1 * rh * L1 * rh;
}

namespace detail {
inline ScalarFrac scalar_on_quantum_site(const TensorOp& op, const char* what) {
    ScalarFrac c;
    if (op.is_zero()) return ScalarFrac(0);
    if (!op.is_scalar_identity(c)) throw std::domain_error(std::string(what) + ": not a scalar multiple of identity");
    return c;
}
}  // namespace detail

// Power sum p_m = Tr_D(L^m), a scalar on the quantum space by irreducibility.
inline ScalarFrac power_sum(const RData& r, int m) {
    REInstance inst = fundamental_re(r, 1);
    TensorOp lp = inst.Lk(1).pow(m);
    TensorOp traced = lp.weighted_partial_trace({2}, &r.D);
    return detail::scalar_on_quantum_site(traced, "power_sum");
}

// Elementary symmetric function a_m = q^m Tr_{D(1..m)}(A_{1->m} L_1 ... L_m).
inline ScalarFrac elementary_a(const RData& r, int m) {
    if (m == 0) return ScalarFrac(1);
    REInstance inst = fundamental_re(r, m);
    TensorOp prod = inst.asym[m - 1];
    for (int k = 1; k <= m; ++k) prod = prod * inst.Lk(k);
    std::set<int> matrix_sites;
    for (int s = 2; s <= inst.n; ++s) matrix_sites.insert(s);
    TensorOp traced = prod.weighted_partial_trace(matrix_sites, &r.D);
    return detail::scalar_on_quantum_site(traced, "elementary_a") * ScalarFrac(Scalar::q_pow(m));
}

struct SymmetricFunctions {
    std::vector<ScalarFrac> p;  // p[m-1] = p_m
    std::vector<ScalarFrac> a;  // a[m] = a_m, a[0] = 1
};

inline SymmetricFunctions symmetric_functions(const RData& r, int m_max) {
    SymmetricFunctions out;
    out.a.push_back(ScalarFrac(1));
    for (int m = 1; m <= m_max; ++m) {
        out.p.push_back(power_sum(r, m));
        out.a.push_back(elementary_a(r, m));
    }
    return out;
}

// q-Newton relations (Ldet7): [k]_q q^{-k} a_k + sum_{m=1}^k (-1)^m a_{k-m} p_m = 0.
inline CheckReport newton_check(const SymmetricFunctions& sf, int k_max) {
    CheckReport rep;
    for (int k = 1; k <= k_max; ++k) {
        ScalarFrac acc = ScalarFrac(q_number(k) * Scalar::q_pow(-k)) * sf.a[k];
        for (int m = 1; m <= k; ++m) {
            ScalarFrac term = sf.a[k - m] * sf.p[m - 1];
            acc += (m % 2) ? -term : term;
        }
        rep.add("newton k=" + std::to_string(k), acc.is_zero());
    }
    return rep;
}

// Cayley-Hamilton (Ldet4): sum_{k=0}^N (-L)^k a_{N-k} = 0 on the two-site space.
inline CheckItem cayley_hamilton_check(const RData& r, const SymmetricFunctions& sf) {
    int N = r.N();
    TensorOp L = r.rhat * r.rhat;
    TensorOp acc(N, 2), pw = TensorOp::identity(N, 2);
    for (int k = 0; k <= N; ++k) {
        acc = acc + pw.scaled(sf.a[N - k] * ScalarFrac(Rat(k % 2 ? -1 : 1)));
        if (k < N) pw = pw * L;
    }
    return {"cayley-hamilton", acc.is_zero(), ""};
}

// Cayley-Hamilton-Newton (chn):
// [k]_q Tr_{D(2..k)}(A_{1->k} L_1 ... L_k) = -sum_{m=1}^k (-1)^m a_{k-m} L_1^m.
inline CheckReport chn_check(const RData& r, const SymmetricFunctions& sf, int k_max) {
    CheckReport rep;
    for (int k = 1; k <= k_max; ++k) {
        REInstance inst = fundamental_re(r, k);
        TensorOp prod = inst.asym[k - 1];
        for (int j = 1; j <= k; ++j) prod = prod * inst.Lk(j);
        std::set<int> tail;  // matrix sites 2..k are full sites 3..k+1
        for (int s = 3; s <= k + 1; ++s) tail.insert(s);
        TensorOp lhs = prod.weighted_partial_trace(tail, &r.D).scaled(ScalarFrac(q_number(k)));
        TensorOp L = r.rhat * r.rhat;
        TensorOp rhs(r.N(), 2), lp = TensorOp::identity(r.N(), 2);
        for (int m = 1; m <= k; ++m) {
            lp = lp * L;
            rhs = rhs + lp.scaled(sf.a[k - m] * ScalarFrac(Rat(m % 2 ? 1 : -1)));
        }
        rep.add("chn k=" + std::to_string(k), lhs == rhs);
    }
    return rep;
}

// Characteristic-polynomial consistency: Det_q(L; x) = sum_k x^k a_{N-k}
// vanishes at x = -mu for each eigenvalue mu of L (here {q^2, q^-2}).
inline CheckReport char_poly_eigen_check(const SymmetricFunctions& sf, int N) {
    CheckReport rep;
    for (int s : {2, -2}) {
        ScalarFrac acc(0), pw(1), x{-Scalar::q_pow(s)};
        for (int k = 0; k <= N; ++k) {
            acc += pw * sf.a[N - k];
            pw = pw * x;
        }
        rep.add(std::string("Det_q(L; -q^") + std::to_string(s) + ") = 0", acc.is_zero());
    }
    return rep;
}

// Centrality proxy: the operators Tr_D(L^m) on the quantum site commute with
// every entry L^i_j of the quantum matrix.
inline bool centrality_proxy(const RData& r, int m_max) {
    int N = r.N();
    TensorOp L = r.rhat * r.rhat;  // sites (quantum, matrix)
    std::vector<TensorOp> entries;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            TensorOp e(N, 1);
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                    e.add(a, b, L.at(static_cast<Index>(a) * N + i, static_cast<Index>(b) * N + j));
            entries.push_back(e);
        }
    for (int m = 1; m <= m_max; ++m) {
        TensorOp pm_op = L.pow(m).weighted_partial_trace({2}, &r.D);
        for (const auto& e : entries)
            if (!(pm_op * e == e * pm_op)) return false;
    }
    return true;
}

}  // namespace qyb
