#pragma once

#include "towers.hpp"

namespace qyb {

struct NodeInfo {
    int row = 0, col = 0;  // 1-based
    int hook = 0;
    int content = 0;  // col - row
};

inline Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    for (int c = 0; c < p[0]; ++c) {
        int h = 0;
        for (int x : p)
            if (x > c) ++h;
        t.push_back(h);
    }
    return t;
}

// Per-node hook length h_{r,c} = lambda_r + lambda^T_c - r - c + 1 and
// content c - r.
inline std::vector<NodeInfo> hooks_contents(const Partition& p) {
    Partition pv = transpose(p);
    std::vector<NodeInfo> out;
    for (int r = 1; r <= static_cast<int>(p.size()); ++r)
        for (int c = 1; c <= p[r - 1]; ++c)
            out.push_back({r, c, p[r - 1] + pv[c - 1] - r - c + 1, c - r});
    return out;
}

// Hook-content form (qdimW): qdim = q^{-Md} prod [d + content]/[hook].
inline ScalarFrac qdim_hecke(const Partition& p, int d) {
    int M = partition_weight(p);
    ScalarFrac acc{Scalar::q_pow(-M * d)};
    for (const auto& node : hooks_contents(p))
        acc *= ScalarFrac(q_number(d + node.content), q_number(node.hook));
    return acc;
}

// Column form (best01); vanishes via the 1/[negative]! convention exactly
// when the diagram is taller than d.
inline ScalarFrac qdim_hecke_best(const Partition& p, int d) {
    int M = partition_weight(p);
    Partition pv = transpose(p);
    int k = static_cast<int>(pv.size());
    ScalarFrac acc{Scalar::q_pow(-M * d)};
    for (int i = 1; i <= k; ++i) {
        if (d - pv[i - 1] + i - 1 < 0) return ScalarFrac(0);
        acc *= ScalarFrac(q_factorial(d + i - 1),
                          q_factorial(d - pv[i - 1] + i - 1) * q_factorial(pv[i - 1] + k - i));
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) acc *= ScalarFrac(q_number(pv[i - 1] - pv[j - 1] + j - i));
    return acc;
}

// Wenzl hook product (gfun11), generic in (q, nu); exponents of q are
// half-integers internally.
inline ScalarFrac wenzl_product(const Partition& p) {
    Partition pv = transpose(p);
    auto lam = [&](int i) { return i <= static_cast<int>(p.size()) ? p[i - 1] : 0; };
    auto lamv = [&](int j) { return j <= static_cast<int>(pv.size()) ? pv[j - 1] : 0; };
    ScalarFrac acc(1);
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        for (int j = 1; j <= p[i - 1]; ++j) {
            int h = lam(i) + lamv(j) - i - j + 1;
            int f = lam(i) + lam(j) - i - j + 1;
            int fv = -lamv(i) - lamv(j) + i + j - 1;
            int dd = (i <= j) ? f : fv;
            int dp = (i < j) ? f : fv;
            Scalar num1 = Scalar::q_half(dd) - Scalar::v_pow(1) * Scalar::q_half(-dd);
            Scalar den1 = Scalar::q_half(h) - Scalar::q_half(-h);
            Scalar num2 = Scalar::v_pow(-1) * Scalar::q_half(dp) + Scalar::q_half(-dp);
            Scalar den2 = Scalar::q_half(h) + Scalar::q_half(-h);
            acc *= ScalarFrac(num1, den1) * ScalarFrac(num2, den2);
        }
    return acc;
}

// BMW / Markov-trace q-dimension: nu^{|p|} times the Wenzl product, the
// normalization for which Tr(E(path of length n ending at p)) equals
// nu^{n - |p|} qdim_bmw(p).  In particular qdim_bmw([1]) = nu mu = Tr(D).
inline ScalarFrac qdim_bmw(const Partition& p) {
    return ScalarFrac(Scalar::v_pow(partition_weight(p))) * wenzl_product(p);
}

// SO_q(N) specialization nu = q^{1-N}.
inline ScalarFrac qdim_bmw_so(const Partition& p, int N) {
    return qdim_bmw(p).subst_v(1, 2 * (1 - N));
}

// The explicit SO_q(N) column form (best02), whose natural variable is
// q^{1/2}; we build it directly in half-units so it can be compared with
// wenzl_product at nu = q^{1-N}.
inline ScalarFrac best02_form_half(const Partition& p, int N) {
    Partition pv = transpose(p);
    int k = static_cast<int>(pv.size());
    auto qnum_half = [](int n) {  // [n] in the variable q^{1/2}
        Scalar r;
        int a = n < 0 ? -n : n;
        for (int j = 0; j < a; ++j) r += Scalar::q_half(a - 1 - 2 * j);
        if (n < 0) r = -r;
        return r;
    };
    auto qfact_half = [&](int n) {
        Scalar r(1);
        for (int j = 2; j <= n; ++j) r *= qnum_half(j);
        return r;
    };
    ScalarFrac acc(1);
    for (int i = 1; i <= k; ++i) {
        if (pv[i - 1] + k - i < 0 || N - pv[i - 1] + k - 2 + i < 0) return ScalarFrac(0);
        acc *= ScalarFrac(qfact_half(N + 2 * (i - 1)),
                          qfact_half(pv[i - 1] + k - i) * qfact_half(N - pv[i - 1] + k - 2 + i));
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            acc *= ScalarFrac(qnum_half(pv[i - 1] - pv[j - 1] + j - i) *
                              qnum_half(N - pv[i - 1] - pv[j - 1] + i + j - 2));
    return acc;
}

// ---------------------------------------------------------------------------
// q-determinant and epsilon tensors

// A_{1->N} of the family, realized on an N-site tower.
inline TensorOp top_antisymmetrizer(const RData& r, int height) {
    TowerRep t = make_tower(r, height);
    return symmetrizers(t, SymKind::Antisym, height).back();
}

// det_q of a diagonal quantum matrix given by commuting diagonal values:
// Tr_{1..N}(A_{1->N} T_1 ... T_N).
inline ScalarFrac qdeterminant_diagonal(const RData& r, const std::vector<ScalarFrac>& diag) {
    int N = r.N();
    if (static_cast<int>(diag.size()) != N) throw std::domain_error("qdeterminant: diagonal size mismatch");
    TensorOp a = top_antisymmetrizer(r, N);
    TensorOp weighted(N, N);
    for (const auto& [rc, v] : a.entries()) {
        auto digits = a.decode(rc.second);
        ScalarFrac w = v;
        for (Index dgt : digits) w *= diag[dgt];
        weighted.add(rc.first, rc.second, w);
    }
    std::set<int> all;
    for (int s = 1; s <= N; ++s) all.insert(s);
    return weighted.weighted_partial_trace(all).at(0, 0);
}

// det_q(R^{(+-)}) for the L^{+-} representations (T^i_j)^k_l = (R^{+-})^{ik}_{jl};
// the result is an operator on the extra site and must be q^{+-1} I.
inline TensorOp qdeterminant_rpm(const RData& r, bool plus) {
    int N = r.N();
    TensorOp P = TensorOp::permutation(N);
    TensorOp Rpm = plus ? P * r.rhat : P * r.rhat_inv;  // R^{(+)} = P RHat, R^{(-)} = R21^{-1} = P RHat^{-1}
    TensorOp acc = embed_block(top_antisymmetrizer(r, N), 1, N + 1);
    for (int k = 1; k <= N; ++k) acc = acc * embed_pair(Rpm, k, N + 1, N + 1);
    std::set<int> first_n;
    for (int s = 1; s <= N; ++s) first_n.insert(s);
    return acc.weighted_partial_trace(first_n);
}

struct EpsTensors {
    std::vector<ScalarFrac> bra;  // E_<  (row covector), component (1,2,...,N) = 1
    std::vector<ScalarFrac> ket;  // E^>  (column vector), with <bra, ket> = 1
};

// Rank-1 factorization A_{1->N} = ket . bra of the top antisymmetrizer.
inline EpsTensors eps_tensors(const RData& r) {
    int N = r.N();
    TensorOp a = top_antisymmetrizer(r, N);
    if (rank_and_kernel(a).rank != 1) throw std::domain_error("eps_tensors: rank(A_{1->N}) != 1");
    std::vector<Index> digits(N);
    for (int i = 0; i < N; ++i) digits[i] = static_cast<Index>(i);
    Index j0 = a.encode(digits);
    ScalarFrac pivot = a.at(j0, j0);
    if (pivot.is_zero()) throw std::domain_error("eps_tensors: vanishing (1..N) component");
    EpsTensors out;
    Index d = a.dim();
    out.bra.assign(d, ScalarFrac(0));
    out.ket.assign(d, ScalarFrac(0));
    for (Index c = 0; c < d; ++c) out.bra[c] = a.at(j0, c) / pivot;
    for (Index rr = 0; rr < d; ++rr) out.ket[rr] = a.at(rr, j0);
    // verify the factorization and the pairing
    ScalarFrac pair(0);
    for (Index i = 0; i < d; ++i) pair += out.bra[i] * out.ket[i];
    if (!(pair == ScalarFrac(1))) throw std::domain_error("eps_tensors: pairing is not 1");
    for (const auto& [rc, v] : a.entries())
        if (!(out.ket[rc.first] * out.bra[rc.second] == v))
            throw std::domain_error("eps_tensors: factorization failed");
    return out;
}

// ---------------------------------------------------------------------------
// characters

// chi_Lambda(Y) = Tr_{D(1..M)}(Y_1 ... Y_M rho(E(T_Lambda))) for a diagonal
// quantum matrix Y; identical for every tableau of the shape (tested, not
// assumed): this uses the lexicographically first path.
inline ScalarFrac character(const TowerRep& t, const std::vector<ScalarFrac>& diag, const Partition& shape) {
    int M = partition_weight(shape);
    if (M > t.n) throw std::domain_error("character: shape exceeds tower size");
    if (M != t.n) throw std::domain_error("character: tower size must equal |shape|");
    BranchGraph g = branch_graph(false, M);
    TensorOp e;
    bool found = false;
    for (const auto& p : enumerate_paths(g, M)) {
        if (p.shape != shape) continue;
        e = idempotent_from_path(t, g, p);
        found = true;
        break;
    }
    if (!found) throw std::domain_error("character: shape not reachable");
    TensorOp weighted(t.N(), t.n);
    for (const auto& [rc, v] : e.entries()) {
        auto digits = e.decode(rc.first);
        ScalarFrac w = v;
        for (Index dgt : digits) w *= diag[dgt];
        weighted.add(rc.first, rc.second, w);
    }
    return ocneanu_trace(t, weighted);
}

}  // namespace qyb
