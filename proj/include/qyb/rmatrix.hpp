#pragma once

#include "tensor.hpp"

namespace qyb {

enum class FamilyKind { GLq, GLqMulti, GLqSuper, SOq, Spq, Ospq };

inline bool is_bmw_kind(FamilyKind k) {
    return k == FamilyKind::SOq || k == FamilyKind::Spq || k == FamilyKind::Ospq;
}
inline bool is_hecke_kind(FamilyKind k) { return !is_bmw_kind(k); }

// Declarative description of a constant R-matrix family.
struct RFamily {
    FamilyKind kind = FamilyKind::GLq;
    int N = 2;         // GLq/SOq/Spq: local dimension; GLqSuper/Ospq: even part
    int M = 0;         // GLqSuper: odd part
    int m = 0;         // Ospq: symplectic half-rank (local dim is N + 2m)
    int eps = +1;      // Ospq: +1 for Osp_q(N|2m), -1 for Osp'_q(2m|N)
    std::vector<std::vector<Rat>> multi;  // GLqMulti: unit-parameter table a_ij

    int local_dim() const {
        switch (kind) {
            case FamilyKind::GLqSuper: return N + M;
            case FamilyKind::Ospq: return N + 2 * m;
            default: return N;
        }
    }

    static RFamily glq(int N) { return RFamily{FamilyKind::GLq, N}; }
    static RFamily glq_multi(int N, std::vector<std::vector<Rat>> a) {
        RFamily f{FamilyKind::GLqMulti, N};
        f.multi = std::move(a);
        return f;
    }
    static RFamily glq_super(int N, int M) {
        RFamily f{FamilyKind::GLqSuper, N};
        f.M = M;
        return f;
    }
    static RFamily soq(int N) { return RFamily{FamilyKind::SOq, N}; }
    static RFamily spq(int N) { return RFamily{FamilyKind::Spq, N}; }
    static RFamily ospq(int N, int two_m, int eps) {
        RFamily f{FamilyKind::Ospq, N};
        if (two_m % 2) throw std::domain_error("ospq: odd symplectic dimension");
        f.m = two_m / 2;
        f.eps = eps;
        return f;
    }

    std::string name() const {
        switch (kind) {
            case FamilyKind::GLq: return "GLq(" + std::to_string(N) + ")";
            case FamilyKind::GLqMulti: return "GLqMulti(" + std::to_string(N) + ")";
            case FamilyKind::GLqSuper: return "GLqSuper(" + std::to_string(N) + "," + std::to_string(M) + ")";
            case FamilyKind::SOq: return "SOq(" + std::to_string(N) + ")";
            case FamilyKind::Spq: return "Spq(" + std::to_string(N) + ")";
            case FamilyKind::Ospq:
                return std::string(eps > 0 ? "Ospq(" : "Ospq'(") + std::to_string(N) + "|" + std::to_string(2 * m) + ")";
        }
        return "?";
    }

    // BMW singlet eigenvalue as a monomial: sign * q^{halves/2}
    std::pair<Rat, int> nu_monomial() const {
        switch (kind) {
            case FamilyKind::SOq: return {1, 2 * (1 - N)};
            case FamilyKind::Spq: return {-1, 2 * (-1 - N)};
            case FamilyKind::Ospq: return {Rat(eps), 2 * (eps + 2 * m - N)};
            default: throw std::domain_error("nu: Hecke kind");
        }
    }
    Scalar nu() const {
        auto [c, h] = nu_monomial();
        return Scalar::monomial(c, Exp{h, 0, 0});
    }

    // sign table eps_i and exponent table rho_i (in halves of q) for the
    // orthogonal/symplectic/orthosymplectic families
    void sign_tables(std::vector<int>& eps_i, std::vector<int>& rho_halves) const;
};

namespace detail {

inline void glq_like_rhat(TensorOp& R, int K, const std::function<ScalarFrac(int, int)>& swap_coef,
                          const std::function<ScalarFrac(int)>& diag_coef) {
    // q sum e_ii (x) e_ii + sum_{i != j} a_ij e_ij (x) e_ji + lambda sum_{i<j} e_ii (x) e_jj
    ScalarFrac lam{lambda_q()};
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) {
            if (i == j) R.add(i * K + i, i * K + i, diag_coef(i));
            else R.add(i * K + j, j * K + i, swap_coef(i, j));
        }
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j) R.add(i * K + j, i * K + j, lam);
}

}  // namespace detail

namespace detail {

// (rho_1,...,rho_N) of the SO series in halves of q:
// B (N odd): (n-1/2, ..., 1/2, 0, -1/2, ..., 1/2-n); D (N even): (n-1, ..., 1, 0, 0, -1, ..., 1-n)
inline std::vector<int> so_rho_halves(int N) {
    std::vector<int> rho(N, 0);
    int n = N / 2;
    if (N % 2 == 1) {
        for (int i = 0; i < n; ++i) {
            rho[i] = 2 * n - 1 - 2 * i;
            rho[N - 1 - i] = -rho[i];
        }
    } else {
        for (int i = 0; i < n; ++i) {
            rho[i] = 2 * (n - 1 - i);
            rho[N - 1 - i] = -rho[i];
        }
    }
    return rho;
}

}  // namespace detail

inline void RFamily::sign_tables(std::vector<int>& eps_i, std::vector<int>& rho_halves) const {
    int K = local_dim();
    eps_i.assign(K, +1);
    rho_halves.assign(K, 0);
    if (kind == FamilyKind::SOq) {
        rho_halves = detail::so_rho_halves(N);
        return;
    }
    if (kind == FamilyKind::Spq) {
        if (N % 2) throw std::domain_error("Spq: odd N");
        int n = N / 2;
        for (int i = 0; i < n; ++i) {
            rho_halves[i] = 2 * (n - i);
            rho_halves[N - 1 - i] = -2 * (n - i);
            eps_i[N - 1 - i] = -1;
        }
        return;
    }
    if (kind != FamilyKind::Ospq) throw std::domain_error("sign_tables: not an orthogonal-type family");
    // Osp_q(N|2m) / Osp'_q(2m|N) tables
    if (eps > 0) {
        // rho: (N/2-m ... N/2-1 ; SO(N) table ; 1-N/2 ... m-N/2), halves of q
        for (int i = 0; i < m; ++i) {
            rho_halves[i] = N - 2 * m + 2 * i;  // (N/2 - m + i) in halves
            eps_i[i] = -1;
        }
        std::vector<int> mid = detail::so_rho_halves(N);
        for (int i = 0; i < N; ++i) rho_halves[m + i] = mid[i];
        for (int i = 0; i < m; ++i) rho_halves[m + N + i] = 2 - N + 2 * i;
    } else {
        if (N % 2) throw std::domain_error("Ospq': even N required");
        int n = N / 2;
        for (int i = 0; i < m; ++i) {
            rho_halves[i] = 2 * (n + 1 - m + i);
            eps_i[i] = -1;
        }
        for (int i = 0; i < n; ++i) rho_halves[m + i] = 2 * (n - i);
        for (int i = 0; i < n; ++i) {
            rho_halves[m + n + i] = 2 * (-1 - i);
            eps_i[m + n + i] = -1;
        }
        for (int i = 0; i < m; ++i) {
            rho_halves[m + N + i] = 2 * (-n + i);
            eps_i[m + N + i] = -1;
        }
    }
}

// Braid-form R-matrix of the declared family, in the paper's normalization.
inline TensorOp build_rhat(const RFamily& f) {
    int K = f.local_dim();
    TensorOp R(K, 2);
    ScalarFrac q1{Scalar::q_pow(1)};
    switch (f.kind) {
        case FamilyKind::GLq:
            detail::glq_like_rhat(R, K, [](int, int) { return ScalarFrac(1); }, [&](int) { return q1; });
            break;
        case FamilyKind::GLqMulti: {
            if (static_cast<int>(f.multi.size()) != K) throw std::domain_error("GLqMulti: bad parameter table");
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < K; ++j) {
                    if (f.multi[i][j] == 0) throw std::domain_error("GLqMulti: zero parameter");
                    if (i == j && f.multi[i][i] != 1) throw std::domain_error("GLqMulti: a_ii must be 1");
                    if (i != j && f.multi[i][j] * f.multi[j][i] != 1)
                        throw std::domain_error("GLqMulti: a_ij a_ji must be 1");
                }
            detail::glq_like_rhat(R, K, [&](int i, int j) { return ScalarFrac(Rat(f.multi[i][j])); },
                                  [&](int) { return q1; });
            break;
        }
        case FamilyKind::GLqSuper: {
            auto grade = [&](int i) { return i >= f.N ? 1 : 0; };
            detail::glq_like_rhat(
                R, K,
                [&](int i, int j) { return ScalarFrac(Rat(grade(i) && grade(j) ? -1 : 1)); },
                [&](int i) {
                    return grade(i) ? ScalarFrac(Scalar::monomial(-1, Exp{-2, 0, 0})) : q1;
                });
            break;
        }
        case FamilyKind::SOq:
        case FamilyKind::Spq:
        case FamilyKind::Ospq: {
            if (f.kind == FamilyKind::Spq && f.N % 2) throw std::domain_error("Spq: odd N");
            std::vector<int> eps_i, rho;
            f.sign_tables(eps_i, rho);
            auto grade = [&](int i) {
                if (f.kind != FamilyKind::Ospq) return 0;
                return (i < f.m || i >= f.m + f.N) ? 1 : 0;
            };
            ScalarFrac lam{lambda_q()};
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < K; ++j) {
                    int ip = K - 1 - i, jp = K - 1 - j;
                    // first sum: coefficient q^{(-1)^{[i]}(d_ij - d_ij')} (x (-1)^{[i][j]} for Osp)
                    int sign_exp = grade(i) ? -1 : 1;
                    int halves = 2 * sign_exp * ((i == j ? 1 : 0) - (i == jp ? 1 : 0));
                    Rat coef = (grade(i) && grade(j)) ? -1 : 1;
                    R.add(i * K + j, j * K + i, ScalarFrac(Scalar::monomial(coef, Exp{halves, 0, 0})));
                    if (i < j) R.add(i * K + j, i * K + j, lam);
                    if (i > j) {
                        // -lambda q^{rho_i - rho_j} eps_i eps_j e_{i'j} (x) e_{ij'}
                        Rat s = Rat(eps_i[i] * eps_i[j]) * -1;
                        Scalar mono = Scalar::monomial(s, Exp{rho[i] - rho[j], 0, 0});
                        R.add(static_cast<Index>(ip) * K + i, static_cast<Index>(j) * K + jp,
                              ScalarFrac(mono * lambda_q()));
                    }
                }
            break;
        }
    }
    return R;
}

// Pass/fail result of one named identity check.
struct CheckItem {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back({name, pass, detail});
    }
};

// All structural data derived from a constant R-matrix.
struct RData {
    RFamily family;
    TensorOp rhat, rhat_inv;
    TensorOp psi_hat;                // skew inverse of R, hatted
    TensorOp phi_hat;                // skew inverse of R^{-1}, hatted
    SiteWeights D, Q;
    ScalarFrac trD;
    bool has_d_param = false;
    int d_param = 0;                 // q^{-2d} = 1 - lambda Tr(D)   (Hecke kinds)
    Scalar nu;                       // BMW kinds
    ScalarFrac mu;                   // BMW kinds: K^2 = mu K
    TensorOp khat;                   // BMW kinds
    std::vector<ScalarFrac> eigenvalues;  // {q, -1/q} or {q, -1/q, nu}

    int N() const { return family.local_dim(); }
    bool is_bmw() const { return is_bmw_kind(family.kind); }
};

// Skew inverse: solves Psi^{t1} R^{t1} = I and returns PsiHat = P Psi (or,
// for of_inverse, solves Phi^{t2} (R^{-1})^{t2} = I and returns PhiHat = Phi P).
inline TensorOp skew_inverse(const TensorOp& rhat, bool of_inverse = false) {
    int N = rhat.N();
    TensorOp P = TensorOp::permutation(N);
    if (!of_inverse) {
        TensorOp R = P * rhat;  // R = P Rhat
        TensorOp M = R.partial_transpose(1);
        TensorOp psi_t1 = M.inverse();
        TensorOp psi = psi_t1.partial_transpose(1);
        return P * psi;
    }
    TensorOp Rinv = rhat.inverse() * P;  // R^{-1} = Rhat^{-1} P
    TensorOp M = Rinv.partial_transpose(2);
    TensorOp phi_t2 = M.inverse();
    TensorOp phi = phi_t2.partial_transpose(2);
    return phi * P;
}

// Closed form (skewdym1) of the GLq(N) skew inverse, kept as an independent
// oracle against the linear-system solver.
inline TensorOp psi_hat_closed_glq(int N) {
    TensorOp t(N, 2);
    Scalar lam = lambda_q();
    for (int i = 0; i < N; ++i) {
        t.set(i * N + i, i * N + i, ScalarFrac(Scalar::q_pow(-1)));
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            t.set(i * N + j, j * N + i, ScalarFrac(1));
            if (i < j) t.set(i * N + j, i * N + j, ScalarFrac(-(lam * Scalar::q_pow(2 * (i - j)))));
        }
    }
    return t;
}

// Closed form (skglnm) for GLq(N|M); indices are 1-based in the formula.
inline TensorOp psi_hat_closed_glq_super(int N, int M) {
    int K = N + M;
    TensorOp t(K, 2);
    Scalar lam = lambda_q();
    auto grade = [&](int i) { return i > N ? 1 : 0; };  // 1-based
    for (int i1 = 1; i1 <= K; ++i1)
        for (int i2 = 1; i2 <= K; ++i2) {
            int r = (i1 - 1) * K + (i2 - 1);
            // diagonal-swap part
            Rat sg = (grade(i1) && grade(i2)) ? -1 : 1;
            int halves = (i1 == i2) ? 2 * (2 * grade(i1) - 1) : 0;
            t.add(r, (i2 - 1) * K + (i1 - 1), ScalarFrac(Scalar::monomial(sg, Exp{halves, 0, 0})));
            if (i1 < i2) {
                Rat s = Rat((grade(i1) + grade(i2)) % 2 == 1 ? -1 : 1) * -1;
                int e1 = grade(i1) ? -(2 * i1 - 2 * N - 1) : (2 * i1 - 2 * N - 1);
                int e2 = grade(i2) ? (2 * i2 - 2 * N - 1) : -(2 * i2 - 2 * N - 1);
                t.add(r, r, ScalarFrac(Scalar::monomial(s, Exp{2 * (e1 + e2), 0, 0}) * lam));
            }
        }
    return t;
}

// Quantum-trace weights: D_1 = Tr_2 PsiHat, Q_2 = Tr_1 PsiHat.
inline std::pair<SiteWeights, SiteWeights> dq_weights(const TensorOp& psi_hat) {
    TensorOp D1 = psi_hat.weighted_partial_trace({2});
    TensorOp Q2 = psi_hat.weighted_partial_trace({1});
    if (!D1.is_diagonal() || !Q2.is_diagonal())
        throw std::domain_error("dq_weights: quantum-trace matrices are not diagonal");
    int N = psi_hat.N();
    SiteWeights D(N, std::vector<ScalarFrac>(N, ScalarFrac(0)));
    SiteWeights Q(N, std::vector<ScalarFrac>(N, ScalarFrac(0)));
    for (int i = 0; i < N; ++i) {
        D.diag[i] = D1.at(i, i);
        Q.diag[i] = Q2.at(i, i);
    }
    return {D, Q};
}

inline TensorOp weighted_right_trace(const TensorOp& two_site, const SiteWeights& w) {
    // Tr_2 ( A . w_2 )
    TensorOp scaledw(two_site.N(), 2);
    for (const auto& [rc, v] : two_site.entries()) {
        Index c2 = rc.second % two_site.N();
        scaledw.add(rc.first, rc.second, v * w.diag[c2]);
    }
    return scaledw.weighted_partial_trace({2});
}

// build(): constructs the R-matrix and all derived data of the family.
inline RData build(const RFamily& family) {
    RData r;
    r.family = family;
    r.rhat = build_rhat(family);
    r.rhat_inv = r.rhat.inverse();
    r.psi_hat = skew_inverse(r.rhat, false);
    r.phi_hat = skew_inverse(r.rhat, true);
    auto [D, Q] = dq_weights(r.psi_hat);
    r.D = D;
    r.Q = Q;
    r.trD = D.trace();
    ScalarFrac q{Scalar::q_pow(1)}, qi{Scalar::q_pow(-1)};
    r.eigenvalues = {q, -qi};
    if (r.is_bmw()) {
        r.nu = family.nu();
        r.eigenvalues.push_back(ScalarFrac(r.nu));
        // KHat = (1 + lambda RHat - RHat^2) / (lambda nu)
        int K = family.local_dim();
        TensorOp one = TensorOp::identity(K, 2);
        TensorOp kh = one + r.rhat.scaled(ScalarFrac(lambda_q())) - r.rhat * r.rhat;
        r.khat = kh.scaled(ScalarFrac(Scalar(1), lambda_q() * r.nu));
        // K^2 = mu K
        TensorOp k2 = r.khat * r.khat;
        ScalarFrac mu(0);
        for (const auto& [rc, v] : r.khat.entries()) {
            mu = k2.at(rc.first, rc.second) / v;
            break;
        }
        if (!(k2 == r.khat.scaled(mu))) throw std::domain_error("build: KHat^2 not proportional to KHat");
        r.mu = mu;
    } else {
        // q^{-2d} = 1 - lambda Tr(D); a q-monomial for all supported families
        ScalarFrac f = ScalarFrac(1) - ScalarFrac(lambda_q()) * r.trD;
        if (f.is_polynomial() && f.as_scalar().is_monomial()) {
            auto [e, c] = f.as_scalar().leading();
            if (c == 1 && e.v == 0 && e.x == 0 && e.q % 4 == 0) {
                r.has_d_param = true;
                r.d_param = -e.q / 4;
            }
        }
        if (!r.has_d_param) throw std::domain_error("build: 1 - lambda Tr(D) is not q^{-2d}");
    }
    return r;
}

// Exact braid-form Yang-Baxter check; returns the residual operator.
inline TensorOp ybe_residual(const TensorOp& rhat) {
    TensorOp r1 = embed(rhat, 1, 3), r2 = embed(rhat, 2, 3);
    return r1 * r2 * r1 - r2 * r1 * r2;
}

inline CheckItem check_ybe(const TensorOp& rhat) {
    TensorOp res = ybe_residual(rhat);
    return {"ybe", res.is_zero(), res.is_zero() ? "residual = 0" : "residual has " + std::to_string(res.nnz()) + " nonzero entries"};
}

// Hecke: RHat^2 - lambda RHat - 1 = 0; BMW: (RHat - q)(RHat + 1/q)(RHat - nu) = 0.
inline CheckReport check_characteristic(const RData& r) {
    CheckReport rep;
    int K = r.N();
    TensorOp one = TensorOp::identity(K, 2);
    if (!r.is_bmw()) {
        TensorOp res = r.rhat * r.rhat - r.rhat.scaled(ScalarFrac(lambda_q())) - one;
        rep.add("hecke", res.is_zero());
    } else {
        TensorOp f1 = r.rhat - one.scaled(ScalarFrac(Scalar::q_pow(1)));
        TensorOp f2 = r.rhat + one.scaled(ScalarFrac(Scalar::q_pow(-1)));
        TensorOp f3 = r.rhat - one.scaled(ScalarFrac(r.nu));
        rep.add("cubic", (f1 * f2 * f3).is_zero());
        rep.add("factor (R-nu) annihilates K-image", (f3 * r.khat).is_zero());
        if (!r.mu.is_zero()) {
            rep.add("factor (R-q)(R+1/q) annihilates K-complement",
                    (f1 * f2 * (one - r.khat.scaled(r.mu.inverse()))).is_zero());
        } else {
            // nu collides with a Hecke eigenvalue (e.g. Osp(2|2)): KHat is
            // nilpotent and there is no spectral complement to factor off.
            rep.add("KHat nilpotent (mu = 0)", (r.khat * r.khat).is_zero());
        }
    }
    return rep;
}

// Spectral projectors from the characteristic equation.
inline std::vector<TensorOp> spectral_projectors(const RData& r) {
    int K = r.N();
    TensorOp one = TensorOp::identity(K, 2);
    std::vector<TensorOp> proj;
    for (size_t k = 0; k < r.eigenvalues.size(); ++k) {
        TensorOp p = one;
        for (size_t j = 0; j < r.eigenvalues.size(); ++j) {
            if (j == k) continue;
            ScalarFrac denom = r.eigenvalues[k] - r.eigenvalues[j];
            if (denom.is_zero()) throw std::domain_error("spectral_projectors: repeated eigenvalues");
            p = (p * (r.rhat - one.scaled(r.eigenvalues[j]))).scaled(denom.inverse());
        }
        proj.push_back(p);
    }
    return proj;
}

// Prop. 2 trace identities plus the commuting family Y^(n).
inline CheckReport verify_trace_identities(const RData& r) {
    CheckReport rep;
    int K = r.N();
    TensorOp one1 = TensorOp::identity(K, 1);
    // Tr_2(RHat D_2) = I, Tr_1(Q_1 RHat) = I
    {
        TensorOp t = weighted_right_trace(r.rhat, r.D);
        rep.add("Tr_2(R D_2) = I", t == one1);
        TensorOp s(K, 2);
        for (const auto& [rc, v] : r.rhat.entries()) s.add(rc.first, rc.second, v * r.Q.diag[rc.second / K]);
        rep.add("Tr_1(Q_1 R) = I", s.weighted_partial_trace({1}) == one1);
    }
    // [RHat, D_1 D_2] = 0 and [RHat, Q_1 Q_2] = 0
    auto dd_commute = [&](const SiteWeights& w, const char* name) {
        TensorOp W(K, 2);
        for (Index a = 0; a < static_cast<Index>(K); ++a)
            for (Index b = 0; b < static_cast<Index>(K); ++b)
                W.set(a * K + b, a * K + b, w.diag[a] * w.diag[b]);
        rep.add(name, r.rhat * W == W * r.rhat);
    };
    dd_commute(r.D, "[R, D1 D2] = 0");
    dd_commute(r.Q, "[R, Q1 Q2] = 0");
    // Tr_{D(2)}(R E_1 R^{-1}) = Tr(D E) I, for E running over matrix units
    {
        bool ok = true;
        for (int a = 0; a < K && ok; ++a)
            for (int b = 0; b < K && ok; ++b) {
                TensorOp E(K, 2);
                for (int c = 0; c < K; ++c) E.set(static_cast<Index>(a) * K + c, static_cast<Index>(b) * K + c, ScalarFrac(1));
                TensorOp lhs = weighted_right_trace(r.rhat * E * r.rhat_inv, r.D);
                ScalarFrac trDE = (a == b) ? r.D.diag[a] : ScalarFrac(0);
                ok = lhs == one1.scaled(trDE);
            }
        rep.add("Tr_D(2)(R E R^-1) = Tr(DE) I", ok);
    }
    // Y^(n) = Tr_2(D_2 RHat^n) proportional to identity, n = -2..3
    {
        bool ok = true;
        TensorOp pw = r.rhat_inv * r.rhat_inv;
        for (int n = -2; n <= 3 && ok; ++n) {
            TensorOp y = weighted_right_trace(pw, r.D);
            ScalarFrac c;
            ok = y.is_scalar_identity(c) || (y.is_zero());
            pw = (n < 3) ? pw * r.rhat : pw;
        }
        rep.add("Y^(n) scalar for n in -2..3", ok);
    }
    return rep;
}

// BMW structure: kappa sandwich, K_12 K_23 K_12 = K_12, R - R^-1 = lambda(1 - K).
inline CheckReport check_bmw_structure(const RData& r) {
    if (!r.is_bmw()) throw std::domain_error("check_bmw_structure: Hecke kind");
    CheckReport rep;
    int K = r.N();
    TensorOp k12 = embed(r.khat, 1, 3), k23 = embed(r.khat, 2, 3);
    TensorOp r12 = embed(r.rhat, 1, 3), r23 = embed(r.rhat, 2, 3);
    TensorOp r12i = embed(r.rhat_inv, 1, 3), r23i = embed(r.rhat_inv, 2, 3);
    ScalarFrac nu(r.nu), nui = ScalarFrac(r.nu).inverse();
    rep.add("K23 R12 K23 = nu^-1 K23", k23 * r12 * k23 == k23.scaled(nui));
    rep.add("K23 R12^-1 K23 = nu K23", k23 * r12i * k23 == k23.scaled(nu));
    rep.add("K12 R23 K12 = nu^-1 K12", k12 * r23 * k12 == k12.scaled(nui));
    rep.add("K12 R23^-1 K12 = nu K12", k12 * r23i * k12 == k12.scaled(nu));
    rep.add("K12 K23 K12 = K12", k12 * k23 * k12 == k12);
    rep.add("K23 K12 K23 = K23", k23 * k12 * k23 == k23);
    TensorOp one = TensorOp::identity(K, 2);
    rep.add("R - R^-1 = lambda (1 - K)",
            r.rhat - r.rhat_inv == (one - r.khat).scaled(ScalarFrac(lambda_q())));
    rep.add("K^2 = mu K", r.khat * r.khat == r.khat.scaled(r.mu));
    rep.add("KR = RK = nu K", r.khat * r.rhat == r.khat.scaled(nu) && r.rhat * r.khat == r.khat.scaled(nu));
    return rep;
}

// Twist RHat -> F RHat F^{-1} with F = diag(f_ij) in the matrix-unit basis.
inline RData twist_multiparam(const RData& base, const std::vector<std::vector<Rat>>& f) {
    if (base.family.kind != FamilyKind::GLq) throw std::domain_error("twist_multiparam: GLq base required");
    int K = base.N();
    TensorOp F(K, 2), Fi(K, 2);
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) {
            if (f[i][j] == 0) throw std::domain_error("twist_multiparam: zero twist entry");
            F.set(static_cast<Index>(i) * K + j, static_cast<Index>(i) * K + j, ScalarFrac(f[i][j]));
            Fi.set(static_cast<Index>(i) * K + j, static_cast<Index>(i) * K + j, ScalarFrac(Rat(1) / f[i][j]));
        }
    std::vector<std::vector<Rat>> a(K, std::vector<Rat>(K, 1));
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) a[i][j] = f[i][j] / f[j][i];
    RData r = build(RFamily::glq_multi(K, a));
    TensorOp twisted = F * base.rhat * Fi;
    if (!(twisted == r.rhat)) throw std::domain_error("twist_multiparam: twist disagrees with direct constructor");
    return r;
}

}  // namespace qyb
