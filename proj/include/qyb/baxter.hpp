#pragma once

#include "rmatrix.hpp"

namespace qyb {

enum class BaxterForm { Hecke, BMW_plus, BMW_minus, RationalYang, RationalSOSp, RationalSuper };

inline bool is_rational_form(BaxterForm f) {
    return f == BaxterForm::RationalYang || f == BaxterForm::RationalSOSp || f == BaxterForm::RationalSuper;
}

// d/dx acting on the spectral variable (exponents live in half-units).
inline Scalar scalar_ddx(const Scalar& s) {
    Scalar r;
    for (const auto& [e, c] : s.terms()) {
        if (e.x == 0) continue;
        Exp ne = e;
        ne.x -= 2;
        r.add_term(ne, c * Rat(e.x, 2));
    }
    return r;
}
inline ScalarFrac frac_ddx(const ScalarFrac& f) {
    return ScalarFrac(scalar_ddx(f.num()) * f.den() - f.num() * scalar_ddx(f.den()), f.den() * f.den());
}

// Spectral-parameter R-matrix.  Trigonometric forms carry the multiplicative
// variable x (regular point x = 1); rational forms reuse the x slot for the
// additive variable theta (regular point theta = 0).
struct BaxterR {
    RData base;          // empty family data for pure rational forms built from scratch
    BaxterForm form = BaxterForm::Hecke;
    TensorOp op;         // entries rational in the spectral variable

    bool additive() const { return is_rational_form(form); }
    ScalarFrac compose(const ScalarFrac& a, const ScalarFrac& b) const { return additive() ? a + b : a * b; }

    // Evaluate at the spectral point x := c * q^{q_halves}.
    TensorOp at(const Rat& c, int q_halves = 0) const {
        TensorOp r(op.N(), op.sites());
        for (const auto& [rc, val] : op.entries()) r.add(rc.first, rc.second, val.subst(Var::x, c, Exp{q_halves, 0, 0}));
        return r;
    }
    TensorOp at_symbolic() const { return op; }
    // Substitute x -> x^{-1} (trig) or theta -> -theta (rational).
    TensorOp at_inverse_point() const {
        TensorOp r(op.N(), op.sites());
        for (const auto& [rc, val] : op.entries())
            r.add(rc.first, rc.second, additive() ? val.subst(Var::x, -1, Exp{0, 0, 2}) : val.subst(Var::x, 1, Exp{0, 0, -2}));
        return r;
    }
};

// Hecke Baxterization: RHat(x) = (x^{-1} RHat - x RHat^{-1}) / lambda.
inline BaxterR baxterize_hecke(const RData& r) {
    if (r.is_bmw()) throw std::domain_error("baxterize_hecke: Hecke kind required");
    BaxterR b{r, BaxterForm::Hecke, {}};
    ScalarFrac xi{Scalar::x_pow(-1)}, xx{Scalar::x_pow(1)}, il = ScalarFrac(lambda_q()).inverse();
    b.op = (r.rhat.scaled(xi) - r.rhat_inv.scaled(xx)).scaled(il);
    return b;
}

// alpha_{+-} = +- q^{+-1} / nu, the two roots of (3.9.13).
inline ScalarFrac bmw_alpha(const RData& r, bool plus) {
    ScalarFrac a = ScalarFrac(Scalar::q_pow(plus ? 1 : -1)) / ScalarFrac(r.nu);
    return plus ? a : -a;
}

// BMW Baxterization: RHat^{+-}(x) adds the K-term with alpha_{+-}.
inline BaxterR baxterize_bmw(const RData& r, bool plus) {
    if (!r.is_bmw()) throw std::domain_error("baxterize_bmw: BMW kind required");
    BaxterR b{r, plus ? BaxterForm::BMW_plus : BaxterForm::BMW_minus, {}};
    ScalarFrac xi{Scalar::x_pow(-1)}, xx{Scalar::x_pow(1)}, il = ScalarFrac(lambda_q()).inverse();
    ScalarFrac alpha = bmw_alpha(r, plus);
    ScalarFrac kcoef = (alpha + ScalarFrac(1)) / (alpha * xi + xx);
    b.op = (r.rhat.scaled(xi) - r.rhat_inv.scaled(xx)).scaled(il) + r.khat.scaled(kcoef);
    return b;
}

// Classical kernel K^(0) of the so/sp/osp rational forms: the q -> 1 limit
// of the quantum singlet matrix KHat, which fixes every sign convention.
inline TensorOp classical_k0(const RFamily& fam) {
    RData r = build(fam);
    int K = fam.local_dim();
    TensorOp k(K, 2);
    for (const auto& [rc, v] : r.khat.entries()) k.add(rc.first, rc.second, ScalarFrac(Scalar(v.eval(1))));
    return k;
}

enum class RationalForm { Yang, SOSp, Super };

// Rational (Yangian) limits; theta is carried in the x slot.
inline BaxterR rational_limit(const RFamily& fam, RationalForm form) {
    int K = fam.local_dim();
    ScalarFrac theta{Scalar::x_pow(1)};
    BaxterR b;
    b.base.family = fam;
    switch (form) {
        case RationalForm::Yang: {
            b.form = BaxterForm::RationalYang;
            b.op = TensorOp::identity(K, 2) + TensorOp::permutation(K).scaled(theta);
            break;
        }
        case RationalForm::SOSp: {
            if (fam.kind != FamilyKind::SOq && fam.kind != FamilyKind::Spq)
                throw std::domain_error("rational_limit: sosp form needs an SO/Sp family");
            b.form = BaxterForm::RationalSOSp;
            int eps = fam.kind == FamilyKind::Spq ? -1 : 1;
            ScalarFrac coef = ScalarFrac(Scalar(2)) * theta /
                              (ScalarFrac(Scalar(2 * eps - fam.N)) - ScalarFrac(Scalar(2)) * theta);
            b.op = TensorOp::identity(K, 2) + TensorOp::permutation(K).scaled(theta) + classical_k0(fam).scaled(coef);
            break;
        }
        case RationalForm::Super: {
            if (fam.kind != FamilyKind::GLqSuper) throw std::domain_error("rational_limit: super form needs GLqSuper");
            b.form = BaxterForm::RationalSuper;
            TensorOp P(K, 2);
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < K; ++j) {
                    Rat s = (i >= fam.N && j >= fam.N) ? -1 : 1;
                    P.add(static_cast<Index>(i) * K + j, static_cast<Index>(j) * K + i, ScalarFrac(s));
                }
            b.op = TensorOp::identity(K, 2) + P.scaled(theta);
            break;
        }
    }
    return b;
}

// Exact spectral YBE residual at a numeric pair of points.
inline TensorOp spectral_ybe_residual(const BaxterR& b, const Rat& x0, const Rat& y0) {
    TensorOp Rx = b.at(x0), Ry = b.at(y0);
    TensorOp Rxy = b.at(b.additive() ? Rat(x0 + y0) : Rat(x0 * y0));
    TensorOp a1 = embed(Rx, 1, 3), a2 = embed(Rxy, 2, 3), a3 = embed(Ry, 1, 3);
    TensorOp b1 = embed(Ry, 2, 3), b2 = embed(Rxy, 1, 3), b3 = embed(Rx, 2, 3);
    return a1 * a2 * a3 - b1 * b2 * b3;
}

inline CheckReport check_spectral_ybe(const BaxterR& b, const std::vector<std::pair<Rat, Rat>>& points) {
    CheckReport rep;
    for (const auto& [x0, y0] : points) {
        TensorOp res = spectral_ybe_residual(b, x0, y0);
        rep.add("sYBE at (" + rat_str(x0) + ", " + rat_str(y0) + ")", res.is_zero());
    }
    return rep;
}

// Unitarity RHat(x) RHat(x^{-1}) = (1 - (x - x^{-1})^2 / lambda^2) 1, checked
// symbolically in x (trig forms); rational forms obey 1 - theta^2 (Yang/super)
// or the sosp analogue, which we check by product shape.
inline CheckItem check_unitarity_symbolic(const BaxterR& b) {
    TensorOp prod = b.op * b.at_inverse_point();
    int K = b.op.N();
    if (!b.additive()) {
        Scalar xm = Scalar::x_pow(1) - Scalar::x_pow(-1);
        ScalarFrac expect = ScalarFrac(1) - ScalarFrac(xm * xm) / ScalarFrac(lambda_q() * lambda_q());
        bool ok = prod == TensorOp::identity(K, 2).scaled(expect);
        return {"unitarity (symbolic in x)", ok, ""};
    }
    ScalarFrac c;
    bool ok = prod.is_scalar_identity(c);
    return {"unitarity (rational form, scalar product)", ok, ok ? c.str() : ""};
}

inline CheckItem check_unitarity_at(const BaxterR& b, const Rat& x0) {
    TensorOp prod = b.at(x0) * b.at(b.additive() ? Rat(-x0) : Rat(1) / x0);
    int K = b.op.N();
    if (!b.additive()) {
        Rat xm = x0 - 1 / x0;
        ScalarFrac expect = ScalarFrac(1) - ScalarFrac(Rat(xm * xm)) / ScalarFrac(lambda_q() * lambda_q());
        return {"unitarity at x = " + rat_str(x0), prod == TensorOp::identity(K, 2).scaled(expect), ""};
    }
    ScalarFrac c;
    return {"unitarity at theta = " + rat_str(x0), prod.is_scalar_identity(c), ""};
}

// Cross-unitarity (cross01)/(cross02).  x is a rational point; the partner z
// is the q-monomial solving the (xz)^2 constraint, so no quadratic extension
// is ever needed (the report notes the symbolic partner).
struct CrossUnitarityResult {
    CheckReport report;
    ScalarFrac eta;  // proportionality factor as computed
};

inline CrossUnitarityResult check_cross_unitarity(const BaxterR& b, const std::vector<Rat>& xs) {
    if (b.additive()) throw std::domain_error("check_cross_unitarity: trigonometric forms only");
    CrossUnitarityResult out;
    const RData& r = b.base;
    int K = r.N();
    for (const Rat& x0 : xs) {
        Rat zc;
        int zh;
        ScalarFrac eta;
        Scalar xval = Scalar::monomial(x0, Exp{});
        if (b.form == BaxterForm::Hecke) {
            if (!r.has_d_param) throw std::domain_error("cross-unitarity: lambda Tr(D) = 1");
            // (xz)^2 = q^{2d}  ->  z = q^d / x
            zc = 1 / x0;
            zh = 2 * r.d_param;
            Scalar zval = Scalar::monomial(zc, Exp{zh, 0, 0});
            ScalarFrac num{(xval - Scalar::monomial(1 / x0, Exp{})) * (zval - Scalar::monomial(1 / zc, Exp{-zh, 0, 0}))};
            eta = num / ScalarFrac(lambda_q() * lambda_q());
        } else {
            // (xz)^2 = alpha^2  ->  z = alpha / x
            ScalarFrac alpha = bmw_alpha(r, b.form == BaxterForm::BMW_plus);
            Scalar am = alpha.as_scalar();
            auto [ae, ac] = am.leading();
            zc = ac / x0;
            zh = ae.q;
            auto etapm = [&](const Rat& c, int h) {
                ScalarFrac xv{Scalar::monomial(c, Exp{h, 0, 0})};
                ScalarFrac xi = xv.inverse();
                ScalarFrac nu{r.nu};
                return (xv - xi) * (alpha * nu * xv * xv + nu.inverse()) / (ScalarFrac(lambda_q()) * (xv * xv + alpha));
            };
            eta = etapm(x0, 0) * etapm(zc, zh);
        }
        // Tr_{D(2)}( R_1(x) P_01 R_1(z) ) = eta D_0 I_1 on spaces (0,1,2)
        TensorOp Rx = b.at(x0), Rz = b.at(zc, zh);
        TensorOp lhs = (embed(Rx, 2, 3) * embed(TensorOp::permutation(K), 1, 3) * embed(Rz, 2, 3))
                           .weighted_partial_trace({3}, &r.D);
        TensorOp expect = site_diag(r.D, 1, 2).scaled(eta);
        out.report.add("cross-unitarity at x = " + rat_str(x0) + ", z = " + rat_str(zc) + "*q^" + std::to_string(zh / 2),
                       lhs == expect);
        out.eta = eta;
    }
    return out;
}

// First Taylor coefficient of the regular R-matrix in theta (x = e^{-lambda theta / 2}).
inline TensorOp hamiltonian_density(const BaxterR& b) {
    int K = b.op.N();
    const RData& r = b.base;
    switch (b.form) {
        case BaxterForm::Hecke:
            return r.rhat - TensorOp::identity(K, 2).scaled(ScalarFrac(lambda_q()) * ScalarFrac(Rat(1, 2)));
        case BaxterForm::BMW_plus:
        case BaxterForm::BMW_minus: {
            ScalarFrac alpha = bmw_alpha(r, b.form == BaxterForm::BMW_plus);
            ScalarFrac beta = (alpha - ScalarFrac(1)) / (alpha + ScalarFrac(1));
            TensorOp h = r.rhat + r.rhat_inv - r.khat.scaled(ScalarFrac(lambda_q()) * beta);
            return h.scaled(ScalarFrac(Rat(1, 2)));
        }
        default: {
            // rational: h = d RHat / d theta at theta = 0
            TensorOp h(K, 2);
            for (const auto& [rc, v] : b.op.entries()) h.add(rc.first, rc.second, frac_ddx(v).subst_x(0));
            return h;
        }
    }
}

// Regularity: the operator at the regular point is the identity.
inline CheckItem check_regularity(const BaxterR& b) {
    TensorOp v = b.at(b.additive() ? 0 : 1);
    return {"regularity", v == TensorOp::identity(b.op.N(), 2), ""};
}

}  // namespace qyb
