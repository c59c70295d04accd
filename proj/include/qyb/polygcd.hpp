#pragma once

#include "scalar.hpp"

namespace qyb {

// Exact division in the Laurent ring: returns a/b when b divides a, nullopt
// otherwise.  Works by repeated cancellation of leading terms under the lex
// order; since monomials are units, exponent signs need no special handling,
// but the leading-exponent test below keeps the loop finite.
inline std::optional<Scalar> exact_divide(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (a.is_zero()) return Scalar(0);
    if (b.is_monomial()) return a * b.monomial_inverse();
    // Shift both to ordinary polynomials so that componentwise exponent
    // dominance is a valid divisibility test for leading terms.
    Exp sa = a.min_exp(), sb = b.min_exp();
    Scalar ra = a.shifted(Exp{} - sa), rb = b.shifted(Exp{} - sb);
    auto [lbe, lbc] = rb.leading();
    Scalar quot, rem = ra;
    while (!rem.is_zero()) {
        auto [le, lc] = rem.leading();
        if (le.q < lbe.q || le.v < lbe.v || le.x < lbe.x) return std::nullopt;
        Scalar t = Scalar::monomial(lc / lbc, le - lbe);
        quot += t;
        rem -= t * rb;
    }
    return quot.shifted(sa - sb);
}

namespace detail {

// Univariate view in one variable with Scalar coefficients (in the others).
using Uni = std::map<int32_t, Scalar>;

inline Uni to_uni(const Scalar& s, Var w) {
    Uni u;
    for (const auto& [e, c] : s.terms()) {
        Exp r = e;
        int32_t d = get(e, w);
        set(r, w, 0);
        u[d].add_term(r, c);
    }
    return u;
}

inline Scalar from_uni(const Uni& u, Var w) {
    Scalar s;
    for (const auto& [d, coef] : u) {
        for (const auto& [e, c] : coef.terms()) {
            Exp r = e;
            set(r, w, d);
            s.add_term(r, c);
        }
    }
    return s;
}

inline int32_t deg(const Uni& u) { return u.empty() ? -1 : u.rbegin()->first; }

inline Uni uni_scale(const Uni& u, const Scalar& c) {
    Uni r;
    for (const auto& [d, co] : u) {
        Scalar p = co * c;
        if (!p.is_zero()) r[d] = p;
    }
    return r;
}

inline Uni uni_sub(Uni a, const Uni& b) {
    for (const auto& [d, co] : b) {
        auto it = a.find(d);
        if (it == a.end()) a[d] = -co;
        else {
            it->second -= co;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

// One pseudo-remainder step sequence: returns prem(f, g) up to a factor of
// lc(g)^k, which the primitive PRS discards anyway.
inline Uni pseudo_rem(Uni f, const Uni& g) {
    const Scalar& lg = g.rbegin()->second;
    int32_t dg = deg(g);
    while (deg(f) >= dg && !f.empty()) {
        int32_t df = deg(f);
        Scalar lf = f.rbegin()->second;
        Uni shifted;
        for (const auto& [d, co] : g) {
            Scalar p = co * lf;
            if (!p.is_zero()) shifted[d + df - dg] = p;
        }
        f = uni_sub(uni_scale(f, lg), shifted);
    }
    return f;
}

Scalar gcd_rec(const Scalar& a, const Scalar& b);

// Divide the rational content and fix the sign of the lex-leading coefficient.
inline Scalar normalize_unit(Scalar s) {
    if (s.is_zero()) return s;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : s.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c) < 0 ? Int(-numerator(c)) : numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    Rat content(num_gcd, den_lcm);
    s *= Rat(1) / content;
    if (s.leading().second < 0) s *= Rat(-1);
    return s.shifted(Exp{} - s.min_exp());
}

inline Scalar uni_content(const Uni& u) {
    Scalar c(0);
    for (const auto& [d, co] : u) {
        c = gcd_rec(c, co);
        if (c.is_one()) break;
    }
    return c;
}

// Euclidean algorithm for the single-variable case, with monic remainders.
inline Scalar gcd_uni(const Scalar& a, const Scalar& b, Var w) {
    using P = std::map<int32_t, Rat>;
    auto pack = [&](const Scalar& s) {
        P p;
        for (const auto& [e, c] : s.terms()) p[get(e, w)] = c;
        return p;
    };
    P f = pack(a), g = pack(b);
    auto make_monic = [](P& p) {
        if (p.empty()) return;
        Rat lc = p.rbegin()->second;
        if (lc != 1)
            for (auto& [d, c] : p) c /= lc;
    };
    while (!g.empty()) {
        make_monic(g);
        int32_t dg = g.rbegin()->first;
        while (!f.empty() && f.rbegin()->first >= dg) {
            int32_t df = f.rbegin()->first;
            Rat lf = f.rbegin()->second;
            for (const auto& [d, c] : g) {
                Rat delta = -lf * c;
                auto [it, fresh] = f.emplace(d + df - dg, delta);
                if (!fresh) {
                    it->second += delta;
                    if (it->second == 0) f.erase(it);
                }
            }
        }
        std::swap(f, g);
    }
    Scalar r;
    for (const auto& [d, c] : f) {
        Exp e{};
        set(e, w, d);
        r.add_term(e, c);
    }
    return normalize_unit(r);
}

inline Scalar gcd_rec(const Scalar& a0, const Scalar& b0) {
    if (a0.is_zero()) return normalize_unit(b0);
    if (b0.is_zero()) return normalize_unit(a0);
    Scalar a = a0.shifted(Exp{} - a0.min_exp());
    Scalar b = b0.shifted(Exp{} - b0.min_exp());
    int32_t spans[3];
    int nvars = 0;
    Var w = Var::q;
    for (Var cand : {Var::q, Var::v, Var::x}) {
        int i = static_cast<int>(cand);
        spans[i] = std::max(a.span(cand), b.span(cand));
        if (spans[i] > 0) ++nvars;
    }
    if (nvars == 0) return Scalar(1);  // both nonzero constants: unit
    // main variable: smallest positive span keeps the remainder sequence short
    int32_t best = INT32_MAX;
    for (Var cand : {Var::q, Var::v, Var::x}) {
        int i = static_cast<int>(cand);
        if (spans[i] > 0 && spans[i] < best) {
            best = spans[i];
            w = cand;
        }
    }
    if (nvars == 1) return gcd_uni(a, b, w);

    Uni f = to_uni(a, w), g = to_uni(b, w);
    Scalar cf = uni_content(f), cg = uni_content(g);
    Scalar cont = gcd_rec(cf, cg);
    auto primitive = [&](Uni u) {
        Scalar c = uni_content(u);
        if (c.is_one()) return u;
        Uni r;
        for (const auto& [d, co] : u) r[d] = *exact_divide(co, c);
        return r;
    };
    f = primitive(f);
    g = primitive(g);
    if (deg(f) < deg(g)) std::swap(f, g);
    while (!g.empty()) {
        Uni r = pseudo_rem(f, g);
        f = std::move(g);
        g = primitive(r);
    }
    Scalar result = cont * from_uni(f, w);
    return normalize_unit(result);
}

}  // namespace detail

// gcd of two Laurent polynomials, canonicalized: rational content 1, minimal
// exponents 0, positive leading coefficient.  Defined up to units; this
// normalization makes it a function.
inline Scalar poly_gcd(const Scalar& a, const Scalar& b) {
    if (a.is_monomial() || b.is_monomial()) {
        if (a.is_zero() && b.is_zero()) return Scalar(0);
        return Scalar(1);  // a monomial is a unit
    }
    return detail::gcd_rec(a, b);
}

}  // namespace qyb
