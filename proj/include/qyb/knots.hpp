#pragma once

#include <random>

#include "qcombin.hpp"

namespace qyb {

// A braid word: letter i means sigma_i, -i means sigma_i^{-1}.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int exponent_sum() const {
        int e = 0;
        for (int l : letters) e += (l > 0) ? 1 : -1;
        return e;
    }
    void validate() const {
        for (int l : letters) {
            int a = l > 0 ? l : -l;
            if (a < 1 || a >= strands) throw std::domain_error("braid word: letter out of range");
        }
    }
    BraidWord inverse() const {
        BraidWord w{strands, {}};
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
        return w;
    }
    // mirror with strand positions flipped: letter i -> -(strands - i)
    BraidWord flip_mirror() const {
        BraidWord w{strands, {}};
        for (int l : letters) {
            int a = l > 0 ? l : -l;
            w.letters.push_back((l > 0 ? -1 : 1) * (strands - a));
        }
        return w;
    }
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < letters.size(); ++i) s += (i ? " " : "") + std::to_string(letters[i]);
        return s;
    }
};

inline TensorOp braid_operator(const BraidWord& b, const TowerRep& t) {
    if (b.strands != t.n) throw std::domain_error("braid_operator: strand count mismatch");
    b.validate();
    TensorOp op = TensorOp::identity(t.N(), t.n);
    for (int l : b.letters) op = op * (l > 0 ? t.s(l) : t.si(-l));
    return op;
}

// Q(X) = Tr_{1..n}(D_1...D_n X); the Q-weighted closure is asserted equal.
inline ScalarFrac closure_invariant(const BraidWord& b, const TowerRep& t) {
    TensorOp op = braid_operator(b, t);
    ScalarFrac d_closure = ocneanu_trace(t, op);
    ScalarFrac q_closure = q_closure_trace(t, op);
    if (!(d_closure == q_closure))
        throw std::domain_error("closure_invariant: D- and Q-closures disagree");
    return d_closure;
}

// alpha_n = (q^n - (-q)^{-n}) / (q + q^{-1}), a Laurent polynomial.
inline ScalarFrac hecke_alpha(int n) {
    Rat sign = (n % 2 == 0) ? -1 : 1;  // -(-1)^n
    Scalar num = Scalar::q_pow(n) + Scalar::monomial(sign, Exp{-2 * n, 0, 0});
    return ScalarFrac(num, q_number(2));
}

// beta_n of (Rn2) for the BMW cubic.
inline ScalarFrac bmw_beta(const RData& r, int n) {
    ScalarFrac nu{r.nu}, q{Scalar::q_pow(1)}, qi{Scalar::q_pow(-1)};
    ScalarFrac nun = nu.pow(n);
    Rat sgn = (n % 2 == 0) ? 1 : -1;  // (-q)^{-n} = (-1)^n q^{-n}
    ScalarFrac mqin{Scalar::monomial(sgn, Exp{-2 * n, 0, 0})};
    ScalarFrac qn{Scalar::q_pow(n)};
    ScalarFrac t1 = (nun - mqin) / (nu + qi);
    ScalarFrac t2 = (nun - qn) / (nu - q);
    return ScalarFrac(lambda_q()) * nu / ScalarFrac(q_number(2)) * (t1 - t2);
}

// Closed form of the sigma_1^n torus closure: (trRn) for Hecke kinds,
// (trRn1) for BMW kinds.
inline ScalarFrac torus_closed_form(int n, const RData& r) {
    ScalarFrac trD = r.trD;
    if (!r.is_bmw()) return (hecke_alpha(n) + hecke_alpha(n - 1) * trD) * trD;
    return (hecke_alpha(n) + trD * hecke_alpha(n - 1) + ScalarFrac(r.nu) * bmw_beta(r, n)) * trD;
}

// Unknot-normalized, Markov-invariant invariant.  With the trace rules
// Tr(sigma) = 1 and Tr(sigma^{-1}) = q^{-2d} (Hecke) or nu^2 (BMW), both
// Markov moves force P(beta) = q^{-d(e-n+1)} Tr(beta)/Z0, resp.
// nu^{e-n+1} Tr(beta)/Tr(D).
inline ScalarFrac normalized_invariant(const BraidWord& b, const TowerRep& t) {
    ScalarFrac raw = closure_invariant(b, t);
    int e = b.exponent_sum(), n = b.strands;
    if (!t.is_bmw()) {
        if (!t.base.has_d_param) throw std::domain_error("normalized_invariant: no d parameter");
        int d = t.base.d_param;
        return ScalarFrac(Scalar::q_pow(-d * (e - n + 1))) * raw / t.base.trD;
    }
    ScalarFrac nu{t.nu_rep()};
    return nu.pow(e - n + 1) * raw / t.base.trD;
}

// Markov property suite on seeded random words.
inline CheckReport markov_property_test(const RData& base, int trials, int max_strands, int max_len,
                                        uint64_t seed = 20260810) {
    CheckReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> strands_d(2, max_strands), len_d(0, max_len), sign_d(0, 1);
    std::map<int, TowerRep> towers;
    auto tower = [&](int n) -> TowerRep& {
        auto it = towers.find(n);
        if (it == towers.end()) it = towers.emplace(n, make_tower(base, n)).first;
        return it->second;
    };
    ScalarFrac neg_ratio = base.is_bmw() ? ScalarFrac(base.nu * base.nu)
                                         : ScalarFrac(Scalar::q_pow(-2 * base.d_param));
    for (int trial = 0; trial < trials; ++trial) {
        int n = strands_d(rng);
        BraidWord beta{n, {}};
        int len = len_d(rng);
        std::uniform_int_distribution<int> gen_d(1, n - 1);
        for (int i = 0; i < len; ++i) beta.letters.push_back((sign_d(rng) ? 1 : -1) * gen_d(rng));
        TowerRep& t = tower(n);
        ScalarFrac tr = closure_invariant(beta, t);
        // conjugation invariance
        BraidWord gamma{n, {}};
        for (int i = 0; i < 3; ++i) gamma.letters.push_back((sign_d(rng) ? 1 : -1) * gen_d(rng));
        BraidWord conj{n, {}};
        conj.letters = gamma.letters;
        conj.letters.insert(conj.letters.end(), beta.letters.begin(), beta.letters.end());
        BraidWord gi = gamma.inverse();
        conj.letters.insert(conj.letters.end(), gi.letters.begin(), gi.letters.end());
        bool conj_ok = closure_invariant(conj, t) == tr;
        // stabilizations
        TowerRep& t1 = tower(n + 1);
        BraidWord up{n + 1, beta.letters};
        up.letters.push_back(n);
        BraidWord down{n + 1, beta.letters};
        down.letters.push_back(-n);
        bool stab_ok = closure_invariant(up, t1) == tr && closure_invariant(down, t1) == neg_ratio * tr;
        bool norm_ok = normalized_invariant(up, t1) == normalized_invariant(beta, t) &&
                       normalized_invariant(down, t1) == normalized_invariant(beta, t) &&
                       normalized_invariant(conj, t) == normalized_invariant(beta, t);
        rep.add("word " + std::to_string(trial) + " [" + beta.str() + "]", conj_ok && stab_ok && norm_ok);
    }
    return rep;
}

// E B E = C E for each level-n idempotent; reconstruction
// sum_shapes qdim(shape) sum_paths C equals the raw closure invariant.
struct DecompositionEntry {
    Partition shape;
    ContentString contents;
    ScalarFrac coefficient;
};

inline std::vector<DecompositionEntry> idempotent_decomposition(const BraidWord& b, const TowerRep& t) {
    if (t.is_bmw()) throw std::domain_error("idempotent_decomposition: Hecke family required");
    TensorOp B = braid_operator(b, t);
    BranchGraph g = branch_graph(false, t.n);
    std::vector<DecompositionEntry> out;
    for (const auto& p : enumerate_paths(g, t.n)) {
        TensorOp e = idempotent_from_path(t, g, p);
        if (e.is_zero()) continue;  // height-cut paths carry qdim 0
        TensorOp ebe = e * B * e;
        ScalarFrac c(0);
        if (!ebe.is_zero()) {
            const auto& [rc, v] = *e.entries().begin();
            c = ebe.at(rc.first, rc.second) / v;
        }
        if (!(ebe == e.scaled(c))) throw std::domain_error("idempotent_decomposition: E B E not proportional to E");
        out.push_back({p.shape, p.contents, c});
    }
    return out;
}

inline ScalarFrac decomposition_reconstruction(const std::vector<DecompositionEntry>& dec, int d) {
    ScalarFrac acc(0);
    for (const auto& entry : dec) acc += qdim_hecke(entry.shape, d) * entry.coefficient;
    return acc;
}

// ---------------------------------------------------------------------------
// Independent skein-recursion oracle: the abstract Hecke algebras H_2, H_3
// in their word bases, with the Ocneanu trace computed by the Markov rules
// alone.  No tensor operators are involved.

class HeckeWordAlgebra {
  public:
    // basis of H_3: e, s1, s2, s1 s2, s2 s1, s1 s2 s1
    using Element = std::array<ScalarFrac, 6>;

    static Element unit() {
        Element e{ScalarFrac(1), ScalarFrac(0), ScalarFrac(0), ScalarFrac(0), ScalarFrac(0), ScalarFrac(0)};
        return e;
    }

    // left multiplication by sigma_g^{+-1}
    static Element mul_gen(const Element& v, int g, bool inv) {
        Element out = mul_gen_pos(v, g);
        if (inv) {  // sigma^{-1} = sigma - lambda
            ScalarFrac lam{lambda_q()};
            for (int i = 0; i < 6; ++i) out[i] -= lam * v[i];
        }
        return out;
    }

    // Ocneanu trace on n strands for basis words, from the Markov rules
    // Tr_{(k+1)}(X sigma_k X') = X X', Tr(1 on k strands) = Z0^k.
    static ScalarFrac trace(const Element& v, int strands, const ScalarFrac& z0) {
        ScalarFrac z = z0;
        std::array<ScalarFrac, 6> tr;
        ScalarFrac zn(1);
        for (int i = 0; i < strands; ++i) zn = zn * z0;
        // traces of basis words on `strands` strands
        tr[0] = zn;                       // e
        tr[1] = zn / z0;                  // s1
        tr[2] = zn / z0;                  // s2
        tr[3] = zn / (z0 * z0);           // s1 s2
        tr[4] = zn / (z0 * z0);           // s2 s1
        tr[5] = (ScalarFrac(lambda_q()) * z0 + z0 * z0) * zn / (z0 * z0 * z0);  // s1 s2 s1
        ScalarFrac acc(0);
        for (int i = 0; i < 6; ++i) acc += v[i] * tr[i];
        return acc;
    }

    // abstract normalized invariant in GLq(d) normalization
    static ScalarFrac normalized(const BraidWord& b, int d) {
        if (b.strands > 3) throw std::domain_error("HeckeWordAlgebra: at most 3 strands");
        Element acc = unit();
        for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
            int l = *it;
            acc = mul_gen(acc, l > 0 ? l : -l, l < 0);
        }
        ScalarFrac z0{Scalar::q_pow(-d) * q_number(d)};
        ScalarFrac raw = trace(acc, b.strands, z0);
        int e = b.exponent_sum(), n = b.strands;
        return ScalarFrac(Scalar::q_pow(-d * (e - n + 1))) * raw / z0;
    }

  private:
    static Element mul_gen_pos(const Element& v, int g) {
        ScalarFrac lam{lambda_q()};
        Element out{};
        for (auto& c : out) c = ScalarFrac(0);
        auto add = [&](int idx, const ScalarFrac& c) { out[idx] += c; };
        for (int i = 0; i < 6; ++i) {
            if (v[i].is_zero()) continue;
            const ScalarFrac& c = v[i];
            if (g == 1) switch (i) {
                    case 0: add(1, c); break;
                    case 1: add(1, lam * c); add(0, c); break;
                    case 2: add(3, c); break;
                    case 3: add(3, lam * c); add(2, c); break;
                    case 4: add(5, c); break;
                    case 5: add(5, lam * c); add(4, c); break;
                }
            else if (g == 2)
                switch (i) {
                    case 0: add(2, c); break;
                    case 1: add(4, c); break;
                    case 2: add(2, lam * c); add(0, c); break;
                    case 3: add(5, c); break;
                    case 4: add(4, lam * c); add(1, c); break;
                    case 5: add(5, lam * c); add(3, c); break;
                }
            else
                throw std::domain_error("HeckeWordAlgebra: generator out of range");
        }
        return out;
    }
};

}  // namespace qyb
