#pragma once

#include <sstream>

#include "rmatrix.hpp"

namespace qyb {

// Hecke H_n / BMW_n realized on V^{\otimes n} through an R-matrix.
struct TowerRep {
    RData base;
    int n = 0;
    std::vector<TensorOp> sigma, sigma_inv, kappa;  // [i-1] holds generator i
    std::vector<TensorOp> y;                        // Jucys-Murphy y_1..y_n

    const TensorOp& s(int i) const { return sigma.at(i - 1); }
    const TensorOp& si(int i) const { return sigma_inv.at(i - 1); }
    const TensorOp& k(int i) const { return kappa.at(i - 1); }
    const TensorOp& jm(int i) const { return y.at(i - 1); }
    bool is_bmw() const { return base.is_bmw(); }
    int N() const { return base.N(); }
    // nu in the representation, as a q-monomial
    Scalar nu_rep() const { return base.nu; }
};

inline TowerRep make_tower(const RData& base, int n) {
    TowerRep t;
    t.base = base;
    t.n = n;
    for (int i = 1; i < n; ++i) {
        t.sigma.push_back(embed(base.rhat, i, n));
        t.sigma_inv.push_back(embed(base.rhat_inv, i, n));
        if (base.is_bmw()) t.kappa.push_back(embed(base.khat, i, n));
    }
    t.y.push_back(TensorOp::identity(base.N(), n));
    for (int i = 2; i <= n; ++i) t.y.push_back(t.s(i - 1) * t.y[i - 2] * t.s(i - 1));
    return t;
}

inline std::vector<TensorOp> jm_elements(const TowerRep& t) { return t.y; }

// Baxterized generator sigma_i(x0) at the q-monomial point x0 = c q^{h/2}.
inline TensorOp baxterized_sigma(const TowerRep& t, int i, const Rat& c, int halves) {
    Scalar xv = Scalar::monomial(c, Exp{halves, 0, 0});
    ScalarFrac x{xv}, xi{xv.monomial_inverse()}, il = ScalarFrac(lambda_q()).inverse();
    return (t.s(i).scaled(xi) - t.si(i).scaled(x)).scaled(il);
}

// BMW Baxterized generator sigma^{(+-)}_i(x0).
inline TensorOp baxterized_sigma_bmw(const TowerRep& t, int i, bool plus, const Rat& c, int halves) {
    TensorOp hecke_part = baxterized_sigma(t, i, c, halves);
    Scalar xv = Scalar::monomial(c, Exp{halves, 0, 0});
    Scalar nu = t.nu_rep();
    Scalar qpm = Scalar::q_pow(plus ? 1 : -1);
    Rat sg = plus ? 1 : -1;
    ScalarFrac coef(nu + qpm * sg, nu * xv + qpm * xv.monomial_inverse() * sg);
    return hecke_part + t.k(i).scaled(coef);
}

enum class SymKind { Sym, Antisym };

// Inductive (anti)symmetrizers S_{1->k}, A_{1->k}, k = 1..up_to, embedded in
// the full n-site space.
inline std::vector<TensorOp> symmetrizers(const TowerRep& t, SymKind kind, int up_to) {
    std::vector<TensorOp> out;
    out.push_back(TensorOp::identity(t.N(), t.n));
    for (int k = 2; k <= up_to; ++k) {
        int h = (kind == SymKind::Sym) ? -2 * (k - 1) : 2 * (k - 1);
        TensorOp mid = t.is_bmw() ? baxterized_sigma_bmw(t, k - 1, kind == SymKind::Antisym, 1, h)
                                  : baxterized_sigma(t, k - 1, 1, h);
        ScalarFrac inv_qn = ScalarFrac(q_number(k)).inverse();
        out.push_back(out.back() * mid.scaled(inv_qn) * out.back());
    }
    return out;
}

// Closed forms of the (anti)symmetrizers in terms of Jucys-Murphy elements
// (Hecke: sant01/sant02; BMW: bmws2/bmwa2).
inline TensorOp symmetrizer_jm_form(const TowerRep& t, SymKind kind, int k) {
    TensorOp e = TensorOp::identity(t.N(), t.n);
    Scalar nu2;
    if (t.is_bmw()) nu2 = t.nu_rep() * t.nu_rep();
    for (int i = 2; i <= k; ++i) {
        bool sym = kind == SymKind::Sym;
        Scalar root1 = Scalar::q_pow(sym ? -2 : 2);
        Scalar eig1 = Scalar::q_pow(sym ? 2 * (i - 1) : -2 * (i - 1));
        e = (e * (t.jm(i) - TensorOp::identity(t.N(), t.n).scaled(ScalarFrac(root1))))
                .scaled(ScalarFrac(eig1 - root1).inverse());
        if (t.is_bmw()) {
            Scalar root2 = nu2 * Scalar::q_pow(sym ? -2 * (i - 2) : 2 * (i - 2));
            Scalar den = eig1 - root2;
            if (den.is_zero()) throw std::domain_error("symmetrizer_jm_form: vanishing denominator");
            e = (e * (t.jm(i) - TensorOp::identity(t.N(), t.n).scaled(ScalarFrac(root2))))
                    .scaled(ScalarFrac(den).inverse());
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Branching graphs (Young-Ogievetsky, and its oscillating BMW variant)

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline int partition_weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

inline std::string partition_str(const Partition& p) {
    if (p.empty()) return "[]";
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

// Edge color: q^{2z} for an added node, nu^2 q^{2z} for a removed one.
struct EdgeColor {
    bool nu2 = false;
    int z = 0;
    friend bool operator==(const EdgeColor&, const EdgeColor&) = default;
    friend auto operator<=>(const EdgeColor& a, const EdgeColor& b) {
        if (a.nu2 != b.nu2) return a.nu2 <=> b.nu2;  // plain < nu2
        return a.z <=> b.z;
    }
    std::string str() const {
        std::string s = nu2 ? "v" : "";
        return s + std::to_string(z);
    }
};

using ContentString = std::vector<EdgeColor>;

inline std::string content_str(const ContentString& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
    return s;
}

// addable corners: (row r, new part p[r]+1), content = (p[r]+1) - (r+1), 0-based rows
inline std::vector<std::pair<Partition, int>> addable(const Partition& p) {
    std::vector<std::pair<Partition, int>> out;
    for (size_t r = 0; r <= p.size(); ++r) {
        int cur = r < p.size() ? p[r] : 0;
        int above = r == 0 ? INT32_MAX : p[r - 1];
        if (cur + 1 > above) continue;
        Partition np = p;
        if (r < p.size()) np[r] += 1;
        else np.push_back(1);
        out.push_back({np, (cur + 1) - (static_cast<int>(r) + 1)});
    }
    return out;
}

// removable corners: content of removed node
inline std::vector<std::pair<Partition, int>> removable(const Partition& p) {
    std::vector<std::pair<Partition, int>> out;
    for (size_t r = 0; r < p.size(); ++r) {
        int below = r + 1 < p.size() ? p[r + 1] : 0;
        if (p[r] == below) continue;
        Partition np = p;
        np[r] -= 1;
        if (np[r] == 0) np.pop_back();
        out.push_back({np, p[r] - (static_cast<int>(r) + 1)});
    }
    return out;
}

struct BranchGraph {
    bool bmw = false;
    std::vector<std::vector<Partition>> levels;  // levels[0] = { [] }
    struct Edge {
        int from = 0, to = 0;
        EdgeColor color;
    };
    std::vector<std::vector<Edge>> edges;  // edges[k]: level k -> level k+1

    int vertex_index(int level, const Partition& p) const {
        const auto& vs = levels[level];
        for (size_t i = 0; i < vs.size(); ++i)
            if (vs[i] == p) return static_cast<int>(i);
        return -1;
    }
};

inline BranchGraph branch_graph(bool bmw, int nlevels) {
    BranchGraph g;
    g.bmw = bmw;
    g.levels.push_back({Partition{}});
    for (int level = 0; level < nlevels; ++level) {
        std::vector<Partition> next;
        std::vector<BranchGraph::Edge> es;
        auto vertex = [&](const Partition& p) {
            for (size_t i = 0; i < next.size(); ++i)
                if (next[i] == p) return static_cast<int>(i);
            next.push_back(p);
            return static_cast<int>(next.size()) - 1;
        };
        for (size_t vi = 0; vi < g.levels[level].size(); ++vi) {
            const Partition& p = g.levels[level][vi];
            for (const auto& [np, c] : addable(p))
                es.push_back({static_cast<int>(vi), vertex(np), EdgeColor{false, c}});
            if (bmw)
                for (const auto& [np, c] : removable(p))
                    es.push_back({static_cast<int>(vi), vertex(np), EdgeColor{true, -c}});
        }
        g.levels.push_back(std::move(next));
        g.edges.push_back(std::move(es));
    }
    return g;
}

// A path is the sequence of edge indices; its content string is the colors.
struct GraphPath {
    std::vector<int> edge_idx;           // index into g.edges[k]
    ContentString contents;              // colors a_1..a_n (a_1 == plain 0)
    Partition shape;                     // final vertex
};

inline std::vector<GraphPath> enumerate_paths(const BranchGraph& g, int level) {
    std::vector<GraphPath> out;
    struct Frame {
        int vertex;
        GraphPath path;
    };
    std::vector<Frame> stack{{0, {}}};
    std::function<void(int, int, GraphPath&)> walk = [&](int lvl, int vertex, GraphPath& path) {
        if (lvl == level) {
            GraphPath done = path;
            done.shape = g.levels[lvl][vertex];
            out.push_back(done);
            return;
        }
        for (size_t e = 0; e < g.edges[lvl].size(); ++e) {
            const auto& edge = g.edges[lvl][e];
            if (edge.from != vertex) continue;
            path.edge_idx.push_back(static_cast<int>(e));
            path.contents.push_back(edge.color);
            walk(lvl + 1, edge.to, path);
            path.edge_idx.pop_back();
            path.contents.pop_back();
        }
    };
    GraphPath p;
    walk(0, 0, p);
    std::sort(out.begin(), out.end(),
              [](const GraphPath& a, const GraphPath& b) { return a.contents < b.contents; });
    return out;
}

// Deterministic walk matching a content string; throws on inadmissible input.
inline GraphPath path_from_contents(const BranchGraph& g, const ContentString& contents) {
    GraphPath p;
    int vertex = 0;
    for (size_t k = 0; k < contents.size(); ++k) {
        bool found = false;
        for (size_t e = 0; e < g.edges[k].size(); ++e) {
            const auto& edge = g.edges[k][e];
            if (edge.from == vertex && edge.color == contents[k]) {
                p.edge_idx.push_back(static_cast<int>(e));
                p.contents.push_back(edge.color);
                vertex = edge.to;
                found = true;
                break;
            }
        }
        if (!found) throw std::domain_error("inadmissible path at step " + std::to_string(k + 1));
    }
    p.shape = g.levels[contents.size()][vertex];
    return p;
}

// Color value q^{2z} (or nu^2 q^{2z}) in the R-matrix representation.
inline Scalar color_value(const TowerRep& t, const EdgeColor& c) {
    Scalar val = Scalar::q_pow(2 * c.z);
    if (c.nu2) {
        if (!t.is_bmw()) throw std::domain_error("color_value: nu-colored edge in a Hecke tower");
        val *= t.nu_rep() * t.nu_rep();
    }
    return val;
}

// Primitive idempotent of a path via the branching recursion: at each level
// multiply by (y_k - b)/(a_k - b) over the other outgoing colors b.
inline TensorOp idempotent_from_path(const TowerRep& t, const BranchGraph& g, const GraphPath& path) {
    if (static_cast<int>(path.contents.size()) != t.n)
        throw std::domain_error("idempotent_from_path: path length must equal tower size");
    TensorOp e = TensorOp::identity(t.N(), t.n);
    int vertex = 0;
    for (size_t k = 0; k < path.contents.size(); ++k) {
        const auto& edge = g.edges[k][path.edge_idx[k]];
        Scalar chosen = color_value(t, edge.color);
        for (const auto& other : g.edges[k]) {
            if (other.from != vertex) continue;
            if (other.color == edge.color) continue;
            Scalar b = color_value(t, other.color);
            Scalar den = chosen - b;
            if (den.is_zero())
                throw std::domain_error("idempotent_from_path: colliding colors in this representation");
            e = (e * (t.jm(static_cast<int>(k) + 1) - TensorOp::identity(t.N(), t.n).scaled(ScalarFrac(b))))
                    .scaled(ScalarFrac(den).inverse());
        }
        vertex = edge.to;
    }
    return e;
}

// Intertwiner U_{j+1} = sigma_j y_j - y_j sigma_j.
inline TensorOp intertwiner(const TowerRep& t, int j) {
    return t.s(j) * t.jm(j) - t.jm(j) * t.s(j);
}

// Off-diagonal matrix unit P(X_{s_j a} | X_a) = U_{j+1} P(X_a); requires
// a_j != q^{+-2} a_{j+1} in the representation (else U annihilates).
inline TensorOp matrix_unit(const TowerRep& t, const BranchGraph& g, const GraphPath& path, int j) {
    Scalar aj = color_value(t, path.contents.at(j - 1));
    Scalar aj1 = color_value(t, path.contents.at(j));
    if (aj == Scalar::q_pow(2) * aj1 || aj == Scalar::q_pow(-2) * aj1)
        throw std::domain_error("matrix_unit: a_j = q^{+-2} a_{j+1}, intertwiner annihilates");
    return intertwiner(t, j) * idempotent_from_path(t, g, path);
}

// Resolution of unity: the level-n idempotents sum to the identity and are
// pairwise orthogonal in the representation (height-cut paths contribute 0).
// Products run on denominator-cleared copies to stay in the polynomial ring.
inline CheckReport completeness_check(const TowerRep& t, int level) {
    if (level != t.n) throw std::domain_error("completeness_check: level must equal tower size");
    BranchGraph g = branch_graph(t.is_bmw(), level);
    CheckReport rep;
    std::vector<TensorOp> cleared;
    std::vector<Scalar> denoms;
    TensorOp sum(t.N(), t.n);
    for (const auto& p : enumerate_paths(g, level)) {
        TensorOp e = idempotent_from_path(t, g, p);
        sum = sum + e;
        if (e.is_zero()) continue;
        auto [pc, den] = cleared_denominators(e);
        cleared.push_back(std::move(pc));
        denoms.push_back(std::move(den));
    }
    rep.add("sum of idempotents = 1", sum == TensorOp::identity(t.N(), t.n));
    bool ortho = true;
    for (size_t a = 0; a < cleared.size() && ortho; ++a) {
        ortho = cleared[a] * cleared[a] == cleared[a].scaled(ScalarFrac(denoms[a]));
        for (size_t b = a + 1; b < cleared.size() && ortho; ++b)
            ortho = (cleared[a] * cleared[b]).is_zero() && (cleared[b] * cleared[a]).is_zero();
    }
    rep.add("pairwise orthogonality and idempotency", ortho);
    return rep;
}

// Ocneanu / Markov trace: the full D-weighted trace on V^{\otimes n}.
inline ScalarFrac ocneanu_trace(const TowerRep& t, const TensorOp& a) {
    std::set<int> all;
    for (int s = 1; s <= a.sites(); ++s) all.insert(s);
    return a.weighted_partial_trace(all, &t.base.D).at(0, 0);
}

inline ScalarFrac q_closure_trace(const TowerRep& t, const TensorOp& a) {
    std::set<int> all;
    for (int s = 1; s <= a.sites(); ++s) all.insert(s);
    return a.weighted_partial_trace(all, &t.base.Q).at(0, 0);
}

// dot/json export of a branch graph (vertices are partitions, edges carry
// their color strings).
inline std::string graph_export_dot(const BranchGraph& g) {
    std::ostringstream os;
    os << "digraph branch {\n  rankdir=TB;\n";
    for (size_t l = 0; l < g.levels.size(); ++l)
        for (size_t v = 0; v < g.levels[l].size(); ++v)
            os << "  \"L" << l << "_" << partition_str(g.levels[l][v]) << "\";\n";
    for (size_t l = 0; l < g.edges.size(); ++l)
        for (const auto& e : g.edges[l]) {
            Scalar col = Scalar::q_pow(2 * e.color.z);
            if (e.color.nu2) col *= Scalar::v_pow(2);
            os << "  \"L" << l << "_" << partition_str(g.levels[l][e.from]) << "\" -> \"L" << l + 1 << "_"
               << partition_str(g.levels[l + 1][e.to]) << "\" [label=\"" << col.str() << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace qyb
