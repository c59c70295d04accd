#pragma once

#include <cstdint>
#include <functional>
#include <set>

#include "fraction.hpp"

namespace qyb {

using Index = uint32_t;

// Diagonal site weight (the quantum-trace matrices D and Q).
struct SiteWeights {
    int N = 0;
    std::vector<ScalarFrac> diag;

    SiteWeights() = default;
    SiteWeights(int n, std::vector<ScalarFrac> d) : N(n), diag(std::move(d)) {}
    static SiteWeights ones(int N) { return SiteWeights(N, std::vector<ScalarFrac>(N, ScalarFrac(1))); }
    ScalarFrac trace() const {
        ScalarFrac t(0);
        for (const auto& w : diag) t += w;
        return t;
    }
    SiteWeights inverse() const {
        std::vector<ScalarFrac> d;
        for (const auto& w : diag) d.push_back(w.inverse());
        return SiteWeights(N, d);
    }
    friend bool operator==(const SiteWeights& a, const SiteWeights& b) { return a.N == b.N && a.diag == b.diag; }
};

// Sparse exact linear operator on V_N^{\otimes n}.  Multi-indices are encoded
// row-major: (i_1,...,i_n) -> sum (i_k - 1) N^{n-k}.  Zero entries are pruned
// after every operation.
class TensorOp {
  public:
    using Entries = std::map<std::pair<Index, Index>, ScalarFrac>;

    TensorOp() = default;
    TensorOp(int N, int n) : N_(N), n_(n) {}

    static TensorOp identity(int N, int n) {
        TensorOp t(N, n);
        for (Index i = 0; i < t.dim(); ++i) t.e_[{i, i}] = ScalarFrac(1);
        return t;
    }
    static TensorOp zero(int N, int n) { return TensorOp(N, n); }

    // P^{i1 i2}_{j1 j2} = delta^{i1}_{j2} delta^{i2}_{j1}
    static TensorOp permutation(int N) {
        TensorOp t(N, 2);
        for (Index a = 0; a < static_cast<Index>(N); ++a)
            for (Index b = 0; b < static_cast<Index>(N); ++b) t.e_[{a * N + b, b * N + a}] = ScalarFrac(1);
        return t;
    }

    int N() const { return N_; }
    int sites() const { return n_; }
    Index dim() const {
        Index d = 1;
        for (int k = 0; k < n_; ++k) d *= static_cast<Index>(N_);
        return d;
    }
    const Entries& entries() const { return e_; }
    size_t nnz() const { return e_.size(); }
    bool is_zero() const { return e_.empty(); }

    void set(Index r, Index c, ScalarFrac v) {
        if (v.is_zero()) e_.erase({r, c});
        else e_[{r, c}] = std::move(v);
    }
    void add(Index r, Index c, const ScalarFrac& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = e_.emplace(std::make_pair(r, c), v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }
    ScalarFrac at(Index r, Index c) const {
        auto it = e_.find({r, c});
        return it == e_.end() ? ScalarFrac(0) : it->second;
    }

    std::vector<Index> decode(Index idx) const {
        std::vector<Index> d(n_);
        for (int k = n_ - 1; k >= 0; --k) {
            d[k] = idx % N_;
            idx /= N_;
        }
        return d;  // 0-based digits
    }
    Index encode(const std::vector<Index>& d) const {
        Index idx = 0;
        for (int k = 0; k < n_; ++k) idx = idx * N_ + d[k];
        return idx;
    }

    friend bool operator==(const TensorOp& a, const TensorOp& b) {
        return a.N_ == b.N_ && a.n_ == b.n_ && a.e_ == b.e_;
    }

    friend TensorOp operator+(TensorOp a, const TensorOp& b) {
        a.check_shape(b);
        for (const auto& [rc, v] : b.e_) a.add(rc.first, rc.second, v);
        return a;
    }
    friend TensorOp operator-(TensorOp a, const TensorOp& b) {
        a.check_shape(b);
        for (const auto& [rc, v] : b.e_) a.add(rc.first, rc.second, -v);
        return a;
    }
    friend TensorOp operator*(const TensorOp& a, const TensorOp& b) {
        a.check_shape(b);
        TensorOp r(a.N_, a.n_);
        for (const auto& [rc, va] : a.e_) {
            auto it = b.e_.lower_bound({rc.second, 0});
            auto end = b.e_.lower_bound({rc.second + 1, 0});
            for (; it != end; ++it) r.add(rc.first, it->first.second, va * it->second);
        }
        return r;
    }
    TensorOp scaled(const ScalarFrac& c) const {
        TensorOp r(N_, n_);
        if (c.is_zero()) return r;
        for (const auto& [rc, v] : e_) r.e_[rc] = v * c;
        return r;
    }
    TensorOp operator-() const { return scaled(ScalarFrac(-1)); }

    TensorOp pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        TensorOp acc = identity(N_, n_);
        for (int i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    // Exact inverse via Gaussian elimination on the connected components of
    // the sparsity pattern; throws if singular.
    TensorOp inverse() const;

    // Swap the row and column indices of the chosen factor (two-site ops).
    TensorOp partial_transpose(int factor) const {
        if (n_ != 2) throw std::domain_error("partial_transpose: two-site operator required");
        if (factor != 1 && factor != 2) throw std::domain_error("partial_transpose: factor must be 1 or 2");
        TensorOp r(N_, 2);
        for (const auto& [rc, v] : e_) {
            Index i1 = rc.first / N_, i2 = rc.first % N_;
            Index j1 = rc.second / N_, j2 = rc.second % N_;
            if (factor == 1) std::swap(i1, j1);
            else std::swap(i2, j2);
            r.add(i1 * N_ + i2, j1 * N_ + j2, v);
        }
        return r;
    }

    // Contract each listed site k (1-based) as sum_i w_i a[..i..,..i..];
    // plain trace when w is absent.
    TensorOp weighted_partial_trace(const std::set<int>& sites, const SiteWeights* w = nullptr) const {
        for (int s : sites)
            if (s < 1 || s > n_) throw std::domain_error("weighted_partial_trace: site out of range");
        TensorOp r(N_, n_ - static_cast<int>(sites.size()));
        for (const auto& [rc, v] : e_) {
            auto rd = decode(rc.first), cd = decode(rc.second);
            bool keep = true;
            ScalarFrac weight = v;
            for (int s : sites) {
                if (rd[s - 1] != cd[s - 1]) { keep = false; break; }
                if (w) weight *= w->diag[rd[s - 1]];
            }
            if (!keep || weight.is_zero()) continue;
            std::vector<Index> rr, cc;
            for (int k = 0; k < n_; ++k)
                if (!sites.count(k + 1)) {
                    rr.push_back(rd[k]);
                    cc.push_back(cd[k]);
                }
            r.add(r.encode(rr), r.encode(cc), weight);
        }
        return r;
    }

    ScalarFrac trace() const {
        ScalarFrac t(0);
        for (const auto& [rc, v] : e_)
            if (rc.first == rc.second) t += v;
        return t;
    }

    bool is_diagonal() const {
        for (const auto& [rc, v] : e_)
            if (rc.first != rc.second) return false;
        return true;
    }

    // True iff the operator equals c * identity; reports c.
    bool is_scalar_identity(ScalarFrac& c) const {
        if (e_.size() != dim()) return false;
        c = e_.begin()->second;
        for (const auto& [rc, v] : e_)
            if (rc.first != rc.second || !(v == c)) return false;
        return true;
    }

    // Multiply a vector from the left: (this * vec).
    std::vector<ScalarFrac> apply(const std::vector<ScalarFrac>& vec) const {
        std::vector<ScalarFrac> out(dim(), ScalarFrac(0));
        for (const auto& [rc, v] : e_) out[rc.first] += v * vec[rc.second];
        return out;
    }

  private:
    void check_shape(const TensorOp& o) const {
        if (N_ != o.N_ || n_ != o.n_) throw std::domain_error("TensorOp: shape mismatch");
    }

    int N_ = 0, n_ = 0;
    Entries e_;
};

// Identity on all factors except (a, a+1), where the two-site operator acts.
inline TensorOp embed(const TensorOp& two_site, int a, int n) {
    if (two_site.sites() != 2) throw std::domain_error("embed: two-site operator required");
    if (a < 1 || a > n - 1) throw std::domain_error("embed: site out of range");
    int N = two_site.N();
    TensorOp r(N, n);
    Index left = 1, right = 1;
    for (int k = 0; k < a - 1; ++k) left *= N;
    for (int k = a + 1; k < n; ++k) right *= N;
    Index NN = static_cast<Index>(N) * N;
    for (const auto& [rc, v] : two_site.entries()) {
        for (Index l = 0; l < left; ++l)
            for (Index rr = 0; rr < right; ++rr) {
                Index row = (l * NN + rc.first) * right + rr;
                Index col = (l * NN + rc.second) * right + rr;
                r.set(row, col, v);
            }
    }
    return r;
}

// Embed a k-site operator on consecutive sites a..a+k-1 of an n-site space.
inline TensorOp embed_block(const TensorOp& block, int a, int n) {
    int k = block.sites();
    if (a < 1 || a + k - 1 > n) throw std::domain_error("embed_block: sites out of range");
    int N = block.N();
    TensorOp r(N, n);
    Index left = 1, right = 1;
    for (int s = 0; s < a - 1; ++s) left *= N;
    for (int s = a + k - 1; s < n; ++s) right *= N;
    Index bd = block.dim();
    for (const auto& [rc, v] : block.entries()) {
        for (Index l = 0; l < left; ++l)
            for (Index rr = 0; rr < right; ++rr) {
                Index row = (l * bd + rc.first) * right + rr;
                Index col = (l * bd + rc.second) * right + rr;
                r.set(row, col, v);
            }
    }
    return r;
}

// Embed a two-site operator at an arbitrary ordered pair of distinct sites
// (first factor at a, second at b), identity elsewhere.
inline TensorOp embed_pair(const TensorOp& two_site, int a, int b, int n) {
    if (two_site.sites() != 2) throw std::domain_error("embed_pair: two-site operator required");
    if (a == b || a < 1 || b < 1 || a > n || b > n) throw std::domain_error("embed_pair: bad sites");
    int N = two_site.N();
    TensorOp r(N, n);
    Index rest = 1;
    for (int k = 0; k < n - 2; ++k) rest *= N;
    std::vector<Index> rd(n), cd(n);
    for (const auto& [rc, v] : two_site.entries()) {
        Index i1 = rc.first / N, i2 = rc.first % N;
        Index j1 = rc.second / N, j2 = rc.second % N;
        for (Index m = 0; m < rest; ++m) {
            Index mm = m;
            for (int k = n - 1; k >= 0; --k) {
                if (k + 1 == a || k + 1 == b) continue;
                rd[k] = cd[k] = mm % N;
                mm /= N;
            }
            rd[a - 1] = i1;
            rd[b - 1] = i2;
            cd[a - 1] = j1;
            cd[b - 1] = j2;
            r.add(r.encode(rd), r.encode(cd), v);
        }
    }
    return r;
}

namespace detail {

// Connected components of the bipartite sparsity graph (rows vs columns);
// elimination never mixes components, which keeps the exact linear algebra
// on our weight-block-structured operators fast.
struct Components {
    std::vector<std::vector<Index>> rows, cols;
};

inline Components split_components(const TensorOp& t) {
    Index d = t.dim();
    std::vector<Index> parent(2 * d);
    for (Index i = 0; i < 2 * d; ++i) parent[i] = i;
    std::function<Index(Index)> find = [&](Index i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (const auto& [rc, v] : t.entries()) parent[find(rc.first)] = find(d + rc.second);
    std::map<Index, size_t> comp_of;
    Components comps;
    auto comp_index = [&](Index root) {
        auto it = comp_of.find(root);
        if (it != comp_of.end()) return it->second;
        size_t id = comps.rows.size();
        comp_of[root] = id;
        comps.rows.emplace_back();
        comps.cols.emplace_back();
        return id;
    };
    std::set<Index> touched_r, touched_c;
    for (const auto& [rc, v] : t.entries()) {
        touched_r.insert(rc.first);
        touched_c.insert(rc.second);
    }
    for (Index r : touched_r) comps.rows[comp_index(find(r))].push_back(r);
    for (Index c : touched_c) comps.cols[comp_index(find(d + c))].push_back(c);
    return comps;
}

}  // namespace detail

inline TensorOp TensorOp::inverse() const {
    Index d = dim();
    auto comps = detail::split_components(*this);
    TensorOp inv(N_, n_);
    size_t covered = 0;
    for (size_t ci = 0; ci < comps.rows.size(); ++ci) {
        const auto& rows = comps.rows[ci];
        const auto& cols = comps.cols[ci];
        if (rows.size() != cols.size()) throw std::domain_error("inverse: singular matrix");
        size_t m = rows.size();
        covered += m;
        // dense elimination on the component, augmented with identity
        std::vector<std::vector<ScalarFrac>> A(m, std::vector<ScalarFrac>(2 * m, ScalarFrac(0)));
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j) A[i][j] = at(rows[i], cols[j]);
            A[i][m + i] = ScalarFrac(1);
        }
        for (size_t col = 0; col < m; ++col) {
            size_t piv = col;
            while (piv < m && A[piv][col].is_zero()) ++piv;
            if (piv == m) throw std::domain_error("inverse: singular matrix");
            std::swap(A[col], A[piv]);
            ScalarFrac inv_p = A[col][col].inverse();
            for (size_t j = col; j < 2 * m; ++j)
                if (!A[col][j].is_zero()) A[col][j] *= inv_p;
            for (size_t i = 0; i < m; ++i) {
                if (i == col || A[i][col].is_zero()) continue;
                ScalarFrac f = A[i][col];
                for (size_t j = col; j < 2 * m; ++j)
                    if (!A[col][j].is_zero()) A[i][j] -= f * A[col][j];
            }
        }
        // inverse block maps row-space back to column-space
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) inv.add(cols[i], rows[j], A[i][m + j]);
    }
    if (covered != d) throw std::domain_error("inverse: singular matrix");  // untouched rows/cols
    return inv;
}

// Fraction-free (Bareiss) rank computation over the polynomial ring, run per
// sparsity component; the kernel basis comes from a ScalarFrac RREF pass.
struct RankKernel {
    int rank = 0;
    std::vector<std::vector<ScalarFrac>> kernel;  // basis vectors of length dim()
};

inline int bareiss_rank(std::vector<std::vector<Scalar>> M) {
    size_t rows = M.size();
    if (rows == 0) return 0;
    size_t cols = M[0].size();
    Scalar prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && M[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(M[r], M[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Scalar t = M[r][c] * M[i][j] - M[i][c] * M[r][j];
                auto d = exact_divide(t, prev);
                if (!d) throw std::logic_error("bareiss: exact division failed");
                M[i][j] = *d;
            }
            M[i][c] = Scalar(0);
        }
        prev = M[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

inline RankKernel rank_and_kernel(const TensorOp& t) {
    RankKernel out;
    auto comps = detail::split_components(t);
    Index d = t.dim();
    std::set<Index> used_cols;
    for (size_t ci = 0; ci < comps.rows.size(); ++ci) {
        const auto& rows = comps.rows[ci];
        const auto& cols = comps.cols[ci];
        for (Index c : cols) used_cols.insert(c);
        size_t m = rows.size(), k = cols.size();
        // fraction-free rank on a row-denominator-cleared copy
        std::vector<std::vector<Scalar>> B(m, std::vector<Scalar>(k));
        for (size_t i = 0; i < m; ++i) {
            Scalar mult(1);
            for (size_t j = 0; j < k; ++j) {
                const ScalarFrac f = t.at(rows[i], cols[j]);
                if (!f.is_polynomial()) {
                    auto g = poly_gcd(mult, f.den());
                    mult = *exact_divide(mult, g) * f.den();
                }
            }
            for (size_t j = 0; j < k; ++j) B[i][j] = (t.at(rows[i], cols[j]) * ScalarFrac(mult)).as_scalar();
        }
        out.rank += bareiss_rank(B);
        // kernel via RREF over the fraction field
        std::vector<std::vector<ScalarFrac>> A(m, std::vector<ScalarFrac>(k));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < k; ++j) A[i][j] = t.at(rows[i], cols[j]);
        std::vector<int> pivot_of_col(k, -1);
        size_t r = 0;
        for (size_t c = 0; c < k && r < m; ++c) {
            size_t piv = r;
            while (piv < m && A[piv][c].is_zero()) ++piv;
            if (piv == m) continue;
            std::swap(A[r], A[piv]);
            ScalarFrac ip = A[r][c].inverse();
            for (size_t j = c; j < k; ++j)
                if (!A[r][j].is_zero()) A[r][j] *= ip;
            for (size_t i = 0; i < m; ++i) {
                if (i == r || A[i][c].is_zero()) continue;
                ScalarFrac f = A[i][c];
                for (size_t j = c; j < k; ++j)
                    if (!A[r][j].is_zero()) A[i][j] -= f * A[r][j];
            }
            pivot_of_col[c] = static_cast<int>(r);
            ++r;
        }
        for (size_t c = 0; c < k; ++c) {
            if (pivot_of_col[c] >= 0) continue;
            std::vector<ScalarFrac> vec(d, ScalarFrac(0));
            vec[cols[c]] = ScalarFrac(1);
            for (size_t cc = 0; cc < k; ++cc)
                if (pivot_of_col[cc] >= 0) vec[cols[cc]] = -A[pivot_of_col[cc]][c];
            out.kernel.push_back(std::move(vec));
        }
    }
    // columns with no entries at all are free kernel directions
    for (Index c = 0; c < d; ++c) {
        if (used_cols.count(c)) continue;
        std::vector<ScalarFrac> vec(d, ScalarFrac(0));
        vec[c] = ScalarFrac(1);
        out.kernel.push_back(std::move(vec));
    }
    return out;
}

// Scale away all entry denominators: returns (P, d) with P = d * t and every
// entry of P a polynomial.  Zero tests and products of several such operators
// then run in pure polynomial arithmetic.
inline std::pair<TensorOp, Scalar> cleared_denominators(const TensorOp& t) {
    Scalar lcm(1);
    for (const auto& [rc, v] : t.entries()) {
        if (v.is_polynomial()) continue;
        Scalar g = poly_gcd(lcm, v.den());
        lcm = *exact_divide(lcm, g) * v.den();
    }
    return {t.scaled(ScalarFrac(lcm)), lcm};
}

// Diagonal operator diag(w) acting at one site, identity elsewhere.
inline TensorOp site_diag(const SiteWeights& w, int site, int n) {
    TensorOp r(w.N, n);
    TensorOp probe(w.N, n);
    for (Index idx = 0; idx < probe.dim(); ++idx) {
        ScalarFrac val = w.diag[probe.decode(idx)[site - 1]];
        if (!val.is_zero()) r.set(idx, idx, val);
    }
    return r;
}

}  // namespace qyb
