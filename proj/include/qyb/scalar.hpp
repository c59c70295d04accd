#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "rational.hpp"

namespace qyb {

// Exponent triple of a Laurent monomial in (q, v, x).  Exponents are stored
// in half-units so that the orthogonal-series R-matrices and the Wenzl
// formula, which involve q^{1/2}, live in the same ring; every exponent that
// reaches the canonical text format is an even number of halves and prints
// as an integer power.
struct Exp {
    int32_t q = 0, v = 0, x = 0;

    friend bool operator==(const Exp&, const Exp&) = default;
    friend auto operator<=>(const Exp& a, const Exp& b) {
        if (a.q != b.q) return a.q <=> b.q;
        if (a.v != b.v) return a.v <=> b.v;
        return a.x <=> b.x;
    }
    Exp operator+(const Exp& o) const { return {q + o.q, v + o.v, x + o.x}; }
    Exp operator-(const Exp& o) const { return {q - o.q, v - o.v, x - o.x}; }
    Exp operator*(int32_t k) const { return {q * k, v * k, x * k}; }
};

enum class Var : int { q = 0, v = 1, x = 2 };

inline int32_t get(const Exp& e, Var w) { return w == Var::q ? e.q : w == Var::v ? e.v : e.x; }
inline void set(Exp& e, Var w, int32_t k) { (w == Var::q ? e.q : w == Var::v ? e.v : e.x) = k; }

// Exact multivariate Laurent polynomial in (q, v, x) over the rationals.
// Terms with zero coefficient are never stored.
class Scalar {
  public:
    using Terms = std::map<Exp, Rat>;

    Scalar() = default;
    Scalar(int c) { if (c) terms_[Exp{}] = c; }
    explicit Scalar(const Rat& c) { if (c != 0) terms_[Exp{}] = c; }

    static Scalar monomial(const Rat& c, Exp e) {
        Scalar s;
        if (c != 0) s.terms_[e] = c;
        return s;
    }
    // Integer powers of the formal variables.
    static Scalar q_pow(int k) { return monomial(1, Exp{2 * k, 0, 0}); }
    static Scalar v_pow(int k) { return monomial(1, Exp{0, 2 * k, 0}); }
    static Scalar x_pow(int k) { return monomial(1, Exp{0, 0, 2 * k}); }
    // Half-integer powers (exponent counted in halves).
    static Scalar q_half(int halves) { return monomial(1, Exp{halves, 0, 0}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == Exp{} && terms_.begin()->second == 1; }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{}); }
    size_t term_count() const { return terms_.size(); }

    // Leading term under descending lex order on (e_q, e_v, e_x).
    std::pair<Exp, Rat> leading() const { return *terms_.rbegin(); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    Scalar operator-() const {
        Scalar r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator*=(const Rat& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, t] : terms_) t *= c;
        return *this;
    }
    friend Scalar operator*(Scalar a, const Rat& c) { return a *= c; }

    void add_term(const Exp& e, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Monomials are the units of the Laurent ring.
    Scalar monomial_inverse() const {
        if (terms_.size() != 1) throw std::domain_error("monomial_inverse: not a monomial");
        const auto& [e, c] = *terms_.begin();
        return monomial(Rat(1) / c, Exp{} - e);
    }

    Exp min_exp() const {
        Exp m{INT32_MAX, INT32_MAX, INT32_MAX};
        for (const auto& [e, c] : terms_) {
            m.q = std::min(m.q, e.q);
            m.v = std::min(m.v, e.v);
            m.x = std::min(m.x, e.x);
        }
        return terms_.empty() ? Exp{} : m;
    }
    Exp max_exp() const {
        Exp m{INT32_MIN, INT32_MIN, INT32_MIN};
        for (const auto& [e, c] : terms_) {
            m.q = std::max(m.q, e.q);
            m.v = std::max(m.v, e.v);
            m.x = std::max(m.x, e.x);
        }
        return terms_.empty() ? Exp{} : m;
    }

    // Degree span of a variable, in half-units.
    int32_t span(Var w) const { return terms_.empty() ? 0 : get(max_exp(), w) - get(min_exp(), w); }
    bool depends_on(Var w) const { return span(w) != 0 || (!terms_.empty() && get(min_exp(), w) != 0); }

    Scalar shifted(const Exp& d) const {
        Scalar r;
        for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
        return r;
    }

    // Substitute var := c * q^eq * v^ev * x^ex (exponents in halves); the
    // substituted variable must occur with even half-exponents.
    Scalar subst(Var w, const Rat& c, Exp m) const {
        Scalar r;
        for (const auto& [e, co] : terms_) {
            int32_t h = get(e, w);
            if (h % 2 != 0) throw std::domain_error("subst: half-integer power of substituted variable");
            int32_t k = h / 2;
            Exp ne = e;
            set(ne, w, 0);
            ne = ne + m * k;
            r.add_term(ne, co * rat_pow(c, k));
        }
        return r;
    }
    Scalar subst_v(const Rat& c, int q_halves) const { return subst(Var::v, c, Exp{q_halves, 0, 0}); }
    Scalar subst_x(const Rat& c) const { return subst(Var::x, c, Exp{}); }
    Scalar subst_q(const Rat& c) const { return subst(Var::q, c, Exp{}); }

    // var -> var^{-1} (negate its exponents)
    Scalar flipped(Var w) const {
        Scalar r;
        for (const auto& [e, c] : terms_) {
            Exp ne = e;
            set(ne, w, -get(e, w));
            r.terms_[ne] = c;
        }
        return r;
    }

    // Exact rational evaluation; throws on half-integer exponents at bases
    // other than 1 and on zero bases with negative exponents.
    Rat eval(const Rat& q0, const Rat& v0, const Rat& x0) const {
        Rat acc(0);
        for (const auto& [e, c] : terms_) acc += c * eval_base(q0, e.q) * eval_base(v0, e.v) * eval_base(x0, e.x);
        return acc;
    }
    Complex eval_c(Complex q0, Complex v0, Complex x0) const {
        Complex acc(0.0, 0.0);
        for (const auto& [e, c] : terms_)
            acc += rat_double(c) * std::pow(q0, e.q / 2.0) * std::pow(v0, e.v / 2.0) * std::pow(x0, e.x / 2.0);
        return acc;
    }

    std::string str() const;

  private:
    static Rat eval_base(const Rat& b, int32_t halves) {
        if (halves == 0 || b == 1) return Rat(1);
        if (halves % 2 != 0) throw std::domain_error("eval: half-integer exponent at rational point");
        return rat_pow(b, halves / 2);
    }

    Terms terms_;
};

inline Scalar operator*(const Rat& c, Scalar s) { return s *= c; }

// lambda = q - q^{-1}
inline Scalar lambda_q() { return Scalar::q_pow(1) - Scalar::q_pow(-1); }

// q-number [n]_q = (q^n - q^{-n}) / (q - q^{-1}); [-n] = -[n], [0] = 0.
inline Scalar q_number(int n) {
    Scalar r;
    int a = n < 0 ? -n : n;
    for (int k = 0; k < a; ++k) r += Scalar::q_pow(a - 1 - 2 * k);
    if (n < 0) r = -r;
    return r;
}

// [n]_q! with [0]! = 1.
inline Scalar q_factorial(int n) {
    if (n < 0) throw std::domain_error("q_factorial: negative argument");
    Scalar r(1);
    for (int k = 2; k <= n; ++k) r *= q_number(k);
    return r;
}

// Gaussian binomial [n k]_q = [n]!/([k]![n-k]!); always a Laurent polynomial.
// Computed by the q-Pascal recursion, so no division is needed.
inline Scalar q_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("q_binomial: k out of range");
    // [n k] = sum over the recursion [n k] = q^k [n-1 k] + q^{k-n} [n-1 k-1]
    std::vector<Scalar> row{Scalar(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<Scalar> next(std::min(m, k) + 1);
        for (int j = 0; j <= std::min(m, k); ++j) {
            next[j] = Scalar(0);
            if (j <= m - 1 && j < static_cast<int>(row.size())) next[j] += Scalar::q_pow(j) * row[j];
            if (j >= 1) next[j] += Scalar::q_pow(j - m) * row[j - 1];
        }
        row = std::move(next);
    }
    return row[k];
}

// --- canonical text format ------------------------------------------------
//
// Terms are joined by " + " / " - " in descending lex order on (e_q,e_v,e_x);
// each term is "c*q^a*v^b*x^c" with unit factors elided.  Half-integer
// exponents (orthogonal B-series internals) print as q^(k/2).

namespace detail {
inline void format_pow(std::ostringstream& os, const char* name, int32_t halves, bool& any) {
    if (halves == 0) return;
    if (any) os << "*";
    any = true;
    os << name;
    if (halves == 2) return;  // q^1 prints as "q"
    os << "^";
    if (halves % 2 == 0) os << halves / 2;
    else os << "(" << halves << "/2)";
}
}  // namespace detail

inline std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        Rat a = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any = false;
        if (a != 1) {
            os << rat_str(a);
            any = true;
        }
        detail::format_pow(os, "q", it->first.q, any);
        detail::format_pow(os, "v", it->first.v, any);
        detail::format_pow(os, "x", it->first.x, any);
        if (!any) os << "1";
    }
    return os.str();
}

// Parser for the canonical Scalar format (inverse of Scalar::str).
class ScalarParser {
  public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar r;
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        else if (peek() == '+') ++pos_;
        r += term(neg);
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c != '+' && c != '-') throw std::domain_error("scalar parse: expected +/- at '" + s_.substr(pos_) + "'");
            ++pos_;
            r += term(c == '-');
        }
        return r;
    }

  private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() { while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_; }

    Scalar term(bool neg) {
        skip_ws();
        Rat c(1);
        bool saw_coef = false;
        if (pos_ < s_.size() && (isdigit(s_[pos_]))) {
            c = number();
            saw_coef = true;
        }
        Exp e;
        bool saw_var = false;
        while (true) {
            if (saw_coef || saw_var) {
                size_t save = pos_;
                skip_ws();
                if (peek() == '*') ++pos_;
                else { pos_ = save; }
            }
            skip_ws();
            char v = peek();
            if (v != 'q' && v != 'v' && v != 'x') break;
            ++pos_;
            int32_t halves = 2;
            if (peek() == '^') {
                ++pos_;
                halves = exponent();
            }
            if (v == 'q') e.q += halves;
            else if (v == 'v') e.v += halves;
            else e.x += halves;
            saw_var = true;
        }
        if (!saw_coef && !saw_var) {
            if (peek() == '1') { ++pos_; }
            else throw std::domain_error("scalar parse: empty term");
        }
        return Scalar::monomial(neg ? Rat(-c) : c, e);
    }

    Rat number() {
        size_t start = pos_;
        while (pos_ < s_.size() && isdigit(s_[pos_])) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        if (peek() == '/') {
            ++pos_;
            size_t ds = pos_;
            while (pos_ < s_.size() && isdigit(s_[pos_])) ++pos_;
            return Rat(Int(num), Int(s_.substr(ds, pos_ - ds)));
        }
        return Rat(Int(num));
    }

    // integer, or "(k/2)" for half-units
    int32_t exponent() {
        if (peek() == '(') {
            ++pos_;
            int32_t k = signed_int();
            if (peek() != '/') throw std::domain_error("scalar parse: bad half exponent");
            ++pos_;
            if (peek() != '2') throw std::domain_error("scalar parse: bad half exponent");
            ++pos_;
            if (peek() != ')') throw std::domain_error("scalar parse: bad half exponent");
            ++pos_;
            return k;
        }
        return 2 * signed_int();
    }

    int32_t signed_int() {
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        size_t start = pos_;
        while (pos_ < s_.size() && isdigit(s_[pos_])) ++pos_;
        if (start == pos_) throw std::domain_error("scalar parse: expected integer");
        int32_t k = std::stoi(s_.substr(start, pos_ - start));
        return neg ? -k : k;
    }

    std::string s_;
    size_t pos_ = 0;
};

inline Scalar scalar_parse(const std::string& s) { return ScalarParser(s).parse(); }

}  // namespace qyb
