#pragma once

#include "polygcd.hpp"

namespace qyb {

// Normalized ratio of two Laurent polynomials.  Canonical form: gcd(num, den)
// is a unit, den has minimal exponents 0 and leading coefficient +1; exact
// polynomial quotients demote to den == 1.
class ScalarFrac {
  public:
    ScalarFrac() : num_(0), den_(1) {}
    ScalarFrac(int c) : num_(c), den_(1) {}
    explicit ScalarFrac(const Rat& c) : num_(c), den_(1) {}
    ScalarFrac(const Scalar& s) : num_(s), den_(1) {}
    ScalarFrac(Scalar num, Scalar den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("ScalarFrac: zero denominator");
        reduce();
    }

    const Scalar& num() const { return num_; }
    const Scalar& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    const Scalar& as_scalar() const {
        if (!den_.is_one()) throw std::domain_error("ScalarFrac: not a polynomial: (" + num_.str() + ")/(" + den_.str() + ")");
        return num_;
    }

    friend bool operator==(const ScalarFrac& a, const ScalarFrac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend ScalarFrac operator+(const ScalarFrac& a, const ScalarFrac& b) {
        if (a.den_ == b.den_) return ScalarFrac(a.num_ + b.num_, a.den_);
        return ScalarFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarFrac operator-(const ScalarFrac& a, const ScalarFrac& b) {
        if (a.den_ == b.den_) return ScalarFrac(a.num_ - b.num_, a.den_);
        return ScalarFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    ScalarFrac operator-() const {
        ScalarFrac r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend ScalarFrac operator*(const ScalarFrac& a, const ScalarFrac& b) {
        if (a.den_.is_one() && b.den_.is_one()) {
            ScalarFrac r;
            r.num_ = a.num_ * b.num_;
            r.den_ = Scalar(1);
            return r;
        }
        return ScalarFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ScalarFrac operator/(const ScalarFrac& a, const ScalarFrac& b) {
        if (b.is_zero()) throw std::domain_error("ScalarFrac: division by zero");
        return ScalarFrac(a.num_ * b.den_, a.den_ * b.num_);
    }
    ScalarFrac& operator+=(const ScalarFrac& o) { return *this = *this + o; }
    ScalarFrac& operator-=(const ScalarFrac& o) { return *this = *this - o; }
    ScalarFrac& operator*=(const ScalarFrac& o) { return *this = *this * o; }
    ScalarFrac& operator/=(const ScalarFrac& o) { return *this = *this / o; }

    ScalarFrac inverse() const {
        if (is_zero()) throw std::domain_error("ScalarFrac: inverse of zero");
        return ScalarFrac(den_, num_);
    }

    ScalarFrac pow(int k) const {
        ScalarFrac base = k < 0 ? inverse() : *this;
        int e = k < 0 ? -k : k;
        ScalarFrac acc(1);
        for (int i = 0; i < e; ++i) acc *= base;
        return acc;
    }

    ScalarFrac subst(Var w, const Rat& c, Exp m) const {
        return ScalarFrac(num_.subst(w, c, m), den_.subst(w, c, m));
    }
    ScalarFrac subst_v(const Rat& c, int q_halves) const { return subst(Var::v, c, Exp{q_halves, 0, 0}); }
    ScalarFrac subst_x(const Rat& c) const { return subst(Var::x, c, Exp{}); }

    // Exact rational evaluation; throws on a pole.
    Rat eval(const Rat& q0, const Rat& v0 = 1, const Rat& x0 = 1) const {
        Rat d = den_.eval(q0, v0, x0);
        if (d == 0) throw std::domain_error("eval: pole at evaluation point");
        return num_.eval(q0, v0, x0) / d;
    }
    Complex eval_c(Complex q0, Complex v0 = 1.0, Complex x0 = 1.0) const {
        Complex d = den_.eval_c(q0, v0, x0);
        if (std::abs(d) < 1e-300) throw std::domain_error("eval: pole at evaluation point");
        return num_.eval_c(q0, v0, x0) / d;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Scalar(1);
            return;
        }
        if (den_.is_one()) return;
        if (den_.is_monomial()) {
            num_ *= den_.monomial_inverse();
            den_ = Scalar(1);
            return;
        }
        if (auto q = exact_divide(num_, den_)) {
            num_ = *q;
            den_ = Scalar(1);
            return;
        }
        Scalar g = poly_gcd(num_, den_);
        if (!g.is_one() && !g.is_zero()) {
            num_ = *exact_divide(num_, g);
            den_ = *exact_divide(den_, g);
        }
        if (den_.is_monomial()) {
            num_ *= den_.monomial_inverse();
            den_ = Scalar(1);
            return;
        }
        // make den a genuine polynomial with leading coefficient +1
        Exp sh = den_.min_exp();
        if (!(sh == Exp{})) {
            den_ = den_.shifted(Exp{} - sh);
            num_ = num_.shifted(Exp{} - sh);
        }
        Rat lc = den_.leading().second;
        if (lc != 1) {
            Rat inv = Rat(1) / lc;
            num_ *= inv;
            den_ *= inv;
        }
    }

    Scalar num_, den_;
};

inline ScalarFrac frac_parse(const std::string& s) {
    if (!s.empty() && s.front() == '(') {
        auto mid = s.find(")/(");
        if (mid == std::string::npos || s.back() != ')') throw std::domain_error("frac parse: malformed '(num)/(den)'");
        return ScalarFrac(scalar_parse(s.substr(1, mid - 1)), scalar_parse(s.substr(mid + 3, s.size() - mid - 4)));
    }
    return ScalarFrac(scalar_parse(s));
}

}  // namespace qyb
