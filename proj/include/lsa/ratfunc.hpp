#pragma once

// Univariate polynomials and rational functions in a formal variable t over
// Q(i).  Rational functions are kept reduced (gcd(num, den) = 1) with a
// monic denominator, so equality is plain coefficient comparison and the
// limit at t = 0 exists exactly when den(0) != 0.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lsa/scalar.hpp"

namespace lsa {

class Poly {
public:
    Poly() = default;
    Poly(const GaussRational& c) {
        if (!c.is_zero()) coef_.push_back(c);
    }
    Poly(int c) : Poly(GaussRational(c)) {}
    explicit Poly(std::vector<GaussRational> coef) : coef_(std::move(coef)) { trim(); }

    static Poly t() { return Poly(std::vector<GaussRational>{GaussRational(0), GaussRational(1)}); }

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.size() <= 1; }

    GaussRational coefficient(std::size_t k) const {
        return k < coef_.size() ? coef_[k] : GaussRational(0);
    }
    GaussRational leading() const {
        return coef_.empty() ? GaussRational(0) : coef_.back();
    }
    GaussRational constant_term() const { return coefficient(0); }

    GaussRational eval(const GaussRational& x) const {
        GaussRational acc(0);
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        Poly p = *this;
        for (auto& c : p.coef_) c = -c;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<GaussRational> out(std::max(a.coef_.size(), b.coef_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<GaussRational> out(a.coef_.size() + b.coef_.size() - 1);
        for (std::size_t p = 0; p < a.coef_.size(); ++p)
            for (std::size_t q = 0; q < b.coef_.size(); ++q) out[p + q] += a.coef_[p] * b.coef_[q];
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const GaussRational& s) const {
        Poly p;
        if (s.is_zero()) return p;
        p.coef_ = coef_;
        for (auto& c : p.coef_) c *= s;
        return p;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(lsa::inverse(leading()));
    }

    // Euclidean division; the divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw Error("polynomial division by zero");
        Poly rem = a;
        std::vector<GaussRational> q;
        if (rem.degree() >= b.degree()) q.assign(rem.degree() - b.degree() + 1, GaussRational(0));
        GaussRational lead_inv = lsa::inverse(b.leading());
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            std::size_t shift = rem.degree() - b.degree();
            GaussRational f = rem.leading() * lead_inv;
            q[shift] = f;
            for (std::size_t k = 0; k < b.coef_.size(); ++k)
                rem.coef_[k + shift] -= f * b.coef_[k];
            rem.trim();
        }
        return {Poly(std::move(q)), rem};
    }

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
    }

    std::vector<GaussRational> coef_;  // coef_[k] multiplies t^k
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        GaussRational c = coefficient(k);
        if (c.is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = to_string(c);
        } else {
            std::string head = var + (k > 1 ? "^" + std::to_string(k) : "");
            if (c.is_one()) term = head;
            else if (c == GaussRational(-1)) term = "-" + head;
            else if (c.is_rational() || c.re == 0) term = to_string(c) + "*" + head;
            else term = "(" + to_string(c) + ")*" + head;
        }
        if (out.empty()) out = term;
        else if (!term.empty() && term[0] == '-') out += term;
        else out += "+" + term;
    }
    return out;
}

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int v) : num_(v), den_(1) {}
    RatFunc(const GaussRational& v) : num_(v), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("rational function with zero denominator");
        normalize();
    }

    static RatFunc t() { return RatFunc(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    RatFunc& operator-=(const RatFunc& o) { return *this += -o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc& operator/=(const RatFunc& o) {
        if (o.is_zero()) throw Error("division by zero rational function");
        return *this = RatFunc(num_ * o.den_, den_ * o.num_);
    }

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    bool has_limit_at_zero() const { return !den_.constant_term().is_zero(); }

    // num(0)/den(0); in reduced form den(0) = 0 means a genuine pole.
    GaussRational limit_at_zero() const {
        if (!has_limit_at_zero()) throw Error("pole at t = 0 in " + str());
        return num_.constant_term() / den_.constant_term();
    }

    GaussRational eval(const GaussRational& at) const {
        GaussRational d = den_.eval(at);
        if (d.is_zero()) throw Error("pole of rational function at t = " + to_string(at));
        return num_.eval(at) / d;
    }

    std::string str() const {
        if (den_ == Poly(1)) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.degree() > 0) n = "(" + n + ")";
        if (den_.degree() > 0) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        GaussRational lead_inv = lsa::inverse(den_.leading());
        num_ = num_.scaled(lead_inv);
        den_ = den_.scaled(lead_inv);
    }

    Poly num_, den_;  // den_ monic, gcd(num_, den_) = 1
};

inline RatFunc inverse(const RatFunc& a) { return RatFunc(1) / a; }

inline std::string to_string(const RatFunc& f) { return f.str(); }

}  // namespace lsa
