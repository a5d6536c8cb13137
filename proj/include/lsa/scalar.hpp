#pragma once

// Exact scalars for the library: arbitrary-precision rationals (GMP) and
// Gaussian rationals Q(i).  All arithmetic is exact; there is no floating
// point anywhere in this code base.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lsa {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

// mpq_class(n, d) does not reduce; this does.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    if (r.get_den() == 0) throw Error("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

// Element a + b*i of the Gaussian rationals.  GMP keeps both parts in
// lowest terms with positive denominator.
struct GaussRational {
    Rational re, im;

    GaussRational() : re(0), im(0) {}
    GaussRational(int v) : re(v), im(0) {}
    GaussRational(long v) : re(v), im(0) {}
    GaussRational(const Rational& r) : re(r), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_rational() const { return im == 0; }

    GaussRational conj() const { return GaussRational(re, -im); }
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return GaussRational(-re, -im); }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        if (o.is_zero()) throw Error("division by zero in Q(i)");
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline GaussRational inverse(const GaussRational& a) {
    return GaussRational(1) / a;
}

inline GaussRational pow(GaussRational base, long exp) {
    if (exp < 0) {
        base = inverse(base);
        exp = -exp;
    }
    GaussRational out(1);
    while (exp > 0) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Normalized text form, the one the file grammar uses: "0", "-2/3", "i",
// "-i", "2/3*i", "1+2*i", "1-2/3*i".
inline std::string to_string(const GaussRational& v) {
    auto imag_part = [](const Rational& b, bool with_sign) {
        std::string s;
        Rational a = abs(b);
        if (with_sign) s += (b < 0) ? "-" : "+";
        else if (b < 0) s += "-";
        if (a != 1) s += a.get_str() + "*";
        s += "i";
        return s;
    };
    if (v.im == 0) return v.re.get_str();
    if (v.re == 0) return imag_part(v.im, false);
    return v.re.get_str() + imag_part(v.im, true);
}

}  // namespace lsa
