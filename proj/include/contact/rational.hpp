#ifndef CONTACT_RATIONAL_HPP
#define CONTACT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace contact {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// max(|num|, |den|); used for pivot selection and sampling bounds
inline Integer height(const Rational& r) {
    Integer n = abs(r.get_num());
    Integer d = abs(r.get_den());
    return n > d ? n : d;
}

// exact square root when r is a perfect square of a rational
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const Integer& n = r.get_num();
    const Integer& d = r.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return make_rational(sn, sd);
}

// positive squarefree integer s with |r| = s * (rational square)
inline Integer squarefree_kernel(const Rational& r) {
    if (r == 0) return 1;
    Integer m = abs(r.get_num() * r.get_den());
    Integer s = 1;
    Integer p = 2;
    while (p * p <= m) {
        unsigned cnt = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++cnt;
        }
        if (cnt % 2 == 1) s *= p;
        p += (p == 2) ? 1 : 2;
    }
    if (m > 1) s *= m;  // leftover prime
    return s;
}

// Exact complex rational a + b*i. Always stored in lowest terms (mpq_class
// keeps itself canonical), so equality is plain componentwise comparison.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        GaussianRational one(1);
        return one /= *this;
    }

    GaussianRational pow(unsigned long e) const {
        GaussianRational acc(1), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // exact complex square root when it exists over Q(i)
    static std::optional<GaussianRational> sqrt(const GaussianRational& w) {
        if (w.is_zero()) return GaussianRational();
        if (w.im_ == 0) {
            if (w.re_ > 0) {
                if (auto s = rational_sqrt(w.re_)) return GaussianRational(*s);
            } else {
                if (auto s = rational_sqrt(-w.re_)) return GaussianRational(Rational(0), *s);
            }
            return std::nullopt;
        }
        // (x+iy)^2 = w: x^2 = (re + |w|)/2 with |w| = sqrt(norm), y = im/(2x)
        auto nr = rational_sqrt(w.norm());
        if (!nr) return std::nullopt;
        Rational x2 = (w.re_ + *nr) / 2;
        auto x = rational_sqrt(x2);
        if (!x || *x == 0) return std::nullopt;
        Rational y = w.im_ / (2 * (*x));
        GaussianRational cand(*x, y);
        if (cand * cand == w) return cand;
        return std::nullopt;
    }

    // standalone canonical text, e.g. "3/2", "-i", "2*i", "(1-2/3*i)"
    std::string str() const;

  private:
    Rational re_, im_;
};

inline std::string rational_str(const Rational& r) {
    return r.get_str();
}

inline std::string GaussianRational::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rational_str(im_) + "*i";
    if (re_ == 0) return imag;
    std::string s = "(" + rational_str(re_);
    if (im_ > 0)
        s += "+" + imag;
    else
        s += "-" + (im_ == -1 ? std::string("i") : rational_str(-im_) + "*i");
    return s + ")";
}

}  // namespace contact

#endif
