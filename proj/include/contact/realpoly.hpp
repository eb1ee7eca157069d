#ifndef CONTACT_REALPOLY_HPP
#define CONTACT_REALPOLY_HPP

#include <map>
#include <optional>
#include <utility>

#include "contact/poly.hpp"

namespace contact {

// Term key of a real polynomial germ: exponents of z and of conj(z).
struct BiMonomial {
    Monomial z;
    Monomial zbar;

    unsigned degree() const { return z.degree() + zbar.degree(); }
    bool is_pure() const { return zbar.degree() == 0; }
    BiMonomial swapped() const { return {zbar, z}; }

    friend bool operator==(const BiMonomial& a, const BiMonomial& b) {
        return a.z == b.z && a.zbar == b.zbar;
    }
};

struct BiMonoBefore {
    bool operator()(const BiMonomial& a, const BiMonomial& b) const {
        MonoBefore mb;
        if (a.z != b.z) return mb(a.z, b.z);
        return mb(a.zbar, b.zbar);
    }
};

// Polynomial in z_1..z_n and their conjugates that takes real values on the
// diagonal zbar = conj(z); equivalently C[a][b] = conj(C[b][a]) termwise.
class RealPoly {
  public:
    using TermMap = std::map<BiMonomial, GaussianRational, BiMonoBefore>;

    RealPoly() : n_(0) {}
    explicit RealPoly(std::size_t n) : n_(n) {}

    static RealPoly from_holomorphic(const Poly& p) {
        RealPoly r(p.nvars());
        for (const auto& [m, c] : p.terms()) r.add_term({m, Monomial(p.nvars())}, c);
        return r;
    }

    // p(z) * conj(q(z)): the basic Hermitian building block
    static RealPoly mixed(const Poly& p, const Poly& q) {
        RealPoly r(p.nvars());
        for (const auto& [mp, cp] : p.terms())
            for (const auto& [mq, cq] : q.terms()) r.add_term({mp, mq}, cp * cq.conj());
        return r;
    }

    static RealPoly norm_square(const Poly& p) { return mixed(p, p); }

    // Re{h} for holomorphic h
    static RealPoly real_part(const Poly& h) {
        RealPoly r(h.nvars());
        GaussianRational half(Rational(1, 2));
        for (const auto& [m, c] : h.terms()) {
            r.add_term({m, Monomial(h.nvars())}, c * half);
            r.add_term({Monomial(h.nvars()), m}, c.conj() * half);
        }
        return r;
    }

    std::size_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const BiMonomial& bm, GaussianRational c) {
        if (bm.z.nvars() != n_ || bm.zbar.nvars() != n_)
            throw std::invalid_argument("term dimension mismatch");
        auto it = terms_.find(bm);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(bm, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GaussianRational coefficient(const BiMonomial& bm) const {
        auto it = terms_.find(bm);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    bool is_real() const {
        for (const auto& [bm, c] : terms_)
            if (coefficient(bm.swapped()) != c.conj()) return false;
        return true;
    }

    std::optional<unsigned> ord0() const {
        std::optional<unsigned> best;
        for (const auto& [bm, c] : terms_) {
            unsigned d = bm.degree();
            if (!best || d < *best) best = d;
        }
        return best;
    }

    int degree() const {
        int best = -1;
        for (const auto& [bm, c] : terms_)
            if (static_cast<int>(bm.degree()) > best) best = static_cast<int>(bm.degree());
        return best;
    }

    RealPoly operator-() const {
        RealPoly r(n_);
        for (const auto& [bm, c] : terms_) r.terms_.emplace(bm, -c);
        return r;
    }

    RealPoly& operator+=(const RealPoly& o) {
        check_dim(o);
        for (const auto& [bm, c] : o.terms_) add_term(bm, c);
        return *this;
    }
    RealPoly& operator-=(const RealPoly& o) {
        check_dim(o);
        for (const auto& [bm, c] : o.terms_) add_term(bm, -c);
        return *this;
    }
    friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
    friend RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }

    RealPoly scaled(const GaussianRational& c) const {
        RealPoly r(n_);
        if (c.is_zero()) return r;
        for (const auto& [bm, v] : terms_) r.terms_.emplace(bm, v * c);
        return r;
    }

    friend bool operator==(const RealPoly& a, const RealPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const RealPoly& a, const RealPoly& b) { return !(a == b); }

    // drop all terms of total degree > k
    RealPoly truncated(unsigned k) const {
        RealPoly r(n_);
        for (const auto& [bm, c] : terms_)
            if (bm.degree() <= k) r.terms_.emplace(bm, c);
        return r;
    }

    GaussianRational evaluate(const std::vector<GaussianRational>& z) const {
        if (z.size() != n_) throw std::invalid_argument("evaluation point dimension mismatch");
        GaussianRational acc;
        for (const auto& [bm, c] : terms_) {
            GaussianRational t = c;
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::uint32_t k = 0; k < bm.z[i]; ++k) t *= z[i];
                for (std::uint32_t k = 0; k < bm.zbar[i]; ++k) t *= z[i].conj();
            }
            acc += t;
        }
        return acc;
    }

    // z -> A z together with zbar -> conj(A) zbar, preserving reality
    RealPoly substitute_linear(const Matrix& a) const;

    // z_i -> images[i](y), zbar_i -> conj-coefficient image; images live in m
    // variables, so this restricts the germ to a linear subspace
    RealPoly substitute_embedding(const std::vector<Poly>& images, std::size_t m) const;

  private:
    void check_dim(const RealPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("real polynomial dimension mismatch");
    }

    std::size_t n_;
    TermMap terms_;
};

inline RealPoly RealPoly::substitute_embedding(const std::vector<Poly>& images,
                                               std::size_t m) const {
    if (images.size() != n_) throw std::invalid_argument("one image per variable required");
    std::vector<Poly> bar;
    bar.reserve(n_);
    for (const auto& img : images) {
        if (img.nvars() != m) throw std::invalid_argument("image dimension mismatch");
        bar.push_back(conjugate_coefficients(img));
    }
    RealPoly r(m);
    for (const auto& [bm, c] : terms_) {
        Poly zpart = Poly::constant(m, GaussianRational(1));
        Poly bpart = Poly::constant(m, GaussianRational(1));
        for (std::size_t i = 0; i < n_; ++i) {
            if (bm.z[i]) zpart *= images[i].pow(bm.z[i]);
            if (bm.zbar[i]) bpart *= bar[i].pow(bm.zbar[i]);
        }
        for (const auto& [mz, cz] : zpart.terms())
            for (const auto& [mb, cb] : bpart.terms()) r.add_term({mz, mb}, c * cz * cb);
    }
    return r;
}

inline RealPoly RealPoly::substitute_linear(const Matrix& a) const {
    std::size_t n = n_;
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("substitution matrix shape mismatch");
    if (!a.invertible()) throw std::domain_error("singular substitution matrix");
    std::vector<Poly> img, imgbar;
    for (std::size_t i = 0; i < n; ++i) {
        Poly p(n), pb(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!a.at(i, j).is_zero()) {
                p += Poly::variable(n, j, a.at(i, j));
                pb += Poly::variable(n, j, a.at(i, j).conj());
            }
        }
        img.push_back(p);
        imgbar.push_back(pb);
    }
    RealPoly r(n);
    for (const auto& [bm, c] : terms_) {
        Poly zpart = Poly::constant(n, GaussianRational(1));
        Poly bpart = Poly::constant(n, GaussianRational(1));
        for (std::size_t i = 0; i < n; ++i) {
            if (bm.z[i]) zpart *= img[i].pow(bm.z[i]);
            if (bm.zbar[i]) bpart *= imgbar[i].pow(bm.zbar[i]);
        }
        for (const auto& [mz, cz] : zpart.terms())
            for (const auto& [mb, cb] : bpart.terms()) r.add_term({mz, mb}, c * cz * cb);
    }
    return r;
}

}  // namespace contact

#endif
