#ifndef CONTACT_POLY_HPP
#define CONTACT_POLY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "contact/matrix.hpp"
#include "contact/monomial.hpp"
#include "contact/rational.hpp"

namespace contact {

// Sparse multivariate polynomial over an exact coefficient ring C.
// Zero coefficients are never stored; terms sit in the canonical local order
// (greatest first), which makes printing and iteration deterministic.
template <typename C>
class TPoly {
  public:
    using TermMap = std::map<Monomial, C, MonoBefore>;

    TPoly() : n_(0) {}
    explicit TPoly(std::size_t n) : n_(n) {}

    static TPoly zero(std::size_t n) { return TPoly(n); }

    static TPoly constant(std::size_t n, C c) {
        TPoly p(n);
        p.add_term(Monomial(n), std::move(c));
        return p;
    }

    static TPoly variable(std::size_t n, std::size_t i, C c = C(1)) {
        if (i >= n) throw std::out_of_range("variable index out of range");
        Monomial m(n);
        m[i] = 1;
        TPoly p(n);
        p.add_term(m, std::move(c));
        return p;
    }

    static TPoly from_term(std::size_t n, const Monomial& m, C c) {
        TPoly p(n);
        p.add_term(m, std::move(c));
        return p;
    }

    std::size_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, C c) {
        if (m.nvars() != n_) throw std::invalid_argument("monomial dimension mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    // minimum total degree; empty optional encodes ord0(0) = infinity
    std::optional<unsigned> ord0() const {
        std::optional<unsigned> best;
        for (const auto& [m, c] : terms_) {
            unsigned d = m.degree();
            if (!best || d < *best) best = d;
        }
        return best;
    }

    int degree() const {  // -1 for the zero polynomial
        int best = -1;
        for (const auto& [m, c] : terms_)
            if (static_cast<int>(m.degree()) > best) best = static_cast<int>(m.degree());
        return best;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    bool is_unit_in_local_ring() const {
        return terms_.find(Monomial(n_)) != terms_.end();
    }

    TPoly operator-() const {
        TPoly r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    TPoly& operator+=(const TPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    TPoly& operator-=(const TPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        a.check_dim(b);
        TPoly r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    TPoly scaled(const C& c) const {
        TPoly r(n_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    TPoly times_monomial(const Monomial& m, const C& c) const {
        TPoly r(n_);
        if (c.is_zero()) return r;
        for (const auto& [mm, v] : terms_) r.terms_.emplace(mm * m, v * c);
        return r;
    }

    TPoly pow(unsigned e) const {
        TPoly acc = constant(n_, C(1));
        TPoly base = *this;
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    friend bool operator==(const TPoly& a, const TPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    // leading monomial with respect to an arbitrary local order
    const Monomial& leading_monomial(const LocalOrder& ord) const {
        if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
        const Monomial* best = nullptr;
        for (const auto& [m, c] : terms_)
            if (!best || ord.greater(m, *best)) best = &m;
        return *best;
    }

    C leading_coefficient(const LocalOrder& ord) const { return coefficient(leading_monomial(ord)); }

    C evaluate(const std::vector<C>& point) const {
        if (point.size() != n_) throw std::invalid_argument("evaluation point dimension mismatch");
        C acc(0);
        for (const auto& [m, c] : terms_) {
            C t = c;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    TPoly derivative(std::size_t var) const {
        TPoly r(n_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial mm = m;
            C coef = c * C(static_cast<long>(m[var]));
            mm[var] -= 1;
            r.add_term(mm, coef);
        }
        return r;
    }

    // substitute each variable by a polynomial in (possibly) other variables
    template <typename Fn>
    TPoly substitute(std::size_t out_vars, Fn&& image_of_var) const {
        TPoly r(out_vars);
        for (const auto& [m, c] : terms_) {
            TPoly t = TPoly::constant(out_vars, c);
            for (std::size_t i = 0; i < n_; ++i) {
                if (m[i] == 0) continue;
                t *= image_of_var(i).pow(m[i]);
            }
            r += t;
        }
        return r;
    }

  private:
    void check_dim(const TPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("polynomial dimension mismatch");
    }

    std::size_t n_;
    TermMap terms_;
};

using Poly = TPoly<GaussianRational>;

// z_i -> sum_j A[i][j] z_j with A invertible
inline Poly substitute_linear(const Poly& p, const Matrix& a) {
    std::size_t n = p.nvars();
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("substitution matrix shape mismatch");
    if (!a.invertible()) throw std::domain_error("singular substitution matrix");
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly img(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!a.at(i, j).is_zero()) img += Poly::variable(n, j, a.at(i, j));
        images.push_back(img);
    }
    return p.substitute(n, [&](std::size_t i) -> const Poly& { return images[i]; });
}

inline Poly conjugate_coefficients(const Poly& p) {
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c.conj());
    return r;
}

}  // namespace contact

#endif
