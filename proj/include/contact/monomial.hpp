#ifndef CONTACT_MONOMIAL_HPP
#define CONTACT_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace contact {

// Exponent vector in a fixed number of variables.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : e_(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }

    unsigned degree() const {
        unsigned d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    bool is_constant() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
        return r;
    }

    // componentwise quotient; caller guarantees divisibility
    Monomial quotient_by(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (m.e_[i] > r.e_[i]) throw std::logic_error("monomial quotient not divisible");
            r.e_[i] -= m.e_[i];
        }
        return r;
    }

    Monomial lcm(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (m.e_[i] > r.e_[i]) r.e_[i] = m.e_[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    const std::vector<std::uint32_t>& exponents() const { return e_; }

  private:
    std::vector<std::uint32_t> e_;
};

// Monomial order suitable for computations in the local ring at the origin:
// the constant monomial is strictly greatest and lower total degree compares
// greater. Ties within a degree are broken lexicographically or by reverse
// lexicographic comparison on a permuted variable list, keeping the order
// total and multiplicative.
struct LocalOrder {
    enum class Kind { antigraded_lex, antigraded_revlex };

    Kind kind = Kind::antigraded_lex;
    std::vector<unsigned> perm;  // priority list of variable indices; empty = identity

    static LocalOrder default_order() { return LocalOrder{}; }

    // >0 when a is greater, <0 when b is greater, 0 when equal
    int compare(const Monomial& a, const Monomial& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db ? 1 : -1;
        std::size_t n = a.nvars();
        auto var = [&](std::size_t k) { return perm.empty() ? k : perm[k]; };
        if (kind == Kind::antigraded_lex) {
            for (std::size_t k = 0; k < n; ++k) {
                std::uint32_t xa = a[var(k)], xb = b[var(k)];
                if (xa != xb) return xa > xb ? 1 : -1;
            }
        } else {
            for (std::size_t k = n; k-- > 0;) {
                std::uint32_t xa = a[var(k)], xb = b[var(k)];
                if (xa != xb) return xa < xb ? 1 : -1;
            }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

// strict-weak-order functor placing greater monomials first under the default
// local order; used as the canonical storage order of polynomial terms
struct MonoBefore {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return LocalOrder::default_order().compare(a, b) > 0;
    }
};

}  // namespace contact

#endif
