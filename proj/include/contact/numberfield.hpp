#ifndef CONTACT_NUMBERFIELD_HPP
#define CONTACT_NUMBERFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "contact/errors.hpp"
#include "contact/rational.hpp"

namespace contact {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q(i) or of a simple-extension tower above it. A null field
// pointer denotes the base field; otherwise the element is a polynomial in
// the top generator with coefficients one level down. Zero testing is exact
// because every minimal polynomial in a tower is irreducible.
class FieldElem {
  public:
    FieldElem() : base_(0) {}
    FieldElem(long v) : base_(v) {}  // NOLINT: implicit by design
    FieldElem(GaussianRational v) : base_(std::move(v)) {}
    FieldElem(FieldPtr field, std::vector<FieldElem> coeffs);

    bool in_base() const { return field_ == nullptr; }
    const FieldPtr& field() const { return field_; }
    const GaussianRational& base_value() const;
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }

    // exact Gaussian rational value when the element lies in the base field
    std::optional<GaussianRational> demote() const;

    bool is_zero() const;
    bool is_one() const { return (*this - FieldElem(1)).is_zero(); }

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return (a - b).is_zero(); }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem inverse() const;
    FieldElem pow(unsigned long e) const;

    FieldElem lifted_to(const FieldPtr& target) const;

    std::string str() const;

  private:
    FieldPtr field_;                 // nullptr: base field Q(i)
    GaussianRational base_;          // valid when field_ == nullptr
    std::vector<FieldElem> coeffs_;  // valid otherwise; size < field degree
};

// Univariate polynomial over a tower field, index = degree.
using FPoly = std::vector<FieldElem>;

// Simple algebraic extension of the field below it by a root of a monic
// irreducible polynomial.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    static FieldPtr extend(FieldPtr below, std::string generator_name, FPoly monic_minpoly);

    const FieldPtr& below() const { return below_; }
    const FPoly& minpoly() const { return minpoly_; }
    unsigned degree() const { return static_cast<unsigned>(minpoly_.size()) - 1; }
    unsigned absolute_degree() const { return absolute_degree_; }
    const std::string& generator_name() const { return gen_name_; }

    FieldElem generator() const;
    FieldElem make(std::vector<FieldElem> coeffs) const;

    std::string describe() const;  // e.g. "a1 with a1^2 - a1 + 1 = 0"

  private:
    NumberField(FieldPtr below, std::string gen_name, FPoly minpoly, unsigned absdeg)
        : below_(std::move(below)),
          gen_name_(std::move(gen_name)),
          minpoly_(std::move(minpoly)),
          absolute_degree_(absdeg) {}

    FieldPtr below_;
    std::string gen_name_;
    FPoly minpoly_;
    unsigned absolute_degree_;
};

bool field_is_ancestor(const FieldPtr& anc, const FieldPtr& field);
unsigned field_absolute_degree(const FieldPtr& field);  // 1 for base
std::string field_tower_description(const FieldPtr& field);

// --- univariate polynomial helpers over a tower field ---

void fp_normalize(FPoly& f);
int fp_deg(const FPoly& f);  // -1 for zero
bool fp_is_zero(const FPoly& f);
FPoly fp_add(const FPoly& a, const FPoly& b);
FPoly fp_sub(const FPoly& a, const FPoly& b);
FPoly fp_mul(const FPoly& a, const FPoly& b);
FPoly fp_scale(const FPoly& a, const FieldElem& c);
FPoly fp_monic(const FPoly& a);
// division with remainder by a nonzero divisor; field coefficients
std::pair<FPoly, FPoly> fp_divrem(const FPoly& a, const FPoly& b);
FPoly fp_gcd(FPoly a, FPoly b);  // monic gcd
FPoly fp_derivative(const FPoly& a);
FieldElem fp_eval(const FPoly& a, const FieldElem& x);
FPoly fp_compose_shift(const FPoly& a, const FieldElem& s);  // a(x + s)
std::string fp_str(const FPoly& a, const std::string& var);

// --- factorization over the base field Q(i) ---

// all roots in Q(i) of a nonzero polynomial with base-field coefficients
std::vector<GaussianRational> base_roots(const FPoly& f);

struct FactorPower {
    FPoly factor;  // monic irreducible
    unsigned multiplicity;
};

// Certified irreducible factorization. Complete over the base field up to
// residual degree 4 (roots at any degree, quadratic/cubic by root
// completeness, quartic by resolvent); over proper towers only linear splits
// are attempted. Anything beyond raises BudgetExceededError rather than
// returning an uncertified answer.
std::vector<FactorPower> certified_factors(const FPoly& f, const FieldPtr& field);

struct ExtensionBudget {
    unsigned max_absolute_degree = 24;
};

// Root of an irreducible factor: either a base-field value or a fresh tower
// extension whose generator is the root.
struct RootInExtension {
    FieldElem value;
    FieldPtr field;      // field the value lives in
    unsigned degree;     // degree of the factor over the previous field
};

RootInExtension attach_root(const FPoly& irreducible_factor, const FieldPtr& field,
                            const ExtensionBudget& budget, unsigned hint_index);

}  // namespace contact

#endif
