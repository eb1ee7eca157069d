#ifndef CONTACT_CURVES_HPP
#define CONTACT_CURVES_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "contact/localalg.hpp"
#include "contact/numberfield.hpp"
#include "contact/poly.hpp"
#include "contact/realpoly.hpp"

namespace contact {

constexpr unsigned kExactPrecision = std::numeric_limits<unsigned>::max() / 2;

// Truncated parametrized curve germ through the origin. Components are
// polynomials in t over a coefficient tower; `exact` marks jets that are the
// whole curve, so compositions with them are decided exactly.
struct CurveJet {
    std::size_t n = 0;
    FieldPtr field;                // tower of the component coefficients
    std::vector<FPoly> components;
    unsigned precision = kExactPrecision;  // exclusive order of validity
    bool exact = true;

    static CurveJet from_components(std::vector<FPoly> comps, FieldPtr field = nullptr,
                                    unsigned precision = kExactPrecision, bool exact = true);
    // components given as univariate holomorphic polynomials in t
    static CurveJet from_polys(const std::vector<Poly>& comps);
    // (c_1 t^{a_1}, ..., c_n t^{a_n}); zero coefficients give zero components
    static CurveJet monomial(std::size_t n, const std::vector<unsigned>& exps,
                             const std::vector<GaussianRational>& coeffs);

    bool is_zero_jet() const;
    bool vanishes_at_origin() const;
    unsigned mult() const;  // min t-order over nonzero components
    CurveJet reparametrized(unsigned k) const;  // t -> t^k
    std::string str() const;
};

// Order of a pullback: exact, only bounded below by the jet precision, or
// certified identically zero.
struct OrderBound {
    enum class Kind { exact, at_least, infinite };
    Kind kind = Kind::infinite;
    unsigned value = 0;

    static OrderBound exactly(unsigned v) { return {Kind::exact, v}; }
    static OrderBound at_least(unsigned v) { return {Kind::at_least, v}; }
    static OrderBound infinite() { return {Kind::infinite, 0}; }
};

// exact polynomial composition g(jet(t))
FPoly pullback_series(const Poly& g, const CurveJet& jet);
OrderBound pullback_order(const Poly& g, const CurveJet& jet);

// Extended nonnegative rational with infinity; the value set of all type
// invariants.
struct ExtRat {
    bool infinite = false;
    Rational v = 0;

    static ExtRat inf() { return {true, 0}; }
    static ExtRat of(Rational r) { return {false, std::move(r)}; }
    static ExtRat of(long num, long den = 1) { return {false, make_rational(num, den)}; }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.v < b.v;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    ExtRat pow(unsigned e) const;
    std::string str() const;
};

// normalized vanishing order ord(g(jet)) / mult(jet)
struct OrderRatio {
    OrderBound numerator;
    unsigned denominator = 1;

    bool resolved() const { return numerator.kind != OrderBound::Kind::at_least; }
    bool is_infinite() const { return numerator.kind == OrderBound::Kind::infinite; }
    ExtRat value() const;      // requires resolved()
    ExtRat lower_value() const;  // valid in all cases
};

OrderRatio order_ratio(const Poly& g, const CurveJet& jet);

// min over generators of order_ratio; equals the infimum over the ideal
OrderRatio tau_curve_ideal(const IdealPresentation& ideal, const CurveJet& jet);

// series in t and conj(t) from composing a real germ with a base-field jet
struct HermSeries {
    std::map<std::pair<unsigned, unsigned>, GaussianRational> terms;
    bool exact = true;
    unsigned precision = kExactPrecision;

    bool is_zero() const { return terms.empty(); }
    std::optional<unsigned> ord() const;
    GaussianRational coeff(unsigned i, unsigned j) const;
};

HermSeries real_pullback(const RealPoly& r, const CurveJet& jet);
OrderBound real_pullback_order(const RealPoly& r, const CurveJet& jet);

// --- bounded curve search -------------------------------------------------

struct CurveSearchConfig {
    unsigned exponent_bound = 4;      // E
    unsigned perturb_degree = 3;      // D
    std::vector<GaussianRational> coefficient_set;  // defaults to 0, +/-1, +/-i

    static CurveSearchConfig defaults();
};

struct CurveSearchResult {
    ExtRat value;          // certified lower bound for the 1-type
    CurveJet witness;
    bool witness_infinite = false;  // all generators pull back to exactly zero
};

// max of tau_curve_ideal over monomial curves with bounded exponents plus a
// best-effort layer of single-term perturbations
CurveSearchResult curve_search_lower_bound(const IdealPresentation& ideal,
                                           const CurveSearchConfig& cfg);

}  // namespace contact

#endif
