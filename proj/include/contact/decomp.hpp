#ifndef CONTACT_DECOMP_HPP
#define CONTACT_DECOMP_HPP

#include <optional>
#include <string>
#include <vector>

#include "contact/curves.hpp"
#include "contact/localalg.hpp"
#include "contact/matrix.hpp"
#include "contact/realpoly.hpp"

namespace contact {

// r = Re{h} + sum sign * weight * |p|^2, exactly. h collects the pure terms
// with doubled coefficients so that Re{h} reproduces them together with their
// conjugates.
struct HoloSummand {
    int sign = 1;     // +1 or -1
    Rational weight;  // positive
    Poly p;
};

struct HoloDecomposition {
    std::size_t n = 0;
    Poly h;
    std::vector<HoloSummand> summands;

    unsigned positive_count() const;
    unsigned negative_count() const;
    unsigned pair_size() const;  // N = max(#positive, #negative)
    RealPoly reconstruct() const;
};

// drops all terms of total degree > k; idempotent
RealPoly truncate_jet(const RealPoly& r, unsigned k);

// Hermitian congruence diagonalization of the mixed part over Q(i) with
// rational pivots; exact reconstruction invariant holds by construction.
HoloDecomposition polarize(const RealPoly& r);

class NonSquareWeightError : public std::runtime_error {
  public:
    NonSquareWeightError(const Rational& weight, std::optional<Integer> suggested)
        : std::runtime_error("summand weight " + rational_str(weight) +
                             " is not the square of a rational" +
                             (suggested ? "; rescale the germ by " + suggested->get_str()
                                        : "")),
          weight_(weight),
          suggested_multiplier_(std::move(suggested)) {}

    const Rational& weight() const { return weight_; }
    const std::optional<Integer>& suggested_multiplier() const { return suggested_multiplier_; }

  private:
    Rational weight_;
    std::optional<Integer> suggested_multiplier_;
};

struct FGPair {
    std::vector<Poly> f, g;  // padded to equal length N
};

// f_j = sqrt(weight) p_j for positive signs, g likewise for negative; fails
// loudly on non-square weights, naming the weight and the minimal positive
// integer multiplier that would fix every weight at once when one exists
FGPair extract_fg(const HoloDecomposition& d);

// exact unitary matrix: random product of permutations, unit-modulus
// diagonals and two-dimensional rotations with Pythagorean entries
Matrix sample_unitary(std::size_t n, RandomStream& rng);

// the ideal (h, f - Ug)
IdealPresentation ideal_from_decomposition(const HoloDecomposition& d, const Matrix& u);

// --- positivity along curves ------------------------------------------------

struct QPositivityCurveVerdict {
    std::string curve;
    bool applicable = false;  // pullback of h and of every paired form vanishes
    std::string skip_reason;
    bool pullback_vanishes = false;  // the curve lies inside the hypersurface
    std::optional<unsigned> order;
    bool order_even = false;
    GaussianRational diagonal_coefficient;  // coefficient of t^a conj(t)^a, 2a = order
    bool violation = false;
};

struct QPositivityReport {
    std::vector<QPositivityCurveVerdict> curves;
    bool violation_found = false;
    std::string summary;  // "no violation found" or a description of the witness
};

// Tests the even-order and nonvanishing-diagonal-coefficient conditions on
// each supplied curve that annihilates h and lies in the zero locus of its
// paired form set. Never proves positivity; only refutes or reports no
// violation among the tested curves.
QPositivityReport check_q_positivity(const RealPoly& r, unsigned q,
                                     const std::vector<CurveJet>& curves,
                                     const std::vector<LinearFormSet>& form_family);

}  // namespace contact

#endif
