#ifndef CONTACT_LOCALALG_HPP
#define CONTACT_LOCALALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "contact/errors.hpp"
#include "contact/poly.hpp"
#include "contact/sampler.hpp"

namespace contact {

// Finitely generated ideal in the local ring of germs at the origin. A
// generator with a nonzero constant term is a local unit, making the whole
// ideal (1); the flag is computed on construction.
struct IdealPresentation {
    std::size_t n = 0;
    std::vector<Poly> generators;

    static IdealPresentation from(std::size_t n, std::vector<Poly> gens);

    bool contains_unit() const;
    IdealPresentation with_extra(std::vector<Poly> more) const;
    unsigned max_generator_degree() const;
};

// Caps on the standard-basis computation. Exhaustion raises
// BudgetExceededError; the algorithm never truncates silently.
struct MoraBudget {
    std::uint64_t max_steps = 0;  // 0: derive from the input
    unsigned max_degree = 0;      // 0: derive from the input

    static MoraBudget defaults_for(const IdealPresentation& ideal);
    MoraBudget resolved_for(const IdealPresentation& ideal) const;
};

struct StandardBasis {
    std::size_t n = 0;
    LocalOrder order;
    std::vector<Poly> elements;          // monic leading coefficients, sorted by leading monomial
    std::vector<Monomial> leading;       // leading monomials of the elements
    std::optional<std::vector<Monomial>> staircase;  // materialized when finite

    bool staircase_finite() const { return staircase.has_value(); }
    bool leading_ideal_contains(const Monomial& m) const;
};

// Weak normal form with respect to local orders (tangent-cone reduction with
// ecart-based reducer selection).
Poly mora_normal_form(Poly f, const std::vector<Poly>& reducers, const LocalOrder& order,
                      std::uint64_t& steps_left, unsigned max_degree);

StandardBasis mora_standard_basis(const IdealPresentation& ideal, const LocalOrder& order,
                                  const MoraBudget& budget = {});

// dim of the quotient by the ideal as a vector space; nullopt encodes an
// infinite staircase, 0 means the ideal contains a local unit
std::optional<std::uint64_t> colength(const IdealPresentation& ideal, const MoraBudget& budget = {},
                                      const LocalOrder& order = LocalOrder::default_order());

// q-1 linear forms vanishing at the origin whose coefficient matrix has full
// rank
struct LinearFormSet {
    std::size_t n = 0;
    std::vector<Poly> forms;

    static LinearFormSet from_coefficients(std::size_t n,
                                           const std::vector<std::vector<GaussianRational>>& rows);
    static LinearFormSet coordinates(std::size_t n, const std::vector<std::size_t>& indices);
    static LinearFormSet sample(std::size_t n, std::size_t count, RandomStream& rng,
                                long height_bound);

    std::size_t count() const { return forms.size(); }
    Matrix coefficient_matrix() const;
    bool nondegenerate() const;
    std::string str() const;
};

std::optional<std::uint64_t> colength_with_forms(const IdealPresentation& ideal,
                                                 const LinearFormSet& w,
                                                 const MoraBudget& budget = {});

struct GenericColength {
    std::optional<std::uint64_t> value;  // nullopt: infinite
    LinearFormSet witness;
    bool unanimous = true;  // all draws agreed (coordinate sets excluded)
};

// Minimum of colength_with_forms over seeded random draws plus every
// coordinate-subspace form set. The minimum realizes the generic value for
// any generic draw; the result is reported as sampled, never as certified.
GenericColength generic_colength(const IdealPresentation& ideal, unsigned q,
                                 const GenericSampler& sampler, const MoraBudget& budget = {});

}  // namespace contact

#endif
