#ifndef CONTACT_PUISEUX_HPP
#define CONTACT_PUISEUX_HPP

#include <vector>

#include "contact/curves.hpp"
#include "contact/numberfield.hpp"
#include "contact/poly.hpp"

namespace contact {

struct PuiseuxConfig {
    unsigned precision = 24;  // certified jet precision target in t
    ExtensionBudget extensions;
    unsigned max_depth = 96;
    std::uint64_t max_steps = 1u << 18;
};

// One branch of a plane curve germ. The jet parametrizes x = jet[0](t),
// y = jet[1](t); conjugate branches over the base field are represented once
// and counted by field_degree.
struct PuiseuxBranch {
    unsigned ramification = 1;
    unsigned field_degree = 1;
    CurveJet jet;  // n = 2
};

// Branch expansion of f(x, y) = 0 at the origin; f in two variables,
// vanishing at 0, not identically zero. Input is squarefree-reduced
// internally. Every returned jet either satisfies f(jet) = 0 identically
// (jet.exact) or carries certified precision >= cfg.precision.
std::vector<PuiseuxBranch> newton_puiseux(const Poly& f, const PuiseuxConfig& cfg = {});

// gcd of two-variable polynomials (germ factor common to both)
Poly bivariate_gcd(const Poly& a, const Poly& b);
Poly bivariate_squarefree_part(const Poly& f);

}  // namespace contact

#endif
