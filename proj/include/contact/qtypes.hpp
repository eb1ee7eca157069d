#ifndef CONTACT_QTYPES_HPP
#define CONTACT_QTYPES_HPP

#include <optional>
#include <string>
#include <vector>

#include "contact/curves.hpp"
#include "contact/decomp.hpp"
#include "contact/localalg.hpp"
#include "contact/puiseux.hpp"

namespace contact {

enum class Certificate { exact, lower_bound, upper_bound, sampled_generic };

std::string certificate_name(Certificate c);

struct Witnesses {
    std::optional<std::string> curve;
    std::optional<std::string> forms;
    std::optional<std::string> unitary;
    std::optional<std::string> variety;
};

// A computed invariant together with the strength of the claim. Exact values
// carry both a realizing witness and a matching bound; infinite values carry
// a witness with identically vanishing pullbacks.
struct TypeValue {
    ExtRat value;
    Certificate certificate = Certificate::lower_bound;
    std::optional<ExtRat> lower, upper;  // bracket ends when they differ
    Witnesses witnesses;
    bool samples_unanimous = true;
    bool sampled_components_exact = false;
    std::vector<std::string> notes;

    static TypeValue exact(ExtRat v) { return {v, Certificate::exact, v, v, {}, true, false, {}}; }
};

// exact, or a sampled-generic value assembled purely from exact samples
bool exact_grade(const TypeValue& v);

struct TypeBudget {
    GenericSampler sampler;
    CurveSearchConfig search = CurveSearchConfig::defaults();
    MoraBudget mora;
    PuiseuxConfig puiseux;
};

// germ of a q-dimensional variety used as a test object for the variety type
struct TestVariety {
    enum class Kind { parametric, implicit };
    Kind kind = Kind::parametric;
    unsigned dim = 1;
    std::string label;
    std::vector<Poly> data;  // components in dim parameters, or defining germs

    // parametric varieties: exact Jacobian rank at a random rational point
    bool rank_check(RandomStream& rng, std::size_t ambient_n) const;
};

TypeValue delta1_ideal(const IdealPresentation& ideal, const TypeBudget& budget);
TypeValue delta_q_ideal(const IdealPresentation& ideal, unsigned q, const TypeBudget& budget);
TypeValue dn_ideal(const IdealPresentation& ideal, const TypeBudget& budget);
TypeValue tau_ideal_variety(const IdealPresentation& ideal, const TestVariety& variety, unsigned q,
                            const TypeBudget& budget);
TypeValue dq_ideal(const IdealPresentation& ideal, unsigned q,
                   const std::vector<TestVariety>& varieties, const TypeBudget& budget);

struct HypersurfaceType {
    TypeValue result;               // combined bracket
    std::optional<TypeValue> ideal_route;  // best unitary-ideal value (half the upper end)
    std::optional<ExtRat> curve_route;     // direct curve lower bound
    bool upper_certified = false;          // true when no unitary sampling was involved
};

HypersurfaceType delta_q_hypersurface(const RealPoly& r, unsigned q, const TypeBudget& budget);

TypeValue dq_hypersurface(const RealPoly& r, unsigned q, const std::vector<TestVariety>& varieties,
                          const TypeBudget& budget);

QPositivityReport default_q_positivity_check(const RealPoly& r, unsigned q,
                                             const TypeBudget& budget);

// --- theorem verification harness ------------------------------------------

struct ExpectedValue {
    std::string invariant;  // colength | delta_q | d_q | dn
    unsigned q = 0;
    ExtRat value;
    std::string provenance;  // paper | derived | trivial
};

struct CorpusCase {
    std::string name;
    std::size_t n = 0;
    std::vector<std::string> ideal_text;  // generators, or
    std::string germ_text;                // a real germ; exactly one of the two
    std::vector<unsigned> q_list;
    std::vector<TestVariety> varieties;
    std::vector<ExpectedValue> expected;

    bool is_ideal() const { return !ideal_text.empty(); }
};

enum class CheckStatus { pass, fail, inconclusive };

struct CheckRow {
    std::string case_name;
    std::string inequality;  // stable identifier
    std::string detail;      // rendered values
    CheckStatus status = CheckStatus::inconclusive;
    bool equality = false;   // the bound is attained
};

struct ComputedValue {
    std::string invariant;
    unsigned q = 0;
    TypeValue value;
};

struct CaseReport {
    std::string name;
    std::vector<ComputedValue> values;
    std::vector<CheckRow> rows;
};

struct VerifyReport {
    std::vector<CaseReport> cases;  // sorted by name
    bool all_passed = true;
    unsigned pass_count = 0, fail_count = 0, inconclusive_count = 0;
};

VerifyReport verify_theorems(const std::vector<CorpusCase>& corpus, const TypeBudget& budget);

}  // namespace contact

#endif
