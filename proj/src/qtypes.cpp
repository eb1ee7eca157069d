#include "contact/qtypes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "contact/parser.hpp"

namespace contact {

std::string certificate_name(Certificate c) {
    switch (c) {
        case Certificate::exact: return "exact";
        case Certificate::lower_bound: return "lower_bound";
        case Certificate::upper_bound: return "upper_bound";
        case Certificate::sampled_generic: return "sampled_generic";
    }
    return "?";
}

bool exact_grade(const TypeValue& v) {
    if (v.certificate == Certificate::exact) return true;
    return v.certificate == Certificate::sampled_generic && v.samples_unanimous &&
           v.sampled_components_exact;
}

namespace {

std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ExtRat ext_min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
ExtRat ext_max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

ExtRat ext_mul(const ExtRat& a, const ExtRat& b) {
    if (a.infinite || b.infinite) return ExtRat::inf();
    return ExtRat::of(a.v * b.v);
}

// ---------------------------------------------------------------------------
// elimination of exact linear-form generators by a linear change of variables
// ---------------------------------------------------------------------------

struct LinearReduction {
    std::size_t n = 0, m = 0;      // ambient and reduced dimensions
    std::vector<Poly> generators;  // reduced generators in m variables (may be empty)
    Matrix embed;                  // n x m, z = embed * y parametrizes the cut subspace
};

bool is_exact_linear_form(const Poly& g) {
    return g.degree() == 1 && !g.is_unit_in_local_ring() && !g.is_zero();
}

// kernel basis of a full set of linear forms; also used to slice germs
Matrix kernel_embedding(std::size_t n, const std::vector<Poly>& forms) {
    std::size_t k = forms.size();
    Matrix a(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Monomial var(n);
            var[j] = 1;
            a.at(i, j) = forms[i].coefficient(var);
        }
    // row-reduce, tracking pivot columns
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < k; ++col) {
        std::size_t piv = r;
        while (piv < k && a.at(piv, col).is_zero()) ++piv;
        if (piv == k) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
        GaussianRational inv = a.at(r, col).inverse();
        for (std::size_t j = 0; j < n; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            GaussianRational f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (std::find(pivot_cols.begin(), pivot_cols.end(), j) == pivot_cols.end())
            free_cols.push_back(j);
    Matrix e(n, free_cols.size());
    for (std::size_t jf = 0; jf < free_cols.size(); ++jf) {
        e.at(free_cols[jf], jf) = GaussianRational(1);
        for (std::size_t i = 0; i < r; ++i)
            e.at(pivot_cols[i], jf) = -a.at(i, free_cols[jf]);
    }
    return e;
}

std::vector<Poly> embedding_images(const Matrix& e) {
    std::vector<Poly> images;
    std::size_t n = e.rows(), m = e.cols();
    for (std::size_t i = 0; i < n; ++i) {
        Poly img(m);
        for (std::size_t j = 0; j < m; ++j)
            if (!e.at(i, j).is_zero()) img += Poly::variable(m, j, e.at(i, j));
        images.push_back(img);
    }
    return images;
}

LinearReduction reduce_linear_generators(const IdealPresentation& ideal) {
    LinearReduction red;
    red.n = ideal.n;
    red.m = ideal.n;
    red.embed = Matrix::identity(ideal.n);
    red.generators = ideal.generators;

    while (true) {
        std::vector<Poly> forms, rest;
        for (const auto& g : red.generators)
            (is_exact_linear_form(g) ? forms : rest).push_back(g);
        if (forms.empty()) break;
        Matrix e = kernel_embedding(red.m, forms);
        std::size_t m2 = e.cols();
        std::vector<Poly> images = embedding_images(e);
        std::vector<Poly> next;
        for (const auto& g : rest) {
            Poly sub = g.substitute(m2, [&](std::size_t i) -> const Poly& { return images[i]; });
            if (!sub.is_zero()) next.push_back(std::move(sub));
        }
        red.generators = std::move(next);
        red.embed = red.embed * e;
        red.m = m2;
        if (red.m == 0) break;
    }
    return red;
}

CurveJet lift_jet(const CurveJet& jet, const Matrix& embed) {
    std::size_t n = embed.rows(), m = embed.cols();
    if (jet.n != m) throw std::logic_error("jet dimension does not match the embedding");
    std::vector<FPoly> comps(n);
    for (std::size_t i = 0; i < n; ++i) {
        FPoly acc;
        for (std::size_t j = 0; j < m; ++j) {
            if (embed.at(i, j).is_zero()) continue;
            acc = fp_add(acc, fp_scale(jet.components[j], FieldElem(embed.at(i, j))));
        }
        comps[i] = std::move(acc);
    }
    return CurveJet::from_components(std::move(comps), jet.field, jet.precision, jet.exact);
}

// ---------------------------------------------------------------------------
// exact route for monomial ideals: the normalized-order optimum over curves
// depends only on the component order vector, so it is a small exact linear
// program over the exponent data
// ---------------------------------------------------------------------------

struct MonomialRoute {
    ExtRat value;
    CurveJet witness;
    bool infinite = false;
};

std::optional<std::vector<Monomial>> monomial_exponents(const IdealPresentation& ideal) {
    std::vector<Monomial> out;
    for (const auto& g : ideal.generators) {
        if (!g.is_monomial()) return std::nullopt;
        out.push_back(g.terms().begin()->first);
    }
    return out;
}

// maximize c subject to rows * x >= rhs-style constraints by enumerating
// basic solutions; returns the optimum and a maximizer
struct TinyLP {
    // constraints: sum coeff[i] * x[i] >= bound, variables x = (u_free..., c)
    struct Row {
        std::vector<Rational> coeff;
        Rational bound;
    };
    std::vector<Row> rows;
    std::size_t dim = 0;

    std::optional<std::pair<Rational, std::vector<Rational>>> maximize_last() const {
        std::optional<std::pair<Rational, std::vector<Rational>>> best;
        std::vector<std::size_t> idx(rows.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::vector<std::size_t> pick;
        enumerate(idx, 0, pick, best);
        return best;
    }

  private:
    void enumerate(const std::vector<std::size_t>& idx, std::size_t start,
                   std::vector<std::size_t>& pick,
                   std::optional<std::pair<Rational, std::vector<Rational>>>& best) const {
        if (pick.size() == dim) {
            try_vertex(pick, best);
            return;
        }
        for (std::size_t i = start; i < idx.size(); ++i) {
            pick.push_back(idx[i]);
            enumerate(idx, i + 1, pick, best);
            pick.pop_back();
        }
    }

    void try_vertex(const std::vector<std::size_t>& pick,
                    std::optional<std::pair<Rational, std::vector<Rational>>>& best) const {
        Matrix a(dim, dim);
        std::vector<GaussianRational> b(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t cix = 0; cix < dim; ++cix)
                a.at(r, cix) = GaussianRational(rows[pick[r]].coeff[cix]);
            b[r] = GaussianRational(rows[pick[r]].bound);
        }
        if (!a.invertible()) return;
        std::vector<GaussianRational> x = a.solve(b);
        for (const auto& row : rows) {
            GaussianRational acc;
            for (std::size_t cix = 0; cix < dim; ++cix)
                acc += GaussianRational(row.coeff[cix]) * x[cix];
            if (acc.re() < row.bound) return;  // infeasible vertex
        }
        Rational c = x.back().re();
        if (!best || c > best->first) {
            std::vector<Rational> point;
            for (const auto& v : x) point.push_back(v.re());
            best = {c, point};
        }
    }
};

std::optional<MonomialRoute> monomial_exact_delta1(const IdealPresentation& ideal) {
    auto exps = monomial_exponents(ideal);
    if (!exps) return std::nullopt;
    std::size_t m = ideal.n;
    std::size_t gcount = exps->size();

    auto support_meets = [&](const Monomial& a, const std::vector<bool>& s) {
        for (std::size_t j = 0; j < m; ++j)
            if (s[j] && a[j] > 0) return true;
        return false;
    };

    // a coordinate subspace inside the zero set gives infinite type
    for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        std::vector<bool> s(m, false);
        for (std::size_t j = 0; j < m; ++j) s[j] = (mask >> j) & 1;
        bool all_meet = true;
        for (const auto& a : *exps)
            if (!support_meets(a, s)) all_meet = false;
        if (!all_meet) continue;
        std::vector<unsigned> e(m, 1);
        std::vector<GaussianRational> coeffs(m, GaussianRational(1));
        for (std::size_t j = 0; j < m; ++j)
            if (s[j]) coeffs[j] = GaussianRational(0);
        MonomialRoute route;
        route.value = ExtRat::inf();
        route.infinite = true;
        route.witness = CurveJet::monomial(m, e, coeffs);
        return route;
    }

    std::optional<Rational> best;
    std::vector<Rational> best_u;
    std::vector<bool> best_mask;
    for (std::uint32_t mask = 0; mask + 1 < (1u << m); ++mask) {
        std::vector<bool> s(m, false);
        std::vector<std::size_t> freev;
        for (std::size_t j = 0; j < m; ++j) {
            s[j] = (mask >> j) & 1;
            if (!s[j]) freev.push_back(j);
        }
        std::vector<std::size_t> survivors;
        for (std::size_t g = 0; g < gcount; ++g)
            if (!support_meets((*exps)[g], s)) survivors.push_back(g);
        if (survivors.empty()) continue;  // handled by the infinite scan
        for (std::size_t j0pos = 0; j0pos < freev.size(); ++j0pos) {
            // variables: u_j for free j != j0 (j0 pinned to 1), then c
            std::vector<std::size_t> uvars;
            for (std::size_t t = 0; t < freev.size(); ++t)
                if (t != j0pos) uvars.push_back(freev[t]);
            TinyLP lp;
            lp.dim = uvars.size() + 1;
            for (std::size_t g : survivors) {
                TinyLP::Row row;
                row.coeff.assign(lp.dim, Rational(0));
                Rational fixed = 0;
                for (std::size_t t = 0; t < uvars.size(); ++t)
                    row.coeff[t] = Rational(static_cast<long>((*exps)[g][uvars[t]]));
                fixed = Rational(static_cast<long>((*exps)[g][freev[j0pos]]));
                row.coeff.back() = Rational(-1);
                row.bound = -fixed;  // sum a_j u_j + a_{j0} - c >= 0
                lp.rows.push_back(std::move(row));
            }
            for (std::size_t t = 0; t < uvars.size(); ++t) {
                TinyLP::Row row;
                row.coeff.assign(lp.dim, Rational(0));
                row.coeff[t] = Rational(1);
                row.bound = Rational(1);
                lp.rows.push_back(std::move(row));
            }
            {
                TinyLP::Row row;  // c >= 0 keeps the polyhedron pointed
                row.coeff.assign(lp.dim, Rational(0));
                row.coeff.back() = Rational(1);
                row.bound = Rational(0);
                lp.rows.push_back(std::move(row));
            }
            auto opt = lp.maximize_last();
            if (!opt) continue;
            if (!best || opt->first > *best) {
                best = opt->first;
                best_u.assign(m, Rational(0));
                for (std::size_t t = 0; t < uvars.size(); ++t) best_u[uvars[t]] = opt->second[t];
                best_u[freev[j0pos]] = 1;
                best_mask = s;
            }
        }
    }
    if (!best) return std::nullopt;

    // scale the maximizer to an integer exponent vector for the witness curve
    Integer den = 1;
    for (std::size_t j = 0; j < m; ++j)
        if (!best_mask[j]) den = lcm(den, best_u[j].get_den());
    std::vector<unsigned> e(m, 1);
    std::vector<GaussianRational> coeffs(m, GaussianRational(1));
    for (std::size_t j = 0; j < m; ++j) {
        if (best_mask[j]) {
            coeffs[j] = GaussianRational(0);
        } else {
            Rational scaled = best_u[j] * den;
            e[j] = static_cast<unsigned>(scaled.get_num().get_ui());
        }
    }
    MonomialRoute route;
    route.value = ExtRat::of(*best);
    route.witness = CurveJet::monomial(m, e, coeffs);
    return route;
}

// ---------------------------------------------------------------------------
// two-variable machine: branch candidates give the lower end, the paired
// branch formula for maps with an isolated zero gives the matching upper end
// ---------------------------------------------------------------------------

struct TwoVarResult {
    ExtRat lower;
    std::optional<ExtRat> upper;
    CurveJet witness;
    bool witness_infinite = false;
    std::vector<std::string> notes;
};

std::vector<PuiseuxBranch> branches_resolved(const Poly& f, const TypeBudget& budget,
                                             unsigned precision) {
    PuiseuxConfig cfg = budget.puiseux;
    cfg.precision = std::max(cfg.precision, precision);
    return newton_puiseux(f, cfg);
}

// max over branches of f of ord(g on branch)/mult, raising precision until
// every order resolves
std::optional<ExtRat> branch_pair_value(const Poly& f, const Poly& g, const TypeBudget& budget) {
    unsigned precision = budget.puiseux.precision;
    for (int attempt = 0; attempt < 6; ++attempt) {
        bool unresolved = false;
        ExtRat best = ExtRat::of(0);
        for (const auto& br : branches_resolved(f, budget, precision)) {
            OrderRatio r = order_ratio(g, br.jet);
            if (!r.resolved()) {
                unresolved = true;
                break;
            }
            best = ext_max(best, r.value());
        }
        if (!unresolved) return best;
        precision *= 2;
        if (precision > 1u << 12) break;
    }
    return std::nullopt;
}

TwoVarResult two_var_delta1(const IdealPresentation& ideal, const TypeBudget& budget) {
    TwoVarResult out;
    out.lower = ExtRat::of(0);

    auto d = colength(ideal, budget.mora);
    if (!d) {
        // positive-dimensional: the generators share a germ factor whose
        // branches are common zero curves
        Poly g = ideal.generators.front();
        for (std::size_t i = 1; i < ideal.generators.size(); ++i)
            g = bivariate_gcd(g, ideal.generators[i]);
        if (!g.ord0() || *g.ord0() < 1)
            throw std::logic_error("infinite colength without a common factor in two variables");
        auto branches = newton_puiseux(g, budget.puiseux);
        if (branches.empty()) throw std::logic_error("common factor with no branches");
        out.lower = ExtRat::inf();
        out.upper = ExtRat::inf();
        out.witness = branches.front().jet;
        out.witness_infinite = true;
        out.notes.push_back("every generator is divisible by " + to_string(g) +
                            "; its branches are common zero curves");
        return out;
    }

    // candidate branches of each generator, scored against the whole ideal
    bool have_witness = false;
    auto consider_branches = [&](const Poly& src) {
        unsigned precision = budget.puiseux.precision;
        for (int attempt = 0; attempt < 6; ++attempt) {
            bool unresolved = false;
            for (const auto& br : branches_resolved(src, budget, precision)) {
                OrderRatio r = tau_curve_ideal(ideal, br.jet);
                if (!r.resolved()) {
                    unresolved = true;
                    break;
                }
                ExtRat v = r.value();
                if (!have_witness || out.lower < v) {
                    out.lower = v;
                    out.witness = br.jet;
                    have_witness = true;
                }
            }
            if (!unresolved) return;
            precision *= 2;
            if (precision > 1u << 12) return;
        }
    };
    for (const auto& g : ideal.generators)
        if (g.ord0() && *g.ord0() >= 1) consider_branches(g);

    // random generator pairs: each pair with an isolated common zero bounds
    // the type from above through its own branch data
    RandomStream rng = budget.sampler.stream(fnv64("two-var-pairs"));
    std::optional<ExtRat> pair_upper;
    unsigned pairs_wanted = std::max(2u, budget.sampler.sample_count / 2);
    for (unsigned k = 0; k < pairs_wanted; ++k) {
        Poly u(2), v(2);
        for (int tries = 0; tries < 32; ++tries) {
            u = Poly(2);
            v = Poly(2);
            for (const auto& g : ideal.generators) {
                u += g.scaled(GaussianRational(Rational(rng.next_int(-budget.sampler.height_bound,
                                                                     budget.sampler.height_bound))));
                v += g.scaled(GaussianRational(Rational(rng.next_int(-budget.sampler.height_bound,
                                                                     budget.sampler.height_bound))));
            }
            if (u.is_zero() || v.is_zero() || u == v) continue;
            auto dc = colength(IdealPresentation::from(2, {u, v}), budget.mora);
            if (dc) break;
            u = Poly(2);
        }
        if (u.is_zero() || v.is_zero()) continue;
        consider_branches(u);
        consider_branches(v);
        auto a = branch_pair_value(u, v, budget);
        auto b = branch_pair_value(v, u, budget);
        if (a && b) {
            ExtRat p = ext_max(*a, *b);
            pair_upper = pair_upper ? ext_min(*pair_upper, p) : p;
        }
    }

    ExtRat dval = ExtRat::of(Rational(static_cast<long>(*d)));
    out.upper = pair_upper ? ext_min(*pair_upper, dval) : dval;
    if (pair_upper)
        out.notes.push_back("upper end from branch data of generator pairs with isolated zeros");
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// the 1-type of an ideal
// ---------------------------------------------------------------------------

TypeValue delta1_ideal(const IdealPresentation& ideal, const TypeBudget& budget) {
    if (ideal.contains_unit())
        throw UnsupportedConfigError("the ideal contains a local unit; the type is undefined");

    LinearReduction red = reduce_linear_generators(ideal);
    TypeValue out;

    if (red.m == 0) {
        // the ideal contains a full set of independent linear forms
        out = TypeValue::exact(ExtRat::of(1));
        std::vector<unsigned> e(ideal.n, 1);
        std::vector<GaussianRational> c(ideal.n, GaussianRational(0));
        c[0] = GaussianRational(1);
        out.witnesses.curve = CurveJet::monomial(ideal.n, e, c).str();
        out.notes.push_back("contains a maximal set of independent linear forms");
        return out;
    }

    if (red.generators.empty()) {
        // every generator lies in the span of the linear forms; the cut
        // subspace consists of common zeros
        std::vector<unsigned> e(red.m, 1);
        std::vector<GaussianRational> c(red.m, GaussianRational(0));
        c[0] = GaussianRational(1);
        CurveJet inplane = CurveJet::monomial(red.m, e, c);
        out = TypeValue::exact(ExtRat::inf());
        out.witnesses.curve = lift_jet(inplane, red.embed).str();
        out.notes.push_back("a positive-dimensional linear subspace lies in the zero set");
        return out;
    }

    IdealPresentation reduced = IdealPresentation::from(red.m, red.generators);
    if (red.m < ideal.n)
        out.notes.push_back("eliminated " + std::to_string(ideal.n - red.m) +
                            " linear generator(s) by a linear change of variables");

    auto lift_str = [&](const CurveJet& jet) { return lift_jet(jet, red.embed).str(); };

    if (red.m == 1) {
        unsigned best = kExactPrecision;
        for (const auto& g : reduced.generators) best = std::min(best, *g.ord0());
        out.value = ExtRat::of(static_cast<long>(best));
        out.certificate = Certificate::exact;
        out.lower = out.upper = out.value;
        std::vector<unsigned> e{1};
        std::vector<GaussianRational> c{GaussianRational(1)};
        out.witnesses.curve = lift_str(CurveJet::monomial(1, e, c));
        out.notes.push_back("single-variable germ: the type is the minimal vanishing order");
        return out;
    }

    if (auto mono = monomial_exact_delta1(reduced)) {
        out.value = mono->value;
        out.certificate = Certificate::exact;
        out.lower = out.upper = out.value;
        out.witnesses.curve = lift_str(mono->witness);
        out.notes.push_back(mono->infinite
                                ? "a coordinate subspace lies inside the zero set"
                                : "monomial ideal: optimal order vector computed exactly");
        return out;
    }

    // general route: certified curve lower bound against the colength bound,
    // with the branch machinery closing the gap in two variables
    CurveSearchResult search = curve_search_lower_bound(reduced, budget.search);
    ExtRat lower = search.value;
    CurveJet witness = search.witness;
    bool witness_inf = search.witness_infinite;
    std::optional<ExtRat> upper;

    if (red.m == 2) {
        TwoVarResult tv = two_var_delta1(reduced, budget);
        if (lower < tv.lower || tv.witness_infinite) {
            lower = tv.lower;
            witness = tv.witness;
            witness_inf = tv.witness_infinite;
        }
        upper = tv.upper;
        for (auto& note : tv.notes) out.notes.push_back(std::move(note));
    } else {
        auto d = colength(reduced, budget.mora);
        if (d) upper = ExtRat::of(Rational(static_cast<long>(*d)));
    }

    out.lower = lower;
    out.upper = upper;
    out.witnesses.curve = lift_str(witness);
    if (witness_inf) {
        out.value = ExtRat::inf();
        out.certificate = Certificate::exact;
        out.lower = out.upper = out.value;
        out.notes.push_back("witness curve with identically vanishing generator pullbacks");
    } else if (upper && lower == *upper) {
        out.value = lower;
        out.certificate = Certificate::exact;
    } else {
        out.value = lower;
        out.certificate = Certificate::lower_bound;
        if (!upper)
            out.notes.push_back(
                "positive-dimensional zero set suspected but no vanishing witness found");
    }
    return out;
}

// ---------------------------------------------------------------------------
// q-type of an ideal via sampled nondegenerate linear slices
// ---------------------------------------------------------------------------

TypeValue delta_q_ideal(const IdealPresentation& ideal, unsigned q, const TypeBudget& budget) {
    if (q < 1 || q > ideal.n) throw UnsupportedConfigError("q out of range 1..n");
    if (q == 1) return delta1_ideal(ideal, budget);

    RandomStream rng = budget.sampler.stream(fnv64("delta-q") ^ q);
    std::optional<TypeValue> best;
    std::optional<LinearFormSet> best_w;
    bool unanimous = true;
    bool components_exact = true;
    std::optional<ExtRat> lower_min, upper_min;
    std::optional<ExtRat> first_value;

    for (unsigned s = 0; s < budget.sampler.sample_count; ++s) {
        LinearFormSet w = LinearFormSet::sample(ideal.n, q - 1, rng, budget.sampler.height_bound);
        TypeValue t = delta1_ideal(ideal.with_extra(w.forms), budget);
        if (!first_value)
            first_value = t.value;
        else if (!(*first_value == t.value))
            unanimous = false;
        if (!exact_grade(t)) components_exact = false;
        if (t.lower) lower_min = lower_min ? ext_min(*lower_min, *t.lower) : *t.lower;
        if (t.upper) upper_min = upper_min ? ext_min(*upper_min, *t.upper) : *t.upper;
        if (!best || t.value < best->value) {
            best = t;
            best_w = w;
        }
    }
    TypeValue out = *best;
    out.certificate = Certificate::sampled_generic;
    out.samples_unanimous = unanimous;
    out.sampled_components_exact = components_exact;
    out.lower = lower_min;
    out.upper = upper_min;
    out.witnesses.forms = best_w->str();
    out.notes.push_back("minimum over " + std::to_string(budget.sampler.sample_count) +
                        " sampled nondegenerate slices (the infimum is attained generically)");
    if (!unanimous) out.notes.push_back("slice samples disagreed; value may not be generic");
    return out;
}

TypeValue dn_ideal(const IdealPresentation& ideal, const TypeBudget& budget) {
    GenericColength g = generic_colength(ideal, static_cast<unsigned>(ideal.n), budget.sampler,
                                         budget.mora);
    TypeValue out;
    out.value = g.value ? ExtRat::of(Rational(static_cast<long>(*g.value))) : ExtRat::inf();
    out.certificate = Certificate::sampled_generic;
    out.samples_unanimous = g.unanimous;
    out.sampled_components_exact = true;  // each draw is an exact colength
    out.lower = out.upper = out.value;
    out.witnesses.forms = g.witness.str();
    out.notes.push_back("generic colength after adjoining n-1 sampled linear forms");
    return out;
}

// ---------------------------------------------------------------------------
// variety type
// ---------------------------------------------------------------------------

bool TestVariety::rank_check(RandomStream& rng, std::size_t ambient_n) const {
    if (kind != Kind::parametric) return true;
    if (data.size() != ambient_n) return false;
    std::vector<GaussianRational> pt;
    for (unsigned j = 0; j < dim; ++j)
        pt.emplace_back(make_rational(rng.next_int(1, 97), 101));
    Matrix jac(ambient_n, dim);
    for (std::size_t i = 0; i < ambient_n; ++i)
        for (unsigned j = 0; j < dim; ++j) jac.at(i, j) = data[i].derivative(j).evaluate(pt);
    return jac.rank() == dim;
}

namespace {

struct SampleAggregate {
    std::map<std::string, std::pair<ExtRat, unsigned>> votes;
    bool any = false;

    void add(const ExtRat& v) {
        auto [it, fresh] = votes.try_emplace(v.str(), v, 0u);
        ++it->second.second;
        any = true;
    }

    // modal value; ties resolved toward the smaller value
    std::pair<ExtRat, bool> modal() const {
        std::optional<ExtRat> best;
        unsigned best_count = 0;
        for (const auto& [k, vc] : votes) {
            if (vc.second > best_count ||
                (vc.second == best_count && best && vc.first < *best)) {
                best = vc.first;
                best_count = vc.second;
            }
        }
        return {*best, votes.size() == 1};
    }
};

// curves cut out of a variety by one sampled slice
struct SlicedCurves {
    std::vector<CurveJet> jets;
    bool degenerate = false;
};

SlicedCurves slice_parametric(const TestVariety& v, const LinearFormSet& w,
                              const TypeBudget& budget) {
    SlicedCurves out;
    // pull the forms back through the parametrization: q = 2 gives one plane
    // curve in the two parameters
    Poly wpsi(2);
    {
        const Poly& form = w.forms.at(0);
        std::size_t n = v.data.size();
        Poly acc(2);
        for (std::size_t i = 0; i < n; ++i) {
            Monomial var(n);
            var[i] = 1;
            GaussianRational c = form.coefficient(var);
            if (!c.is_zero()) acc += v.data[i].scaled(c);
        }
        wpsi = acc;
    }
    if (wpsi.is_zero() || !wpsi.ord0() || *wpsi.ord0() < 1) {
        out.degenerate = true;
        return out;
    }
    for (const auto& br : newton_puiseux(wpsi, budget.puiseux)) {
        std::vector<FPoly> comps;
        for (const auto& component : v.data) comps.push_back(pullback_series(component, br.jet));
        out.jets.push_back(CurveJet::from_components(std::move(comps), br.jet.field,
                                                     br.jet.precision, br.jet.exact));
    }
    return out;
}

SlicedCurves slice_implicit(const TestVariety& v, const LinearFormSet& w, std::size_t n,
                            const TypeBudget& budget) {
    SlicedCurves out;
    Matrix e = kernel_embedding(n, w.forms);
    if (e.cols() != 2) {
        out.degenerate = true;
        return out;
    }
    std::vector<Poly> images = embedding_images(e);
    Poly sliced(2);
    bool first = true;
    for (const auto& g : v.data) {
        Poly s = g.substitute(2, [&](std::size_t i) -> const Poly& { return images[i]; });
        if (s.is_zero()) continue;
        sliced = first ? s : bivariate_gcd(sliced, s);
        first = false;
    }
    if (first || sliced.is_zero() || !sliced.ord0() || *sliced.ord0() < 1) {
        out.degenerate = true;
        return out;
    }
    for (const auto& br : newton_puiseux(sliced, budget.puiseux)) {
        CurveJet lifted = lift_jet(br.jet, e);
        out.jets.push_back(std::move(lifted));
    }
    return out;
}

}  // namespace

TypeValue tau_ideal_variety(const IdealPresentation& ideal, const TestVariety& variety, unsigned q,
                            const TypeBudget& budget) {
    std::size_t n = ideal.n;
    if (variety.dim != q)
        throw UnsupportedConfigError("variety dimension does not match q");
    if (q == static_cast<unsigned>(n)) {
        TypeValue out = dn_ideal(ideal, budget);
        out.notes.push_back("full-dimensional variety: generic slice colength route");
        return out;
    }

    RandomStream rng = budget.sampler.stream(fnv64("tau-variety") ^ fnv64(variety.label));
    if (variety.kind == TestVariety::Kind::parametric) {
        if (!variety.rank_check(rng, n))
            throw UnsupportedConfigError("parametric variety fails the generic rank check");
    }

    auto evaluate_jets = [&](const std::vector<CurveJet>& jets) -> std::optional<ExtRat> {
        // tau of one slice: max over the intersection curves
        std::optional<ExtRat> best;
        for (const auto& jet : jets) {
            OrderRatio r = tau_curve_ideal(ideal, jet);
            if (!r.resolved()) return std::nullopt;
            ExtRat v = r.value();
            best = best ? ext_max(*best, v) : v;
        }
        return best;
    };

    if (q == 1) {
        std::vector<CurveJet> jets;
        if (variety.kind == TestVariety::Kind::parametric) {
            jets.push_back(CurveJet::from_polys(variety.data));
        } else {
            if (n != 2)
                throw UnsupportedConfigError(
                    "implicit curves are supported in two variables only; supply a "
                    "parametrization or fall back to monomial-curve sampling for a lower bound");
            Poly g = variety.data.front();
            for (std::size_t i = 1; i < variety.data.size(); ++i)
                g = bivariate_gcd(g, variety.data[i]);
            for (const auto& br : newton_puiseux(g, budget.puiseux)) jets.push_back(br.jet);
        }
        auto v = evaluate_jets(jets);
        if (!v) throw BudgetExceededError("pullback orders exceeded the branch precision");
        TypeValue out = TypeValue::exact(*v);
        out.witnesses.variety = variety.label;
        return out;
    }

    bool supported = (variety.kind == TestVariety::Kind::parametric && q == 2) ||
                     (variety.kind == TestVariety::Kind::implicit && n - q + 1 == 2);
    if (!supported)
        throw UnsupportedConfigError(
            "unsupported variety configuration (q=" + std::to_string(q) + ", n=" +
            std::to_string(n) +
            "); fall back to monomial-curve sampling on the intersection ideal for a lower bound");

    SampleAggregate agg;
    unsigned degenerate = 0;
    for (unsigned s = 0; s < budget.sampler.sample_count; ++s) {
        LinearFormSet w = LinearFormSet::sample(n, q - 1, rng, budget.sampler.height_bound);
        SlicedCurves sliced = variety.kind == TestVariety::Kind::parametric
                                  ? slice_parametric(variety, w, budget)
                                  : slice_implicit(variety, w, n, budget);
        if (sliced.degenerate || sliced.jets.empty()) {
            ++degenerate;
            continue;
        }
        auto v = evaluate_jets(sliced.jets);
        if (!v) throw BudgetExceededError("pullback orders exceeded the branch precision");
        agg.add(*v);
    }
    if (!agg.any)
        throw UnsupportedConfigError("every sampled slice was degenerate for this variety");
    auto [value, unanimousq] = agg.modal();
    TypeValue out;
    out.value = value;
    out.certificate = Certificate::sampled_generic;
    out.samples_unanimous = unanimousq;
    out.sampled_components_exact = true;
    out.lower = out.upper = value;
    out.witnesses.variety = variety.label;
    if (degenerate)
        out.notes.push_back(std::to_string(degenerate) + " degenerate slice sample(s) skipped");
    if (!unanimousq) out.notes.push_back("slice samples disagreed; modal value reported");
    return out;
}

TypeValue dq_ideal(const IdealPresentation& ideal, unsigned q,
                   const std::vector<TestVariety>& varieties, const TypeBudget& budget) {
    if (q < 1 || q > ideal.n) throw UnsupportedConfigError("q out of range 1..n");
    if (q == static_cast<unsigned>(ideal.n)) {
        TypeValue out = dn_ideal(ideal, budget);
        out.certificate = Certificate::exact;
        out.notes.push_back("q = n: the variety type equals the generic slice colength");
        return out;
    }
    if (q == 1) {
        TypeValue out = delta1_ideal(ideal, budget);
        out.notes.push_back("q = 1: the variety type agrees with the 1-type");
        return out;
    }

    std::optional<TypeValue> best;
    for (const auto& v : varieties) {
        if (v.dim != q)
            throw UnsupportedConfigError("variety '" + v.label + "' does not have dimension q");
        TypeValue t = tau_ideal_variety(ideal, v, q, budget);
        if (!best || best->value < t.value) best = t;
    }

    TypeValue delta = delta_q_ideal(ideal, q, budget);
    TypeValue out;
    if (best) {
        out = *best;
        out.lower = out.value;
        out.upper.reset();
        out.certificate = Certificate::lower_bound;
    } else {
        out.value = ExtRat::of(1);
        out.lower = out.value;
        out.certificate = Certificate::lower_bound;
        out.notes.push_back("no test varieties supplied; trivial lower bound");
    }
    if (out.value.infinite && best && exact_grade(*best)) {
        out.certificate = Certificate::exact;
        out.upper = out.value;
        out.notes.push_back("a test variety realizes infinite contact");
        return out;
    }
    if (exact_grade(delta)) {
        out.upper = delta.value;
        if (out.value == delta.value) {
            out.certificate = Certificate::exact;
            out.samples_unanimous = best ? best->samples_unanimous : true;
            out.sampled_components_exact = best ? best->sampled_components_exact : true;
            out.notes.push_back("matches the q-type upper bound, so the supremum is attained");
        } else {
            out.notes.push_back("upper end from the q-type");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// hypersurface types
// ---------------------------------------------------------------------------

namespace {

// monomial curves inside the zero set of the pure part, used for direct
// lower bounds on hypersurface contact
std::vector<CurveJet> curves_killing_h(const RealPoly& r, const TypeBudget& budget,
                                       std::vector<std::string>& notes) {
    std::size_t m = r.nvars();
    std::vector<CurveJet> out;
    HoloDecomposition d = polarize(r);

    CurveSearchConfig search = budget.search;
    if (search.coefficient_set.empty())
        search.coefficient_set = CurveSearchConfig::defaults().coefficient_set;

    auto add_filtered = [&](const CurveJet& jet) {
        if (jet.is_zero_jet() || !jet.vanishes_at_origin()) return;
        if (d.h.is_zero() || pullback_order(d.h, jet).kind == OrderBound::Kind::infinite)
            out.push_back(jet);
    };

    // plain monomial family
    std::vector<unsigned> exps(m, 1);
    std::vector<std::size_t> cidx(m, 0);
    while (true) {
        std::vector<GaussianRational> coeffs;
        for (std::size_t i = 0; i < m; ++i) coeffs.push_back(search.coefficient_set[cidx[i]]);
        bool nonzero = false;
        for (const auto& c : coeffs) nonzero |= !c.is_zero();
        if (nonzero) add_filtered(CurveJet::monomial(m, exps, coeffs));
        std::size_t i = 0;
        while (i < m) {
            if (++cidx[i] < search.coefficient_set.size()) break;
            cidx[i] = 0;
            if (++exps[i] <= search.exponent_bound) break;
            exps[i] = 1;
            ++i;
        }
        if (i == m) break;
    }

    // branches of the pure part capture the directions the family misses
    if (!d.h.is_zero() && m == 2 && d.h.ord0() && *d.h.ord0() >= 1) {
        for (const auto& br : newton_puiseux(d.h, budget.puiseux)) {
            if (br.jet.field) {
                notes.push_back("skipped a pure-part branch over an extension field");
                continue;
            }
            out.push_back(br.jet);
        }
    }
    return out;
}

struct DirectCurveBound {
    std::optional<ExtRat> value;
    std::optional<std::string> witness;
    bool vanishing_witness = false;
    bool unanimous = true;
    std::vector<std::string> notes;
};

DirectCurveBound direct_hypersurface_bound(const RealPoly& r, unsigned q,
                                           const TypeBudget& budget) {
    DirectCurveBound out;
    std::size_t n = r.nvars();
    RandomStream rng = budget.sampler.stream(fnv64("hyper-direct") ^ q);

    auto best_over_curves = [&](const RealPoly& sliced, const Matrix* embed)
        -> std::optional<std::pair<ExtRat, CurveJet>> {
        std::optional<std::pair<ExtRat, CurveJet>> best;
        for (const auto& jet : curves_killing_h(sliced, budget, out.notes)) {
            OrderBound ob = real_pullback_order(sliced, jet);
            if (ob.kind == OrderBound::Kind::at_least) continue;  // not certified
            ExtRat v = ob.kind == OrderBound::Kind::infinite
                           ? ExtRat::inf()
                           : ExtRat::of(make_rational(ob.value, jet.mult()));
            CurveJet shown = embed ? lift_jet(jet, *embed) : jet;
            if (!best || best->first < v) best = {v, shown};
        }
        return best;
    };

    if (q == 1) {
        auto best = best_over_curves(r, nullptr);
        if (best) {
            out.value = best->first;
            out.witness = best->second.str();
            out.vanishing_witness = best->first.infinite;
        }
        return out;
    }

    // generic slices: the q-type is attained generically, so take the minimum
    std::optional<ExtRat> minval;
    std::optional<std::string> minwitness;
    std::optional<ExtRat> first;
    bool all_infinite = true;
    for (unsigned s = 0; s < budget.sampler.sample_count; ++s) {
        LinearFormSet w = LinearFormSet::sample(n, q - 1, rng, budget.sampler.height_bound);
        Matrix e = kernel_embedding(n, w.forms);
        RealPoly sliced = r.substitute_embedding(embedding_images(e), e.cols());
        auto best = best_over_curves(sliced, &e);
        if (!best) continue;
        if (!first)
            first = best->first;
        else if (!(*first == best->first))
            out.unanimous = false;
        if (!best->first.infinite) all_infinite = false;
        if (!minval || best->first < *minval) {
            minval = best->first;
            minwitness = best->second.str();
        }
    }
    out.value = minval;
    out.witness = minwitness;
    out.vanishing_witness = minval && minval->infinite && all_infinite;
    return out;
}

}  // namespace

HypersurfaceType delta_q_hypersurface(const RealPoly& r, unsigned q, const TypeBudget& budget) {
    std::size_t n = r.nvars();
    if (q < 1 || q >= n)
        throw UnsupportedConfigError("hypersurface types are defined for 1 <= q <= n-1");
    if (!r.is_real()) throw UnsupportedConfigError("defining germ violates the reality constraint");
    bool has_linear = false;
    for (const auto& [bm, c] : r.terms())
        if (bm.degree() == 1) has_linear = true;
    if (!has_linear) throw UnsupportedConfigError("not a hypersurface germ at 0 (zero gradient)");

    HypersurfaceType out;
    TypeValue& res = out.result;

    HoloDecomposition d = polarize(r);
    std::optional<TypeValue> ideal_route;
    bool g_empty = d.negative_count() == 0;
    try {
        if (g_empty) {
            Matrix u = Matrix::identity(std::max<std::size_t>(d.pair_size(), 1));
            IdealPresentation iu = ideal_from_decomposition(d, u);
            ideal_route = delta_q_ideal(iu, q, budget);
            out.upper_certified = exact_grade(*ideal_route);
            res.notes.push_back("no negative squares: the unitary family collapses to one ideal");
        } else {
            RandomStream rng = budget.sampler.stream(fnv64("hyper-unitary") ^ q);
            std::optional<TypeValue> best;
            std::string best_u;
            for (unsigned s = 0; s < budget.sampler.sample_count; ++s) {
                Matrix u = sample_unitary(d.pair_size(), rng);
                TypeValue t = delta_q_ideal(ideal_from_decomposition(d, u), q, budget);
                if (!best || best->value < t.value) {
                    best = t;
                    std::ostringstream os;
                    os << "sampled unitary #" << s;
                    best_u = os.str();
                }
            }
            ideal_route = best;
            if (ideal_route) ideal_route->witnesses.unitary = best_u;
            out.upper_certified = false;
            res.notes.push_back(
                "negative squares present: supremum over the unitary group is sampled");
        }
    } catch (const NonSquareWeightError& e) {
        res.notes.push_back(std::string("holomorphic-ideal route unavailable: ") + e.what());
        out.upper_certified = false;
    }
    out.ideal_route = ideal_route;

    DirectCurveBound direct = direct_hypersurface_bound(r, q, budget);
    for (auto& note : direct.notes) res.notes.push_back(std::move(note));
    out.curve_route = direct.value;

    std::optional<ExtRat> lower;
    if (ideal_route) lower = ideal_route->value;
    if (direct.value) lower = lower ? ext_max(*lower, *direct.value) : *direct.value;
    std::optional<ExtRat> upper;
    if (ideal_route)
        upper = ideal_route->value.infinite ? ExtRat::inf()
                                            : ExtRat::of(ideal_route->value.v * 2);

    if (!lower) throw UnsupportedConfigError("no usable lower bound route for this germ");
    res.lower = lower;
    res.upper = upper;
    res.value = *lower;
    if (direct.witness) res.witnesses.curve = direct.witness;
    if (ideal_route && ideal_route->witnesses.forms) res.witnesses.forms = ideal_route->witnesses.forms;

    bool samples_in_play = !g_empty || q > 1;
    if (direct.value && direct.value->infinite && direct.vanishing_witness) {
        res.certificate = Certificate::exact;
        res.upper = res.value;
        res.notes.push_back("witness curve lies inside the hypersurface");
    } else if (upper && *lower == *upper) {
        res.certificate =
            (out.upper_certified && !samples_in_play) ? Certificate::exact
                                                      : Certificate::sampled_generic;
        res.samples_unanimous = direct.unanimous;
        res.sampled_components_exact =
            (ideal_route ? exact_grade(*ideal_route) : true);
        res.notes.push_back("bracket ends coincide");
    } else {
        res.certificate = Certificate::lower_bound;
        if (upper)
            res.notes.push_back("upper end is twice the holomorphic-ideal value");
    }
    return out;
}

TypeValue dq_hypersurface(const RealPoly& r, unsigned q, const std::vector<TestVariety>& varieties,
                          const TypeBudget& budget) {
    std::size_t n = r.nvars();
    if (q < 1 || q >= n)
        throw UnsupportedConfigError("hypersurface types are defined for 1 <= q <= n-1");
    HypersurfaceType delta = delta_q_hypersurface(r, q, budget);
    if (q == 1) {
        TypeValue out = delta.result;
        out.notes.push_back("the variety 1-type agrees with the 1-type");
        return out;
    }

    RandomStream rng = budget.sampler.stream(fnv64("dq-hyper") ^ q);
    std::optional<ExtRat> best;
    std::optional<std::string> best_label;
    bool best_unanimous = true;
    for (const auto& v : varieties) {
        if (v.dim != q)
            throw UnsupportedConfigError("variety '" + v.label + "' does not have dimension q");
        SampleAggregate agg;
        for (unsigned s = 0; s < budget.sampler.sample_count; ++s) {
            LinearFormSet w = LinearFormSet::sample(n, q - 1, rng, budget.sampler.height_bound);
            SlicedCurves sliced = v.kind == TestVariety::Kind::parametric
                                      ? slice_parametric(v, w, budget)
                                      : slice_implicit(v, w, n, budget);
            if (sliced.degenerate || sliced.jets.empty()) continue;
            std::optional<ExtRat> slice_best;
            bool usable = true;
            for (const auto& jet : sliced.jets) {
                if (jet.field) {
                    usable = false;  // real pullback needs base-field branches
                    break;
                }
                OrderBound ob = real_pullback_order(r, jet);
                if (ob.kind == OrderBound::Kind::at_least) {
                    usable = false;
                    break;
                }
                ExtRat val = ob.kind == OrderBound::Kind::infinite
                                 ? ExtRat::inf()
                                 : ExtRat::of(make_rational(ob.value, jet.mult()));
                slice_best = slice_best ? ext_max(*slice_best, val) : val;
            }
            if (usable && slice_best) agg.add(*slice_best);
        }
        if (!agg.any) continue;
        auto [val, unanimousq] = agg.modal();
        if (!best || *best < val) {
            best = val;
            best_label = v.label;
            best_unanimous = unanimousq;
        }
    }

    TypeValue out;
    if (!best) {
        out.value = ExtRat::of(1);
        out.certificate = Certificate::lower_bound;
        out.notes.push_back("no usable test varieties; trivial lower bound");
        return out;
    }
    out.value = *best;
    out.lower = *best;
    out.certificate = Certificate::lower_bound;
    out.witnesses.variety = best_label;
    out.samples_unanimous = best_unanimous;
    if (exact_grade(delta.result) || delta.result.certificate == Certificate::exact) {
        out.upper = delta.result.value;
        if (out.value == delta.result.value) {
            out.certificate = Certificate::exact;
            out.sampled_components_exact = true;
            out.notes.push_back("matches the q-type upper bound for boundaries");
        }
    }
    return out;
}

QPositivityReport default_q_positivity_check(const RealPoly& r, unsigned q,
                                             const TypeBudget& budget) {
    std::size_t n = r.nvars();
    RandomStream rng = budget.sampler.stream(fnv64("q-positivity") ^ q);
    std::vector<CurveJet> curves;
    std::vector<LinearFormSet> paired;
    std::vector<std::string> scratch;
    unsigned slice_count = q == 1 ? 1 : std::max(2u, budget.sampler.sample_count / 2);
    for (unsigned s = 0; s < slice_count; ++s) {
        if (q == 1) {
            for (auto& jet : curves_killing_h(r, budget, scratch)) {
                curves.push_back(std::move(jet));
                paired.push_back(LinearFormSet{n, {}});
            }
        } else {
            LinearFormSet w = LinearFormSet::sample(n, q - 1, rng, budget.sampler.height_bound);
            Matrix e = kernel_embedding(n, w.forms);
            RealPoly sliced = r.substitute_embedding(embedding_images(e), e.cols());
            for (auto& jet : curves_killing_h(sliced, budget, scratch)) {
                curves.push_back(lift_jet(jet, e));
                paired.push_back(w);
            }
        }
    }
    return check_q_positivity(r, q, curves, paired);
}

// ---------------------------------------------------------------------------
// theorem harness
// ---------------------------------------------------------------------------

namespace {

struct SideBound {
    std::optional<ExtRat> point;
    bool exactish = false;
    std::optional<ExtRat> lo, hi;
};

SideBound side_of(const TypeValue& v) {
    SideBound s;
    s.point = v.value;
    s.exactish = exact_grade(v);
    if (v.certificate == Certificate::exact) {
        s.lo = s.hi = v.value;
    } else {
        s.lo = v.lower;
        s.hi = v.upper;
        if (v.certificate == Certificate::lower_bound && !s.lo) s.lo = v.value;
        if (v.certificate == Certificate::upper_bound && !s.hi) s.hi = v.value;
    }
    return s;
}

CheckRow check_le(const std::string& case_name, const std::string& id, const SideBound& a,
                  const SideBound& b, const std::string& detail) {
    CheckRow row;
    row.case_name = case_name;
    row.inequality = id;
    row.detail = detail;
    if (a.exactish && b.exactish) {
        row.status = (*a.point <= *b.point) ? CheckStatus::pass : CheckStatus::fail;
        row.equality = (*a.point == *b.point);
        return row;
    }
    if (a.lo && b.hi && !(*a.lo <= *b.hi)) {
        row.status = CheckStatus::fail;
        return row;
    }
    row.status = CheckStatus::inconclusive;
    return row;
}

SideBound exact_side(const ExtRat& v) {
    SideBound s;
    s.point = v;
    s.exactish = true;
    s.lo = s.hi = v;
    return s;
}

std::string vs(const ExtRat& a, const ExtRat& b) { return a.str() + " <= " + b.str(); }

ExtRat ext_pow(const ExtRat& a, unsigned e) { return a.pow(e); }

}  // namespace

VerifyReport verify_theorems(const std::vector<CorpusCase>& corpus, const TypeBudget& budget) {
    VerifyReport report;
    std::vector<CorpusCase> sorted = corpus;
    std::sort(sorted.begin(), sorted.end(),
              [](const CorpusCase& a, const CorpusCase& b) { return a.name < b.name; });

    for (const auto& cs : sorted) {
        CaseReport cr;
        cr.name = cs.name;
        auto add_value = [&](const std::string& inv, unsigned q, const TypeValue& v) {
            cr.values.push_back({inv, q, v});
        };
        auto find_value = [&](const std::string& inv, unsigned q) -> const TypeValue* {
            for (const auto& cv : cr.values)
                if (cv.invariant == inv && cv.q == q) return &cv.value;
            return nullptr;
        };

        if (cs.is_ideal()) {
            std::vector<Poly> gens;
            for (const auto& t : cs.ideal_text) gens.push_back(parse_holomorphic(t, cs.n));
            IdealPresentation ideal = IdealPresentation::from(cs.n, gens);

            auto d = colength(ideal, budget.mora);
            TypeValue colength_value =
                TypeValue::exact(d ? ExtRat::of(Rational(static_cast<long>(*d))) : ExtRat::inf());
            add_value("colength", 0, colength_value);

            std::map<unsigned, TypeValue> deltas, dqs, genvals;
            for (unsigned q : cs.q_list) {
                deltas.emplace(q, delta_q_ideal(ideal, q, budget));
                std::vector<TestVariety> vq;
                for (const auto& v : cs.varieties)
                    if (v.dim == q) vq.push_back(v);
                dqs.emplace(q, dq_ideal(ideal, q, vq, budget));
                GenericColength g = generic_colength(ideal, q, budget.sampler, budget.mora);
                TypeValue gv;
                gv.value = g.value ? ExtRat::of(Rational(static_cast<long>(*g.value)))
                                   : ExtRat::inf();
                gv.certificate = Certificate::sampled_generic;
                gv.samples_unanimous = g.unanimous;
                gv.sampled_components_exact = true;
                gv.lower = gv.upper = gv.value;
                gv.witnesses.forms = g.witness.str();
                genvals.emplace(q, gv);
                add_value("delta_q", q, deltas.at(q));
                add_value("d_q", q, dqs.at(q));
                add_value("generic_colength", q, gv);
            }

            if (deltas.count(1)) {
                cr.rows.push_back(check_le(cs.name, "type_le_colength", side_of(deltas.at(1)),
                                           side_of(colength_value),
                                           vs(deltas.at(1).value, colength_value.value)));
            }
            for (unsigned q : cs.q_list) {
                const TypeValue& dq = dqs.at(q);
                const TypeValue& dl = deltas.at(q);
                cr.rows.push_back(check_le(cs.name, "variety_le_slice_q" + std::to_string(q),
                                           side_of(dq), side_of(dl),
                                           vs(dq.value, dl.value)));
                unsigned e = static_cast<unsigned>(cs.n) - q + 1;
                SideBound power = side_of(dq);
                if (power.point) power.point = ext_pow(*power.point, e);
                if (power.lo) power.lo = ext_pow(*power.lo, e);
                if (power.hi) power.hi = ext_pow(*power.hi, e);
                cr.rows.push_back(check_le(cs.name, "slice_le_variety_power_q" + std::to_string(q),
                                           side_of(dl), power,
                                           dl.value.str() + " <= (" + dq.value.str() + ")^" +
                                               std::to_string(e)));
            }
            std::vector<unsigned> qs = cs.q_list;
            std::sort(qs.begin(), qs.end());
            for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
                unsigned qa = qs[i], qb = qs[i + 1];
                cr.rows.push_back(check_le(cs.name,
                                           "monotone_delta_q" + std::to_string(qb) + "_le_q" +
                                               std::to_string(qa),
                                           side_of(deltas.at(qb)), side_of(deltas.at(qa)),
                                           vs(deltas.at(qb).value, deltas.at(qa).value)));
                cr.rows.push_back(check_le(cs.name,
                                           "monotone_d_q" + std::to_string(qb) + "_le_q" +
                                               std::to_string(qa),
                                           side_of(dqs.at(qb)), side_of(dqs.at(qa)),
                                           vs(dqs.at(qb).value, dqs.at(qa).value)));
            }
            if (deltas.count(static_cast<unsigned>(cs.n))) {
                const TypeValue& dn = deltas.at(static_cast<unsigned>(cs.n));
                const TypeValue& dvn = dqs.at(static_cast<unsigned>(cs.n));
                const TypeValue& gvn = genvals.at(static_cast<unsigned>(cs.n));
                CheckRow row;
                row.case_name = cs.name;
                row.inequality = "full_slice_equality";
                row.detail = dn.value.str() + " = " + dvn.value.str() + " = " + gvn.value.str();
                row.status = (dn.value == dvn.value && dvn.value == gvn.value)
                                 ? CheckStatus::pass
                                 : CheckStatus::fail;
                row.equality = row.status == CheckStatus::pass;
                cr.rows.push_back(row);
            }
            for (unsigned q : cs.q_list) {
                // product bound: generic colength with q-1 forms against the
                // product of the higher variety types
                bool all = true;
                ExtRat prod = ExtRat::of(1);
                for (unsigned i = q; i <= static_cast<unsigned>(cs.n); ++i) {
                    if (!dqs.count(i) || !exact_grade(dqs.at(i))) {
                        all = false;
                        break;
                    }
                    prod = ext_mul(prod, dqs.at(i).value);
                }
                if (!all) continue;
                cr.rows.push_back(check_le(cs.name, "product_bound_q" + std::to_string(q),
                                           side_of(genvals.at(q)), exact_side(prod),
                                           vs(genvals.at(q).value, prod)));
            }
            bool has_linear_generator = false;
            for (const auto& g : ideal.generators)
                if (is_exact_linear_form(g)) has_linear_generator = true;
            if (has_linear_generator && deltas.count(1) && exact_grade(deltas.at(1))) {
                ExtRat bound = ext_pow(deltas.at(1).value, static_cast<unsigned>(cs.n) - 1);
                cr.rows.push_back(check_le(cs.name, "colength_le_type_power",
                                           side_of(colength_value), exact_side(bound),
                                           vs(colength_value.value, bound)));
            }
        } else {
            RealPoly r = parse_real_germ(cs.germ_text, cs.n);
            std::map<unsigned, TypeValue> deltas, dqs;
            std::map<unsigned, bool> qpos_ok;
            for (unsigned q : cs.q_list) {
                HypersurfaceType h = delta_q_hypersurface(r, q, budget);
                deltas.emplace(q, h.result);
                add_value("delta_q", q, h.result);
                std::vector<TestVariety> vq;
                for (const auto& v : cs.varieties)
                    if (v.dim == q) vq.push_back(v);
                TypeValue dq = dq_hypersurface(r, q, vq, budget);
                dqs.emplace(q, dq);
                add_value("d_q", q, dq);

                QPositivityReport qp = default_q_positivity_check(r, q, budget);
                qpos_ok[q] = !qp.violation_found;
                CheckRow row;
                row.case_name = cs.name;
                row.inequality = "q_positivity_q" + std::to_string(q);
                row.detail = qp.summary + " (" + std::to_string(qp.curves.size()) +
                             " curves tested)";
                row.status = CheckStatus::pass;  // informational: the check ran
                cr.rows.push_back(row);

                if (h.result.lower && h.result.upper) {
                    cr.rows.push_back(check_le(cs.name, "bracket_consistent_q" + std::to_string(q),
                                               exact_side(*h.result.lower),
                                               exact_side(*h.result.upper),
                                               vs(*h.result.lower, *h.result.upper)));
                }
            }
            for (unsigned q : cs.q_list) {
                cr.rows.push_back(check_le(cs.name, "boundary_lower_q" + std::to_string(q),
                                           side_of(dqs.at(q)), side_of(deltas.at(q)),
                                           vs(dqs.at(q).value, deltas.at(q).value)));
                if (qpos_ok[q] && !deltas.at(q).value.infinite) {
                    // 2 (D_q / 2)^(n-q), applicable on positivity-unrefuted cases
                    SideBound dside = side_of(dqs.at(q));
                    auto transform = [&](const ExtRat& v) {
                        if (v.infinite) return ExtRat::inf();
                        ExtRat half = ExtRat::of(v.v / 2);
                        ExtRat p = ext_pow(half, static_cast<unsigned>(cs.n) - q);
                        return ExtRat::of(p.v * 2);
                    };
                    if (dside.point) dside.point = transform(*dside.point);
                    if (dside.lo) dside.lo = transform(*dside.lo);
                    if (dside.hi) dside.hi = transform(*dside.hi);
                    cr.rows.push_back(check_le(
                        cs.name, "boundary_upper_q" + std::to_string(q), side_of(deltas.at(q)),
                        dside,
                        deltas.at(q).value.str() + " <= 2*(" + dqs.at(q).value.str() + "/2)^" +
                            std::to_string(static_cast<unsigned>(cs.n) - q)));
                }
            }
            // halving bound: half the q-type against the sampled unitary route
            for (unsigned q : cs.q_list) {
                HoloDecomposition d = polarize(r);
                std::optional<ExtRat> route;
                try {
                    RandomStream rng = budget.sampler.stream(fnv64(cs.name) ^ 0x68616c66u);
                    unsigned draws = d.negative_count() == 0 ? 1 : budget.sampler.sample_count;
                    for (unsigned s = 0; s < draws; ++s) {
                        Matrix u = d.negative_count() == 0
                                       ? Matrix::identity(std::max<std::size_t>(d.pair_size(), 1))
                                       : sample_unitary(d.pair_size(), rng);
                        GenericColength g = generic_colength(ideal_from_decomposition(d, u), q,
                                                             budget.sampler, budget.mora);
                        ExtRat val = g.value ? ExtRat::of(Rational(static_cast<long>(*g.value)))
                                             : ExtRat::inf();
                        route = route ? ext_max(*route, val) : val;
                    }
                } catch (const NonSquareWeightError&) {
                    route.reset();
                }
                if (!route) continue;
                const TypeValue& dl = deltas.at(q);
                SideBound half = side_of(dl);
                auto halve = [](const ExtRat& v) {
                    return v.infinite ? ExtRat::inf() : ExtRat::of(v.v / 2);
                };
                if (half.point) half.point = halve(*half.point);
                if (half.lo) half.lo = halve(*half.lo);
                if (half.hi) half.hi = halve(*half.hi);
                cr.rows.push_back(check_le(cs.name, "halving_bound_q" + std::to_string(q), half,
                                           exact_side(*route),
                                           "(1/2)*" + dl.value.str() + " <= " + route->str()));
            }
        }

        // expected-value regression
        for (const auto& exp : cs.expected) {
            const TypeValue* got = find_value(exp.invariant, exp.q);
            CheckRow row;
            row.case_name = cs.name;
            row.inequality = "expected_" + exp.invariant +
                             (exp.q ? "_q" + std::to_string(exp.q) : "");
            if (!got) {
                row.status = CheckStatus::inconclusive;
                row.detail = "value not computed";
            } else {
                row.status = (got->value == exp.value) ? CheckStatus::pass : CheckStatus::fail;
                row.equality = row.status == CheckStatus::pass;
                row.detail = "computed " + got->value.str() + ", expected " + exp.value.str() +
                             " [" + exp.provenance + "]";
            }
            cr.rows.push_back(row);
        }

        report.cases.push_back(std::move(cr));
    }

    for (const auto& cr : report.cases)
        for (const auto& row : cr.rows) {
            if (row.status == CheckStatus::pass) ++report.pass_count;
            if (row.status == CheckStatus::fail) {
                ++report.fail_count;
                report.all_passed = false;
            }
            if (row.status == CheckStatus::inconclusive) ++report.inconclusive_count;
        }
    return report;
}

}  // namespace contact
