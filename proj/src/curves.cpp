#include "contact/curves.hpp"

#include <algorithm>
#include <sstream>

#include "contact/parser.hpp"

namespace contact {

CurveJet CurveJet::from_components(std::vector<FPoly> comps, FieldPtr field, unsigned precision,
                                   bool exact) {
    CurveJet jet;
    jet.n = comps.size();
    jet.field = std::move(field);
    jet.components = std::move(comps);
    jet.precision = precision;
    jet.exact = exact;
    for (auto& c : jet.components) fp_normalize(c);
    return jet;
}

CurveJet CurveJet::from_polys(const std::vector<Poly>& comps) {
    std::vector<FPoly> out;
    for (const auto& p : comps) {
        if (p.nvars() != 1) throw std::invalid_argument("jet component must be univariate");
        FPoly c;
        for (const auto& [m, v] : p.terms()) {
            if (c.size() <= m[0]) c.resize(m[0] + 1);
            c[m[0]] = FieldElem(v);
        }
        out.push_back(std::move(c));
    }
    return from_components(std::move(out));
}

CurveJet CurveJet::monomial(std::size_t n, const std::vector<unsigned>& exps,
                            const std::vector<GaussianRational>& coeffs) {
    if (exps.size() != n || coeffs.size() != n)
        throw std::invalid_argument("monomial curve parameter count mismatch");
    std::vector<FPoly> comps(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs[i].is_zero()) continue;
        if (exps[i] == 0) throw std::invalid_argument("curve must pass through the origin");
        comps[i].resize(exps[i] + 1);
        comps[i][exps[i]] = FieldElem(coeffs[i]);
    }
    return from_components(std::move(comps));
}

bool CurveJet::is_zero_jet() const {
    for (const auto& c : components)
        if (!fp_is_zero(c)) return false;
    return true;
}

bool CurveJet::vanishes_at_origin() const {
    for (const auto& c : components)
        if (!c.empty() && !c[0].is_zero()) return false;
    return true;
}

unsigned CurveJet::mult() const {
    std::optional<unsigned> best;
    for (const auto& c : components) {
        for (unsigned k = 0; k < c.size(); ++k) {
            if (c[k].is_zero()) continue;
            if (!best || k < *best) best = k;
            break;
        }
    }
    if (!best) throw std::domain_error("multiplicity of the zero jet");
    if (*best == 0) throw std::domain_error("curve does not pass through the origin");
    return *best;
}

CurveJet CurveJet::reparametrized(unsigned k) const {
    if (k == 0) throw std::invalid_argument("reparametrization exponent must be positive");
    CurveJet jet = *this;
    for (auto& c : jet.components) {
        FPoly nc;
        for (unsigned d = 0; d < c.size(); ++d) {
            if (c[d].is_zero()) continue;
            if (nc.size() <= d * k) nc.resize(d * k + 1);
            nc[d * k] = c[d];
        }
        c = std::move(nc);
    }
    if (jet.precision < kExactPrecision) jet.precision *= k;
    return jet;
}

std::string CurveJet::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) os << ", ";
        os << fp_str(components[i], "t");
    }
    os << ")";
    if (field) os << " over " << field_tower_description(field);
    return os.str();
}

FPoly pullback_series(const Poly& g, const CurveJet& jet) {
    if (g.nvars() != jet.n) throw std::invalid_argument("pullback dimension mismatch");
    FPoly acc;
    for (const auto& [m, c] : g.terms()) {
        FPoly term{FieldElem(c)};
        for (std::size_t i = 0; i < jet.n; ++i) {
            for (std::uint32_t k = 0; k < m[i]; ++k) {
                term = fp_mul(term, jet.components[i]);
                if (fp_is_zero(term)) break;
            }
            if (fp_is_zero(term)) break;
        }
        acc = fp_add(acc, term);
    }
    return acc;
}

OrderBound pullback_order(const Poly& g, const CurveJet& jet) {
    FPoly s = pullback_series(g, jet);
    unsigned ord = 0;
    while (ord < s.size() && s[ord].is_zero()) ++ord;
    if (ord >= s.size()) {
        // identically zero composition: certified vanishing only on exact jets
        return jet.exact ? OrderBound::infinite() : OrderBound::at_least(jet.precision);
    }
    if (!jet.exact && ord >= jet.precision) return OrderBound::at_least(jet.precision);
    return OrderBound::exactly(ord);
}

ExtRat ExtRat::pow(unsigned e) const {
    if (infinite) return inf();
    Rational acc = 1;
    for (unsigned k = 0; k < e; ++k) acc *= v;
    return of(acc);
}

std::string ExtRat::str() const { return infinite ? "inf" : rational_str(v); }

ExtRat OrderRatio::value() const {
    if (numerator.kind == OrderBound::Kind::infinite) return ExtRat::inf();
    if (numerator.kind == OrderBound::Kind::at_least)
        throw std::logic_error("unresolved order ratio (pullback order at precision limit)");
    return ExtRat::of(make_rational(numerator.value, denominator));
}

ExtRat OrderRatio::lower_value() const {
    if (numerator.kind == OrderBound::Kind::infinite) return ExtRat::inf();
    return ExtRat::of(make_rational(numerator.value, denominator));
}

OrderRatio order_ratio(const Poly& g, const CurveJet& jet) {
    OrderRatio r;
    r.denominator = jet.mult();
    r.numerator = pullback_order(g, jet);
    return r;
}

OrderRatio tau_curve_ideal(const IdealPresentation& ideal, const CurveJet& jet) {
    // ord of a combination is >= the min over generators, so the infimum over
    // the ideal is the minimum over any generating set
    OrderRatio best;
    best.denominator = jet.mult();
    best.numerator = OrderBound::infinite();
    bool saw_at_least = false;
    unsigned at_least_floor = kExactPrecision;
    std::optional<unsigned> min_exact;
    for (const auto& g : ideal.generators) {
        OrderBound ob = pullback_order(g, jet);
        if (ob.kind == OrderBound::Kind::exact) {
            if (!min_exact || ob.value < *min_exact) min_exact = ob.value;
        } else if (ob.kind == OrderBound::Kind::at_least) {
            saw_at_least = true;
            at_least_floor = std::min(at_least_floor, ob.value);
        }
    }
    if (min_exact && (!saw_at_least || *min_exact <= at_least_floor)) {
        best.numerator = OrderBound::exactly(*min_exact);
    } else if (saw_at_least) {
        best.numerator = OrderBound::at_least(std::min(at_least_floor, min_exact.value_or(at_least_floor)));
    }  // else: all generators vanish identically on an exact jet -> infinite
    return best;
}

std::optional<unsigned> HermSeries::ord() const {
    std::optional<unsigned> best;
    for (const auto& [ij, c] : terms) {
        unsigned d = ij.first + ij.second;
        if (!best || d < *best) best = d;
    }
    return best;
}

GaussianRational HermSeries::coeff(unsigned i, unsigned j) const {
    auto it = terms.find({i, j});
    return it == terms.end() ? GaussianRational() : it->second;
}

HermSeries real_pullback(const RealPoly& r, const CurveJet& jet) {
    if (r.nvars() != jet.n) throw std::invalid_argument("pullback dimension mismatch");
    if (jet.field)
        throw UnsupportedConfigError(
            "real-germ pullback supports Gaussian rational curve coefficients only");
    // base-field components and their conjugates
    std::vector<std::vector<GaussianRational>> comp(jet.n), compbar(jet.n);
    for (std::size_t i = 0; i < jet.n; ++i) {
        for (const auto& fe : jet.components[i]) {
            auto v = fe.demote();
            comp[i].push_back(*v);
            compbar[i].push_back(v->conj());
        }
    }
    using Series = std::map<std::pair<unsigned, unsigned>, GaussianRational>;
    auto mul_in = [](Series& acc, const std::vector<GaussianRational>& f, bool bar) {
        Series next;
        for (const auto& [ij, c] : acc)
            for (unsigned k = 0; k < f.size(); ++k) {
                if (f[k].is_zero()) continue;
                auto key = bar ? std::make_pair(ij.first, ij.second + k)
                               : std::make_pair(ij.first + k, ij.second);
                auto it = next.find(key);
                GaussianRational add = c * f[k];
                if (it == next.end())
                    next.emplace(key, add);
                else {
                    it->second += add;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        acc = std::move(next);
    };
    HermSeries out;
    out.exact = jet.exact;
    out.precision = jet.precision;
    for (const auto& [bm, c] : r.terms()) {
        Series term{{{0u, 0u}, c}};
        for (std::size_t i = 0; i < jet.n && !term.empty(); ++i) {
            for (std::uint32_t k = 0; k < bm.z[i] && !term.empty(); ++k) mul_in(term, comp[i], false);
            for (std::uint32_t k = 0; k < bm.zbar[i] && !term.empty(); ++k)
                mul_in(term, compbar[i], true);
        }
        for (const auto& [ij, v] : term) {
            auto it = out.terms.find(ij);
            if (it == out.terms.end())
                out.terms.emplace(ij, v);
            else {
                it->second += v;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    }
    return out;
}

OrderBound real_pullback_order(const RealPoly& r, const CurveJet& jet) {
    HermSeries s = real_pullback(r, jet);
    auto o = s.ord();
    if (!o) return jet.exact ? OrderBound::infinite() : OrderBound::at_least(jet.precision);
    if (!jet.exact && *o >= jet.precision) return OrderBound::at_least(jet.precision);
    return OrderBound::exactly(*o);
}

CurveSearchConfig CurveSearchConfig::defaults() {
    CurveSearchConfig cfg;
    cfg.coefficient_set = {GaussianRational(0), GaussianRational(1), GaussianRational(-1),
                           GaussianRational::i(), -GaussianRational::i()};
    return cfg;
}

namespace {

// deterministic preference between equal-valued witnesses: lexicographically
// smaller rendering wins
bool witness_before(const CurveJet& a, const CurveJet& b) { return a.str() < b.str(); }

struct SearchState {
    std::optional<ExtRat> best;
    CurveJet witness;
    bool witness_infinite = false;

    void offer(const OrderRatio& ratio, const CurveJet& jet) {
        if (!ratio.resolved()) return;  // never trust precision-limited orders
        ExtRat v = ratio.value();
        if (!best || *best < v || (*best == v && witness_before(jet, witness))) {
            best = v;
            witness = jet;
            witness_infinite = ratio.is_infinite();
        }
    }
};

}  // namespace

CurveSearchResult curve_search_lower_bound(const IdealPresentation& ideal,
                                           const CurveSearchConfig& cfg_in) {
    CurveSearchConfig cfg = cfg_in;
    if (cfg.coefficient_set.empty()) cfg.coefficient_set = CurveSearchConfig::defaults().coefficient_set;
    const std::size_t n = ideal.n;
    SearchState state;

    std::vector<unsigned> exps(n, 1);
    std::vector<std::size_t> coeff_idx(n, 0);

    auto eval_curve = [&](const CurveJet& jet) {
        if (jet.is_zero_jet() || !jet.vanishes_at_origin()) return;
        state.offer(tau_curve_ideal(ideal, jet), jet);
    };

    // monomial layer: all exponent vectors in [1, E]^n crossed with the
    // coefficient set; zero coefficients switch components off
    auto loop_coeffs = [&](auto&& emit) {
        std::fill(coeff_idx.begin(), coeff_idx.end(), 0);
        while (true) {
            std::vector<GaussianRational> coeffs;
            bool all_zero = true;
            for (std::size_t i = 0; i < n; ++i) {
                coeffs.push_back(cfg.coefficient_set[coeff_idx[i]]);
                if (!coeffs.back().is_zero()) all_zero = false;
            }
            if (!all_zero) emit(coeffs);
            std::size_t i = 0;
            while (i < n) {
                if (++coeff_idx[i] < cfg.coefficient_set.size()) break;
                coeff_idx[i] = 0;
                ++i;
            }
            if (i == n) break;
        }
    };

    std::fill(exps.begin(), exps.end(), 1);
    while (true) {
        loop_coeffs([&](const std::vector<GaussianRational>& coeffs) {
            eval_curve(CurveJet::monomial(n, exps, coeffs));
        });
        std::size_t i = 0;
        while (i < n) {
            if (++exps[i] <= cfg.exponent_bound) break;
            exps[i] = 1;
            ++i;
        }
        if (i == n) break;
    }

    // perturbation layer: add one extra term to the best witness, one
    // component at a time
    if (state.best && !state.witness_infinite && cfg.perturb_degree > 0) {
        CurveJet base = state.witness;
        unsigned maxexp = cfg.exponent_bound + cfg.perturb_degree;
        for (std::size_t i = 0; i < n; ++i) {
            for (unsigned e = 1; e <= maxexp; ++e) {
                for (const auto& c : cfg.coefficient_set) {
                    if (c.is_zero()) continue;
                    CurveJet jet = base;
                    if (jet.components[i].size() <= e) jet.components[i].resize(e + 1);
                    FieldElem prev = jet.components[i][e];
                    jet.components[i][e] = prev + FieldElem(c);
                    fp_normalize(jet.components[i]);
                    eval_curve(jet);
                }
            }
        }
    }

    if (!state.best) throw std::logic_error("curve search produced no candidates");
    CurveSearchResult out;
    out.value = *state.best;
    out.witness = state.witness;
    out.witness_infinite = state.witness_infinite;
    return out;
}

}  // namespace contact
