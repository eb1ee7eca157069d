#include "contact/localalg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "contact/parser.hpp"

namespace contact {

IdealPresentation IdealPresentation::from(std::size_t n, std::vector<Poly> gens) {
    std::vector<Poly> kept;
    for (auto& g : gens) {
        if (g.nvars() != n) throw std::invalid_argument("generator dimension mismatch");
        if (!g.is_zero()) kept.push_back(std::move(g));
    }
    if (kept.empty()) throw std::invalid_argument("ideal needs at least one nonzero generator");
    return IdealPresentation{n, std::move(kept)};
}

bool IdealPresentation::contains_unit() const {
    for (const auto& g : generators)
        if (g.is_unit_in_local_ring()) return true;
    return false;
}

IdealPresentation IdealPresentation::with_extra(std::vector<Poly> more) const {
    std::vector<Poly> gens = generators;
    for (auto& g : more)
        if (!g.is_zero()) gens.push_back(std::move(g));
    return IdealPresentation{n, std::move(gens)};
}

unsigned IdealPresentation::max_generator_degree() const {
    int d = 0;
    for (const auto& g : generators) d = std::max(d, g.degree());
    return static_cast<unsigned>(d);
}

MoraBudget MoraBudget::defaults_for(const IdealPresentation& ideal) {
    unsigned degsum = 0;
    for (const auto& g : ideal.generators) degsum += static_cast<unsigned>(std::max(g.degree(), 1));
    MoraBudget b;
    b.max_degree = 10 * std::max(degsum, 4u);
    b.max_steps = 200000ull + 4000ull * degsum * degsum;
    return b;
}

MoraBudget MoraBudget::resolved_for(const IdealPresentation& ideal) const {
    MoraBudget d = defaults_for(ideal);
    MoraBudget r = *this;
    if (r.max_steps == 0) r.max_steps = d.max_steps;
    if (r.max_degree == 0) r.max_degree = d.max_degree;
    return r;
}

namespace {

unsigned ecart(const Poly& f, const LocalOrder& order) {
    return static_cast<unsigned>(f.degree()) - f.leading_monomial(order).degree();
}

void charge(std::uint64_t& steps_left, const char* what) {
    if (steps_left == 0)
        throw BudgetExceededError(std::string("reduction step budget exceeded during ") + what);
    --steps_left;
}

void check_degree(const Poly& f, unsigned max_degree) {
    if (f.degree() > static_cast<int>(max_degree))
        throw BudgetExceededError("degree budget exceeded: intermediate degree " +
                                  std::to_string(f.degree()) + " > cap " +
                                  std::to_string(max_degree));
}

}  // namespace

Poly mora_normal_form(Poly f, const std::vector<Poly>& reducers, const LocalOrder& order,
                      std::uint64_t& steps_left, unsigned max_degree) {
    if (f.is_zero()) return f;
    // the reducer pool grows during reduction; deque keeps pointers stable
    std::vector<const Poly*> pool;
    std::deque<Poly> owned;
    pool.reserve(reducers.size() + 8);
    for (const auto& g : reducers)
        if (!g.is_zero()) pool.push_back(&g);

    while (!f.is_zero()) {
        const Monomial& lm = f.leading_monomial(order);
        const Poly* best = nullptr;
        unsigned best_ecart = 0;
        for (const Poly* g : pool) {
            if (!g->leading_monomial(order).divides(lm)) continue;
            unsigned e = ecart(*g, order);
            // smallest ecart; ties by smaller leading monomial, then pool order
            if (!best || e < best_ecart) {
                best = g;
                best_ecart = e;
            } else if (e == best_ecart &&
                       order.greater(best->leading_monomial(order), g->leading_monomial(order))) {
                best = g;
            }
        }
        if (!best) break;
        if (ecart(f, order) < best_ecart) {
            owned.push_back(f);  // keep the current remainder as a future reducer
            pool.push_back(&owned.back());
        }
        charge(steps_left, "normal form");
        const Monomial& glm = best->leading_monomial(order);
        GaussianRational factor = f.coefficient(lm) / best->coefficient(glm);
        f -= best->times_monomial(lm.quotient_by(glm), factor);
        check_degree(f, max_degree);
    }
    return f;
}

namespace {

Poly spoly(const Poly& f, const Poly& g, const LocalOrder& order) {
    const Monomial& lf = f.leading_monomial(order);
    const Monomial& lg = g.leading_monomial(order);
    Monomial l = lf.lcm(lg);
    GaussianRational cf = f.coefficient(lf);
    GaussianRational cg = g.coefficient(lg);
    return f.times_monomial(l.quotient_by(lf), GaussianRational(1) / cf) -
           g.times_monomial(l.quotient_by(lg), GaussianRational(1) / cg);
}

std::optional<std::vector<Monomial>> materialize_staircase(const std::vector<Monomial>& leading,
                                                           std::size_t n) {
    // finite iff every variable has a pure power among the leading monomials
    std::vector<std::uint32_t> box(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t best = 0;
        bool found = false;
        for (const auto& m : leading) {
            bool pure = m[i] > 0;
            for (std::size_t j = 0; pure && j < n; ++j)
                if (j != i && m[j] > 0) pure = false;
            if (pure && (!found || m[i] < best)) {
                best = m[i];
                found = true;
            }
        }
        if (!found) return std::nullopt;
        box[i] = best;
    }
    std::vector<Monomial> stairs;
    Monomial cur(n);
    while (true) {
        bool divisible = false;
        for (const auto& m : leading)
            if (m.divides(cur)) {
                divisible = true;
                break;
            }
        if (!divisible) stairs.push_back(cur);
        // odometer over the bounding box
        std::size_t i = 0;
        while (i < n) {
            if (cur[i] + 1 < box[i]) {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return stairs;
}

}  // namespace

StandardBasis mora_standard_basis(const IdealPresentation& ideal, const LocalOrder& order,
                                  const MoraBudget& budget_in) {
    MoraBudget budget = budget_in.resolved_for(ideal);
    std::uint64_t steps_left = budget.max_steps;

    std::vector<Poly> basis;
    for (const auto& g : ideal.generators) basis.push_back(g);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto queue_pairs_for = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) pairs.emplace_back(j, k);
    };
    for (std::size_t k = 0; k < basis.size(); ++k) queue_pairs_for(k);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree first, then insertion order
        std::size_t pick = 0;
        unsigned best_deg = 0;
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            const auto& [a, b] = pairs[t];
            unsigned d = basis[a].leading_monomial(order).lcm(basis[b].leading_monomial(order)).degree();
            if (t == 0 || d < best_deg) {
                best_deg = d;
                pick = t;
            }
        }
        auto [ia, ib] = pairs[pick];
        pairs.erase(pairs.begin() + pick);

        Poly h = mora_normal_form(spoly(basis[ia], basis[ib], order), basis, order, steps_left,
                                  budget.max_degree);
        if (h.is_zero()) continue;
        basis.push_back(std::move(h));
        queue_pairs_for(basis.size() - 1);
    }

    // minimalize: drop elements whose leading monomial another element divides
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& mi = basis[i].leading_monomial(order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = basis[j].leading_monomial(order);
            if (mj == mi ? j < i : mj.divides(mi)) redundant = true;
        }
        if (!redundant)
            kept.push_back(basis[i].scaled(basis[i].leading_coefficient(order).inverse()));
    }
    std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
        return order.greater(a.leading_monomial(order), b.leading_monomial(order));
    });

    StandardBasis out;
    out.n = ideal.n;
    out.order = order;
    for (const auto& g : kept) out.leading.push_back(g.leading_monomial(order));
    out.elements = std::move(kept);
    out.staircase = materialize_staircase(out.leading, ideal.n);
    return out;
}

bool StandardBasis::leading_ideal_contains(const Monomial& m) const {
    for (const auto& l : leading)
        if (l.divides(m)) return true;
    return false;
}

std::optional<std::uint64_t> colength(const IdealPresentation& ideal, const MoraBudget& budget,
                                      const LocalOrder& order) {
    StandardBasis sb = mora_standard_basis(ideal, order, budget);
    if (!sb.staircase) return std::nullopt;
    return sb.staircase->size();
}

LinearFormSet LinearFormSet::from_coefficients(
    std::size_t n, const std::vector<std::vector<GaussianRational>>& rows) {
    LinearFormSet w;
    w.n = n;
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("linear form coefficient count mismatch");
        Poly f(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!row[j].is_zero()) f += Poly::variable(n, j, row[j]);
        w.forms.push_back(std::move(f));
    }
    if (!w.nondegenerate()) throw std::invalid_argument("degenerate set of linear forms");
    return w;
}

LinearFormSet LinearFormSet::coordinates(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<std::vector<GaussianRational>> rows;
    for (std::size_t i : indices) {
        std::vector<GaussianRational> row(n);
        row.at(i) = GaussianRational(1);
        rows.push_back(std::move(row));
    }
    return from_coefficients(n, rows);
}

LinearFormSet LinearFormSet::sample(std::size_t n, std::size_t count, RandomStream& rng,
                                    long height_bound) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::vector<GaussianRational>> rows;
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<GaussianRational> row;
            for (std::size_t j = 0; j < n; ++j)
                row.emplace_back(Rational(rng.next_int(-height_bound, height_bound)));
            rows.push_back(std::move(row));
        }
        LinearFormSet w;
        w.n = n;
        for (const auto& row : rows) {
            Poly f(n);
            for (std::size_t j = 0; j < n; ++j)
                if (!row[j].is_zero()) f += Poly::variable(n, j, row[j]);
            w.forms.push_back(std::move(f));
        }
        if (count == 0 || w.nondegenerate()) return w;
    }
    throw std::logic_error("failed to draw a nondegenerate set of linear forms");
}

Matrix LinearFormSet::coefficient_matrix() const {
    Matrix m(forms.size(), n);
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Monomial var(n);
            var[j] = 1;
            m.at(i, j) = forms[i].coefficient(var);
        }
    return m;
}

bool LinearFormSet::nondegenerate() const {
    for (const auto& f : forms) {
        if (f.is_zero()) return false;
        if (f.degree() != 1 || f.is_unit_in_local_ring()) return false;
    }
    return coefficient_matrix().rank() == forms.size();
}

std::string LinearFormSet::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (i) os << ", ";
        os << to_string(forms[i]);
    }
    os << "}";
    return os.str();
}

std::optional<std::uint64_t> colength_with_forms(const IdealPresentation& ideal,
                                                 const LinearFormSet& w, const MoraBudget& budget) {
    if (w.n != ideal.n) throw std::invalid_argument("linear form dimension mismatch");
    if (!w.nondegenerate()) throw std::invalid_argument("degenerate set of linear forms");
    return colength(ideal.with_extra(w.forms), budget);
}

namespace {

void all_subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        all_subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

GenericColength generic_colength(const IdealPresentation& ideal, unsigned q,
                                 const GenericSampler& sampler, const MoraBudget& budget) {
    if (q < 1 || q > ideal.n) throw UnsupportedConfigError("q out of range 1..n");
    std::size_t k = q - 1;

    GenericColength best;
    bool have = false;
    bool first_sample = true;
    std::optional<std::uint64_t> first_value;

    auto consider = [&](const LinearFormSet& w, bool sampled) {
        auto v = colength_with_forms(ideal, w, budget);
        if (sampled) {
            if (first_sample) {
                first_value = v;
                first_sample = false;
            } else if (v != first_value) {
                best.unanimous = false;
            }
        }
        bool better = !have;
        if (have) {
            if (best.value && v && *v < *best.value) better = true;
            if (!best.value && v) better = true;  // finite beats infinite
        }
        if (better) {
            best.value = v;
            best.witness = w;
            have = true;
        }
    };

    RandomStream rng = sampler.stream(0x636f6c65u /* tag */);
    for (unsigned s = 0; s < sampler.sample_count; ++s) {
        LinearFormSet w = LinearFormSet::sample(ideal.n, k, rng, sampler.height_bound);
        consider(w, true);
    }
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    all_subsets(ideal.n, k, 0, cur, subsets);
    for (const auto& idx : subsets) consider(LinearFormSet::coordinates(ideal.n, idx), false);

    return best;
}

}  // namespace contact
