#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "contact/localalg.hpp"
#include "contact/parser.hpp"

using namespace contact;

namespace {

IdealPresentation ideal(std::size_t n, std::initializer_list<const char*> gens) {
    std::vector<Poly> v;
    for (const char* g : gens) v.push_back(parse_holomorphic(g, n));
    return IdealPresentation::from(n, std::move(v));
}

// independent oracle: staircase of a monomial ideal by divisibility alone
std::uint64_t staircase_by_enumeration(std::size_t n, const std::vector<Monomial>& gens) {
    std::vector<std::uint32_t> box(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : gens) {
            bool pure = g[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && g[j] > 0) pure = false;
            if (pure && (!found || g[i] < box[i])) {
                box[i] = g[i];
                found = true;
            }
        }
        REQUIRE(found);
    }
    std::uint64_t count = 0;
    Monomial cur(n);
    while (true) {
        bool div = false;
        for (const auto& g : gens)
            if (g.divides(cur)) div = true;
        if (!div) ++count;
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
    return count;
}

}  // namespace

TEST_CASE("monomial ideals are their own standard bases") {
    auto sb = mora_standard_basis(ideal(3, {"z1^3", "z2^3", "z3"}), LocalOrder::default_order());
    CHECK(sb.elements.size() == 3);
    REQUIRE(sb.staircase.has_value());
    CHECK(sb.staircase->size() == 9);
}

TEST_CASE("local units are absorbed: (z1 - z1^2, z2)") {
    auto I = ideal(2, {"z1 - z1^2", "z2"});
    auto sb = mora_standard_basis(I, LocalOrder::default_order());
    std::vector<std::string> lead;
    for (const auto& m : sb.leading) lead.push_back(to_string(Poly::from_term(2, m, GaussianRational(1))));
    std::sort(lead.begin(), lead.end());
    CHECK(lead == std::vector<std::string>{"z1", "z2"});
    CHECK(colength(I) == 1u);
}

TEST_CASE("principal ideal has an infinite staircase") {
    auto sb = mora_standard_basis(ideal(3, {"z1^3+z2^3-z3^3"}), LocalOrder::default_order());
    CHECK(!sb.staircase_finite());
    CHECK(!colength(ideal(3, {"z1^3+z2^3-z3^3"})).has_value());
}

TEST_CASE("normal form of input generators against the basis is zero") {
    auto I = ideal(2, {"z1^2 - z2^3", "z1*z2 + z2^4", "z2^5 + z1^3"});
    auto sb = mora_standard_basis(I, LocalOrder::default_order());
    MoraBudget b = MoraBudget::defaults_for(I);
    for (const auto& g : I.generators) {
        std::uint64_t steps = b.max_steps;
        CHECK(mora_normal_form(g, sb.elements, sb.order, steps, b.max_degree).is_zero());
    }
    // every s-polynomial of basis pairs reduces to zero
    for (std::size_t i = 0; i < sb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < sb.elements.size(); ++j) {
            const Poly& f = sb.elements[i];
            const Poly& g = sb.elements[j];
            const Monomial lf = f.leading_monomial(sb.order);
            const Monomial lg = g.leading_monomial(sb.order);
            Monomial l = lf.lcm(lg);
            Poly sp = f.times_monomial(l.quotient_by(lf), GaussianRational(1)) -
                      g.times_monomial(l.quotient_by(lg), GaussianRational(1));
            std::uint64_t steps = b.max_steps;
            CHECK(mora_normal_form(sp, sb.elements, sb.order, steps, b.max_degree).is_zero());
        }
}

TEST_CASE("colength worked examples") {
    CHECK(colength(ideal(3, {"z3", "z1^3", "z2^3"})) == 9u);
    CHECK(colength(ideal(3, {"z1", "z2", "z3"})) == 1u);
    CHECK(colength(ideal(2, {"z1^2", "z1*z2", "z2^3"})) == 4u);
}

TEST_CASE("colength is order independent") {
    auto I = ideal(3, {"z1^2 - z2^3", "z2^2 - z3^2", "z3^3"});
    auto base = colength(I);
    REQUIRE(base.has_value());
    for (auto kind : {LocalOrder::Kind::antigraded_lex, LocalOrder::Kind::antigraded_revlex}) {
        for (std::vector<unsigned> perm :
             {std::vector<unsigned>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}) {
            LocalOrder ord{kind, perm};
            CHECK(colength(I, {}, ord) == base);
        }
    }
}

TEST_CASE("adding a generator never increases colength") {
    RandomStream rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Poly> gens;
        std::size_t n = 2;
        for (std::size_t i = 0; i < n; ++i) {
            Poly g = Poly::variable(n, i).pow(static_cast<unsigned>(rng.next_int(1, 4)));
            gens.push_back(g);
        }
        auto I = IdealPresentation::from(n, gens);
        auto before = colength(I);
        Poly extra(n);
        Monomial m(n);
        m[0] = static_cast<std::uint32_t>(rng.next_int(0, 2));
        m[1] = static_cast<std::uint32_t>(rng.next_int(0, 2));
        if (m.degree() == 0) m[0] = 1;
        extra.add_term(m, GaussianRational(1));
        auto after = colength(I.with_extra({extra}));
        REQUIRE(before.has_value());
        REQUIRE(after.has_value());
        CHECK(*after <= *before);
    }
}

TEST_CASE("mora colength agrees with staircase enumeration on random monomial ideals") {
    RandomStream rng(97);
    int done = 0;
    while (done < 100) {
        std::size_t n = static_cast<std::size_t>(rng.next_int(1, 3));
        std::vector<Monomial> mono_gens;
        // pure powers for finiteness
        for (std::size_t i = 0; i < n; ++i) {
            Monomial m(n);
            m[i] = static_cast<std::uint32_t>(rng.next_int(1, 6));
            mono_gens.push_back(m);
        }
        unsigned extra = static_cast<unsigned>(rng.next_int(0, 3));
        for (unsigned k = 0; k < extra; ++k) {
            Monomial m(n);
            unsigned deg = 0;
            for (std::size_t i = 0; i < n; ++i) {
                m[i] = static_cast<std::uint32_t>(rng.next_int(0, 6));
                deg += m[i];
            }
            if (deg == 0) continue;
            mono_gens.push_back(m);
        }
        std::vector<Poly> gens;
        for (const auto& m : mono_gens) gens.push_back(Poly::from_term(n, m, GaussianRational(1)));
        auto I = IdealPresentation::from(n, gens);
        auto got = colength(I);
        REQUIRE(got.has_value());
        CHECK(*got == staircase_by_enumeration(n, mono_gens));
        ++done;
    }
}

TEST_CASE("budget exhaustion is an explicit error") {
    auto I = ideal(2, {"z1^2 - z2^3", "z1*z2^2 + z2^5"});
    MoraBudget tiny;
    tiny.max_steps = 1;
    tiny.max_degree = 50;
    CHECK_THROWS_AS(mora_standard_basis(I, LocalOrder::default_order(), tiny), BudgetExceededError);
}

TEST_CASE("colength with linear forms") {
    auto I = ideal(2, {"z1^3", "z2^3"});
    auto w = LinearFormSet::coordinates(2, {0});
    CHECK(colength_with_forms(I, w) == 3u);

    auto Imax = ideal(3, {"z1", "z2", "z3"});
    RandomStream rng(3);
    auto wr = LinearFormSet::sample(3, 2, rng, 7);
    CHECK(colength_with_forms(Imax, wr) == 1u);

    auto Ib = ideal(3, {"z1^3+z2^3-z3^3", "(z1-z3)^4"});
    std::vector<std::vector<GaussianRational>> rows{{GaussianRational(1), GaussianRational(-2), GaussianRational(0)}};
    auto w1 = LinearFormSet::from_coefficients(3, rows);
    auto v = colength_with_forms(Ib, w1);
    REQUIRE(v.has_value());
    CHECK(*v >= 1);
    // oracle: eliminate z1 = 2 z2, then count in the remaining two variables
    // (renamed z2 -> z1, z3 -> z2)
    Poly g1 = parse_holomorphic("(2*z1)^3+z1^3-z2^3", 2);
    Poly g2 = parse_holomorphic("(2*z1-z2)^4", 2);
    auto sliced = IdealPresentation::from(2, {g1, g2});
    CHECK(colength(sliced) == v);
}

TEST_CASE("degenerate form sets are rejected") {
    std::vector<std::vector<GaussianRational>> rows{
        {GaussianRational(1), GaussianRational(1), GaussianRational(0)},
        {GaussianRational(2), GaussianRational(2), GaussianRational(0)}};
    CHECK_THROWS_AS(LinearFormSet::from_coefficients(3, rows), std::invalid_argument);
}

TEST_CASE("generic colength examples") {
    GenericSampler s;
    s.seed = 1;
    CHECK(generic_colength(ideal(2, {"z1^3", "z2^3"}), 2, s).value == 3u);
    CHECK(generic_colength(ideal(3, {"z3", "z1^3", "z2^3"}), 1, s).value == 9u);
    CHECK(generic_colength(ideal(3, {"z1^3+z2^3-z3^3"}), 3, s).value == 3u);
}

TEST_CASE("generic colength determinism under a fixed seed") {
    GenericSampler s;
    s.seed = 42;
    auto I = ideal(3, {"z3", "z1^3", "z2^3"});
    auto a = generic_colength(I, 2, s);
    auto b = generic_colength(I, 2, s);
    CHECK(a.value == b.value);
    CHECK(a.witness.str() == b.witness.str());
}
