#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contact/decomp.hpp"
#include "contact/parser.hpp"

using namespace contact;

namespace {

RealPoly germ(const char* text, std::size_t n) { return parse_real_germ(text, n); }

GaussianRational random_gr(RandomStream& rng, long h = 5) {
    return GaussianRational(Rational(rng.next_int(-h, h)), Rational(rng.next_int(-h, h)));
}

RealPoly random_real_germ(RandomStream& rng, std::size_t n, unsigned maxdeg) {
    RealPoly r(n);
    unsigned terms = 2 + static_cast<unsigned>(rng.next_int(0, 4));
    for (unsigned t = 0; t < terms; ++t) {
        Monomial a(n), b(n);
        unsigned deg = 0;
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = static_cast<std::uint32_t>(rng.next_int(0, 2));
            b[i] = static_cast<std::uint32_t>(rng.next_int(0, 2));
            deg += a[i] + b[i];
        }
        if (deg == 0 || deg > maxdeg) continue;
        GaussianRational c = random_gr(rng);
        r.add_term({a, b}, c);
        r.add_term({b, a}, c.conj());
    }
    return r;
}

}  // namespace

TEST_CASE("jet truncation") {
    RealPoly r = germ("(1/2)*z2 + (1/2)*zb2 + z1*zb1 - z1^2*zb1^2", 2);
    RealPoly t3 = truncate_jet(r, 3);
    CHECK(t3 == germ("(1/2)*z2 + (1/2)*zb2 + z1*zb1", 2));
    CHECK(truncate_jet(t3, 3) == t3);
    CHECK(truncate_jet(r, static_cast<unsigned>(r.degree())) == r);
    RealPoly six = germ("z1^3*zb1^3 + z2^3*zb2^3 + (1/2)*z3 + (1/2)*zb3", 3);
    CHECK(truncate_jet(six, 6) == six);
}

TEST_CASE("polarization of the degree-six model germ") {
    RealPoly r = germ("z1^3*zb1^3 + z2^3*zb2^3 + (1/2)*z3 + (1/2)*zb3", 3);
    HoloDecomposition d = polarize(r);
    CHECK(to_string(d.h) == "z3");
    REQUIRE(d.summands.size() == 2);
    for (const auto& s : d.summands) {
        CHECK(s.sign == 1);
        CHECK(s.weight == 1);
    }
    CHECK(d.negative_count() == 0);
    CHECK(d.reconstruct() == r);
    FGPair fg = extract_fg(d);
    REQUIRE(fg.f.size() == 2);
    for (const auto& gpart : fg.g) CHECK(gpart.is_zero());
}

TEST_CASE("polarization separates signs") {
    RealPoly r = germ("z1*zb1 - z2*zb2", 2);
    HoloDecomposition d = polarize(r);
    CHECK(d.h.is_zero());
    REQUIRE(d.summands.size() == 2);
    CHECK(d.positive_count() == 1);
    CHECK(d.negative_count() == 1);
    CHECK(d.reconstruct() == r);
}

TEST_CASE("zero-diagonal block produces half-weight squares") {
    RealPoly r = germ("(1/2)*z2 + (1/2)*zb2 + z1^2*zb1 + z1*zb1^2", 2);
    HoloDecomposition d = polarize(r);
    CHECK(to_string(d.h) == "z2");
    REQUIRE(d.summands.size() == 2);
    CHECK(d.summands[0].weight == Rational(1, 2));
    CHECK(d.summands[1].weight == Rational(1, 2));
    CHECK(d.reconstruct() == r);

    // weight 1/2 is not a rational square; the error suggests rescaling by 2
    try {
        extract_fg(d);
        FAIL("expected a non-square weight error");
    } catch (const NonSquareWeightError& e) {
        CHECK(e.weight() == Rational(1, 2));
        REQUIRE(e.suggested_multiplier().has_value());
        CHECK(*e.suggested_multiplier() == 2);
    }

    // after the suggested rescale the extraction succeeds
    HoloDecomposition d2 = polarize(r.scaled(GaussianRational(2)));
    FGPair fg = extract_fg(d2);
    REQUIRE(fg.f.size() == 1);
    REQUIRE(fg.g.size() == 1);
    CHECK((to_string(fg.f[0]) == "z1 + z1^2" || to_string(fg.f[0]) == "z1^2 + z1"));
}

TEST_CASE("polarization round-trips 200 random germs") {
    RandomStream rng(71);
    int done = 0;
    while (done < 200) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.next_int(0, 2));
        RealPoly r = random_real_germ(rng, n, 6);
        if (r.is_zero()) continue;
        REQUIRE(r.is_real());
        HoloDecomposition d = polarize(r);
        CHECK(d.reconstruct() == r);
        // sqrt extraction either succeeds exactly or faults the right weight
        try {
            FGPair fg = extract_fg(d);
            RealPoly mixed(n);
            for (const auto& f : fg.f) mixed += RealPoly::norm_square(f);
            for (const auto& g : fg.g) mixed -= RealPoly::norm_square(g);
            CHECK(mixed + RealPoly::real_part(d.h) == r);
        } catch (const NonSquareWeightError& e) {
            CHECK(!rational_sqrt(e.weight()).has_value());
        }
        ++done;
    }
}

TEST_CASE("exact unitary samples") {
    RandomStream rng(13);
    for (std::size_t n : {1u, 2u, 3u}) {
        for (int k = 0; k < 50; ++k) {
            Matrix u = sample_unitary(n, rng);
            CHECK(u * u.conj_transpose() == Matrix::identity(n));
        }
    }
    // determinism under a fixed stream
    RandomStream a(99), b(99);
    Matrix ua = sample_unitary(2, a), ub = sample_unitary(2, b);
    CHECK(ua == ub);
    // exact norm preservation on a random vector
    RandomStream rv(5);
    Matrix u = sample_unitary(3, rv);
    Matrix v(3, 1);
    for (std::size_t i = 0; i < 3; ++i) v.at(i, 0) = random_gr(rv);
    Matrix uv = u * v;
    GaussianRational norm_in, norm_out;
    for (std::size_t i = 0; i < 3; ++i) {
        norm_in += v.at(i, 0) * v.at(i, 0).conj();
        norm_out += uv.at(i, 0) * uv.at(i, 0).conj();
    }
    CHECK(norm_in == norm_out);
}

TEST_CASE("unitary ideal construction") {
    RealPoly r = germ("z1*zb1 - z2*zb2 + (1/2)*z3 + (1/2)*zb3", 3);
    HoloDecomposition d = polarize(r);
    CHECK(to_string(d.h) == "z3");
    Matrix u1 = Matrix::identity(1);
    IdealPresentation i1 = ideal_from_decomposition(d, u1);
    REQUIRE(i1.generators.size() == 2);
    CHECK(to_string(i1.generators[1]) == "z1 - z2");
    Matrix ui(1, 1);
    ui.at(0, 0) = GaussianRational::i();
    IdealPresentation i2 = ideal_from_decomposition(d, ui);
    CHECK(to_string(i2.generators[1]) == "z1 - i*z2");
    Matrix wrong = Matrix::identity(2);
    CHECK_THROWS_AS(ideal_from_decomposition(d, wrong), std::invalid_argument);
}

TEST_CASE("with no negative squares every unitary gives the same ideal") {
    RealPoly r = germ("z1^3*zb1^3 + z2^3*zb2^3 + (1/2)*z3 + (1/2)*zb3", 3);
    HoloDecomposition d = polarize(r);
    RandomStream rng(3);
    auto base = colength(ideal_from_decomposition(d, Matrix::identity(2)));
    for (int k = 0; k < 50; ++k) {
        Matrix u = sample_unitary(2, rng);
        CHECK(colength(ideal_from_decomposition(d, u)) == base);
    }
    CHECK(base == 9u);
}

namespace {

CurveJet jet3(const char* a, const char* b, const char* c) {
    return CurveJet::from_polys({parse_jet_component(a), parse_jet_component(b),
                                 parse_jet_component(c)});
}

}  // namespace

TEST_CASE("positivity checks on the model germ") {
    RealPoly r = germ("z1^3*zb1^3 + z2^3*zb2^3 + (1/2)*z3 + (1/2)*zb3", 3);
    std::vector<CurveJet> curves{jet3("t", "0", "0"), jet3("0", "t", "0"), jet3("t", "t", "0")};
    std::vector<LinearFormSet> family;  // no plane constraint
    QPositivityReport rep = check_q_positivity(r, 1, curves, family);
    CHECK(!rep.violation_found);
    REQUIRE(rep.curves.size() == 3);
    std::vector<long> coeffs{1, 1, 2};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rep.curves[i].applicable);
        CHECK(rep.curves[i].order == 6u);
        CHECK(rep.curves[i].order_even);
        CHECK(rep.curves[i].diagonal_coefficient == GaussianRational(coeffs[i]));
    }
}

TEST_CASE("odd-order pullback is a violation") {
    RealPoly r = parse_real_germ(
        "(1/2)*z2 + (1/2)*zb2 + (1/2)*z1^2*zb1 + (1/2)*z1*zb1^2", 2);
    CurveJet phi = CurveJet::from_polys({parse_jet_component("t"), parse_jet_component("0")});
    QPositivityReport rep = check_q_positivity(r, 1, {phi}, {});
    CHECK(rep.violation_found);
    REQUIRE(rep.curves.size() == 1);
    CHECK(rep.curves[0].order == 3u);
    CHECK(!rep.curves[0].order_even);
}

TEST_CASE("even order with positive diagonal coefficient passes") {
    RealPoly r = parse_real_germ("(1/2)*z2 + (1/2)*zb2 + z1^2*zb1^2", 2);
    CurveJet phi = CurveJet::from_polys({parse_jet_component("t"), parse_jet_component("0")});
    QPositivityReport rep = check_q_positivity(r, 1, {phi}, {});
    CHECK(!rep.violation_found);
    CHECK(rep.curves[0].order == 4u);
    CHECK(rep.curves[0].diagonal_coefficient == GaussianRational(1));
}
