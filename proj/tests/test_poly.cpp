#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contact/parser.hpp"
#include "contact/poly.hpp"
#include "contact/realpoly.hpp"
#include "contact/sampler.hpp"

using namespace contact;

namespace {

GaussianRational random_gr(RandomStream& rng, long h = 9) {
    return GaussianRational(Rational(rng.next_int(-h, h)), Rational(rng.next_int(-h, h)));
}

Poly random_poly(RandomStream& rng, std::size_t n, unsigned maxdeg, unsigned terms) {
    Poly p(n);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint32_t>(rng.next_int(0, maxdeg));
        p.add_term(m, random_gr(rng));
    }
    return p;
}

Matrix random_invertible(RandomStream& rng, std::size_t n) {
    while (true) {
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = random_gr(rng, 3);
        if (a.invertible()) return a;
    }
}

}  // namespace

TEST_CASE("gaussian rational field axioms on random triples") {
    RandomStream rng(7);
    for (int k = 0; k < 200; ++k) {
        GaussianRational a = random_gr(rng), b = random_gr(rng), c = random_gr(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
    }
}

TEST_CASE("gaussian rational square roots") {
    GaussianRational z(Rational(3), Rational(4));  // (2+i)^2
    auto s = GaussianRational::sqrt(z);
    REQUIRE(s.has_value());
    CHECK(*s * *s == z);
    CHECK(GaussianRational::sqrt(GaussianRational(Rational(-1))).has_value());
    CHECK(!GaussianRational::sqrt(GaussianRational(Rational(1, 2))).has_value());
    CHECK(!GaussianRational::sqrt(GaussianRational(Rational(-3))).has_value());
}

TEST_CASE("parser examples") {
    auto g = parse_poly("z1^3 + z2^3 - z3^3", 3);
    REQUIRE(std::holds_alternative<Poly>(g));
    const Poly& p = std::get<Poly>(g);
    CHECK(p.term_count() == 3);
    CHECK(p.ord0() == 3u);

    auto zero = parse_poly("0", 2);
    REQUIRE(std::holds_alternative<Poly>(zero));
    CHECK(std::get<Poly>(zero).is_zero());
    CHECK(!std::get<Poly>(zero).ord0().has_value());

    auto r = parse_poly("z1^3*zb1^3 + z2^3*zb2^3 + (1/2)*z3 + (1/2)*zb3", 3);
    REQUIRE(std::holds_alternative<RealPoly>(r));
    const RealPoly& rp = std::get<RealPoly>(r);
    CHECK(rp.is_real());
    // equals Re{z3} + |z1^3|^2 + |z2^3|^2
    Poly z3 = parse_holomorphic("z3", 3);
    Poly z1c = parse_holomorphic("z1^3", 3);
    Poly z2c = parse_holomorphic("z2^3", 3);
    RealPoly expect = RealPoly::real_part(z3) + RealPoly::norm_square(z1c) + RealPoly::norm_square(z2c);
    CHECK(rp == expect);
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(parse_poly("z1 +", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("z5", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("z1^", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("(z1", 2), ParseError);
    CHECK_THROWS_AS(parse_real_germ("z1*zb2", 2), ParseError);  // reality violation
    CHECK_NOTHROW(parse_real_germ("z1*zb2 + z2*zb1", 2));
}

TEST_CASE("print then parse is the identity on canonical form") {
    RandomStream rng(11);
    for (int k = 0; k < 120; ++k) {
        Poly p = random_poly(rng, 3, 3, 5);
        auto back = parse_poly(to_string(p), 3);
        REQUIRE(std::holds_alternative<Poly>(back));
        CHECK(std::get<Poly>(back) == p);
    }
    // real germs round-trip through the conjugate-aware printer
    for (int k = 0; k < 60; ++k) {
        Poly p = random_poly(rng, 2, 2, 3);
        Poly q = random_poly(rng, 2, 2, 3);
        RealPoly r = RealPoly::mixed(p, q) + RealPoly::mixed(q, p);
        REQUIRE(r.is_real());
        auto back = parse_poly(to_string(r), 2);
        if (r.is_zero()) continue;
        REQUIRE(std::holds_alternative<RealPoly>(back));
        CHECK(std::get<RealPoly>(back) == r);
    }
}

TEST_CASE("ord0 on the stated examples") {
    CHECK(parse_holomorphic("z1^3+z2^3-z3^3", 3).ord0() == 3u);
    auto r = parse_poly("z3 + z1^3*zb1^3", 3);
    CHECK(std::get<RealPoly>(r).ord0() == 1u);
}

TEST_CASE("ord0 is a valuation") {
    RandomStream rng(23);
    for (int k = 0; k < 150; ++k) {
        Poly p = random_poly(rng, 2, 4, 4);
        Poly q = random_poly(rng, 2, 4, 4);
        auto op = p.ord0(), oq = q.ord0();
        if (!p.is_zero() && !q.is_zero()) {
            CHECK((p * q).ord0() == *op + *oq);
        }
        auto os = (p + q).ord0();
        if (os && op && oq) CHECK(*os >= std::min(*op, *oq));
        if (op && oq && *op != *oq) CHECK(*os == std::min(*op, *oq));
    }
}

TEST_CASE("trivial arithmetic identities") {
    Poly z1 = Poly::variable(2, 0);
    Poly z2 = Poly::variable(2, 1);
    CHECK((z1 + (-z1)).is_zero());
    CHECK((z1 + z2) * (z1 - z2) == z1 * z1 - z2 * z2);
}

TEST_CASE("linear substitution: permutation action and ord0 invariance") {
    Matrix swap(2, 2);
    swap.at(0, 1) = GaussianRational(1);
    swap.at(1, 0) = GaussianRational(1);
    Poly z1cubed = parse_holomorphic("z1^3", 2);
    CHECK(substitute_linear(z1cubed, swap) == parse_holomorphic("z2^3", 2));

    RandomStream rng(31);
    for (int k = 0; k < 100; ++k) {
        Matrix a = random_invertible(rng, 3);
        Poly p = random_poly(rng, 3, 3, 4);
        CHECK(substitute_linear(p, a).ord0() == p.ord0());
    }

    Matrix singular(2, 2);
    singular.at(0, 0) = GaussianRational(1);
    singular.at(1, 0) = GaussianRational(1);
    CHECK_THROWS_AS(substitute_linear(z1cubed, singular), std::domain_error);
}

TEST_CASE("real poly reality is preserved by the advertised operations") {
    RandomStream rng(41);
    for (int k = 0; k < 60; ++k) {
        Poly p = random_poly(rng, 2, 2, 3);
        Poly q = random_poly(rng, 2, 2, 3);
        RealPoly a = RealPoly::norm_square(p) - RealPoly::norm_square(q) + RealPoly::real_part(p * q);
        REQUIRE(a.is_real());
        CHECK((a + a).is_real());
        CHECK(a.scaled(GaussianRational(Rational(-7, 3))).is_real());
        Matrix m = random_invertible(rng, 2);
        CHECK(a.substitute_linear(m).is_real());
    }
}

TEST_CASE("real poly evaluates to real numbers on the diagonal") {
    RandomStream rng(43);
    RealPoly r = parse_real_germ("z1*zb1 - z2*zb2 + (1/2)*z1 + (1/2)*zb1", 2);
    for (int k = 0; k < 20; ++k) {
        std::vector<GaussianRational> z{random_gr(rng), random_gr(rng)};
        CHECK(r.evaluate(z).is_real());
    }
}
