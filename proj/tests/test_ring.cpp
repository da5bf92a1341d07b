#include "hyperlie/hyperlie.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hyperlie;

namespace {

CurvePtr cubic() {
    static CurvePtr c = std::make_shared<const Curve>(parse_curve("t^3+a*t+1"));
    return c;
}

RingElement random_element(std::mt19937_64& rng, CurvePtr c, int span = 8) {
    std::uniform_int_distribution<int> exp(-span, span), coef(-3, 3), den(1, 3), nt(0, 2);
    LaurentPoly f(c->universe()), g(c->universe());
    for (int i = 0; i <= nt(rng); ++i)
        f.add_coeff(exp(rng), ParamFrac::constant(c->universe(), Rational(coef(rng), den(rng))));
    for (int i = 0; i <= nt(rng); ++i)
        g.add_coeff(exp(rng), ParamFrac::constant(c->universe(), Rational(coef(rng), den(rng))));
    return RingElement(std::move(c), std::move(f), std::move(g));
}

} // namespace

TEST_CASE("defining relation and basic products") {
    CurvePtr c = cubic();
    RingElement u = RingElement::t_power_u(c, 0);
    CHECK(u * u == RingElement::from_laurent(c, c->p_full()));

    // (t + u)(t - u) = t^2 - P = t^2 - t^3 - a t - 1
    RingElement tpu = RingElement::t_power(c, 1) + u;
    RingElement tmu = RingElement::t_power(c, 1) - u;
    LaurentPoly expect(c->universe());
    expect.set_coeff(2, ParamFrac::constant(c->universe(), 1));
    expect.set_coeff(3, ParamFrac::constant(c->universe(), -1));
    expect.set_coeff(1, -ParamFrac::variable(c->universe(), 0));
    expect.set_coeff(0, ParamFrac::constant(c->universe(), -1));
    CHECK(tpu * tmu == RingElement::from_laurent(c, expect));
}

TEST_CASE("delta on generators") {
    CurvePtr c = cubic();
    // del(t) = u, del(u) = P'/2
    CHECK(apply_delta(RingElement::t_power(c, 1)) == RingElement::t_power_u(c, 0));
    RingElement du = apply_delta(RingElement::t_power_u(c, 0));
    CHECK(du == RingElement::from_laurent(c, c->p_full_derivative() * Rational(1, 2)));

    // 2.2 curve: del(t^k sqrt P) = (k+1)t^(k+1) - b(2k+1)t^k + k t^(k-1)
    CurvePtr c22 = std::make_shared<const Curve>(parse_curve("t^2-2*b*t+1"));
    ParamFrac b = ParamFrac::variable(c22->universe(), 0);
    for (int k = -3; k <= 3; ++k) {
        RingElement d = apply_delta(RingElement::t_power_u(c22, k));
        LaurentPoly expect(c22->universe());
        expect.add_coeff(k + 1, ParamFrac::constant(c22->universe(), k + 1));
        expect.add_coeff(k, b * Rational(-(2 * k + 1)));
        expect.add_coeff(k - 1, ParamFrac::constant(c22->universe(), k));
        CHECK(d == RingElement::from_laurent(c22, expect));
    }
}

TEST_CASE("leibniz rule") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        RingElement x = random_element(rng, cubic());
        RingElement y = random_element(rng, cubic());
        CHECK(apply_delta(x * y) == apply_delta(x) * y + x * apply_delta(y));
    }
}

TEST_CASE("conjugation and norm") {
    std::mt19937_64 rng(202);
    CurvePtr c = cubic();
    CHECK(norm(RingElement::t_power(c, 3)) == LaurentPoly::t_power(c->universe(), 6));
    for (int trial = 0; trial < 100; ++trial) {
        RingElement x = random_element(rng, c, 5);
        RingElement y = random_element(rng, c, 5);
        CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
        CHECK(norm(x * y) == norm(x) * norm(y));
    }
}

TEST_CASE("unit detection") {
    CurvePtr c = cubic();
    auto w = is_unit(RingElement::t_power(c, 5));
    REQUIRE(w);
    CHECK(w->c == ParamFrac::constant(c->universe(), 1));
    CHECK(w->k == 10);

    RingElement onepu = RingElement::one(c) + RingElement::t_power_u(c, 0);
    CHECK_FALSE(is_unit(onepu));
}

TEST_CASE("djkm generators at beta=17/8") {
    auto gen = djkm_generators(Rational(17, 8));
    CHECK(gen.mu == Rational(3, 2));
    CHECK(gen.nu == Rational(5, 2));
    CHECK(gen.rho == Rational(15, 8));

    UniversePtr u = gen.curve->universe();
    // lambda0 = (t^2 - 17/8)/(15/8) + u
    LaurentPoly q(u);
    q.set_coeff(2, ParamFrac::constant(u, Rational(8, 15)));
    q.set_coeff(0, ParamFrac::constant(u, Rational(-17, 15)));
    CHECK(gen.lambda0.f == q);
    CHECK(gen.lambda0.g == LaurentPoly::one(u));

    CHECK(norm(gen.lambda0) == LaurentPoly::one(u));
    CHECK(norm(gen.lambda1) == LaurentPoly::t_power(u, 2));
    CHECK(norm(gen.lambda2) == LaurentPoly::t_power(u, 2));

    // lambda1 lambda2 = t^2 lambda0
    RingElement t2 = RingElement::t_power(gen.curve, 2);
    CHECK(gen.lambda1 * gen.lambda2 == t2 * gen.lambda0);

    // inadmissible beta
    CHECK_THROWS_AS(djkm_generators(Rational(2)), error);
}

TEST_CASE("recognize units") {
    auto gen = djkm_generators(Rational(17, 8));
    RingElement t2l0 = RingElement::t_power(gen.curve, 2) * gen.lambda0;
    auto f = recognize_unit(t2l0, gen, 3);
    REQUIRE(f);
    CHECK(f->c0 == 1);
    CHECK(f->e_t == 0);
    CHECK(f->e1 == 1);
    CHECK(f->e2 == 1);

    auto sq = recognize_unit(ring_pow(gen.lambda1, 2), gen, 3);
    REQUIRE(sq);
    CHECK(sq->c0 == 1);
    CHECK(sq->e_t == 0);
    CHECK(sq->e1 == 2);
    CHECK(sq->e2 == 0);

    RingElement x = RingElement::t_power(gen.curve, -1) * gen.lambda2 * Rational(5);
    auto fx = recognize_unit(x, gen, 3);
    REQUIRE(fx);
    CHECK(fx->c0 == 5);
    CHECK(fx->e_t == -1);
    CHECK(fx->e1 == 0);
    CHECK(fx->e2 == 1);

    // non-unit
    RingElement nu = gen.lambda1 + RingElement::one(gen.curve);
    CHECK_FALSE(recognize_unit(nu, gen, 2));

    // round-trip on random exponent vectors
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<int> e(-4, 4), cnum(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
        int et = e(rng), e1 = e(rng), e2 = e(rng);
        Rational c0(cnum(rng), cnum(rng));
        if (std::uniform_int_distribution<int>(0, 1)(rng)) c0 = -c0;
        RingElement x2 = ring_pow(gen.lambda1, e1) * ring_pow(gen.lambda2, e2) * c0;
        LaurentPoly tp = LaurentPoly::t_power(gen.curve->universe(), et);
        x2 = RingElement(x2.curve, x2.f * tp, x2.g * tp);
        auto g = recognize_unit(x2, gen, 4);
        REQUIRE(g);
        CHECK(g->c0 == c0);
        CHECK(g->e_t == et);
        CHECK(g->e1 == e1);
        CHECK(g->e2 == e2);
    }
}

TEST_CASE("unit inverse") {
    auto gen = djkm_generators(Rational(17, 8));
    for (const RingElement* x : {&gen.lambda0, &gen.lambda1, &gen.lambda2}) {
        RingElement inv = unit_inverse(*x);
        CHECK(*x * inv == RingElement::one(gen.curve));
    }
    CHECK(ring_pow(gen.lambda1, -2) * ring_pow(gen.lambda1, 2) == RingElement::one(gen.curve));
}

TEST_CASE("curve contracts") {
    CHECK_THROWS_AS(parse_curve("2*t^2-1"), error);        // non-monic
    CHECK_THROWS_AS(parse_curve("t^2-2*t+1"), error);      // repeated root
    CHECK_THROWS_AS(parse_curve("t^3"), error);            // t=0 repeated
    CHECK_THROWS_AS(parse_curve("t^2+t^-1"), error);       // not a polynomial
    Curve lem = parse_curve("t^2-2*b*t");
    CHECK(lem.l() == 1);
    CHECK(lem.n() == 1);
    Curve c22 = parse_curve("t^2-2*b*t+1");
    CHECK(c22.l() == 0);
    CHECK(c22.n() == 2);
    CHECK(c22.universe()->names() == std::vector<std::string>{"b"});
    // round-trip through the canonical string
    CHECK(parse_curve(c22.to_string()) == c22);
    CHECK(parse_curve(lem.to_string()) == lem);
    CHECK(parse_curve(cubic()->to_string()) == *cubic());
}
