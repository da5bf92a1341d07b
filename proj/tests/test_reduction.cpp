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

ClassVector coords(ReductionTable& table, int k) { return table.reduce_power(k); }

} // namespace

TEST_CASE("cubic reduction matches the printed table") {
    ReductionTable table(cubic());
    UniversePtr u = cubic()->universe();
    ParamFrac a = ParamFrac::variable(u, 0);
    auto C = [&](Rational q) { return ParamFrac::constant(u, std::move(q)); };

    // basis elements reduce to themselves
    for (int k = -1; k <= 1; ++k) {
        ClassVector v = coords(table, k);
        CHECK(v.coord(k) == C(1));
        CHECK(v.omega0.is_zero());
    }

    ClassVector t2 = coords(table, 2);
    CHECK(t2.coord(0) == a * Rational(-1, 3));
    CHECK(t2.coord(1).is_zero());
    CHECK(t2.coord(-1).is_zero());

    ClassVector t3 = coords(table, 3);
    CHECK(t3.coord(1) == a * Rational(-3, 5));
    CHECK(t3.coord(0) == C(Rational(-2, 5)));

    ClassVector t4 = coords(table, 4);
    CHECK(t4.coord(1) == C(Rational(-4, 7)));
    CHECK(t4.coord(0) == a * a * Rational(5, 21));

    ClassVector t5 = coords(table, 5);
    CHECK(t5.coord(1) == a * a * Rational(7, 15));
    CHECK(t5.coord(0) == a * Rational(8, 15));

    ClassVector tm2 = coords(table, -2);
    CHECK(tm2.coord(-1) == a * Rational(-1, 2));
    CHECK(tm2.coord(1) == C(Rational(1, 2)));

    ClassVector tm3 = coords(table, -3);
    CHECK(tm3.coord(-1) == a * a * Rational(3, 8));
    CHECK(tm3.coord(0) == C(Rational(-1, 4)));
    CHECK(tm3.coord(1) == a * Rational(-3, 8));

    ClassVector tm4 = coords(table, -4);
    CHECK(tm4.coord(-1) == (a * a * a * Rational(15) + C(24)) * Rational(-1, 48));
    CHECK(tm4.coord(0) == a * Rational(5, 24));
    CHECK(tm4.coord(1) == a * a * Rational(5, 16));
    CHECK(tm4.coord(-1).to_string() == "(-5*a^3 - 8)/16");
}

TEST_CASE("class of t^5 printed identity") {
    ReductionTable table(cubic());
    ClassVector v = class_of(RingElement::t_power(cubic(), 5), table);
    UniversePtr u = cubic()->universe();
    ParamFrac a = ParamFrac::variable(u, 0);
    CHECK(v.coord(1) == a * a * Rational(7, 15));
    CHECK(v.coord(0) == a * Rational(8, 15));
    CHECK(v.omega0.is_zero());
}

TEST_CASE("recursive and linear reduction agree") {
    for (const char* spec : {"t^2-2*b*t+1", "t^3+a*t+1", "t^4-2*b*t^2+1"}) {
        CurvePtr c = std::make_shared<const Curve>(parse_curve(spec));
        ReductionTable rec(c, false);
        ReductionTable lin(c, true);
        for (int k = -10; k <= c->n() + 10; ++k)
            CHECK(rec.reduce_power(k) == lin.reduce_power(k));
    }
}

TEST_CASE("lemma curve surviving basis") {
    CurvePtr lem = std::make_shared<const Curve>(parse_curve("t^2-2*b*t"));
    ReductionTable table(lem);
    UniversePtr u = lem->universe();
    ParamFrac b = ParamFrac::variable(u, 0);

    CHECK(lem->basis_exponents() == std::vector<int>{0});
    CHECK(table.reduce_power(-1).is_zero());
    CHECK(table.reduce_power(-2).is_zero());
    CHECK(table.reduce_power(-5).is_zero());
    CHECK(table.reduce_power(1).coord(0) == b);
    CHECK(table.reduce_power(2).coord(0) == b * b * Rational(3, 2));
    // tbar^k = b^k (2k-1)!!/k!
    for (int k = 0; k <= 8; ++k) {
        ParamFrac expect = ParamFrac::constant(u, Rational(double_factorial_odd(static_cast<unsigned>(k)),
                                                           factorial(static_cast<unsigned>(k))));
        for (int i = 0; i < k; ++i) expect *= b;
        CHECK(table.reduce_power(k).coord(0) == expect);
    }
}

TEST_CASE("class map kills the image of delta") {
    std::mt19937_64 rng(404);
    ReductionTable table(cubic());
    for (int trial = 0; trial < 200; ++trial) {
        RingElement x = random_element(rng, cubic());
        CHECK(class_of(apply_delta(x), table).is_zero());
    }
    // also on the lemma curve through the linear engine
    CurvePtr lem = std::make_shared<const Curve>(parse_curve("t^2-2*b*t"));
    ReductionTable ltab(lem);
    for (int trial = 0; trial < 50; ++trial) {
        RingElement x = random_element(rng, lem, 6);
        CHECK(class_of(apply_delta(x), ltab).is_zero());
    }
}

TEST_CASE("u part classes") {
    ReductionTable table(cubic());
    ClassVector om = class_of(RingElement::t_power_u(cubic(), -1), table);
    CHECK(om.omega0 == ParamFrac::constant(cubic()->universe(), 1));
    CHECK(om.coords.empty());
    for (int k : {-3, -2, 0, 1, 2}) {
        CHECK(class_of(RingElement::t_power_u(cubic(), k), table).is_zero());
    }
}

TEST_CASE("table accessors use the paper indexing") {
    ReductionTable table(cubic());
    UniversePtr u = cubic()->universe();
    ParamFrac a = ParamFrac::variable(u, 0);
    // p_{k,i} = delta on the initial window
    for (int k = -1; k <= 1; ++k)
        for (int i = -1; i <= 1; ++i)
            CHECK(table.p(k, i) == ParamFrac::constant(u, k == i ? 1 : 0));
    // q_{k,i} = delta_{k,-i} on the window
    for (int k = -1; k <= 1; ++k)
        for (int i = -1; i <= 1; ++i)
            CHECK(table.q(k, i) == ParamFrac::constant(u, k == -i ? 1 : 0));
    CHECK(table.p(2, 0) == a * Rational(-1, 3));
    CHECK(table.q(2, -1) == a * Rational(-1, 2));
}
