#include "hyperlie/hyperlie.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hyperlie;

namespace {

UniversePtr ab_universe() {
    static UniversePtr u = make_universe({"a", "b"});
    return u;
}

ParamFrac random_frac(std::mt19937_64& rng) {
    UniversePtr u = ab_universe();
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), deg(0, 2), nterms(1, 3);
    ParamPoly num = ParamPoly::zero(u);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ExpVec e{static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng))};
        num.add_term(e, Rational(coef(rng), den(rng)));
    }
    ParamFrac::AtomMap atoms;
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
        atoms[Atom{Atom::Kind::Var, 1}] = 1; // a power of b in the denominator
    return ParamFrac(std::move(num), std::move(atoms));
}

LaurentPoly random_laurent(std::mt19937_64& rng, int span = 4) {
    UniversePtr u = ab_universe();
    LaurentPoly p(u);
    std::uniform_int_distribution<int> exp(-span, span), nterms(1, 4);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_coeff(exp(rng), random_frac(rng));
    return p;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(to_string(Rational(-15, 48)) == "-5/16");
    CHECK(to_string(Rational(8)) == "8");
    CHECK(double_factorial_odd(3) == 15);
    CHECK(factorial(5) == 120);
    CHECK(binomial(8, 3) == 56);
    auto s = rational_sqrt(Rational(225, 64));
    REQUIRE(s);
    CHECK(*s == Rational(15, 8));
    CHECK_FALSE(rational_sqrt(Rational(2)));
}

TEST_CASE("parampoly canonical strings") {
    UniversePtr u = make_universe({"a"});
    ParamPoly p = ParamPoly::zero(u);
    p.add_term(ExpVec{3}, Rational(-15));
    p.add_term(ExpVec{0}, Rational(-24));
    CHECK(p.to_string() == "-15*a^3 - 24");
    CHECK(ParamPoly::zero(u).to_string() == "0");
    ParamPoly q = ParamPoly::variable(u, 0);
    CHECK(q.to_string() == "a");
    CHECK((-q).to_string() == "-a");
}

TEST_CASE("paramfrac canonical strings") {
    UniversePtr u = make_universe({"a"});
    ParamFrac third = ParamFrac::constant(u, Rational(-2, 5));
    CHECK(third.to_string() == "-2/5");
    ParamFrac av = ParamFrac::variable(u, 0) * Rational(-3, 5);
    CHECK(av.to_string() == "-3/5*a");
    ParamPoly num = ParamPoly::zero(u);
    num.add_term(ExpVec{3}, Rational(-15, 48));
    num.add_term(ExpVec{0}, Rational(-24, 48));
    ParamFrac f(num);
    CHECK(f.to_string() == "(-5*a^3 - 8)/16");
    CHECK(ParamFrac::constant(u, 8).to_string() == "8");
}

TEST_CASE("paramfrac atom reduction and inverse") {
    UniversePtr u = make_universe({"b0", "beta"});
    ParamFrac b0 = ParamFrac::variable(u, 0);
    ParamFrac::AtomMap den;
    den[Atom{Atom::Kind::Var, 0}] = 2;
    // (3 b0^3) / b0^2 canonicalizes to 3 b0
    ParamPoly num = ParamPoly::variable(u, 0, 3);
    num *= Rational(3);
    ParamFrac f(num, den);
    CHECK(f == b0 * b0 * b0 * Rational(3) / (b0 * b0));
    CHECK(f.den_atoms().empty());

    // inverse of -2 (beta-1) b0
    ParamFrac bm1 = ParamFrac::variable(u, 1) - ParamFrac::constant(u, 1);
    ParamFrac g = bm1 * b0 * Rational(-2);
    auto gi = g.try_inverse();
    REQUIRE(gi);
    CHECK(g * *gi == ParamFrac::constant(u, 1));

    // non-invertible: beta + b0
    ParamFrac h = ParamFrac::variable(u, 1) + b0;
    CHECK_FALSE(h.try_inverse());
}

TEST_CASE("ring axioms on random fracs and laurents") {
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 200; ++trial) {
        ParamFrac x = random_frac(rng), y = random_frac(rng), z = random_frac(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(value_equal(x * (y + z), x * y + x * z));
    }
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly x = random_laurent(rng), y = random_laurent(rng), z = random_laurent(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("laurent basics") {
    UniversePtr u = empty_universe();
    LaurentPoly tp = LaurentPoly::t_power(u, 1) + LaurentPoly::t_power(u, -1);
    LaurentPoly tm = LaurentPoly::t_power(u, 1) - LaurentPoly::t_power(u, -1);
    LaurentPoly prod = tp * tm;
    CHECK(prod == LaurentPoly::t_power(u, 2) - LaurentPoly::t_power(u, -2));
    CHECK(prod.to_string() == "t^2 - t^-2");

    UniversePtr ub = make_universe({"b"});
    LaurentPoly bt3 = LaurentPoly::t_power(ub, 3, ParamFrac::variable(ub, 0));
    CHECK(bt3.derivative_t() == LaurentPoly::t_power(ub, 2, ParamFrac::variable(ub, 0) * Rational(3)));

    UniversePtr ua = make_universe({"a"});
    LaurentPoly at = LaurentPoly::t_power(ua, 1, ParamFrac::variable(ua, 0));
    ParamFrac a2 = ParamFrac::variable(ua, 0) * ParamFrac::variable(ua, 0);
    CHECK(at * at == LaurentPoly::t_power(ua, 2, a2));
}

TEST_CASE("mixed universes rejected") {
    UniversePtr ua = make_universe({"a"});
    UniversePtr ub = make_universe({"b"});
    ParamFrac x = ParamFrac::variable(ua, 0);
    ParamFrac y = ParamFrac::variable(ub, 0);
    CHECK_THROWS_AS(x + y, error);
    // constants lift
    ParamFrac c = ParamFrac::constant(empty_universe(), Rational(1, 2));
    CHECK((x + c).to_string() == "(2*a + 1)/2");
}

TEST_CASE("truncated series arithmetic and inv sqrt") {
    UniversePtr u = make_universe({"a"});
    const int N = 32;
    // p = 1 + a z^2 + z^3 (reversed cubic)
    TruncSeries p(u, N + 2);
    p.set_coeff_rel(0, ParamFrac::constant(u, 1));
    p.set_coeff_rel(2, ParamFrac::variable(u, 0));
    p.set_coeff_rel(3, ParamFrac::constant(u, 1));
    TruncSeries s = series_inv_sqrt(p, N);
    TruncSeries check = s * s * p;
    CHECK(check.coeff_rel(0) == ParamFrac::constant(u, 1));
    for (int k = 1; k <= check.order(); ++k) CHECK(check.coeff_rel(k).is_zero());
    // leading coefficients match the hand expansion
    CHECK(s.coeff_rel(1).is_zero());
    CHECK(s.coeff_rel(2) == ParamFrac::variable(u, 0) * Rational(-1, 2));
    CHECK(s.coeff_rel(3) == ParamFrac::constant(u, Rational(-1, 2)));

    TruncSeries one = TruncSeries::constant(u, 1, N);
    CHECK(series_inv_sqrt(one, N) == one.truncated(N));

    TruncSeries z0(u, 4); // zero constant term
    z0.set_coeff_rel(1, ParamFrac::constant(u, 1));
    CHECK_THROWS_AS(series_inv_sqrt(z0, 4), error);
}

TEST_CASE("inv sqrt random property") {
    std::mt19937_64 rng(7);
    UniversePtr u = empty_universe();
    const int N = 32;
    std::uniform_int_distribution<int> coef(-3, 3), den(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        TruncSeries p(u, N + 2);
        p.set_coeff_rel(0, ParamFrac::constant(u, 1));
        for (int k = 1; k <= 6; ++k)
            p.set_coeff_rel(k, ParamFrac::constant(u, Rational(coef(rng), den(rng))));
        TruncSeries s = series_inv_sqrt(p, N);
        TruncSeries chk = s * s * p;
        CHECK(chk.coeff_rel(0) == ParamFrac::constant(u, 1));
        for (int k = 1; k <= chk.order(); ++k) CHECK(chk.coeff_rel(k).is_zero());
    }
}

TEST_CASE("legendre generating function") {
    UniversePtr u = make_universe({"b"});
    TruncSeries p(u, 16);
    p.set_coeff_rel(0, ParamFrac::constant(u, 1));
    p.set_coeff_rel(1, ParamFrac::variable(u, 0) * Rational(-2));
    p.set_coeff_rel(2, ParamFrac::constant(u, 1));
    TruncSeries s = series_inv_sqrt(p, 12);
    auto leg = legendre_sequence(u, ParamFrac::variable(u, 0), 12);
    for (int k = 0; k <= 12; ++k) CHECK(s.coeff_rel(k) == leg[static_cast<std::size_t>(k)]);
    // p_2 = (3 b^2 - 1)/2
    ParamFrac b = ParamFrac::variable(u, 0);
    CHECK(leg[2] == (b * b * Rational(3) - ParamFrac::constant(u, 1)) * Rational(1, 2));
}

TEST_CASE("half-integer shift ledger") {
    UniversePtr u = empty_universe();
    TruncSeries s(u, 4, 3); // z^(3/2) (1 + z)
    s.set_coeff_rel(0, ParamFrac::constant(u, 1));
    s.set_coeff_rel(1, ParamFrac::constant(u, 1));
    TruncSeries d = s.derivative_z();
    CHECK(d.shift_half() == 1);
    CHECK(d.coeff_rel(0) == ParamFrac::constant(u, Rational(3, 2)));
    CHECK(d.coeff_rel(1) == ParamFrac::constant(u, Rational(5, 2)));
    TruncSeries back = d.integrate_z();
    CHECK(back.shift_half() == 3);
    CHECK(back.coeff_rel(0) == ParamFrac::constant(u, 1));
    CHECK(back.coeff_rel(1) == ParamFrac::constant(u, 1));
    // products add shifts
    CHECK((s * s).shift_half() == 6);
    // integrating z^-1 with a nonzero coefficient is an error
    TruncSeries bad(u, 2, -2);
    bad.set_coeff_rel(0, ParamFrac::constant(u, 1));
    CHECK_THROWS_AS(bad.integrate_z(), error);
    // mismatched sectors cannot be added
    CHECK_THROWS_AS(s + TruncSeries::constant(u, 1, 4), error);
}

namespace {
// Independent oracle: sum over integer partitions of m into k parts of
// m!/(prod part! * prod mult!) * prod z_part. Enumerates partitions directly.
ParamPoly bell_oracle(unsigned m, unsigned k, const std::vector<ParamPoly>& z) {
    UniversePtr u = z.empty() ? empty_universe() : z[0].universe();
    ParamPoly acc = ParamPoly::zero(u);
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned rem, unsigned nparts,
                                                                unsigned maxpart) {
        if (nparts == 0) {
            if (rem != 0) return;
            Rational coef(factorial(m), 1);
            ParamPoly term = ParamPoly::constant(u, 1);
            unsigned run = 0;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                coef /= Rational(factorial(parts[i]), 1);
                term = term * z.at(parts[i] - 1);
                ++run;
                if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
                    coef /= Rational(factorial(run), 1);
                    run = 0;
                }
            }
            acc += term * coef;
            return;
        }
        for (unsigned p = 1; p <= std::min(rem, maxpart); ++p) {
            parts.push_back(p);
            rec(rem - p, nparts - 1, p);
            parts.pop_back();
        }
    };
    rec(m, k, m);
    return acc;
}
} // namespace

TEST_CASE("bell polynomials") {
    UniversePtr u = make_universe({"z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9"});
    std::vector<ParamPoly> z;
    for (std::size_t i = 0; i < 9; ++i) z.push_back(ParamPoly::variable(u, i));

    // B_{m,m} = z1^m and B_{m,1} = z_m
    for (unsigned m = 1; m <= 6; ++m) {
        CHECK(bell_polynomial(m, m, z) == z[0].pow(m));
        CHECK(bell_polynomial(m, 1, z) == z[m - 1]);
    }
    // frozen: B_{3,2} = 3 z1 z2 (oracle-computed)
    CHECK(bell_oracle(3, 2, z) == z[0] * z[1] * Rational(3));
    CHECK(bell_polynomial(3, 2, z) == z[0] * z[1] * Rational(3));

    CHECK_THROWS_AS(bell_polynomial(2, 3, z), error);

    // oracle agreement + recurrence B_{m+1,k} = sum_j C(m,j) z_{j+1} B_{m-j,k-1}
    for (unsigned m = 0; m <= 8; ++m) {
        for (unsigned k = 0; k <= m; ++k) {
            CHECK(bell_polynomial(m, k, z) == bell_oracle(m, k, z));
            if (k >= 1 && m + 1 - k + 1 <= 9) {
                ParamPoly rhs = ParamPoly::zero(u);
                for (unsigned j = 0; j + k - 1 <= m && j < 9; ++j) {
                    if (m - j < k - 1) continue;
                    rhs += z[j] * bell_polynomial(m - j, k - 1, z) * Rational(binomial(m, j), 1);
                }
                CHECK(bell_polynomial(m + 1, k, z) == rhs);
            }
        }
    }
}

TEST_CASE("h coefficients against inv sqrt") {
    // t^2 - 2bt + 1
    Curve c22 = parse_curve("t^2-2*b*t+1");
    auto h = h_coefficients(c22, 32);
    UniversePtr u = c22.universe();
    CHECK(h[0] == ParamFrac::constant(u, 1));
    CHECK(h[1] == ParamFrac::variable(u, 0)); // h_1 = b
    TruncSeries pbar(u, 34);
    pbar.set_coeff_rel(0, ParamFrac::constant(u, 1));
    pbar.set_coeff_rel(1, ParamFrac::variable(u, 0) * Rational(-2));
    pbar.set_coeff_rel(2, ParamFrac::constant(u, 1));
    TruncSeries s = series_inv_sqrt(pbar, 32);
    for (int k = 0; k <= 32; ++k) CHECK(h[static_cast<std::size_t>(k)] == s.coeff_rel(k));

    // cubic: (h_0..h_3) = (1, 0, -a/2, -1/2)
    Curve c3 = parse_curve("t^3+a*t+1");
    auto h3 = h_coefficients(c3, 3);
    UniversePtr ua = c3.universe();
    CHECK(h3[0] == ParamFrac::constant(ua, 1));
    CHECK(h3[1].is_zero());
    CHECK(h3[2] == ParamFrac::variable(ua, 0) * Rational(-1, 2));
    CHECK(h3[3] == ParamFrac::constant(ua, Rational(-1, 2)));
}
