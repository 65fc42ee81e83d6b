#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schubert/bruhat.hpp"
#include "schubert/poly.hpp"

using namespace schubert;

namespace {

MultiPoly random_poly(const RootSystem& sys, const std::string& basis, int degree,
                      std::mt19937& rng) {
    MultiPoly p(sys, basis);
    auto mons = monomial_exponents(sys.rank(), degree);
    std::uniform_int_distribution<long> c(-5, 5);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    for (int t = 0; t < 6; ++t) p.add_term(mons[pick(rng)], Rational(c(rng)));
    return p;
}

}  // namespace

TEST_CASE("parser and printer round-trip") {
    const RootSystem& b3 = RootSystem::catalog(Family::B, 3);
    MultiPoly p = parse_poly(b3, " 1/2 * e1^2*e2 - e3 ^ 3 + (e1 - 2/3)*e2 ");
    CHECK(parse_poly(b3, p.str()) == p);
    CHECK(p.coefficient_of({2, 1, 0, 0}) == Rational(1, 2));
    CHECK(p.coefficient_of({1, 1, 0, 0}) == Rational(1));
    CHECK(p.coefficient_of({0, 1, 0, 0}) == Rational(-2, 3));

    CHECK_THROWS_AS(parse_poly(b3, "t1 + t2"), MathError);   // no t basis here
    CHECK_THROWS_AS(parse_poly(b3, "e1 + z1"), MathError);   // mixed bases
    CHECK_THROWS_AS(parse_poly(b3, "e5"), MathError);        // index out of range
    CHECK_THROWS_AS(parse_poly(b3, "e1 + "), MathError);

    // equivariant variable parses and prints
    MultiPoly q = parse_poly(b3, "e0^2*e1 - 2*e0");
    CHECK(q.uses_equivariant_variable());
    CHECK(parse_poly(b3, q.str()) == q);
}

TEST_CASE("the auxiliary t variable expands to the average form") {
    const RootSystem& e6 = RootSystem::catalog(Family::E6, 6);
    MultiPoly t = parse_poly(e6, "t7");
    MultiPoly sum(e6, "t");
    for (int i = 1; i <= 6; ++i) sum += MultiPoly::variable(e6, "t", i);
    CHECK(t == sum * Rational(1, 3));
    // and equals the top fundamental weight
    CHECK(t.to_basis("zeta") == parse_poly(e6, "z6").to_basis("zeta"));

    const RootSystem& e7 = RootSystem::catalog(Family::E7, 7);
    CHECK(parse_poly(e7, "t8").to_basis("zeta") == parse_poly(e7, "z7"));
}

TEST_CASE("degree bookkeeping") {
    const RootSystem& a2 = RootSystem::catalog(Family::A, 2);
    MultiPoly f = parse_poly(a2, "e1^2 + e1*e2");
    MultiPoly g = parse_poly(a2, "e1 - e2");
    CHECK(f.degree() == 2);
    CHECK((f * g).degree() == 3);
    CHECK(f.is_homogeneous());
    CHECK_FALSE((f + g).is_homogeneous());
    CHECK(MultiPoly(a2, "eps").degree() == -1);
}

TEST_CASE("basis conversion round-trips") {
    std::mt19937 rng(3);
    for (const auto* sys : {&RootSystem::catalog(Family::B, 4),
                            &RootSystem::catalog(Family::E7, 7)}) {
        const std::string other = sys->computation_basis();
        for (int t = 0; t < 10; ++t) {
            MultiPoly p = random_poly(*sys, other, 3, rng);
            CHECK(p.to_basis("zeta").to_basis(other) == p);
        }
    }
}

TEST_CASE("weyl action is a degree-preserving ring morphism") {
    std::mt19937 rng(17);
    const RootSystem& e6 = RootSystem::catalog(Family::E6, 6);
    for (int t = 0; t < 8; ++t) {
        MultiPoly f = random_poly(e6, "t", 2, rng);
        MultiPoly g = random_poly(e6, "t", 3, rng);
        WeylWord w(e6, {3, 6});
        CHECK((f * g).weyl_act(w) == f.weyl_act(w) * g.weyl_act(w));
        CHECK((f + g).weyl_act(w) == f.weyl_act(w) + g.weyl_act(w));
    }
    // identity word fixes everything
    MultiPoly f = random_poly(e6, "t", 3, rng);
    CHECK(f.weyl_act(WeylWord(e6, {})) == f);
}

TEST_CASE("composition of word actions") {
    std::mt19937 rng(23);
    const RootSystem& d4 = RootSystem::catalog(Family::D, 4);
    for (int t = 0; t < 8; ++t) {
        MultiPoly f = random_poly(d4, "eps", 2, rng);
        WeylWord w1(d4, {2, 4});
        WeylWord w2(d4, {1, 3});
        WeylWord prod(d4, {2, 4, 1, 3});
        CHECK(f.weyl_act(prod) == f.weyl_act(w2).weyl_act(w1));
    }
}

TEST_CASE("s6 action on an elementary symmetric class, printed instance") {
    // single-letter word on c3(t1..t6) substitutes the three moved variables
    const RootSystem& e6 = RootSystem::catalog(Family::E6, 6);
    auto vars = basis_variables(e6, "t", 6);
    MultiPoly c3 = elementary_symmetric(vars, 3);
    MultiPoly acted = c3.weyl_act(WeylWord(e6, {6}));
    std::vector<MultiPoly> moved = {vars[0], vars[1], vars[2],
                                    vars[3].reflect(6), vars[4].reflect(6),
                                    vars[5].reflect(6)};
    CHECK(acted == elementary_symmetric(moved, 3));
}

TEST_CASE("symmetric polynomial builders") {
    const RootSystem& b3 = RootSystem::catalog(Family::B, 3);
    auto eps = basis_variables(b3, "eps", 3);
    CHECK(elementary_symmetric(eps, 0) == MultiPoly::constant(b3, "eps", 1));
    CHECK(complete_symmetric(eps, 0) == MultiPoly::constant(b3, "eps", 1));
    CHECK(elementary_symmetric(eps, 1) == complete_symmetric(eps, 1));
    CHECK(elementary_symmetric(eps, 1) == parse_poly(b3, "e1+e2+e3"));
    CHECK(complete_symmetric(eps, 2) ==
          parse_poly(b3, "e1^2+e2^2+e3^2+e1*e2+e1*e3+e2*e3"));

    // delta_1 over all eps variables is twice the last fundamental weight
    MultiPoly d1 = complete_symmetric(eps, 1);
    CHECK(d1.to_basis("zeta") == parse_poly(b3, "2*z3"));
}

TEST_CASE("generating-function identity between elementary and complete") {
    // delta_i(eps') = sum_j (-1)^(i-j) c_{i-j}(eps'') delta_j(eps), all n <= 5
    for (int n = 2; n <= 5; ++n) {
        const RootSystem& sys = RootSystem::catalog(Family::B, n);
        auto eps = basis_variables(sys, "eps", n);
        for (int r = 1; r <= n; ++r) {
            std::vector<MultiPoly> prime(eps.begin(), eps.begin() + r);
            std::vector<MultiPoly> dprime(eps.begin() + r, eps.end());
            for (int i = 1; i <= n - r + 1; ++i) {
                MultiPoly lhs = complete_symmetric(prime, i);
                MultiPoly rhs(sys, "eps");
                for (int j = 0; j <= i; ++j) {
                    MultiPoly cpart = dprime.empty()
                                          ? (i - j == 0 ? MultiPoly::constant(sys, "eps", 1)
                                                        : MultiPoly(sys, "eps"))
                                          : elementary_symmetric(dprime, i - j);
                    MultiPoly term = cpart * complete_symmetric(eps, j);
                    rhs += ((i - j) % 2 == 0) ? term : -term;
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("equivariant shift on the catalogued instances") {
    const RootSystem& b4 = RootSystem::catalog(Family::B, 4);
    const Coweight z = b4.coweight_generator("z0").scaled(Rational(3));
    MultiPoly e4 = MultiPoly::variable(b4, "eps", 4);
    CHECK(e4.equivariant_shift(z) == parse_poly(b4, "e4 + 3*e0"));
    MultiPoly e1 = MultiPoly::variable(b4, "eps", 1);
    CHECK(e1.equivariant_shift(z) == e1);

    // zero coweight shifts nothing
    Coweight zero{&b4, RatVector(4)};
    MultiPoly f = parse_poly(b4, "e1^2*e4 - e2*e3");
    CHECK(f.equivariant_shift(zero) == f);

    // E7: t2 -> t2 - (d/2) t0
    const RootSystem& e7 = RootSystem::catalog(Family::E7, 7);
    const Coweight z7 = e7.coweight_generator("z0").scaled(Rational(5));
    MultiPoly t2 = MultiPoly::variable(e7, "t", 2);
    CHECK(t2.equivariant_shift(z7) == parse_poly(e7, "t2 - 5/2*t0"));

    CHECK_THROWS_AS(parse_poly(b4, "e0*e1").equivariant_shift(z), MathError);
}

TEST_CASE("equivariant shift is a ring morphism") {
    std::mt19937 rng(31);
    const RootSystem& d4 = RootSystem::catalog(Family::D, 4);
    const Coweight z = d4.coweight_generator("z1");
    for (int t = 0; t < 8; ++t) {
        MultiPoly f = random_poly(d4, "eps", 2, rng);
        MultiPoly g = random_poly(d4, "eps", 2, rng);
        CHECK((f * g).equivariant_shift(z) ==
              f.equivariant_shift(z) * g.equivariant_shift(z));
    }
}

TEST_CASE("coefficient extraction") {
    const RootSystem& e6 = RootSystem::catalog(Family::E6, 6);
    MultiPoly f = parse_poly(e6, "7/3*t1*t3^2 - t2");
    CHECK(f.coefficient_of({1, 0, 2, 0, 0, 0, 0}) == Rational(7, 3));
    CHECK(f.coefficient_of({0, 0, 0, 0, 0, 0, 5}) == Rational(0));
}

TEST_CASE("invariant quadratic of each family") {
    // the orthogonal families: proportional to the coordinate square sum
    for (int n = 2; n <= 4; ++n) {
        const RootSystem& b = RootSystem::catalog(Family::B, n);
        MultiPoly q = invariant_quadratic(b, "eps");
        MultiPoly square_sum(b, "eps");
        auto eps = basis_variables(b, "eps", n);
        for (const auto& e : eps) square_sum += e * e;
        CHECK(q == square_sum * (Rational(1) / square_sum.terms().begin()->second));
        for (int j = 1; j <= n; ++j) CHECK(q.reflect(j) == q);
    }

    // A2: brute-force average over all six group elements gives the same line
    const RootSystem& a2 = RootSystem::catalog(Family::A, 2);
    MultiPoly q = invariant_quadratic(a2, "eps");
    std::vector<WeylWord> group = {WeylWord(a2, {}),     WeylWord(a2, {1}),
                                   WeylWord(a2, {2}),    WeylWord(a2, {1, 2}),
                                   WeylWord(a2, {2, 1}), WeylWord(a2, {1, 2, 1})};
    MultiPoly avg(a2, "eps");
    MultiPoly seed = parse_poly(a2, "e1^2");
    for (const auto& w : group) avg += seed.weyl_act(w);
    REQUIRE_FALSE(avg.is_zero());
    // proportionality through the normalized leading coefficient
    CHECK(q == avg * (Rational(1) / avg.terms().begin()->second));
    // and the classical shape e1^2 + e1 e2 + e2^2 up to scale
    MultiPoly classical = parse_poly(a2, "e1^2 + e1*e2 + e2^2");
    CHECK(q == classical * (Rational(1) / classical.terms().begin()->second));
}

TEST_CASE("exact division helper") {
    const RootSystem& a3 = RootSystem::catalog(Family::A, 3);
    MultiPoly a = parse_poly(a3, "e1^2 - e2^2");
    MultiPoly b = parse_poly(a3, "e1 - e2");
    auto q = try_exact_divide(a, b);
    REQUIRE(q.has_value());
    CHECK(*q == parse_poly(a3, "e1 + e2"));
    CHECK_FALSE(try_exact_divide(parse_poly(a3, "e1^2 - e2*e3"), b).has_value());
}
