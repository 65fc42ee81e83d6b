#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "schubert/fixtures.hpp"
#include "schubert/parallel.hpp"
#include "support/oracles.hpp"

using namespace schubert;
using namespace schubert::testing;

namespace {

Coweight gen_times(const RootSystem& sys, const std::string& name, long d) {
    return sys.coweight_generator(name).scaled(Rational(d));
}

// a random admissible word of the requested length, or empty optional
std::optional<WeylWord> random_admissible(const RootSystem& sys, int len, std::mt19937& rng) {
    std::vector<int> letters(sys.rank());
    for (int i = 0; i < sys.rank(); ++i) letters[i] = i + 1;
    for (int attempt = 0; attempt < 60; ++attempt) {
        std::shuffle(letters.begin(), letters.end(), rng);
        WeylWord w(sys, std::vector<int>(letters.begin(), letters.begin() + len));
        if (is_admissible(w).ok) return w;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("degree-two caps over the empty word") {
    // the only fibered degree-two class pairs to minus the weight evaluation
    for (const auto* sys : {&RootSystem::catalog(Family::A, 4),
                            &RootSystem::catalog(Family::B, 3),
                            &RootSystem::catalog(Family::E7, 7)}) {
        const Coweight z = gen_times(*sys, "z0", 3);
        for (int i = 1; i <= sys->rank(); ++i) {
            MultiPoly zeta_i = MultiPoly::from_weight(sys->fundamental_weight(i), "zeta");
            CHECK(cap_fibered(zeta_i, WeylWord(*sys, {}), z) ==
                  -sys->pair_with_coroot(sys->fundamental_weight(i), z));
        }
    }
}

TEST_CASE("grassmann and isotropic closed forms") {
    for (Family fam : {Family::A, Family::C}) {
        for (int n = 2; n <= 4; ++n) {
            const RootSystem& sys = RootSystem::catalog(fam, n);
            const long denom = fam == Family::A ? n + 1 : 2;
            for (int r = 1; r <= n; ++r) {
                auto vars = basis_variables(sys, "eps", r);
                for (long d = 0; d <= 3; ++d) {
                    const Coweight z = gen_times(sys, "z0", d);
                    CHECK(cap_fibered(elementary_symmetric(vars, 1), WeylWord(sys, {}), z) ==
                          Rational(-d * r, denom));
                    CHECK(cap_fibered(elementary_symmetric(vars, 2), WeylWord(sys, {r}), z) ==
                          Rational(d * (r - 1), denom));
                }
            }
        }
    }
}

TEST_CASE("exceptional caps, printed instances") {
    const RootSystem& e6 = RootSystem::catalog(Family::E6, 6);
    for (long d = 1; d <= 2; ++d) {
        const Coweight z = gen_times(e6, "z0", d);
        CHECK(cap_fibered(elementary_symmetric(basis_variables(e6, "t", 3), 2),
                          WeylWord(e6, {3}), z) == Rational(-d, 3));
        CHECK(cap_fibered(elementary_symmetric(basis_variables(e6, "t", 6), 3),
                          WeylWord(e6, {3, 6}), z) == Rational(2 * d, 3));
    }

    const RootSystem& e7 = RootSystem::catalog(Family::E7, 7);
    for (long d = 1; d <= 2; ++d) {
        const Coweight z = gen_times(e7, "z0", d);
        CHECK(cap_fibered(parse_poly(e7, "t1*t2"), WeylWord(e7, {2}), z) == Rational(d, 2));
        CHECK(cap_fibered(elementary_symmetric(basis_variables(e7, "t", 4), 2),
                          WeylWord(e7, {4}), z) == Rational(d, 2));
    }
    const Coweight z1 = gen_times(e7, "z0", 1);
    CHECK(cap_fibered(fixture_polynomial("e7-p5"), WeylWord(e7, {4, 6, 5}), z1) ==
          Rational(-1, 2));
    CHECK(cap_fibered(fixture_polynomial("e7-p6"), WeylWord(e7, {4, 5, 6}), z1) ==
          Rational(3, 2));
}

TEST_CASE("query validation") {
    const RootSystem& e7 = RootSystem::catalog(Family::E7, 7);
    const Coweight z = gen_times(e7, "z0", 1);
    MultiPoly f = parse_poly(e7, "t1*t2");
    CHECK_THROWS_AS(cap_fibered(f, WeylWord(e7, {2, 3}), z), MathError);  // degree mismatch
    CHECK_THROWS_AS(cap_fibered(f, WeylWord(e7, {4, 6}), z), MathError);  // inadmissible
    CHECK_THROWS_AS(cap_fibered(parse_poly(e7, "t1*t2 + t3"), WeylWord(e7, {2}), z),
                    MathError);  // inhomogeneous
    CHECK_THROWS_AS(cap_fibered(parse_poly(e7, "t0*t1"), WeylWord(e7, {2}), z), MathError);
    const RootSystem& e6 = RootSystem::catalog(Family::E6, 6);
    CHECK_THROWS_AS(cap_fibered(parse_poly(e6, "t1*t2"), WeylWord(e7, {2}), z), MathError);
    // the zero class always pairs to zero
    CHECK(cap_fibered(MultiPoly(e7, "t"), WeylWord(e7, {2}), z) == Rational(0));
}

TEST_CASE("vertical caps: classical single-letter values") {
    // the vertical pairing of a fundamental weight against its own letter
    // carries the line-bundle sign convention
    const RootSystem& a3 = RootSystem::catalog(Family::A, 3);
    for (int r = 1; r <= 3; ++r) {
        MultiPoly zr = MultiPoly::from_weight(a3.fundamental_weight(r), "zeta");
        CHECK(cap_vertical(zr, WeylWord(a3, {r})) == Rational(-1));
    }
    // vertical mode demands degree equal to length
    CHECK_THROWS_AS(cap_vertical(parse_poly(a3, "z1^2"), WeylWord(a3, {1})), MathError);
}

TEST_CASE("linearity in the class and in the coweight") {
    std::mt19937 rng(71);
    const RootSystem& d4 = RootSystem::catalog(Family::D, 4);
    const Coweight z = gen_times(d4, "z1", 1);
    auto mons = monomial_exponents(4, 3);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    for (int t = 0; t < 10; ++t) {
        MultiPoly f(d4, "eps"), g(d4, "eps");
        f.add_term(mons[pick(rng)], Rational(3));
        g.add_term(mons[pick(rng)], Rational(1, 2));
        WeylWord w(d4, {3, 2});
        const Rational a(5, 3), b(-7, 2);
        CHECK(cap_fibered(f * a + g * b, w, z) ==
              a * cap_fibered(f, w, z) + b * cap_fibered(g, w, z));
        // linear in the coweight: value(d) = d * value(1), value(0) = 0
        const Rational v1 = cap_fibered(f, w, z);
        CHECK(cap_fibered(f, w, gen_times(d4, "z1", 0)) == Rational(0));
        CHECK(cap_fibered(f, w, gen_times(d4, "z1", 2)) == v1 * Rational(2));
    }
}

TEST_CASE("chain-enumeration oracle agrees with the memoized recursion") {
    std::mt19937 rng(101);
    std::vector<const RootSystem*> systems = {
        &RootSystem::catalog(Family::A, 4), &RootSystem::catalog(Family::B, 3),
        &RootSystem::catalog(Family::C, 3), &RootSystem::catalog(Family::D, 4),
        &RootSystem::catalog(Family::E6, 6)};
    std::uniform_int_distribution<int> pickvar(1, 3), picklen(1, 3), pickd(0, 2);
    for (int t = 0; t < 40; ++t) {
        const RootSystem& sys = *systems[rng() % systems.size()];
        const int len = picklen(rng);
        auto word = random_admissible(sys, len, rng);
        if (!word) continue;
        const Coweight z =
            gen_times(sys, sys.family() == Family::D ? "z1" : "z0", pickd(rng));
        std::vector<Weight> factors;
        MultiPoly product = MultiPoly::constant(sys, sys.computation_basis(), 1);
        for (int k = 0; k <= len; ++k) {
            const int i = 1 + static_cast<int>(rng() % sys.rank());
            Weight v{&sys, sys.computation_basis(), RatVector(sys.rank())};
            v.coords[i - 1] = 1;
            factors.push_back(v);
            product = product * MultiPoly::variable(sys, sys.computation_basis(), i);
        }
        const Rational fast = cap_fibered(product, *word, z);
        CHECK(naive_cap_fibered(sys, factors, *word, z) == fast);

        // peeled in any order: the oracle consumes the factors as given
        for (int shuffle = 0; shuffle < 2; ++shuffle) {
            std::shuffle(factors.begin(), factors.end(), rng);
            CHECK(naive_cap_fibered(sys, factors, *word, z) == fast);
        }
    }
}

TEST_CASE("caps kill multiples of the invariant quadratic") {
    std::mt19937 rng(909);
    std::vector<const RootSystem*> systems = {
        &RootSystem::catalog(Family::A, 3), &RootSystem::catalog(Family::B, 4),
        &RootSystem::catalog(Family::C, 4), &RootSystem::catalog(Family::D, 4)};
    int done = 0;
    while (done < 30) {
        const RootSystem& sys = *systems[rng() % systems.size()];
        const std::string& basis = sys.computation_basis();
        const MultiPoly q2 = invariant_quadratic(sys, basis);
        const int len = 1 + static_cast<int>(rng() % 3);
        auto word = random_admissible(sys, len, rng);
        if (!word) continue;
        auto mons = monomial_exponents(sys.rank(), len - 1);
        MultiPoly g(sys, basis);
        g.add_term(mons[rng() % mons.size()], Rational(1 + static_cast<long>(rng() % 5)));
        const Coweight z =
            gen_times(sys, sys.family() == Family::D ? "z1" : "z0", 1 + rng() % 2);
        CHECK(cap_fibered(q2 * g, *word, z) == Rational(0));
        ++done;
    }
}

TEST_CASE("thread count does not change exact results") {
    const RootSystem& e7 = RootSystem::catalog(Family::E7, 7);
    const Coweight z = gen_times(e7, "z0", 1);
    const MultiPoly p6 = fixture_polynomial("e7-p6");
    const int original = thread_count();
    set_thread_count(1);
    const Rational serial = cap_fibered(p6, WeylWord(e7, {4, 5, 6}), z);
    set_thread_count(4);
    const Rational parallel = cap_fibered(p6, WeylWord(e7, {4, 5, 6}), z);
    set_thread_count(original);
    CHECK(serial == parallel);
    CHECK(serial == Rational(3, 2));
}
