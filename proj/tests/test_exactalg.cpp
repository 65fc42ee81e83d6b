#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schubert/normal_forms.hpp"

using namespace schubert;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational::parse("-3/2") == a);
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), MathError);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), MathError);
}

TEST_CASE("arithmetic round-trips exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-50, 50), e(1, 30);
    for (int i = 0; i < 200; ++i) {
        Rational a(d(rng), e(rng)), b(d(rng), e(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("kernel of tiny matrices") {
    RatMatrix a(1, 1);
    a.at(0, 0) = 1;
    CHECK(rational_kernel(a).empty());

    RatMatrix b(1, 2);
    b.at(0, 0) = 1;
    b.at(0, 1) = -1;
    auto k = rational_kernel(b);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][0] == Rational(1));

    RatMatrix zero_rows(0, 3);
    CHECK(rational_kernel(zero_rows).size() == 3);
}

TEST_CASE("kernel vectors satisfy A x = 0 and count cols - rank") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int t = 0; t < 50; ++t) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        RatMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = d(rng);
        auto kernel = rational_kernel(a);
        CHECK(kernel.size() == cols - rank(a));
        for (const auto& x : kernel) {
            auto y = a.apply(x);
            for (const auto& v : y) CHECK(v.is_zero());
        }
    }
}

namespace {

void check_smith_contract(const IntMatrix& a) {
    auto snf = smith_normal_form(a);
    CHECK(snf.u * a * snf.v == snf.d);
    Integer du = determinant(snf.u), dv = determinant(snf.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    const std::size_t steps = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < steps; ++i) {
        CHECK(snf.d.at(i, i) >= 0);
        if (i + 1 < steps && snf.d.at(i + 1, i + 1) != 0) {
            if (snf.d.at(i, i) == 0)
                CHECK(snf.d.at(i + 1, i + 1) == 0);
            else
                CHECK(snf.d.at(i + 1, i + 1) % snf.d.at(i, i) == 0);
        }
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) CHECK(snf.d.at(i, j) == 0);
}

void check_hermite_contract(const IntMatrix& a) {
    auto hnf = hermite_normal_form(a);
    CHECK(hnf.u * a == hnf.h);
    Integer du = determinant(hnf.u);
    CHECK((du == 1 || du == -1));
    long prev_pivot_col = -1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        long lead = -1;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (hnf.h.at(i, j) != 0) {
                lead = static_cast<long>(j);
                break;
            }
        if (lead < 0) continue;  // zero rows sink to the bottom
        CHECK(lead > prev_pivot_col);
        prev_pivot_col = lead;
        CHECK(hnf.h.at(i, lead) > 0);
        for (std::size_t k = 0; k < i; ++k) {
            CHECK(hnf.h.at(k, lead) >= 0);
            CHECK(hnf.h.at(k, lead) < hnf.h.at(i, lead));
        }
    }
}

}  // namespace

TEST_CASE("smith normal form on the catalogued examples") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 3;
    auto snf = smith_normal_form(a);
    CHECK(snf.d.at(0, 0) == 1);
    CHECK(snf.d.at(1, 1) == 6);
    check_smith_contract(a);

    auto id = IntMatrix::identity(3);
    auto snf_id = smith_normal_form(id);
    CHECK(snf_id.d == id);

    IntMatrix z(1, 1);
    auto snf_z = smith_normal_form(z);
    CHECK(snf_z.d.at(0, 0) == 0);
}

TEST_CASE("smith and hermite contracts on random matrices up to 12x12") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    for (int t = 0; t < 110; ++t) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
        check_smith_contract(a);
        check_hermite_contract(a);
    }
}

TEST_CASE("integer saturation of simple lattices") {
    // scaling: span{(1/2, 1/2)} saturates to (1, 1)
    auto basis = integer_saturation_basis({{Rational(1, 2), Rational(1, 2)}});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == 1);
    CHECK(basis[0][1] == 1);

    auto id2 = integer_saturation_basis({{Rational(1), Rational(0)},
                                         {Rational(0), Rational(1)}});
    REQUIRE(id2.size() == 2);
    CHECK(id2[0][0] == 1);
    CHECK(id2[0][1] == 0);
    CHECK(id2[1][1] == 1);

    CHECK_THROWS_AS(integer_saturation_basis(
                        {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}}),
                    MathError);
}

TEST_CASE("saturation of a rank-2 span, checked by membership enumeration") {
    // span{(1/3, 2/3), (1, 0)} over Q is the whole plane, so the saturation is
    // all of Z^2; confirm the basis generates every small integer vector.
    auto basis = integer_saturation_basis(
        {{Rational(1, 3), Rational(2, 3)}, {Rational(1), Rational(0)}});
    REQUIRE(basis.size() == 2);
    IntMatrix m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = basis[i][j];
    Integer det = determinant(m);
    CHECK((det == 1 || det == -1));  // generates exactly Z^2
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            // solve c0 * b0 + c1 * b1 = (x, y) over Q and demand integrality
            RatMatrix q(2, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) q.at(i, j) = Rational(basis[j][i]);
            auto sol = solve(q, {Rational(x), Rational(y)});
            REQUIRE(sol.has_value());
            for (const auto& c : *sol) CHECK(c.is_integer());
        }
}
