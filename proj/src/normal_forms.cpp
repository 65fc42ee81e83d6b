#include "schubert/normal_forms.hpp"

#include <algorithm>
#include <cstdlib>

namespace schubert {

namespace {

Integer tdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    IntMatrix m = a;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);

    auto row_op = [&](std::size_t i, std::size_t k, const Integer& q) {
        // row_i -= q * row_k
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) -= q * m.at(k, j);
        for (std::size_t j = 0; j < r; ++j) u.at(i, j) -= q * u.at(k, j);
    };
    auto col_op = [&](std::size_t j, std::size_t k, const Integer& q) {
        // col_j -= q * col_k
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) -= q * m.at(i, k);
        for (std::size_t i = 0; i < c; ++i) v.at(i, j) -= q * v.at(i, k);
    };
    auto swap_rows = [&](std::size_t i, std::size_t k) {
        m.swap_rows(i, k);
        u.swap_rows(i, k);
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        m.swap_cols(j, k);
        v.swap_cols(j, k);
    };

    const std::size_t steps = std::min(r, c);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero absolute value in the trailing submatrix
            bool found = false;
            std::size_t pi = t, pj = t;
            Integer best;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (m.at(i, j) == 0) continue;
                    Integer v2 = iabs(m.at(i, j));
                    if (!found || v2 < best) {
                        found = true;
                        best = v2;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) { t = steps; break; }  // rest of the matrix is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i)
                if (m.at(i, t) != 0) {
                    row_op(i, t, tdiv(m.at(i, t), m.at(t, t)));
                    if (m.at(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < c; ++j)
                if (m.at(t, j) != 0) {
                    col_op(j, t, tdiv(m.at(t, j), m.at(t, t)));
                    if (m.at(t, j) != 0) clean = false;
                }
            if (!clean) continue;  // smaller remainders exist; re-pick the pivot

            // pivot must divide the whole trailing block, so the diagonal chain holds
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        col_op(t, j, Integer(-1));  // drags a bad entry into column t
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (t == steps) break;
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (m.at(t, t) < 0) {
            for (std::size_t j = 0; j < c; ++j) m.at(t, j) = -m.at(t, j);
            for (std::size_t j = 0; j < r; ++j) u.at(t, j) = -u.at(t, j);
        }

    return SmithDecomposition{std::move(u), std::move(m), std::move(v)};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(rows);

    auto row_op = [&](std::size_t i, std::size_t k, const Integer& q) {
        for (std::size_t j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(k, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(i, j) -= q * u.at(k, j);
    };

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        for (;;) {
            std::size_t pi = rows;
            Integer best;
            for (std::size_t i = r; i < rows; ++i) {
                if (h.at(i, col) == 0) continue;
                Integer v = iabs(h.at(i, col));
                if (pi == rows || v < best) { pi = i; best = v; }
            }
            if (pi == rows) break;
            h.swap_rows(r, pi);
            u.swap_rows(r, pi);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i)
                if (h.at(i, col) != 0) {
                    row_op(i, r, tdiv(h.at(i, col), h.at(r, col)));
                    if (h.at(i, col) != 0) clean = false;
                }
            if (clean) break;
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0) {
            for (std::size_t j = 0; j < cols; ++j) h.at(r, j) = -h.at(r, j);
            for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
        }
        for (std::size_t i = 0; i < r; ++i)
            if (h.at(i, col) != 0) row_op(i, r, fdiv(h.at(i, col), h.at(r, col)));
        ++r;
    }
    return HermiteDecomposition{std::move(u), std::move(h)};
}

std::vector<IntVector> integer_saturation_basis(const std::vector<RatVector>& l) {
    if (l.empty()) return {};
    const std::size_t k = l.size(), n = l[0].size();
    RatMatrix q = RatMatrix::from_rows(l, n);
    if (rank(q) != k) throw MathError("not independent");

    IntMatrix m(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        Integer mult = 1;
        for (std::size_t j = 0; j < n; ++j) mult = lcm(mult, l[i][j].den());
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = l[i][j] * Rational(mult);
            m.at(i, j) = scaled.num();
        }
    }

    auto snf = smith_normal_form(m);
    // m = u^-1 d v^-1, so span_Q(rows of m) = span_Q(first k rows of v^-1),
    // and since v^-1 is unimodular those rows already generate the saturation.
    RatMatrix vinv = snf.v.to_rational().inverse();
    IntMatrix gen(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& e = vinv.at(i, j);
            if (!e.is_integer()) throw MathError("unimodular inverse not integral");
            gen.at(i, j) = e.num();
        }

    auto hnf = hermite_normal_form(gen);
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < k; ++i) {
        IntVector row(n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = hnf.h.at(i, j);
            nonzero = nonzero || row[j] != 0;
        }
        if (nonzero) basis.push_back(std::move(row));
    }
    return basis;
}

}  // namespace schubert
