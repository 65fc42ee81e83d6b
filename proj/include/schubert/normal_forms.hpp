#pragma once

#include <vector>

#include "schubert/linalg.hpp"

namespace schubert {

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithDecomposition {
    IntMatrix u, d, v;
};

// Pivot selection: smallest nonzero absolute value, to limit growth.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// H = U * A with U unimodular, H in row echelon form with positive pivots
// and entries above each pivot reduced into [0, pivot).
struct HermiteDecomposition {
    IntMatrix u, h;
};

HermiteDecomposition hermite_normal_form(const IntMatrix& a);

// Z-basis of span_Q(L) intersected with Z^n, Hermite-reduced. L must be
// linearly independent over Q ("not independent" otherwise).
std::vector<IntVector> integer_saturation_basis(const std::vector<RatVector>& l);

}  // namespace schubert
