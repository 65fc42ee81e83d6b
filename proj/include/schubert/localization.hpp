#pragma once

#include "schubert/bruhat.hpp"
#include "schubert/poly.hpp"

namespace schubert {

// One fixed point of the torus action on the fibered Schubert variety of a
// projective subdiagram: the j-th prefix point over pole 0 or infinity, with
// the class restriction and the tangent-weight (Euler) factors there.
struct FixedPointDatum {
    int prefix_index = 0;  // j in 0..k
    bool at_infinity = false;
    MultiPoly restricted_class;
    std::vector<MultiPoly> euler_factors;  // first factor is the base direction
};

// Tangent data of all 2(k+1) fixed points. The class must be homogeneous of
// degree k+1 for a path of k nodes.
std::vector<FixedPointDatum> fixed_point_data(const RootSystem& sys,
                                              const std::vector<int>& path,
                                              const MultiPoly& f, const Coweight& z);

struct RationalFunctionSum {
    struct Summand {
        MultiPoly numerator;
        std::vector<MultiPoly> denominator_factors;  // nonzero linear forms
    };
    std::vector<Summand> summands;
};

// Exact value of a sum of rational functions that is a constant: symbolic
// common denominator and exact division, cross-checked by evaluation at
// three random rational points. Errors out when the sum is not constant.
Rational sum_constant(const RationalFunctionSum& sum);

// The fixed-point integral of the class of f over the fibered Schubert
// variety of the projective subdiagram `path`.
Rational localize(const RootSystem& sys, const std::vector<int>& path, const MultiPoly& f,
                  const Coweight& z);

}  // namespace schubert
