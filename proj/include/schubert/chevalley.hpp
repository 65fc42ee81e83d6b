#pragma once

#include "schubert/bruhat.hpp"
#include "schubert/poly.hpp"

namespace schubert {

enum class CapMode { Fibered, Vertical };

// One pairing query: integrate the class of `poly` against the fibered
// Schubert class of `word` (mode Fibered, degree = length + 1) or the
// vertical one (mode Vertical, degree = length).
struct CapQuery {
    MultiPoly poly;
    WeylWord word;
    Coweight coweight;
    CapMode mode = CapMode::Fibered;
};

// Exact evaluation by the recursive cover-peeling algorithm. Linear in the
// polynomial; one factor of the current monomial is peeled per step:
//
//   vert(1, e)        = 1
//   vert(const, w!=e) = 0
//   vert(x g, w)      = - sum over covers (w', h):  (w' x)(h) vert(g, w')
//   fib(x g, w)       = - (w x)(z) vert(g, w)
//                       - sum over covers (w', h):  (w' x)(h) fib(g, w')
//
// Monomials are processed in parallel; within one monomial the recursion is
// memoized on (surviving letter subset, mode).
Rational cap(const CapQuery& query);

Rational cap_fibered(const MultiPoly& poly, const WeylWord& word, const Coweight& z);
Rational cap_vertical(const MultiPoly& poly, const WeylWord& word);

}  // namespace schubert
