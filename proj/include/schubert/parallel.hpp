#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "schubert/rational.hpp"

namespace schubert {

// Runtime thread count for the OpenMP kernels. 1 selects the serial paths.
// Initialized from SCHUBERT_THREADS when set, else the OpenMP default
// (or 1 in builds without OpenMP).
int thread_count();
void set_thread_count(int n);

// 1 inside an OpenMP region (nested teams would only add overhead),
// otherwise the configured count.
int effective_thread_count();

// Exact map-reduce: sum of fn(0..n-1). Addition of rationals is associative
// and exact, so the result is identical for every thread count.
Rational parallel_sum(std::size_t n, const std::function<Rational(std::size_t)>& fn);

// Runs fn(i) for i in [0, n), possibly concurrently. fn must only touch
// distinct slots of shared output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace schubert
