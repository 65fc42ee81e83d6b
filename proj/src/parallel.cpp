#include "schubert/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schubert {

namespace {

int default_threads() {
    if (const char* env = std::getenv("SCHUBERT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int g_threads = default_threads();

}  // namespace

int thread_count() { return g_threads; }

void set_thread_count(int n) { g_threads = n >= 1 ? n : 1; }

namespace {

bool nested() {
#ifdef _OPENMP
    return omp_in_parallel() != 0;
#else
    return false;
#endif
}

}  // namespace

int effective_thread_count() { return nested() ? 1 : g_threads; }

Rational parallel_sum(std::size_t n, const std::function<Rational(std::size_t)>& fn) {
    const int nt = nested() ? 1 : g_threads;
    if (nt <= 1 || n < 2) {
        Rational total;
        for (std::size_t i = 0; i < n; ++i) total += fn(i);
        return total;
    }
#ifdef _OPENMP
    std::vector<Rational> partial(nt);
#pragma omp parallel num_threads(nt)
    {
        const int tid = omp_get_thread_num();
        Rational local;
#pragma omp for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(n); ++i) local += fn(static_cast<std::size_t>(i));
        partial[tid] = local;
    }
    Rational total;
    for (const auto& p : partial) total += p;
    return total;
#else
    Rational total;
    for (std::size_t i = 0; i < n; ++i) total += fn(i);
    return total;
#endif
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const int nt = nested() ? 1 : g_threads;
    if (nt <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace schubert
