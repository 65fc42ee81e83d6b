// Timings of the parallel kernels against their serial runs, on the heavy
// representative workloads. Results must agree exactly; the table reports
// wall time per thread count.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "schubert/chevalley.hpp"
#include "schubert/fixtures.hpp"
#include "schubert/integrality.hpp"
#include "schubert/localization.hpp"
#include "schubert/parallel.hpp"

using namespace schubert;

namespace {

double time_one(const std::function<Rational()>& fn, Rational& out) {
    auto start = std::chrono::steady_clock::now();
    out = fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

void bench(const std::string& name, const std::function<Rational()>& fn,
           const std::vector<int>& thread_counts) {
    std::printf("%-34s", name.c_str());
    Rational reference;
    bool first = true;
    for (int nt : thread_counts) {
        set_thread_count(nt);
        Rational value;
        double secs = time_one(fn, value);
        if (first) {
            reference = value;
            first = false;
        } else if (value != reference) {
            std::printf("  MISMATCH at %d threads\n", nt);
            return;
        }
        std::printf("  %d thr: %7.3fs", nt, secs);
    }
    std::printf("   value=%s\n", reference.str().c_str());
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> threads{1};
    const int hw = thread_count();
    if (hw > 1) threads.push_back(hw);
    if (argc > 1) threads = {std::stoi(argv[1])};

    const RootSystem& e7 = RootSystem::catalog(Family::E7, 7);
    const Coweight z7 = e7.coweight_generator("z0");
    const MultiPoly p6 = fixture_polynomial("e7-p6");
    const MultiPoly q2 = invariant_quadratic(e7, "t");
    const MultiPoly q2cubed = q2 * q2 * q2;  // 900+ monomials of degree six

    const RootSystem& d6 = RootSystem::catalog(Family::D, 6);
    const Coweight zd = d6.coweight_generator("z1");
    const MultiPoly fd = half_delta_class(d6, 1);
    const auto path = named_subdiagram_path(d6, 1, "GammaPrime");

    bench("cap: e7-p6 over (4,5,6)",
          [&] { return cap_fibered(p6, WeylWord(e7, {4, 5, 6}), z7); }, threads);
    bench("cap: e7 q2^3 over (1,2,3,4,5)",
          [&] { return cap_fibered(q2cubed, WeylWord(e7, {1, 2, 3, 4, 5}), z7); }, threads);
    bench("localize: D6 r=1 spin-end sweep",
          [&] { return localize(d6, path, fd, zd); }, threads);
    bench("invariant basis: E7 r=5 deg 4",
          [&] { return Rational(static_cast<long>(invariant_basis(e7, 5, 4).size())); },
          threads);
    bench("invariants mod ideal: E7 r=6 deg 4",
          [&] {
              return Rational(static_cast<long>(
                  invariant_basis_mod_iplus(e7, 6, 4).representatives.size()));
          },
          threads);
    return 0;
}
