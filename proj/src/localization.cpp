#include "schubert/localization.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "schubert/parallel.hpp"

namespace schubert {

std::vector<FixedPointDatum> fixed_point_data(const RootSystem& sys,
                                              const std::vector<int>& path,
                                              const MultiPoly& f, const Coweight& z) {
    // the empty diagram sweeps a single fiber point: the base sphere, with
    // its two poles as fixed points
    if (!path.empty()) projective_subdiagram_word(sys, path.front(), path);
    const int k = static_cast<int>(path.size());
    if (f.system() != &sys || z.system != &sys)
        throw MathError("localization query mixes root systems");
    if (!f.is_homogeneous() || f.degree() != k + 1)
        throw MathError("class degree must equal the subdiagram size plus one");
    if (f.uses_equivariant_variable())
        throw MathError("localization takes a class without the equivariant variable");

    const std::string& basis = sys.computation_basis();
    const MultiPoly work = f.to_basis(basis);

    // alpha_(a) + ... + alpha_(b) as a linear form in the computation basis
    auto segment = [&](int a, int b) {
        Weight sum{&sys, "zeta", RatVector(sys.rank())};
        for (int i = a; i <= b; ++i) {
            Weight root = sys.simple_root(path[i - 1]);
            for (int c = 0; c < sys.rank(); ++c) sum.coords[c] += root.coords[c];
        }
        return MultiPoly::from_weight(sum, basis);
    };
    const MultiPoly base = MultiPoly::equivariant_variable(sys, basis);

    std::vector<FixedPointDatum> out;
    for (int j = 0; j <= k; ++j) {
        // w_(j) = s_(j) o ... o s_(1): the last j letters of the word
        std::vector<int> prefix(path.rbegin() + (k - j), path.rend());
        WeylWord wj(sys, prefix);
        MultiPoly restricted = work.weyl_act(wj);

        std::vector<MultiPoly> factors{base};
        for (int h = 1; h <= j; ++h) factors.push_back(segment(h, j));
        for (int h = j + 1; h <= k; ++h) factors.push_back(-segment(j + 1, h));

        FixedPointDatum at0{j, false, restricted, factors};

        std::vector<MultiPoly> shifted{-base};
        for (std::size_t i = 1; i < factors.size(); ++i)
            shifted.push_back(factors[i].equivariant_shift(z));
        FixedPointDatum atInf{j, true, restricted.equivariant_shift(z), std::move(shifted)};

        out.push_back(std::move(at0));
        out.push_back(std::move(atInf));
    }
    return out;
}

namespace {

// Canonical form of a linear factor: scale so the leading coefficient is 1;
// returns (normalized factor, scale).
std::pair<MultiPoly, Rational> normalize_linear(const MultiPoly& f) {
    if (f.is_zero() || f.degree() != 1)
        throw MathError("denominator factor is not a nonzero linear form");
    const Rational lead = f.terms().begin()->second;
    return {f * (Rational(1) / lead), lead};
}

struct FactorKey {
    std::string repr;
    bool operator<(const FactorKey& o) const { return repr < o.repr; }
};

// Q = sum of numerator_i * (R / denominator_i), with the per-summand
// cofactor products expanded in parallel.
MultiPoly combined_numerator(const RationalFunctionSum& sum,
                             const std::map<FactorKey, MultiPoly>& factor_polys,
                             const std::vector<std::map<FactorKey, int>>& mult,
                             const std::map<FactorKey, int>& maxmult,
                             const std::vector<Rational>& scale) {
    const RootSystem& sys = *sum.summands[0].numerator.system();
    const std::string& basis = sum.summands[0].numerator.basis();
    std::vector<MultiPoly> pieces(sum.summands.size(), MultiPoly(sys, basis));
    parallel_for(sum.summands.size(), [&](std::size_t i) {
        MultiPoly cofactor = MultiPoly::constant(sys, basis, Rational(1) / scale[i]);
        for (const auto& [key, maxc] : maxmult) {
            auto it = mult[i].find(key);
            const int have = it == mult[i].end() ? 0 : it->second;
            for (int c = have; c < maxc; ++c) cofactor = cofactor * factor_polys.at(key);
        }
        pieces[i] = sum.summands[i].numerator * cofactor;
    });
    MultiPoly q(sys, basis);
    for (const auto& p : pieces) q += p;
    return q;
}

}  // namespace

Rational sum_constant(const RationalFunctionSum& sum) {
    if (sum.summands.empty()) return Rational(0);
    const RootSystem& sys = *sum.summands[0].numerator.system();
    const std::string& basis = sum.summands[0].numerator.basis();

    // collect distinct normalized factors with per-summand multiplicities
    std::map<FactorKey, MultiPoly> factor_polys;
    std::vector<std::map<FactorKey, int>> mult(sum.summands.size());
    std::vector<Rational> scale(sum.summands.size(), Rational(1));
    for (std::size_t i = 0; i < sum.summands.size(); ++i) {
        for (const auto& den : sum.summands[i].denominator_factors) {
            auto [norm, c] = normalize_linear(den);
            scale[i] *= c;
            FactorKey key{norm.str()};
            factor_polys.emplace(key, norm);
            mult[i][key] += 1;
        }
    }
    std::map<FactorKey, int> maxmult;
    for (const auto& m : mult)
        for (const auto& [key, count] : m)
            maxmult[key] = std::max(maxmult[key], count);

    // R = product of all factors at maximal multiplicity
    MultiPoly common = MultiPoly::constant(sys, basis, 1);
    for (const auto& [key, count] : maxmult)
        for (int c = 0; c < count; ++c) common = common * factor_polys.at(key);

    MultiPoly q = combined_numerator(sum, factor_polys, mult, maxmult, scale);

    Rational value;
    if (!q.is_zero()) {
        if (q.degree() != common.degree())
            throw MathError("not a constant - likely wrong input data");
        value = q.terms().begin()->second / common.terms().begin()->second;
        MultiPoly check = q - common * value;
        if (!check.is_zero()) throw MathError("not a constant - likely wrong input data");
    }

    // secondary check: evaluate the original sum at random rational points
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> numd(-23, 23), dend(1, 5);
    int done = 0, attempts = 0;
    while (done < 3 && attempts < 200) {
        ++attempts;
        RatVector point(sys.rank() + 1);
        for (auto& x : point) x = Rational(numd(rng), dend(rng));
        Rational total;
        bool ok = true;
        for (const auto& s : sum.summands) {
            Rational den(1);
            for (const auto& f : s.denominator_factors) {
                den *= f.evaluate(point);
                if (den.is_zero()) { ok = false; break; }
            }
            if (!ok) break;
            total += s.numerator.evaluate(point) / den;
        }
        if (!ok) continue;
        if (total != value) throw MathError("not a constant - likely wrong input data");
        ++done;
    }
    if (done < 3) throw MathError("could not find evaluation points away from the poles");
    return value;
}

Rational localize(const RootSystem& sys, const std::vector<int>& path, const MultiPoly& f,
                  const Coweight& z) {
    auto data = fixed_point_data(sys, path, f, z);
    RationalFunctionSum sum;
    for (auto& d : data)
        sum.summands.push_back({std::move(d.restricted_class), std::move(d.euler_factors)});
    return sum_constant(sum);
}

}  // namespace schubert
