#include "schubert/chevalley.hpp"

#include <cstdint>
#include <unordered_map>

#include "schubert/parallel.hpp"

namespace schubert {

namespace {

// Weights of one monomial's linear factors, in zeta coordinates, ascending
// by basis index (the peeling order; cap is order-independent, which the
// property suite checks separately).
std::vector<RatVector> monomial_factors(const RootSystem& sys, const std::string& basis,
                                        const ExpVec& exp) {
    std::vector<RatVector> factors;
    const RatMatrix& to_zeta = sys.basis(basis).to_zeta;
    for (int i = 0; i < sys.rank(); ++i)
        for (int k = 0; k < exp[i]; ++k) factors.push_back(to_zeta.col(i));
    return factors;
}

struct MonomialCap {
    const RootSystem& sys;
    const std::vector<int>& letters;           // the full word
    const std::vector<RatVector>& factors;     // zeta coords, peeled in order
    const RatVector& z;                        // coweight, coroot coords

    // key: surviving-letter bitmask * 2 + mode (1 = fibered)
    std::unordered_map<std::uint64_t, Rational> memo;

    static RatVector reflect(const RootSystem& sys, int j, RatVector x) {
        const Rational xj = x[j - 1];
        if (!xj.is_zero())
            for (int i = 1; i <= sys.rank(); ++i)
                x[i - 1] -= xj * Rational(sys.cartan(i, j));
        return x;
    }

    // x acted on by the subword of surviving letters, left to right = applied last first
    RatVector act_subword(std::uint64_t mask, const RatVector& x) const {
        RatVector out = x;
        for (int p = static_cast<int>(letters.size()) - 1; p >= 0; --p)
            if (mask & (1ull << p)) out = reflect(sys, letters[p], out);
        return out;
    }

    // coroot of the cover deleting surviving position p: prefix(h_{letter_p})
    RatVector cover_coroot(std::uint64_t mask, int p) const {
        RatVector h(sys.rank());
        h[letters[p] - 1] = 1;
        for (int q = p - 1; q >= 0; --q) {
            if (!(mask & (1ull << q))) continue;
            const int j = letters[q];
            Rational alpha_of_h;
            for (int i = 1; i <= sys.rank(); ++i)
                alpha_of_h += Rational(sys.cartan(i, j)) * h[i - 1];
            h[j - 1] -= alpha_of_h;
        }
        return h;
    }

    static Rational dot(const RatVector& a, const RatVector& b) {
        Rational out;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero()) out += a[i] * b[i];
        return out;
    }

    int popcount(std::uint64_t mask) const {
        int c = 0;
        for (std::size_t p = 0; p < letters.size(); ++p)
            if (mask & (1ull << p)) ++c;
        return c;
    }

    Rational run(std::uint64_t mask, bool fibered) {
        const std::uint64_t key = mask * 2 + (fibered ? 1 : 0);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        // each vertical step deletes a letter and peels a factor in lockstep,
        // so the remaining factor count is len (+1 while still fibered)
        const int len = popcount(mask);
        const int peeled = static_cast<int>(factors.size()) - (len + (fibered ? 1 : 0));
        Rational result;
        if (!fibered && len == 0) {
            result = Rational(1);
        } else {
            const RatVector& x = factors[peeled];
            if (fibered) {
                result = -dot(act_subword(mask, x), z) * run(mask, false);
                for (int p = 0; p < static_cast<int>(letters.size()); ++p) {
                    if (!(mask & (1ull << p))) continue;
                    const std::uint64_t sub = mask & ~(1ull << p);
                    const Rational w = dot(act_subword(sub, x), cover_coroot(mask, p));
                    if (!w.is_zero()) result -= w * run(sub, true);
                }
            } else {
                for (int p = 0; p < static_cast<int>(letters.size()); ++p) {
                    if (!(mask & (1ull << p))) continue;
                    const std::uint64_t sub = mask & ~(1ull << p);
                    const Rational w = dot(act_subword(sub, x), cover_coroot(mask, p));
                    if (!w.is_zero()) result -= w * run(sub, false);
                }
            }
        }
        memo.emplace(key, result);
        return result;
    }
};

}  // namespace

Rational cap(const CapQuery& query) {
    const MultiPoly& poly = query.poly;
    const WeylWord& word = query.word;
    if (poly.system() == nullptr) throw MathError("cap of an unattached polynomial");
    const RootSystem& sys = *poly.system();
    if (&word.system() != &sys || query.coweight.system != &sys)
        throw MathError("cap query mixes root systems");
    if (poly.is_zero()) return Rational(0);
    if (poly.uses_equivariant_variable())
        throw MathError("cap takes a class without the equivariant variable");
    if (!poly.is_homogeneous()) throw MathError("cap takes a homogeneous class");
    require_admissible(word);
    if (word.length() > 60) throw MathError("word too long");

    const int expected =
        query.mode == CapMode::Fibered ? word.length() + 1 : word.length();
    if (poly.degree() != expected)
        throw MathError("degree/length mismatch: degree " + std::to_string(poly.degree()) +
                        " against word of length " + std::to_string(word.length()));

    // computation basis keeps the paper's sparsity; the value is basis-free
    const MultiPoly work = poly.to_basis(sys.computation_basis());
    std::vector<std::pair<ExpVec, Rational>> terms(work.terms().begin(), work.terms().end());
    const std::uint64_t full = word.length() == 0 ? 0 : ((1ull << word.length()) - 1);
    const bool fibered = query.mode == CapMode::Fibered;

    return parallel_sum(terms.size(), [&](std::size_t i) {
        const auto& [exp, coeff] = terms[i];
        auto factors = monomial_factors(sys, work.basis(), exp);
        MonomialCap mc{sys, word.letters(), factors, query.coweight.coords, {}};
        return coeff * mc.run(full, fibered);
    });
}

Rational cap_fibered(const MultiPoly& poly, const WeylWord& word, const Coweight& z) {
    return cap(CapQuery{poly, word, z, CapMode::Fibered});
}

Rational cap_vertical(const MultiPoly& poly, const WeylWord& word) {
    Coweight zero{&word.system(), RatVector(word.system().rank())};
    return cap(CapQuery{poly, word, zero, CapMode::Vertical});
}

}  // namespace schubert
