#include "schubert/integrality.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "schubert/fixtures.hpp"
#include "schubert/normal_forms.hpp"
#include "schubert/parallel.hpp"

namespace schubert {

std::vector<int> residual_generators(const RootSystem& sys, int r) {
    if (r < 1 || r > sys.rank()) throw MathError("orbit index out of range");
    std::vector<int> gens;
    for (int j = 1; j <= sys.rank(); ++j)
        if (j != r) gens.push_back(j);
    return gens;
}

IntegralPresentation IntegralPresentation::forOrbit(const RootSystem& sys, int r) {
    const int n = sys.rank();
    if (r < 1 || r > n) throw MathError("orbit index out of range");
    IntegralPresentation p{&sys, r, {}};
    auto pw = [](int i) { return "p" + std::to_string(i); };
    if (sys.family() == Family::B) {
        for (int i = 1; i <= n; ++i)
            p.relations.push_back("c" + std::to_string(i) + "(e) - 2*" + pw(i));
        for (int j = n + 1; j <= 2 * n; ++j) p.relations.push_back(pw(j));
        for (int k = 1; k <= n; ++k) {
            std::string rel = pw(2 * k);
            for (int j = 1; j <= 2 * k - 1; ++j)
                rel += (j % 2 ? " - " : " + ") + pw(j) + "*" + pw(2 * k - j);
            p.relations.push_back(rel);
        }
        return p;
    }
    if (sys.family() == Family::D) {
        for (int i = 1; i <= n - 1; ++i)
            p.relations.push_back("c" + std::to_string(i) + "(e) - 2*" + pw(i));
        p.relations.push_back("c" + std::to_string(n) + "(e)");
        for (int j = n; j <= 2 * n - 2; ++j) p.relations.push_back(pw(j));
        for (int k = 1; k <= n - 1; ++k) {
            std::string rel = pw(2 * k);
            for (int j = 1; j <= 2 * k - 1; ++j)
                rel += (j % 2 ? " - " : " + ") + pw(j) + "*" + pw(2 * k - j);
            p.relations.push_back(rel);
        }
        return p;
    }
    throw MathError("integer presentations are catalogued for the orthogonal families only");
}

MultiPoly half_delta_class(const RootSystem& sys, int r) {
    const int n = sys.rank();
    if (r < 1 || r > n) throw MathError("orbit index out of range");
    if (sys.family() == Family::B) {
        auto vars = basis_variables(sys, "eps", r);
        return complete_symmetric(vars, n - r + 1) * Rational(1, 2);
    }
    if (sys.family() == Family::D) {
        if (r == n - 1) {
            // flipped variables (eps_1, ..., eps_{n-1}, -eps_n)
            auto vars = basis_variables(sys, "eps", n - 1);
            vars.push_back(-MultiPoly::variable(sys, "eps", n));
            return complete_symmetric(vars, 3) * Rational(1, 2);
        }
        auto vars = basis_variables(sys, "eps", r);
        return complete_symmetric(vars, n - r + 1) * Rational(1, 2);
    }
    throw MathError("half-delta classes exist for the orthogonal families only");
}

// ---------------------------------------------------------------------------
// presentation membership

namespace {

// Integer polynomials in the combined variables (eps_1..eps_n, p_1..p_K).
using ProofPoly = std::map<std::vector<int>, Integer>;

ProofPoly pp_const(int nvars, Integer c) {
    ProofPoly p;
    if (c != 0) p.emplace(std::vector<int>(nvars, 0), std::move(c));
    return p;
}

ProofPoly pp_var(int nvars, int index) {
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    ProofPoly p;
    p.emplace(std::move(e), Integer(1));
    return p;
}

void pp_add(ProofPoly& a, const ProofPoly& b, const Integer& scale = Integer(1)) {
    for (const auto& [e, c] : b) {
        Integer& slot = a[e];
        slot += c * scale;
        if (slot == 0) a.erase(e);
    }
}

ProofPoly pp_mul(const ProofPoly& a, const ProofPoly& b) {
    ProofPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Integer& slot = out[e];
            slot += ca * cb;
            if (slot == 0) out.erase(e);
        }
    return out;
}

std::string pp_render(const ProofPoly& p, int n) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p) {
        const bool neg = c < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        Integer a = c < 0 ? Integer(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (static_cast<int>(i) < n) ? "e" + std::to_string(i + 1)
                                              : "p" + std::to_string(i - n + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
    }
    return os.str();
}

// elementary symmetric c_k of a subset of the eps variables, as a ProofPoly
ProofPoly pp_elementary(int nvars, const std::vector<ProofPoly>& vars, int k) {
    std::vector<ProofPoly> e(k + 1);
    e[0] = pp_const(nvars, 1);
    for (const auto& v : vars)
        for (int j = k; j >= 1; --j) pp_add(e[j], pp_mul(e[j - 1], v));
    return e[k];
}

// Newton-type recursion: delta_j(eps) = 2 Q_j(p) modulo the even family's
// top relation, with Q_j integral: Q_j = sum_i (-1)^{i-1} p_i (2 Q_{j-i}).
std::vector<ProofPoly> q_polys(int nvars, int n, int K, int up_to) {
    std::vector<ProofPoly> q(up_to + 1);
    q[0] = pp_const(nvars, 1);  // placeholder: delta_0 = 1 (not of the 2Q form)
    for (int j = 1; j <= up_to; ++j) {
        ProofPoly acc;
        for (int i = 1; i <= std::min(j, K); ++i) {
            ProofPoly pi = pp_var(nvars, n + i - 1);
            const Integer sign = (i % 2 == 1) ? 1 : -1;
            if (j - i == 0)
                pp_add(acc, pi, sign);
            else
                pp_add(acc, pp_mul(pi, q[j - i]), sign * 2);
        }
        q[j] = std::move(acc);
    }
    return q;
}

MultiPoly resubstitute(const RootSystem& sys, const ProofPoly& p, int K) {
    const int n = sys.rank();
    // p_i -> c_i(eps)/2
    std::vector<MultiPoly> halves;
    auto eps = basis_variables(sys, "eps", n);
    for (int i = 1; i <= K; ++i)
        halves.push_back(elementary_symmetric(eps, i) * Rational(1, 2));
    MultiPoly out(sys, "eps");
    for (const auto& [e, c] : p) {
        MultiPoly term = MultiPoly::constant(sys, "eps", Rational(Integer(c)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * eps[i];
        for (int i = 0; i < K; ++i)
            for (int k = 0; k < e[n + i]; ++k) term = term * halves[i];
        out += term;
    }
    return out;
}

}  // namespace

MembershipProof verify_presentation_membership(const MultiPoly& f,
                                               const IntegralPresentation& p) {
    const RootSystem& sys = *p.system;
    const int n = sys.rank();
    const int r = p.removed_root;
    const bool even_family = sys.family() == Family::D;
    const int K = even_family ? n - 1 : n;
    MembershipProof proof;
    proof.resubstituted = MultiPoly(sys, "eps");
    proof.casimir_correction = MultiPoly(sys, "eps");

    const MultiPoly target = f.to_basis("eps");
    const bool eta_route = even_family && r == n - 1 && target == half_delta_class(sys, r);
    const bool std_route = !eta_route && target == [&] {
        auto vars = basis_variables(sys, "eps", r);
        return complete_symmetric(vars, n - r + 1) * Rational(1, 2);
    }();
    if (!std_route && !eta_route) {
        proof.failure_reason =
            "class is not in the half-delta family; this route proves nothing about it";
        return proof;
    }

    const int nvars = n + K;
    const int m = eta_route ? 3 : n - r + 1;
    auto q = q_polys(nvars, n, K, m);

    // eps'' = (eps_{r+1}, ..., eps_n)
    std::vector<ProofPoly> eps_dd;
    for (int i = r + 1; i <= n; ++i) eps_dd.push_back(pp_var(nvars, i - 1));

    // 2 f = sum_{j>=1} (-1)^{m-j} c_{m-j}(eps'') * delta_j(eps), and
    // delta_j(eps) = 2 Q_j(p) up to the even family's c_n relation;
    // delta_0(eps) = 1 enters without the factor two.
    ProofPoly two_f_expr;  // in eps''/p variables, integer coefficients
    auto delta_full = [&](int i) {
        if (i == 0) return pp_const(nvars, 1);
        ProofPoly two_q = q[i];
        for (auto& [e, c] : two_q) c *= 2;
        return two_q;
    };
    if (std_route) {
        // the j = 0 term vanishes: c_m of the m-1 variables in eps'' is zero
        for (int j = 1; j <= m; ++j) {
            ProofPoly c = pp_elementary(nvars, eps_dd, m - j);
            const Integer sign = ((m - j) % 2 == 0) ? 1 : -1;
            pp_add(two_f_expr, pp_mul(c, delta_full(j)), sign);
        }
    } else {
        // delta_m(eta) = sum_k delta_k(eta_n) delta_{m-k}(eps') with the
        // flipped variable's complete symmetric delta_k(-eps_n) = (-eps_n)^k,
        // then delta_j(eps') = delta_j(eps) - eps_n delta_{j-1}(eps).
        const ProofPoly eps_n = pp_var(nvars, n - 1);
        ProofPoly power = pp_const(nvars, 1);
        for (int k = 0; k <= m; ++k) {
            const int j = m - k;
            const Integer sign = (k % 2 == 0) ? 1 : -1;
            pp_add(two_f_expr, pp_mul(power, delta_full(j)), sign);
            if (j >= 1)
                pp_add(two_f_expr, pp_mul(power, pp_mul(eps_n, delta_full(j - 1))), -sign);
            power = pp_mul(power, eps_n);
        }
    }

    proof.resubstituted = resubstitute(sys, two_f_expr, K) * Rational(1, 2);
    proof.expression = "2*f = " + pp_render(two_f_expr, n);

    MultiPoly diff = (target - proof.resubstituted) * Rational(2);
    if (!diff.is_zero()) {
        if (!even_family)
            throw MathError("membership round-trip failed unexpectedly");
        const MultiPoly cn = elementary_symmetric(basis_variables(sys, "eps", n), n);
        auto quotient = try_exact_divide(diff, cn);
        if (!quotient)
            throw MathError("membership correction is not a multiple of the top relation");
        proof.casimir_correction = *quotient;
        proof.expression += " + (" + cn.str() + ")*(" + quotient->str() + ")";
        for (const auto& [e, c] : quotient->terms())
            if (!c.is_integer())
                throw MathError("membership correction has a fractional coefficient");
    }
    proof.ok = true;
    return proof;
}

// ---------------------------------------------------------------------------
// invariant bases

namespace {

// column c of the stacked (reflect_j - id) constraint matrix
void fill_reflection_columns(const RootSystem& sys, const std::string& basis,
                             const std::vector<ExpVec>& mons,
                             const std::map<ExpVec, std::size_t>& index,
                             const std::vector<int>& gens, RatMatrix& m) {
    const std::size_t nmons = mons.size();
    parallel_for(nmons, [&](std::size_t c) {
        MultiPoly mono(sys, basis);
        mono.add_term(mons[c], Rational(1));
        for (std::size_t g = 0; g < gens.size(); ++g) {
            MultiPoly img = mono.reflect(gens[g]);
            img -= mono;
            for (const auto& [e, coeff] : img.terms())
                m.at(g * nmons + index.at(e), c) = coeff;
        }
    });
}

MultiPoly from_coords(const RootSystem& sys, const std::string& basis,
                      const std::vector<ExpVec>& mons, const RatVector& v) {
    MultiPoly p(sys, basis);
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (!v[i].is_zero()) p.add_term(mons[i], v[i]);
    return p;
}

RatVector to_coords(const std::map<ExpVec, std::size_t>& index, std::size_t n,
                    const MultiPoly& p) {
    RatVector v(n);
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end()) throw MathError("polynomial leaves the monomial space");
        v[it->second] = c;
    }
    return v;
}

// Reduce v against rows already in reduced row echelon form.
void reduce_against(const std::vector<RatVector>& rref_rows,
                    const std::vector<std::size_t>& pivots, RatVector& v) {
    for (std::size_t i = 0; i < rref_rows.size(); ++i) {
        const Rational& c = v[pivots[i]];
        if (c.is_zero()) continue;
        const Rational f = c;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!rref_rows[i][j].is_zero()) v[j] -= f * rref_rows[i][j];
    }
}

struct RrefSpace {
    std::vector<RatVector> rows;
    std::vector<std::size_t> pivots;

    void insert(RatVector v) {
        reduce_against(rows, pivots, v);
        std::size_t lead = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) { lead = j; break; }
        if (lead == v.size()) return;
        const Rational inv = Rational(1) / v[lead];
        for (auto& x : v) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational f = rows[i][lead];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!v[j].is_zero()) rows[i][j] -= f * v[j];
        }
        // keep rows ordered by pivot column
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < lead) ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, lead);
    }

    bool contains(RatVector v) const {
        reduce_against(rows, pivots, v);
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
    }
};

}  // namespace

std::vector<MultiPoly> weyl_invariants(const RootSystem& sys, int degree) {
    const std::string& basis = sys.computation_basis();
    auto mons = monomial_exponents(sys.rank(), degree);
    std::map<ExpVec, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    std::vector<int> gens;
    for (int j = 1; j <= sys.rank(); ++j) gens.push_back(j);
    RatMatrix m(mons.size() * gens.size(), mons.size());
    fill_reflection_columns(sys, basis, mons, index, gens, m);
    std::vector<MultiPoly> out;
    for (const auto& v : rational_kernel(m)) out.push_back(from_coords(sys, basis, mons, v));
    return out;
}

std::vector<MultiPoly> invariant_basis(const RootSystem& sys, int r, int degree) {
    if (degree < 1) throw MathError("invariant basis needs degree >= 1");
    const std::string basis = "zeta";
    auto mons = monomial_exponents(sys.rank(), degree);
    std::map<ExpVec, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    const auto gens = residual_generators(sys, r);
    RatMatrix m(mons.size() * gens.size(), mons.size());
    fill_reflection_columns(sys, basis, mons, index, gens, m);
    auto kernel = rational_kernel(m);
    std::vector<MultiPoly> out;
    if (kernel.empty()) return out;
    for (const auto& row : integer_saturation_basis(kernel)) {
        MultiPoly p(sys, basis);
        for (std::size_t i = 0; i < mons.size(); ++i)
            if (row[i] != 0) p.add_term(mons[i], Rational(row[i]));
        out.push_back(std::move(p));
    }
    return out;
}

ModIplusBasis invariant_basis_mod_iplus(const RootSystem& sys, int r, int degree) {
    const std::string& basis = sys.computation_basis();
    auto mons = monomial_exponents(sys.rank(), degree);
    const std::size_t nmons = mons.size();
    std::map<ExpVec, std::size_t> index;
    for (std::size_t i = 0; i < nmons; ++i) index[mons[i]] = i;

    // degree slice of I+: q * (monomials of matching degree) for each
    // W-invariant q of degree 2..degree, all computed, none assumed
    RrefSpace slice;
    std::vector<MultiPoly> slice_polys;
    for (int e = 2; e <= degree; ++e) {
        auto invs = weyl_invariants(sys, e);
        if (invs.empty()) continue;
        auto lower = monomial_exponents(sys.rank(), degree - e);
        for (const auto& q : invs)
            for (const auto& mexp : lower) {
                MultiPoly mono(sys, basis);
                mono.add_term(mexp, Rational(1));
                MultiPoly prod = q * mono;
                RatVector v = to_coords(index, nmons, prod);
                if (!slice.contains(v)) slice_polys.push_back(prod);
                slice.insert(std::move(v));
            }
    }

    // iterative intersection of {f : (s_j - 1) f in slice} over the
    // residual generators
    std::vector<RatVector> current;
    for (std::size_t i = 0; i < nmons; ++i) {
        RatVector v(nmons);
        v[i] = 1;
        current.push_back(std::move(v));
    }
    for (int j : residual_generators(sys, r)) {
        std::vector<RatVector> reduced(current.size());
        parallel_for(current.size(), [&](std::size_t k) {
            MultiPoly p = from_coords(sys, basis, mons, current[k]);
            MultiPoly img = p.reflect(j);
            img -= p;
            RatVector v = to_coords(index, nmons, img);
            reduce_against(slice.rows, slice.pivots, v);
            reduced[k] = std::move(v);
        });
        RatMatrix m(nmons, current.size());
        for (std::size_t k = 0; k < current.size(); ++k)
            for (std::size_t i = 0; i < nmons; ++i) m.at(i, k) = reduced[k][i];
        auto coeffs = rational_kernel(m);
        std::vector<RatVector> next;
        for (const auto& cf : coeffs) {
            RatVector v(nmons);
            for (std::size_t k = 0; k < current.size(); ++k) {
                if (cf[k].is_zero()) continue;
                for (std::size_t i = 0; i < nmons; ++i) v[i] += cf[k] * current[k][i];
            }
            next.push_back(std::move(v));
        }
        current = std::move(next);
        if (current.empty()) break;
    }

    // quotient representatives: reduce modulo the slice and renormalize
    RrefSpace reps;
    for (auto& v : current) {
        reduce_against(slice.rows, slice.pivots, v);
        reps.insert(std::move(v));
    }
    ModIplusBasis out;
    for (const auto& v : reps.rows) out.representatives.push_back(from_coords(sys, basis, mons, v));
    out.ideal_slice = std::move(slice_polys);
    return out;
}

bool in_span_mod_slice(const ModIplusBasis& basis, const MultiPoly& f) {
    if (basis.representatives.empty() && basis.ideal_slice.empty()) return f.is_zero();
    const MultiPoly* any = !basis.representatives.empty() ? &basis.representatives[0]
                                                          : &basis.ideal_slice[0];
    const RootSystem& sys = *any->system();
    const MultiPoly g = f.to_basis(any->basis());
    const int degree = any->degree();
    auto mons = monomial_exponents(sys.rank(), degree);
    std::map<ExpVec, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    std::vector<RatVector> span;
    for (const auto& p : basis.representatives) span.push_back(to_coords(index, mons.size(), p));
    for (const auto& p : basis.ideal_slice) span.push_back(to_coords(index, mons.size(), p));
    return in_span(span, to_coords(index, mons.size(), g));
}

// ---------------------------------------------------------------------------
// the certifier

namespace {

struct WitnessSpec {
    MultiPoly poly;
    std::optional<std::vector<int>> word;
    std::optional<std::string> subdiagram;
    std::string tag;
};

std::vector<WitnessSpec> family_witnesses(const RootSystem& sys, int r,
                                          const std::string& generator) {
    const int n = sys.rank();
    std::vector<WitnessSpec> out;
    switch (sys.family()) {
        case Family::A:
        case Family::C: {
            auto vars = basis_variables(sys, "eps", r);
            out.push_back({elementary_symmetric(vars, 1), std::vector<int>{}, std::nullopt,
                           "symmetric-in-residual-orbit"});
            out.push_back({elementary_symmetric(vars, 2), std::vector<int>{r}, std::nullopt,
                           "symmetric-in-residual-orbit"});
            break;
        }
        case Family::B: {
            if (r < n)
                out.push_back({half_delta_class(sys, r), std::nullopt, std::string("Gamma"),
                               "half-delta(presentation-membership)"});
            else
                out.push_back({MultiPoly::from_weight(sys.fundamental_weight(n), "zeta"),
                               std::vector<int>{}, std::nullopt, "fundamental-weight"});
            break;
        }
        case Family::D: {
            const MultiPoly zeta_n1 =
                MultiPoly::from_weight(sys.fundamental_weight(n - 1), "zeta");
            const MultiPoly zeta_n = MultiPoly::from_weight(sys.fundamental_weight(n), "zeta");
            if (generator == "z0") {
                if (r <= n - 2)
                    out.push_back({half_delta_class(sys, r), std::nullopt,
                                   std::string("GammaPrime"),
                                   "half-delta(presentation-membership)"});
                else
                    out.push_back({zeta_n1, std::vector<int>{}, std::nullopt,
                                   "fundamental-weight"});
            } else {
                if (r <= n - 2) {
                    out.push_back({half_delta_class(sys, r), std::nullopt,
                                   std::string("Gamma"),
                                   "half-delta(presentation-membership)"});
                    out.push_back({half_delta_class(sys, r), std::nullopt,
                                   std::string("GammaPrime"),
                                   "half-delta(presentation-membership)"});
                } else if (r == n - 1) {
                    out.push_back({zeta_n1, std::vector<int>{}, std::nullopt,
                                   "fundamental-weight"});
                    out.push_back({half_delta_class(sys, r), std::nullopt,
                                   std::string("GammaDoublePrime"),
                                   "half-delta(presentation-membership)"});
                } else {
                    out.push_back({zeta_n, std::vector<int>{}, std::nullopt,
                                   "fundamental-weight"});
                    out.push_back({zeta_n1, std::vector<int>{}, std::nullopt,
                                   "fundamental-weight"});
                }
            }
            break;
        }
        case Family::E6: {
            if (r == 3) {
                out.push_back({elementary_symmetric(basis_variables(sys, "t", 3), 2),
                               std::vector<int>{3}, std::nullopt,
                               "symmetric-in-residual-orbit"});
            } else if (r == 6) {
                out.push_back({elementary_symmetric(basis_variables(sys, "t", 6), 3),
                               std::vector<int>{3, 6}, std::nullopt,
                               "symmetric-in-residual-orbit"});
            } else {
                out.push_back({MultiPoly::from_weight(sys.fundamental_weight(r), "zeta"),
                               std::vector<int>{}, std::nullopt, "fundamental-weight"});
            }
            break;
        }
        case Family::E7: {
            if (r == 2) {
                out.push_back({MultiPoly::variable(sys, "t", 1) * MultiPoly::variable(sys, "t", 2),
                               std::vector<int>{2}, std::nullopt,
                               "symmetric-in-residual-orbit"});
            } else if (r == 4) {
                out.push_back({elementary_symmetric(basis_variables(sys, "t", 4), 2),
                               std::vector<int>{4}, std::nullopt,
                               "symmetric-in-residual-orbit"});
            } else if (r == 5) {
                out.push_back({fixture_polynomial("e7-p5"), std::vector<int>{4, 6, 5},
                               std::nullopt, "fixture-e7-p5(residual-invariant)"});
            } else if (r == 6) {
                out.push_back({fixture_polynomial("e7-p6"), std::vector<int>{4, 5, 6},
                               std::nullopt, "fixture-e7-p6(invariant-mod-iplus)"});
            } else {
                out.push_back({MultiPoly::from_weight(sys.fundamental_weight(r), "zeta"),
                               std::vector<int>{}, std::nullopt, "fundamental-weight"});
            }
            break;
        }
    }
    return out;
}

}  // namespace

NonIntegralityCertificate certify(const RootSystem& sys, int r, const std::string& generator,
                                  long d) {
    if (r < 1 || r > sys.rank()) throw MathError("orbit index out of range");
    const Coweight z = sys.coweight_generator(generator).scaled(Rational(d));

    NonIntegralityCertificate cert;
    cert.family = sys.family();
    cert.rank = sys.rank();
    cert.orbit_r = r;
    cert.generator = generator;
    cert.d = d;

    auto witnesses = family_witnesses(sys, r, generator);
    auto value_of = [&](const WitnessSpec& w) {
        if (w.subdiagram) {
            auto path = named_subdiagram_path(sys, r, *w.subdiagram);
            return localize(sys, path, w.poly, z);
        }
        return cap_fibered(w.poly, WeylWord(sys, *w.word), z);
    };

    if (z.in_coroot_lattice()) {
        for (const auto& w : witnesses) {
            const Rational v = value_of(w);
            if (!v.is_integer())
                throw MathError("trivial loop class produced a fractional pairing");
        }
        cert.integral = true;
        return cert;
    }

    for (const auto& w : witnesses) {
        const Rational v = value_of(w);
        if (v.is_integer()) continue;
        cert.integral = false;
        cert.polynomial = w.poly.str();
        cert.word = w.word;
        cert.subdiagram = w.subdiagram;
        cert.value = v;
        cert.integrality_tag = w.tag;
        return cert;
    }
    throw MathError("no witness detected the nontrivial class; catalog data is inconsistent");
}

std::string NonIntegralityCertificate::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["rank"] = rank;
    j["orbit_r"] = orbit_r;
    j["coweight"] = {{"generator", generator}, {"d", d}};
    j["integral"] = integral;
    if (!integral) {
        j["polynomial"] = polynomial;
        if (word) j["word"] = *word;
        if (subdiagram) j["subdiagram"] = *subdiagram;
        j["value"] = {{"num", value.num().get_str()}, {"den", value.den().get_str()}};
        j["integrality_tag"] = integrality_tag;
    }
    return j.dump();
}

Rational replay_certificate(const NonIntegralityCertificate& cert) {
    const RootSystem& sys = RootSystem::catalog(cert.family, cert.rank);
    if (cert.integral) throw MathError("nothing to replay: the class is integral");
    const Coweight z = sys.coweight_generator(cert.generator).scaled(Rational(cert.d));
    const MultiPoly poly = parse_poly(sys, cert.polynomial);
    if (cert.subdiagram) {
        auto path = named_subdiagram_path(sys, cert.orbit_r, *cert.subdiagram);
        return localize(sys, path, poly, z);
    }
    return cap_fibered(poly, WeylWord(sys, cert.word.value_or(std::vector<int>{})), z);
}

}  // namespace schubert
