#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubert/chevalley.hpp"
#include "schubert/localization.hpp"

namespace schubert {

// Minimal orbit selector: the maximal parabolic with root r removed.
struct ParabolicChoice {
    const RootSystem* system;
    int removed_root;
};

// Generators of the residual Weyl group: all simple reflections but s_r.
std::vector<int> residual_generators(const RootSystem& sys, int r);

// The orthogonal families' integral-cohomology presentation data (relations
// of the regular orbit over the integers), used by the membership checker.
struct IntegralPresentation {
    const RootSystem* system;
    int removed_root;
    // human-readable relation list; weighted grading gives pi_i degree i
    std::vector<std::string> relations;

    static IntegralPresentation forOrbit(const RootSystem& sys, int r);
};

// Divisible residual-invariant class of the orthogonal families:
// half the complete symmetric polynomial delta_{n-r+1}(eps_1..eps_r), or
// delta_3 in the flipped variables (eps_1,..,eps_{n-1},-eps_n) at the
// spin-adjacent orbit of the even family.
MultiPoly half_delta_class(const RootSystem& sys, int r);

// Proof object for "2f lies in the integer presentation": the explicit
// integer expression in the eps''-variables and the degree-weighted
// generators p_i, together with the round-trip verification data.
struct MembershipProof {
    bool ok = false;
    std::string failure_reason;
    std::string expression;       // rendered integer expression
    MultiPoly resubstituted;      // expression with p_i -> c_i(eps)/2
    MultiPoly casimir_correction; // even family only: cofactor of c_n(eps)
};

MembershipProof verify_presentation_membership(const MultiPoly& f,
                                               const IntegralPresentation& p);

// All W-invariant polynomials of the exact degree (kernel of the stacked
// reflections), in the computation basis; empty when none exist.
std::vector<MultiPoly> weyl_invariants(const RootSystem& sys, int degree);

// Basis over Z of the degree-d polynomials fixed by every residual
// generator, in fundamental-weight coordinates, deterministic order.
std::vector<MultiPoly> invariant_basis(const RootSystem& sys, int r, int degree);

struct ModIplusBasis {
    std::vector<MultiPoly> representatives;  // basis of invariants mod the ideal slice
    std::vector<MultiPoly> ideal_slice;      // basis of the degree slice of I+
};

// Classes invariant under the residual generators modulo the ideal generated
// by positive-degree W-invariants. The ideal's degree slice is spanned by
// q * (monomials) over the computed invariants q of each degree <= d.
ModIplusBasis invariant_basis_mod_iplus(const RootSystem& sys, int r, int degree);

bool in_span_mod_slice(const ModIplusBasis& basis, const MultiPoly& f);

// The end product: a witness that the characteristic isomorphism moves an
// integral class off the integral lattice (value with denominator > 1), or
// the statement that the queried loop class is trivial.
struct NonIntegralityCertificate {
    Family family;
    int rank = 0;
    int orbit_r = 0;
    std::string generator;
    long d = 0;
    bool integral = false;
    // witness, present when !integral
    std::string polynomial;                 // grammar text
    std::optional<std::vector<int>> word;   // CLI letter list
    std::optional<std::string> subdiagram;  // named projective subdiagram
    Rational value;
    std::string integrality_tag;  // how the class is known to be integral

    std::string to_json() const;
};

// Replays the family case analysis. Returns integral == true exactly when
// d * generator lies in the coroot lattice (and then re-verifies that every
// family witness pairing is an integer).
NonIntegralityCertificate certify(const RootSystem& sys, int r, const std::string& generator,
                                  long d);

// Re-runs the certificate's pairing through cap/localize.
Rational replay_certificate(const NonIntegralityCertificate& cert);

}  // namespace schubert
