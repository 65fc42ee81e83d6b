#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubert/rootdata.hpp"

namespace schubert {

// Exponent vector of length rank+1; the last slot is the auxiliary
// equivariant variable (the base direction's weight).
using ExpVec = std::vector<int>;

int total_degree(const ExpVec& e);

// Graded-lexicographic "prints first" order: higher degree first, ties by
// lexicographically greater exponent vector.
struct GradedLexBefore {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class WeylWord;

// Multivariate polynomial over the rationals in a registered coordinate
// basis of a root system, plus the equivariant variable.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GradedLexBefore>;

    MultiPoly() = default;
    MultiPoly(const RootSystem& sys, std::string basis);

    static MultiPoly constant(const RootSystem& sys, const std::string& basis, Rational c);
    static MultiPoly variable(const RootSystem& sys, const std::string& basis, int i);
    static MultiPoly equivariant_variable(const RootSystem& sys, const std::string& basis);
    // A linear form from basis coordinates (plus optional equivariant part).
    static MultiPoly linear_form(const RootSystem& sys, const std::string& basis,
                                 const RatVector& coeffs, Rational e0 = Rational(0));
    static MultiPoly from_weight(const Weight& w, const std::string& basis);

    const RootSystem* system() const { return system_; }
    const std::string& basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    bool uses_equivariant_variable() const;
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient_of(const ExpVec& exp) const;
    void set_coefficient(const ExpVec& exp, const Rational& c);
    void add_term(const ExpVec& exp, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const;

    // Substitutes variable i by the i-th image (a polynomial in the same
    // coordinates); the equivariant variable stays fixed. Ring morphism.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    MultiPoly to_basis(const std::string& target) const;

    // Action of a Weyl word: each letter substitutes every variable by its
    // reflected image, applied right-to-left along the word.
    MultiPoly weyl_act(const WeylWord& w) const;
    MultiPoly reflect(int j) const;

    // x |-> x + x(z) e0 on every basis variable; rejects input that already
    // involves the equivariant variable.
    MultiPoly equivariant_shift(const Coweight& z) const;

    Rational evaluate(const RatVector& point) const;  // point has rank+1 slots

    std::string str() const;

private:
    void check_compatible(const MultiPoly& o) const;

    const RootSystem* system_ = nullptr;
    std::string basis_;
    TermMap terms_;
};

// Elementary symmetric polynomial c_k in the given linear forms; c_0 = 1.
MultiPoly elementary_symmetric(const std::vector<MultiPoly>& vars, int k);
// Complete homogeneous symmetric polynomial delta_k; delta_0 = 1.
MultiPoly complete_symmetric(const std::vector<MultiPoly>& vars, int k);

// First basis variables x_1..x_count as polynomials.
std::vector<MultiPoly> basis_variables(const RootSystem& sys, const std::string& basis,
                                       int count);

// A nonzero W-invariant homogeneous quadratic, computed as the kernel of the
// stacked (reflect_j - id) actions on degree-2 monomials; normalized so its
// graded-lex leading coefficient is 1.
MultiPoly invariant_quadratic(const RootSystem& sys, const std::string& basis);

// All exponent vectors over `rank` variables (equivariant slot zero) of the
// given total degree, in GradedLexBefore order.
std::vector<ExpVec> monomial_exponents(int rank, int degree);

// Quotient a / b when b divides a exactly; nullopt otherwise.
std::optional<MultiPoly> try_exact_divide(const MultiPoly& a, const MultiPoly& b);

// Polynomial text grammar: variables z1..z8 / t1..t8 / e0..e8, rationals p/q,
// operators + - * ^ and parentheses. For E6/E7 the t-variable one past the
// rank denotes the auxiliary t = (1/3)(t1 + ... + t_rank).
MultiPoly parse_poly(const RootSystem& sys, const std::string& text);

}  // namespace schubert
