#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "schubert/bruhat.hpp"
#include "schubert/parallel.hpp"

namespace schubert {

int total_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool GradedLexBefore::operator()(const ExpVec& a, const ExpVec& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly::MultiPoly(const RootSystem& sys, std::string basis)
    : system_(&sys), basis_(std::move(basis)) {
    sys.basis(basis_);  // validates registration
}

MultiPoly MultiPoly::constant(const RootSystem& sys, const std::string& basis, Rational c) {
    MultiPoly p(sys, basis);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(sys.rank() + 1, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(const RootSystem& sys, const std::string& basis, int i) {
    if (i < 1 || i > sys.rank())
        throw MathError("variable index " + std::to_string(i) + " out of range");
    MultiPoly p(sys, basis);
    ExpVec e(sys.rank() + 1, 0);
    e[i - 1] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::equivariant_variable(const RootSystem& sys, const std::string& basis) {
    MultiPoly p(sys, basis);
    ExpVec e(sys.rank() + 1, 0);
    e[sys.rank()] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::linear_form(const RootSystem& sys, const std::string& basis,
                                 const RatVector& coeffs, Rational e0) {
    if (static_cast<int>(coeffs.size()) != sys.rank())
        throw MathError("linear form has wrong length");
    MultiPoly p(sys, basis);
    for (int i = 0; i < sys.rank(); ++i) {
        if (coeffs[i].is_zero()) continue;
        ExpVec e(sys.rank() + 1, 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), coeffs[i]);
    }
    if (!e0.is_zero()) {
        ExpVec e(sys.rank() + 1, 0);
        e[sys.rank()] = 1;
        p.terms_.emplace(std::move(e), std::move(e0));
    }
    return p;
}

MultiPoly MultiPoly::from_weight(const Weight& w, const std::string& basis) {
    const RootSystem& sys = *w.system;
    return linear_form(sys, basis, sys.to_basis(w, basis).coords);
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);  // leading term has maximal degree
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

bool MultiPoly::uses_equivariant_variable() const {
    for (const auto& [e, c] : terms_)
        if (e.back() != 0) return true;
    return false;
}

Rational MultiPoly::coefficient_of(const ExpVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::set_coefficient(const ExpVec& exp, const Rational& c) {
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

void MultiPoly::add_term(const ExpVec& exp, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (system_ && o.system_ && (system_ != o.system_ || basis_ != o.basis_))
        throw MathError("polynomials from different systems or bases");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    if (!system_) *this = MultiPoly(*o.system_, o.basis_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    if (!system_) *this = MultiPoly(*o.system_, o.basis_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly out(*system_, basis_);
    const std::size_t work = terms_.size() * o.terms_.size();
    const int nt = effective_thread_count();
    if (work < 4096 || nt <= 1) {
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                ExpVec e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    // parallel over the left factor's terms with per-thread accumulators
    std::vector<const std::pair<const ExpVec, Rational>*> lhs;
    lhs.reserve(terms_.size());
    for (const auto& t : terms_) lhs.push_back(&t);
    std::vector<TermMap> partial(nt);
    parallel_for(nt, [&](std::size_t tid) {
        TermMap& local = partial[tid];
        for (std::size_t k = tid; k < lhs.size(); k += nt) {
            const auto& [ea, ca] = *lhs[k];
            for (const auto& [eb, cb] : o.terms_) {
                ExpVec e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                auto [it, inserted] = local.emplace(std::move(e), ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        }
    });
    for (const auto& local : partial)
        for (const auto& [e, c] : local) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly out(*system_, basis_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return system_ == o.system_ && basis_ == o.basis_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    const int n = system_->rank();
    if (static_cast<int>(images.size()) != n)
        throw MathError("substitute needs one image per basis variable");
    MultiPoly out(*system_, basis_);
    MultiPoly e0 = equivariant_variable(*system_, basis_);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(*system_, basis_, c);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        for (int k = 0; k < e[n]; ++k) term = term * e0;
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::to_basis(const std::string& target) const {
    if (target == basis_) return *this;
    const RootSystem& sys = *system_;
    // image of variable i in target coordinates
    const RatMatrix& m = sys.basis(target).from_zeta * sys.basis(basis_).to_zeta;
    std::vector<MultiPoly> images;
    for (int i = 0; i < sys.rank(); ++i)
        images.push_back(linear_form(sys, target, m.col(i)));
    MultiPoly relabeled(sys, target);
    for (const auto& [e, c] : terms_) relabeled.terms_.emplace(e, c);
    return relabeled.substitute(images);
}

MultiPoly MultiPoly::reflect(int j) const {
    const RootSystem& sys = *system_;
    std::vector<MultiPoly> images;
    for (int i = 1; i <= sys.rank(); ++i) {
        Weight v{&sys, basis_, RatVector(sys.rank())};
        v.coords[i - 1] = 1;
        images.push_back(linear_form(sys, basis_, sys.reflect(j, v).coords));
    }
    return substitute(images);
}

MultiPoly MultiPoly::weyl_act(const WeylWord& w) const {
    MultiPoly out = *this;
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = out.reflect(*it);
    return out;
}

MultiPoly MultiPoly::equivariant_shift(const Coweight& z) const {
    if (z.system != system_) throw MathError("coweight from a different system");
    if (uses_equivariant_variable())
        throw MathError("equivariant shift of a class that already involves the fiber variable");
    const RootSystem& sys = *system_;
    std::vector<MultiPoly> images;
    for (int i = 1; i <= sys.rank(); ++i) {
        Weight v{&sys, basis_, RatVector(sys.rank())};
        v.coords[i - 1] = 1;
        RatVector coeffs(sys.rank());
        coeffs[i - 1] = 1;
        images.push_back(linear_form(sys, basis_, coeffs, sys.pair_with_coroot(v, z)));
    }
    return substitute(images);
}

Rational MultiPoly::evaluate(const RatVector& point) const {
    if (static_cast<int>(point.size()) != system_->rank() + 1)
        throw MathError("evaluation point has wrong length");
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

namespace {

std::string variable_prefix(const RootSystem& sys, const std::string& basis) {
    if (basis == "zeta") return "z";
    if (basis == "t") return "t";
    if (basis == "eps") return "e";
    return basis;
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    const std::string prefix = system_ ? variable_prefix(*system_, basis_) : "x";
    const std::string eq = basis_ == "t" ? "t0" : "e0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (i + 1 <= static_cast<std::size_t>(system_->rank()))
                        ? prefix + std::to_string(i + 1)
                        : eq;
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const Rational a = c.abs();
        if (mono.empty())
            os << a.str();
        else if (a == Rational(1))
            os << mono;
        else
            os << a.str() << "*" << mono;
    }
    return os.str();
}

MultiPoly elementary_symmetric(const std::vector<MultiPoly>& vars, int k) {
    if (vars.empty()) throw MathError("symmetric polynomial needs at least one variable");
    if (k < 0) throw MathError("symmetric polynomial of negative degree");
    const RootSystem& sys = *vars[0].system();
    const std::string& basis = vars[0].basis();
    std::vector<MultiPoly> e(k + 1, MultiPoly(sys, basis));
    e[0] = MultiPoly::constant(sys, basis, 1);
    for (const auto& v : vars)
        for (int j = k; j >= 1; --j) e[j] += e[j - 1] * v;
    return e[k];
}

MultiPoly complete_symmetric(const std::vector<MultiPoly>& vars, int k) {
    if (vars.empty()) throw MathError("symmetric polynomial needs at least one variable");
    if (k < 0) throw MathError("symmetric polynomial of negative degree");
    const RootSystem& sys = *vars[0].system();
    const std::string& basis = vars[0].basis();
    // h[d] for variables x_1..x_s, built up one variable at a time:
    // h_d(x_1..x_s) = h_d(x_1..x_{s-1}) + x_s h_{d-1}(x_1..x_s)
    std::vector<MultiPoly> h(k + 1, MultiPoly(sys, basis));
    h[0] = MultiPoly::constant(sys, basis, 1);
    for (const auto& v : vars)
        for (int d = 1; d <= k; ++d) h[d] += v * h[d - 1];
    return h[k];
}

std::vector<MultiPoly> basis_variables(const RootSystem& sys, const std::string& basis,
                                       int count) {
    std::vector<MultiPoly> vars;
    for (int i = 1; i <= count; ++i) vars.push_back(MultiPoly::variable(sys, basis, i));
    return vars;
}

std::vector<ExpVec> monomial_exponents(int rank, int degree) {
    std::vector<ExpVec> out;
    ExpVec cur(rank + 1, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == rank - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int i = left; i >= 0; --i) {
            cur[pos] = i;
            self(self, pos + 1, left - i);
        }
    };
    if (rank == 0) return out;
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GradedLexBefore{});
    return out;
}

std::optional<MultiPoly> try_exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    MultiPoly rest = a;
    MultiPoly quotient(*a.system(), a.basis());
    const auto& [lead_exp, lead_coeff] = *b.terms().begin();
    while (!rest.is_zero()) {
        const auto& [e, c] = *rest.terms().begin();
        ExpVec q(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            q[i] = e[i] - lead_exp[i];
            if (q[i] < 0) return std::nullopt;
        }
        MultiPoly term(*a.system(), a.basis());
        term.add_term(q, c / lead_coeff);
        quotient += term;
        rest -= term * b;
    }
    return quotient;
}

MultiPoly invariant_quadratic(const RootSystem& sys, const std::string& basis) {
    const auto mons = monomial_exponents(sys.rank(), 2);
    const std::size_t n = mons.size();
    std::map<ExpVec, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[mons[i]] = i;

    // stacked (reflect_j - id), one block per simple reflection
    RatMatrix m(n * sys.rank(), n);
    parallel_for(n, [&](std::size_t col) {
        MultiPoly mono(sys, basis);
        mono.add_term(mons[col], Rational(1));
        for (int j = 1; j <= sys.rank(); ++j) {
            MultiPoly img = mono.reflect(j);
            img -= mono;
            for (const auto& [e, c] : img.terms())
                m.at((j - 1) * n + index.at(e), col) += c;
        }
    });
    auto kernel = rational_kernel(m);
    if (kernel.empty()) throw MathError("no invariant quadratic found");
    MultiPoly q(sys, basis);
    for (std::size_t i = 0; i < n; ++i) q.add_term(mons[i], kernel[0][i]);
    const Rational lead = q.terms().begin()->second;
    return q * (Rational(1) / lead);
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const RootSystem& sys;
    const std::string& text;
    std::string active_basis;  // fixed up-front from the variables present
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw MathError("polynomial parse error at position " + std::to_string(pos) + ": " +
                        msg);
    }

    MultiPoly parse_expression() {
        MultiPoly acc = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*'))
                acc = acc * parse_factor();
            else
                return acc;
        }
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos) fail("exponent expected after '^'");
            int e = std::stoi(text.substr(start, pos - start));
            MultiPoly out = MultiPoly::constant(*base.system(), base.basis(), 1);
            for (int i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    MultiPoly parse_base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (c == '(') {
            ++pos;
            MultiPoly inner = parse_expression();
            if (!eat(')')) fail("missing ')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        fail(std::string("unexpected character '") + c + "'");
    }

    MultiPoly parse_rational() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        Integer num(text.substr(start, pos - start));
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            // a '/' only continues a rational literal when a digit follows
            std::size_t save = pos;
            ++pos;
            skip_ws();
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (dstart == pos) {
                pos = save;
                return MultiPoly::constant(sys, active_basis, Rational(num));
            }
            Integer den(text.substr(dstart, pos - dstart));
            return MultiPoly::constant(sys, active_basis, Rational(num, den));
        }
        return MultiPoly::constant(sys, active_basis, Rational(num));
    }

    MultiPoly parse_variable() {
        const char letter = text[pos++];
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("variable index expected");
        const int idx = std::stoi(text.substr(start, pos - start));

        if (idx == 0) {
            if (letter == 'z') fail("z0 is not a variable");
            return MultiPoly::equivariant_variable(sys, active_basis);
        }
        std::string basis;
        if (letter == 'z')
            basis = "zeta";
        else if (letter == 't')
            basis = "t";
        else if (letter == 'e')
            basis = "eps";
        else
            fail(std::string("unknown variable letter '") + letter + "'");
        if (basis != active_basis)
            fail("variable '" + std::string(1, letter) + std::to_string(idx) +
                 "' mixes coordinate bases in one polynomial");
        if (basis == "t" && idx == sys.rank() + 1) {
            // the paper's auxiliary t = (1/3)(t1 + ... + t_rank)
            MultiPoly sum(sys, "t");
            for (int i = 1; i <= sys.rank(); ++i) sum += MultiPoly::variable(sys, "t", i);
            return sum * Rational(1, 3);
        }
        if (idx > sys.rank())
            fail("variable index " + std::to_string(idx) + " exceeds rank of " + sys.name());
        return MultiPoly::variable(sys, basis, idx);
    }
};

// The basis is fixed before parsing from the variable letters present; a
// polynomial may use a single coordinate basis (plus the equivariant e0/t0).
std::string scan_basis(const RootSystem& sys, const std::string& text) {
    std::string found;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if ((c == 'z' || c == 't' || c == 'e') && i + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            if (text[i + 1] == '0' && (i + 2 == text.size() ||
                                       !std::isdigit(static_cast<unsigned char>(text[i + 2]))))
                continue;  // equivariant variable, basis-neutral
            std::string b = c == 'z' ? "zeta" : (c == 't' ? "t" : "eps");
            if (found.empty())
                found = b;
            else if (found != b)
                throw MathError("polynomial mixes coordinate bases");
        }
    }
    if (found.empty()) return sys.computation_basis();
    if (!sys.has_basis(found))
        throw MathError("basis '" + found + "' is not registered for " + sys.name());
    return found;
}

}  // namespace

MultiPoly parse_poly(const RootSystem& sys, const std::string& text) {
    Parser p{sys, text, scan_basis(sys, text)};
    MultiPoly out = p.parse_expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace schubert
