#include "schubert/rootdata.hpp"

#include <mutex>
#include <tuple>

namespace schubert {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::C: return "C";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
    }
    return "?";
}

std::string family_group_name(Family f) {
    switch (f) {
        case Family::A: return "PU(n+1)";
        case Family::C: return "Sp(n)";
        case Family::B: return "SO(2n+1)";
        case Family::D: return "SO(2n)";
        case Family::E6: return "E6/Z";
        case Family::E7: return "E7/Z";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "PU") return Family::A;
    if (s == "C" || s == "Sp") return Family::C;
    if (s == "B" || s == "SO-odd") return Family::B;
    if (s == "D" || s == "SO-even") return Family::D;
    if (s == "E6") return Family::E6;
    if (s == "E7") return Family::E7;
    throw MathError("unknown family '" + s + "'");
}

Coweight Coweight::scaled(const Rational& c) const {
    Coweight out{system, coords};
    for (auto& x : out.coords) x *= c;
    return out;
}

bool Coweight::in_coroot_lattice() const {
    for (const auto& x : coords)
        if (!x.is_integer()) return false;
    return true;
}

namespace {

RatVector zeta_vec(int i, int n) {
    RatVector v(n);
    v[i - 1] = 1;
    return v;
}

RatVector vsub(RatVector a, const RatVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

RatVector vadd(RatVector a, const RatVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

BasisInfo make_basis(const std::vector<RatVector>& cols) {
    const std::size_t n = cols.size();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    BasisInfo info;
    info.from_zeta = m.inverse();
    info.to_zeta = std::move(m);
    return info;
}

}  // namespace

RootSystem build_system(Family family, int rank) {
    RootSystem rs;
    rs.family_ = family;

    auto chain_cartan = [](int n, const std::vector<std::tuple<int, int, int, int>>& extra) {
        // symmetric A-chain entries plus explicit (i, j, a_ij, a_ji) overrides,
        // where a_ij = alpha_j(h_i)
        IntMatrix c(n, n);
        for (int i = 0; i < n; ++i) c.at(i, i) = 2;
        for (const auto& [i, j, aij, aji] : extra) {
            c.at(i - 1, j - 1) = aij;
            c.at(j - 1, i - 1) = aji;
        }
        return c;
    };
    std::vector<std::tuple<int, int, int, int>> edges;

    switch (family) {
        case Family::A: {
            if (rank < 1) throw MathError("family A needs rank >= 1");
            const int n = rank;
            for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1, -1, -1);
            rs.rank_ = n;
            rs.cartan_ = chain_cartan(n, edges);
            std::vector<RatVector> eps;
            for (int i = 1; i <= n; ++i) {
                RatVector v = zeta_vec(i, n);
                if (i > 1) v = vsub(v, zeta_vec(i - 1, n));
                eps.push_back(v);
            }
            rs.bases_["eps"] = make_basis(eps);
            RatVector z0(n);
            for (int i = 1; i <= n; ++i) z0[i - 1] = Rational(i, n + 1);
            rs.coweight_generators_.emplace_back("z0", Coweight{nullptr, z0});
            rs.torsion_ = {"Z" + std::to_string(n + 1), {{"z0", n + 1}}};
            rs.computation_basis_ = "eps";
            break;
        }
        case Family::C: {
            if (rank < 2) throw MathError("family C needs rank >= 2");
            const int n = rank;
            for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1, -1, -1);
            edges.emplace_back(n - 1, n, -2, -1);  // alpha_n long: alpha_n(h_{n-1}) = -2
            rs.rank_ = n;
            rs.cartan_ = chain_cartan(n, edges);
            std::vector<RatVector> eps;
            for (int i = 1; i <= n; ++i) {
                RatVector v = zeta_vec(i, n);
                if (i > 1) v = vsub(v, zeta_vec(i - 1, n));
                eps.push_back(v);
            }
            rs.bases_["eps"] = make_basis(eps);
            RatVector z0(n);
            for (int i = 1; i <= n; ++i) z0[i - 1] = Rational(i, 2);
            rs.coweight_generators_.emplace_back("z0", Coweight{nullptr, z0});
            rs.torsion_ = {"Z2", {{"z0", 2}}};
            rs.computation_basis_ = "eps";
            break;
        }
        case Family::B: {
            if (rank < 2) throw MathError("family B needs rank >= 2");
            const int n = rank;
            for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1, -1, -1);
            edges.emplace_back(n - 1, n, -1, -2);  // alpha_n short: alpha_{n-1}(h_n) = -2
            rs.rank_ = n;
            rs.cartan_ = chain_cartan(n, edges);
            std::vector<RatVector> eps;
            for (int i = 1; i < n; ++i) {
                RatVector v = zeta_vec(i, n);
                if (i > 1) v = vsub(v, zeta_vec(i - 1, n));
                eps.push_back(v);
            }
            RatVector en = zeta_vec(n, n);
            en = vadd(en, zeta_vec(n, n));  // 2 zeta_n
            en = vsub(en, zeta_vec(n - 1, n));
            eps.push_back(en);
            rs.bases_["eps"] = make_basis(eps);
            RatVector z0(n);
            z0[n - 1] = Rational(1, 2);
            rs.coweight_generators_.emplace_back("z0", Coweight{nullptr, z0});
            rs.torsion_ = {"Z2", {{"z0", 2}}};
            rs.computation_basis_ = "eps";
            break;
        }
        case Family::D: {
            if (rank < 3) throw MathError("family D needs rank >= 3");
            const int n = rank;
            for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1, -1, -1);
            edges.emplace_back(n - 2, n, -1, -1);
            rs.rank_ = n;
            rs.cartan_ = chain_cartan(n, edges);
            std::vector<RatVector> eps;
            for (int i = 1; i <= n - 2; ++i) {
                RatVector v = zeta_vec(i, n);
                if (i > 1) v = vsub(v, zeta_vec(i - 1, n));
                eps.push_back(v);
            }
            RatVector e1 = vadd(zeta_vec(n - 1, n), zeta_vec(n, n));
            if (n >= 3) e1 = vsub(e1, zeta_vec(n - 2, n));
            eps.push_back(e1);
            eps.push_back(vsub(zeta_vec(n, n), zeta_vec(n - 1, n)));
            rs.bases_["eps"] = make_basis(eps);
            RatVector z0(n), z1(n);
            z0[n - 2] = Rational(-1, 2);
            z0[n - 1] = Rational(1, 2);
            for (int i = 1; i <= n - 2; ++i) z1[i - 1] = Rational(i, 2);
            z1[n - 2] = Rational(n - 2, 4);
            z1[n - 1] = Rational(n, 4);
            rs.coweight_generators_.emplace_back("z0", Coweight{nullptr, z0});
            rs.coweight_generators_.emplace_back("z1", Coweight{nullptr, z1});
            if (n % 2 == 0)
                rs.torsion_ = {"Z2+Z2", {{"z0", 2}, {"z1", 2}}};
            else
                rs.torsion_ = {"Z4", {{"z1", 4}}};
            rs.computation_basis_ = "eps";
            break;
        }
        case Family::E6: {
            if (rank != 6) throw MathError("E6 has rank 6");
            const int n = 6;
            edges = {{1, 2, -1, -1}, {2, 3, -1, -1}, {3, 4, -1, -1}, {4, 5, -1, -1},
                     {3, 6, -1, -1}};
            rs.rank_ = n;
            rs.cartan_ = chain_cartan(n, edges);
            std::vector<RatVector> t;
            t.push_back(zeta_vec(1, n));
            t.push_back(vsub(zeta_vec(2, n), zeta_vec(1, n)));
            t.push_back(vsub(zeta_vec(3, n), zeta_vec(2, n)));
            t.push_back(vadd(vsub(zeta_vec(4, n), zeta_vec(3, n)), zeta_vec(6, n)));
            t.push_back(vadd(vsub(zeta_vec(5, n), zeta_vec(4, n)), zeta_vec(6, n)));
            t.push_back(vsub(zeta_vec(6, n), zeta_vec(5, n)));
            rs.bases_["t"] = make_basis(t);
            RatVector z0 = {Rational(1, 3), Rational(-1, 3), Rational(0),
                            Rational(1, 3), Rational(-1, 3), Rational(0)};
            rs.coweight_generators_.emplace_back("z0", Coweight{nullptr, z0});
            rs.torsion_ = {"Z3", {{"z0", 3}}};
            rs.computation_basis_ = "t";
            break;
        }
        case Family::E7: {
            if (rank != 7) throw MathError("E7 has rank 7");
            const int n = 7;
            edges = {{1, 2, -1, -1}, {2, 3, -1, -1}, {3, 4, -1, -1}, {4, 5, -1, -1},
                     {5, 6, -1, -1}, {4, 7, -1, -1}};
            rs.rank_ = n;
            rs.cartan_ = chain_cartan(n, edges);
            std::vector<RatVector> t;
            t.push_back(zeta_vec(1, n));
            t.push_back(vsub(zeta_vec(2, n), zeta_vec(1, n)));
            t.push_back(vsub(zeta_vec(3, n), zeta_vec(2, n)));
            t.push_back(vsub(zeta_vec(4, n), zeta_vec(3, n)));
            t.push_back(vadd(vsub(zeta_vec(5, n), zeta_vec(4, n)), zeta_vec(7, n)));
            t.push_back(vadd(vsub(zeta_vec(6, n), zeta_vec(5, n)), zeta_vec(7, n)));
            t.push_back(vsub(zeta_vec(7, n), zeta_vec(6, n)));
            rs.bases_["t"] = make_basis(t);
            RatVector z0 = {Rational(1, 2), Rational(0), Rational(1, 2), Rational(0),
                            Rational(0),    Rational(0), Rational(1, 2)};
            rs.coweight_generators_.emplace_back("z0", Coweight{nullptr, z0});
            rs.torsion_ = {"Z2", {{"z0", 2}}};
            rs.computation_basis_ = "t";
            break;
        }
    }
    // canonical basis is always registered
    std::vector<RatVector> id_cols;
    for (int i = 1; i <= rs.rank_; ++i) id_cols.push_back(zeta_vec(i, rs.rank_));
    rs.bases_["zeta"] = make_basis(id_cols);
    return rs;
}

const RootSystem& RootSystem::catalog(Family family, int rank) {
    static std::mutex mu;
    static std::map<std::pair<Family, int>, std::unique_ptr<RootSystem>> cache;
    if (family == Family::E6) rank = 6;
    if (family == Family::E7) rank = 7;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(family, rank);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto rs = std::make_unique<RootSystem>(build_system(family, rank));
        for (auto& [name, cw] : rs->coweight_generators_) cw.system = rs.get();
        it = cache.emplace(key, std::move(rs)).first;
    }
    return *it->second;
}

std::string RootSystem::name() const {
    if (family_ == Family::E6 || family_ == Family::E7) return family_name(family_);
    return family_name(family_) + std::to_string(rank_);
}

const BasisInfo& RootSystem::basis(const std::string& name) const {
    auto it = bases_.find(name);
    if (it == bases_.end())
        throw MathError("basis '" + name + "' is not registered for " + this->name());
    return it->second;
}

Weight RootSystem::fundamental_weight(int i) const {
    check_index(i);
    return Weight{this, "zeta", zeta_vec(i, rank_)};
}

Weight RootSystem::simple_root(int j) const {
    check_index(j);
    RatVector v(rank_);
    for (int i = 1; i <= rank_; ++i) v[i - 1] = Rational(cartan(i, j));
    return Weight{this, "zeta", v};
}

Coweight RootSystem::simple_coroot(int j) const {
    check_index(j);
    RatVector v(rank_);
    v[j - 1] = 1;
    return Coweight{this, v};
}

const Coweight& RootSystem::coweight_generator(const std::string& name) const {
    for (const auto& [n, cw] : coweight_generators_)
        if (n == name) return cw;
    throw MathError("no coweight generator '" + name + "' in " + this->name());
}

Weight RootSystem::to_basis(const Weight& w, const std::string& target) const {
    if (w.system != this) throw MathError("weight belongs to a different system");
    if (w.basis == target) return w;
    RatVector zeta = basis(w.basis).to_zeta.apply(w.coords);
    return Weight{this, target, basis(target).from_zeta.apply(zeta)};
}

Weight RootSystem::reflect(int j, const Weight& w) const {
    check_index(j);
    if (w.system != this) throw MathError("weight belongs to a different system");
    Weight z = to_basis(w, "zeta");
    // s_j(x)_i = x_i - x_j alpha_j(h_i)
    const Rational xj = z.coords[j - 1];
    if (!xj.is_zero())
        for (int i = 1; i <= rank_; ++i)
            z.coords[i - 1] -= xj * Rational(cartan(i, j));
    return to_basis(z, w.basis);
}

Coweight RootSystem::reflect_coweight(int j, const Coweight& h) const {
    check_index(j);
    if (h.system != this) throw MathError("coweight belongs to a different system");
    Rational alpha_of_h;
    for (int i = 1; i <= rank_; ++i) alpha_of_h += Rational(cartan(i, j)) * h.coords[i - 1];
    Coweight out = h;
    out.coords[j - 1] -= alpha_of_h;
    return out;
}

Rational RootSystem::pair_with_coroot(const Weight& w, const Coweight& h) const {
    if (w.system != this || h.system != this)
        throw MathError("pairing weights from mixed systems");
    Weight z = to_basis(w, "zeta");
    Rational out;
    for (int i = 0; i < rank_; ++i) out += z.coords[i] * h.coords[i];
    return out;
}

void RootSystem::check_index(int j) const {
    if (j < 1 || j > rank_)
        throw MathError("simple-reflection index " + std::to_string(j) + " out of range for " +
                        name());
}

}  // namespace schubert
