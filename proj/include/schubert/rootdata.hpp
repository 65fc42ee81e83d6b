#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "schubert/linalg.hpp"

namespace schubert {

enum class Family { A, C, B, D, E6, E7 };

std::string family_name(Family f);          // "A", "C", "B", "D", "E6", "E7"
std::string family_group_name(Family f);    // "PU(n+1)", "Sp(n)", ...
Family parse_family(const std::string& s);  // accepts both spellings

class RootSystem;

// A weight, stored as coordinates in one of the system's registered bases.
struct Weight {
    const RootSystem* system = nullptr;
    std::string basis;
    RatVector coords;
};

// A coweight in the simple-coroot basis {h_1, ..., h_rank}.
struct Coweight {
    const RootSystem* system = nullptr;
    RatVector coords;

    Coweight scaled(const Rational& c) const;
    bool in_coroot_lattice() const;
};

// Registered linear coordinate system: columns express its variables in the
// canonical fundamental-weight basis.
struct BasisInfo {
    RatMatrix to_zeta;    // column j = variable j+1 in zeta coordinates
    RatMatrix from_zeta;  // inverse
};

struct TorsionInfo {
    std::string group;  // e.g. "Z3", "Z2+Z2"
    std::vector<std::pair<std::string, int>> generator_orders;
};

// One of the paper's simple-group families with its exact conventions:
// Cartan matrix, coordinate bases, coweight generators and pi_1 torsion.
class RootSystem {
public:
    static const RootSystem& catalog(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const;

    // cartan(i, j) = alpha_j(h_i), 1-based; column j is alpha_j in zeta coords.
    const Integer& cartan(int i, int j) const { return cartan_.at(i - 1, j - 1); }
    const IntMatrix& cartan_matrix() const { return cartan_; }

    bool has_basis(const std::string& name) const { return bases_.count(name) != 0; }
    const BasisInfo& basis(const std::string& name) const;
    const std::map<std::string, BasisInfo>& bases() const { return bases_; }
    // Basis the heavy computations run in: "t" for E6/E7, "eps" otherwise.
    const std::string& computation_basis() const { return computation_basis_; }

    Weight fundamental_weight(int i) const;
    Weight simple_root(int j) const;  // in zeta coordinates
    Coweight simple_coroot(int j) const;

    const std::vector<std::pair<std::string, Coweight>>& coweight_generators() const {
        return coweight_generators_;
    }
    const Coweight& coweight_generator(const std::string& name) const;
    const TorsionInfo& torsion() const { return torsion_; }

    // Simple reflections commute iff the Dynkin nodes are not adjacent.
    bool commutes(int i, int j) const { return cartan(i, j) == 0; }

    Weight to_basis(const Weight& w, const std::string& target) const;

    // s_j acting on a weight, returned in the weight's own basis.
    Weight reflect(int j, const Weight& w) const;
    // s_j(h) = h - alpha_j(h) h_j.
    Coweight reflect_coweight(int j, const Coweight& h) const;

    Rational pair_with_coroot(const Weight& w, const Coweight& h) const;

private:
    RootSystem() = default;
    void check_index(int j) const;

    Family family_;
    int rank_ = 0;
    IntMatrix cartan_;
    std::map<std::string, BasisInfo> bases_;
    std::string computation_basis_;
    std::vector<std::pair<std::string, Coweight>> coweight_generators_;
    TorsionInfo torsion_;

    friend RootSystem build_system(Family, int);
};

}  // namespace schubert
