#pragma once

#include <string>
#include <vector>

#include "schubert/integrality.hpp"

namespace schubert {

// One line of the reproduction table: a query with its closed-form expected
// value and the engine's computed value.
struct ReproLine {
    std::string id;
    std::string expected;
    std::string computed;
    bool pass = false;
};

// scope is one of A, C, B, D, E6, E7, all. Every line evaluates one of the
// catalogued pairings (by cap or localization) or one certify consistency
// statement, against the family's closed form.
std::vector<ReproLine> reproduce(const std::string& scope);

}  // namespace schubert
