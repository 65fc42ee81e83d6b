#pragma once

#include <string>
#include <vector>

#include "schubert/poly.hpp"

namespace schubert {

// Named polynomial fixtures shipped with the engine (also present as data
// files under fixtures/). Both are classes on minimal E7 orbits: "e7-p5" in
// fundamental-weight variables, "e7-p6" in the t-variables.
std::vector<std::string> fixture_names();
const std::string& fixture_text(const std::string& name);
MultiPoly fixture_polynomial(const std::string& name);

}  // namespace schubert
