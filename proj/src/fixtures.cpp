#include "schubert/fixtures.hpp"

namespace schubert {

namespace {

const char* const kFixtureP5 = R"poly(z1^2*z2*z3 - 2*z1^2*z2*z5 - z1^2*z3^2 + z1^2*z3*z4 - z1^2*z4^2 + z1^2*z4*z5 + z1^2*z4*z7
+ z1^2*z5^2 - z1^2*z7^2 - z1*z2^2*z3 + 2*z1*z2^2*z5 + z1*z2*z3^2 - z1*z2*z3*z4 + z1*z2*z4^2
- z1*z2*z4*z5 - z1*z2*z4*z7 - z1*z2*z5^2 + z1*z2*z7^2 + z2^2*z3*z4 - 2*z2^2*z3*z5 - z2^2*z4^2
+ z2^2*z4*z5 + z2^2*z4*z7 + z2^2*z5^2 - z2^2*z7^2 - z2*z3^2*z4 + 2*z2*z3^2*z5 + z2*z3*z4^2
- z2*z3*z4*z5 - z2*z3*z4*z7 - z2*z3*z5^2 + z2*z3*z7^2 - z3^2*z4*z5 + z3^2*z4*z7 + z3^2*z5^2
- z3^2*z7^2 + z3*z4^2*z5 - z3*z4^2*z7 - z3*z4*z5^2 + z3*z4*z7^2
)poly";

const char* const kFixtureP6 = R"poly(3/8*t1^4 - 3/32*t1^3*t2 - 3/32*t1^3*t3 + 17/32*t1^3*t4 + 17/32*t1^3*t6 - 5/3*t1^3*t7
+ 1/4*t1^2*t2^2 - 2*t1^2*t2*t7 + 1/4*t1^2*t3^2 - 13/32*t1^2*t4*t6 - 2*t1^2*t5*t7 - 2*t1^2*t6*t7
+ 37/128*t1*t2^2*t3 + 7/8*t1*t2^2*t4 + 193/512*t1*t2^2*t5 + 7/8*t1*t2^2*t6 - 831/512*t1*t2^2*t7
+ 37/128*t1*t2*t3^2 + 17/128*t1*t2*t3*t4 + 85/256*t1*t2*t3*t5 + 17/128*t1*t2*t3*t6
+ 85/256*t1*t2*t3*t7 + 15/128*t1*t2*t4^2 + 25/256*t1*t2*t4*t5 + 25/256*t1*t2*t4*t7
+ 81/256*t1*t2*t5^2 + 25/256*t1*t2*t5*t6 + 51/64*t1*t2*t5*t7 + 15/128*t1*t2*t6^2
+ 153/256*t1*t2*t6*t7 + 465/256*t1*t2*t7^2 + 7/8*t1*t3^2*t4 + 193/512*t1*t3^2*t5
+ 7/8*t1*t3^2*t6 - 1087/512*t1*t3^2*t7 + 15/128*t1*t3*t4^2 + 25/256*t1*t3*t4*t5
- 103/256*t1*t3*t4*t7 + 81/256*t1*t3*t5^2 + 25/256*t1*t3*t5*t6 + 19/64*t1*t3*t5*t7
+ 15/128*t1*t3*t6^2 + 25/256*t1*t3*t6*t7 + 337/256*t1*t3*t7^2 + 83/128*t1*t4^3
+ 105/512*t1*t4^2*t5 + 103/128*t1*t4^2*t6 - 1175/512*t1*t4^2*t7 + 231/256*t1*t4*t5^2
- 9/256*t1*t4*t5*t6 + 1/16*t1*t4*t5*t7 + 103/128*t1*t4*t6^2 - 9/256*t1*t4*t6*t7
+ 487/256*t1*t4*t7^2 + 77/512*t1*t5^3 + 231/256*t1*t5^2*t6 - 817/512*t1*t5^2*t7
+ 105/512*t1*t5*t6^2 + 9/16*t1*t5*t6*t7 + 975/512*t1*t5*t7^2 + 83/128*t1*t6^3
- 919/512*t1*t6^2*t7 + 615/256*t1*t6*t7^2 - 947/512*t1*t7^3 - 5/32*t2^3*t3 - 17/128*t2^3*t5
- 691/384*t2^3*t7 - 11/128*t2^2*t3^2 + 37/128*t2^2*t3*t4 + 97/512*t2^2*t3*t5 + 37/128*t2^2*t3*t6
+ 97/512*t2^2*t3*t7 - 7/32*t2^2*t4^2 + 157/512*t2^2*t4*t5 + 157/512*t2^2*t4*t7
- 163/512*t2^2*t5^2 + 157/512*t2^2*t5*t6 - 459/256*t2^2*t5*t7 - 7/32*t2^2*t6^2
- 867/512*t2^2*t6*t7 - 163/512*t2^2*t7^2 - 5/32*t2*t3^3 + 37/128*t2*t3^2*t4 + 97/512*t2*t3^2*t5
+ 37/128*t2*t3^2*t6 - 1183/512*t2*t3^2*t7 + 15/128*t2*t3*t4^2 + 179/512*t2*t3*t4*t5
+ 45/128*t2*t3*t4*t6 - 77/512*t2*t3*t4*t7 + 111/512*t2*t3*t5^2 + 179/512*t2*t3*t5*t6
+ 115/256*t2*t3*t5*t7 + 15/128*t2*t3*t6^2 + 179/512*t2*t3*t6*t7 + 623/512*t2*t3*t7^2
+ 3/128*t2*t4^3 + 69/512*t2*t4^2*t5 + 43/128*t2*t4^2*t6 - 1211/512*t2*t4^2*t7
+ 171/512*t2*t4*t5^2 + 171/512*t2*t4*t5*t6 + 85/256*t2*t4*t5*t7 + 43/128*t2*t4*t6^2
+ 171/512*t2*t4*t6*t7 + 683/512*t2*t4*t7^2 - 39/512*t2*t5^3 + 171/512*t2*t5^2*t6
- 113/64*t2*t5^2*t7 + 69/512*t2*t5*t6^2 + 213/256*t2*t5*t6*t7 + 111/64*t2*t5*t7^2
+ 3/128*t2*t6^3 - 955/512*t2*t6^2*t7 + 939/512*t2*t6*t7^2 - 1063/512*t2*t7^3 - 17/128*t3^3*t5
+ 77/384*t3^3*t7 - 7/32*t3^2*t4^2 + 157/512*t3^2*t4*t5 - 99/512*t3^2*t4*t7 - 163/512*t3^2*t5^2
+ 157/512*t3^2*t5*t6 - 587/256*t3^2*t5*t7 - 7/32*t3^2*t6^2 - 1123/512*t3^2*t6*t7
- 419/512*t3^2*t7^2 + 3/128*t3*t4^3 + 69/512*t3*t4^2*t5 + 43/128*t3*t4^2*t6 - 187/512*t3*t4^2*t7
+ 171/512*t3*t4*t5^2 + 171/512*t3*t4*t5*t6 - 43/256*t3*t4*t5*t7 + 43/128*t3*t4*t6^2
- 85/512*t3*t4*t6*t7 + 427/512*t3*t4*t7^2 - 39/512*t3*t5^3 + 171/512*t3*t5^2*t6
+ 15/64*t3*t5^2*t7 + 69/512*t3*t5*t6^2 + 85/256*t3*t5*t6*t7 + 79/64*t3*t5*t7^2 + 3/128*t3*t6^3
+ 69/512*t3*t6^2*t7 + 683/512*t3*t6*t7^2 - 39/512*t3*t7^3 - 3/32*t4^4 + 3/64*t4^3*t5
- 29/128*t4^3*t6 + 73/192*t4^3*t7 - 231/512*t4^2*t5^2 + 181/512*t4^2*t5*t6 - 601/256*t4^2*t5*t7
- 1/4*t4^2*t6^2 - 1099/512*t4^2*t6*t7 - 487/512*t4^2*t7^2 + 41/512*t4*t5^3 + 23/512*t4*t5^2*t6
+ 45/128*t4*t5^2*t7 + 181/512*t4*t5*t6^2 + 81/256*t4*t5*t6*t7 + 173/128*t4*t5*t7^2
- 29/128*t4*t6^3 + 181/512*t4*t6^2*t7 + 535/512*t4*t6*t7^2 + 41/512*t4*t7^3 - 29/128*t5^4
+ 41/512*t5^3*t6 - 2641/1536*t5^3*t7 - 231/512*t5^2*t6^2 - 211/128*t5^2*t6*t7
- 141/256*t5^2*t7^2 + 3/64*t5*t6^3 - 473/256*t5*t6^2*t7 + 237/128*t5*t6*t7^2 - 1051/512*t5*t7^3
- 3/32*t6^4 - 311/192*t6^3*t7 - 231/512*t6^2*t7^2 - 983/512*t6*t7^3 - 343/384*t7^4
)poly";

}  // namespace

std::vector<std::string> fixture_names() { return {"e7-p5", "e7-p6"}; }

const std::string& fixture_text(const std::string& name) {
    static const std::string p5(kFixtureP5);
    static const std::string p6(kFixtureP6);
    if (name == "e7-p5") return p5;
    if (name == "e7-p6") return p6;
    throw MathError("unknown fixture '" + name + "'");
}

MultiPoly fixture_polynomial(const std::string& name) {
    const RootSystem& e7 = RootSystem::catalog(Family::E7, 7);
    return parse_poly(e7, fixture_text(name));
}

}  // namespace schubert
