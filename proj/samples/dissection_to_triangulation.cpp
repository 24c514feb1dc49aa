// A classical dissection given by coordinates becomes a constrained
// triangulation: maximal segments turn into constraints, and every fan choice
// gives the same area polynomial.

#include <iostream>

#include "monsky/monsky.hpp"

using namespace monsky;

int main() {
    // the square cut along the diagonal qs, with two extra points u, v on it
    std::map<std::string, Point> pts{{"p", {0, 0}},
                                     {"q", {1, 0}},
                                     {"r", {1, 1}},
                                     {"s", {0, 1}},
                                     {"u", {make_rational(2, 3), make_rational(1, 3)}},
                                     {"v", {make_rational(1, 3), make_rational(2, 3)}}};
    // a fan from p below the cut; above it one triangle whose side qs carries u and v
    std::vector<OrientedTriangle> tris{
        {"A", {"p", "q", "u"}}, {"B", {"p", "u", "v"}}, {"C", {"p", "v", "s"}}, {"D", {"q", "r", "s"}}};

    GeneralizedDissection gd = dissection_to_generalized("diagonal-cut", {"p", "q", "r", "s", "u", "v"}, pts, tris);
    std::cout << "constraints:";
    for (const auto &c : gd.constraints) {
        std::cout << " {";
        for (const auto &v : c) std::cout << " " << v;
        std::cout << " }";
    }
    std::cout << "\n";

    std::string first;
    for (const auto &root : gd.constraints.at(0)) {
        ConstrainedTriangulation ct = generalized_to_ct(gd, {root});
        std::string p = area_polynomial(ct).p.to_string();
        std::cout << "fan at " << root << ": " << ct.triangles.size() << " triangles, p = " << p << "\n";
        if (first.empty()) first = p;
        if (p != first) return 1;
    }
    return 0;
}
