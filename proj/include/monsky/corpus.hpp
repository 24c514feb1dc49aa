#pragma once

#include <map>
#include <string>
#include <vector>

#include "monsky_poly.hpp"

namespace monsky::corpus {

// Two interior vertices u, v; every corpus entry below shares this complex.
inline std::vector<OrientedTriangle> diag2_triangles() {
    return {{"A", {"p", "q", "u"}}, {"B", {"q", "v", "u"}}, {"C", {"q", "r", "v"}},
            {"D", {"s", "p", "u"}}, {"E", {"s", "u", "v"}}, {"F", {"r", "s", "v"}}};
}

inline ConstrainedTriangulation diag1() {
    return {"diag1",
            {"p", "q", "r", "s", "u"},
            {"p", "q", "r", "s"},
            {{"A", {"p", "q", "u"}}, {"B", {"q", "r", "u"}}, {"C", {"r", "s", "u"}}, {"D", {"s", "p", "u"}}},
            {}};
}

inline ConstrainedTriangulation diag2() {
    return {"diag2", {"p", "q", "r", "s", "u", "v"}, {"p", "q", "r", "s"}, diag2_triangles(), {}};
}

inline ConstrainedTriangulation ace() {
    auto ct = diag2();
    ct.name = "ace";
    ct.constraints = {{{"B"}}, {{"D"}}, {{"F"}}};
    return ct;
}

inline ConstrainedTriangulation be_merged() {
    auto ct = diag2();
    ct.name = "be-merged";
    ct.constraints = {{{"B", "E"}}};
    return ct;
}

inline ConstrainedTriangulation be_split() {
    auto ct = diag2();
    ct.name = "be-split";
    ct.constraints = {{{"B"}}, {{"E"}}};
    return ct;
}

inline ConstrainedTriangulation trianglicide() {
    auto ct = diag2();
    ct.name = "trianglicide";
    ct.constraints = {{{"A"}}, {{"B"}}, {{"C"}}, {{"D"}}, {{"E"}}, {{"F"}}};
    return ct;
}

/// Unit square with its centre joined to the corners.
inline GeneralizedDissection diag1_classical() {
    GeneralizedDissection gd;
    gd.name = "diag1-classical";
    gd.vertices = {"p", "q", "r", "s", "u"};
    gd.points = {{"p", {0, 0}}, {"q", {1, 0}}, {"r", {1, 1}}, {"s", {0, 1}}, {"u", {make_rational(1, 2), make_rational(1, 2)}}};
    gd.corners = {"p", "q", "r", "s"};
    gd.triangles = diag1().triangles;
    return gd;
}

/// diag1 with the centre dragged outside the square; C is upside down.
inline GeneralizedDissection diag1_generalized() {
    auto gd = diag1_classical();
    gd.name = "diag1-generalized";
    gd.points["u"] = {make_rational(1, 2), make_rational(3, 2)};
    return gd;
}

/// u and v on the diagonal qs, so q, u, v, s form one maximal segment.
inline GeneralizedDissection be_classical() {
    GeneralizedDissection gd;
    gd.name = "be-classical";
    gd.vertices = {"p", "q", "r", "s", "u", "v"};
    gd.points = {{"p", {0, 0}},
                 {"q", {1, 0}},
                 {"r", {1, 1}},
                 {"s", {0, 1}},
                 {"u", {make_rational(1, 3), make_rational(2, 3)}},
                 {"v", {make_rational(2, 3), make_rational(1, 3)}}};
    gd.corners = {"p", "q", "r", "s"};
    gd.triangles = {{"A", {"p", "q", "u"}}, {"C", {"q", "r", "v"}}, {"D", {"s", "p", "u"}}, {"F", {"r", "s", "v"}}};
    return gd;
}

/// The ACE generalized dissection at w = 1/2: u = (0, 1/2), v = (−1, 1).
inline GeneralizedDissection ace_generalized() {
    GeneralizedDissection gd;
    gd.name = "ace-generalized";
    gd.vertices = {"p", "q", "r", "s", "u", "v"};
    gd.points = {{"p", {0, 0}}, {"q", {1, 0}}, {"r", {1, 1}}, {"s", {0, 1}}, {"u", {0, make_rational(1, 2)}}, {"v", {-1, 1}}};
    gd.corners = {"p", "q", "r", "s"};
    gd.triangles = {{"A", {"p", "q", "u"}}, {"C", {"q", "r", "v"}}, {"E", {"s", "u", "v"}}};
    gd.constraints = {{"q", "v", "u"}, {"s", "p", "u"}, {"r", "s", "v"}};
    return gd;
}

/// Square of side 2 with m at the middle of the bottom side.
inline GeneralizedDissection bottom_midpoint_classical() {
    GeneralizedDissection gd;
    gd.name = "bottom-midpoint";
    gd.vertices = {"p", "q", "r", "s", "m"};
    gd.points = {{"p", {0, 0}}, {"q", {2, 0}}, {"r", {2, 2}}, {"s", {0, 2}}, {"m", {1, 0}}};
    gd.corners = {"p", "q", "r", "s"};
    gd.triangles = {{"T1", {"p", "m", "s"}}, {"T2", {"m", "r", "s"}}, {"T3", {"m", "q", "r"}}};
    return gd;
}

inline std::vector<std::string> names() { return {"diag1", "diag2", "ace", "be-merged", "be-split", "trianglicide"}; }

inline std::vector<std::string> dissection_names() {
    return {"diag1-classical", "diag1-generalized", "be-classical", "ace-generalized", "bottom-midpoint"};
}

inline bool has(const std::string &name) {
    for (const auto &n : names())
        if (n == name) return true;
    return false;
}

inline ConstrainedTriangulation get(const std::string &name) {
    if (name == "diag1") return diag1();
    if (name == "diag2") return diag2();
    if (name == "ace") return ace();
    if (name == "be-merged") return be_merged();
    if (name == "be-split") return be_split();
    if (name == "trianglicide") return trianglicide();
    if (name.rfind("diagonal-", 0) == 0) return diagonal_case(std::stoi(name.substr(9)));
    throw SchemaError("no corpus entry named " + name);
}

inline GeneralizedDissection get_dissection(const std::string &name) {
    if (name == "diag1-classical") return diag1_classical();
    if (name == "diag1-generalized") return diag1_generalized();
    if (name == "be-classical") return be_classical();
    if (name == "ace-generalized") return ace_generalized();
    if (name == "bottom-midpoint") return bottom_midpoint_classical();
    throw SchemaError("no dissection named " + name);
}

} // namespace monsky::corpus
