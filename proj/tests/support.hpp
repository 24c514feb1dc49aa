#pragma once

// Shared helpers for the test suites: random triangulations of the square.

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "monsky/model.hpp"

namespace monsky::test_support {

/// Square p, q, r, s split along pr, then `interior` random stellar
/// subdivisions of triangles and `flips` random edge flips.
inline ConstrainedTriangulation random_triangulation(std::mt19937_64 &rng, int interior, int flips) {
    ConstrainedTriangulation ct;
    ct.name = "random";
    ct.vertices = {"p", "q", "r", "s"};
    ct.corners = {"p", "q", "r", "s"};
    std::vector<std::array<std::string, 3>> tris{{"p", "q", "r"}, {"p", "r", "s"}};
    for (int k = 0; k < interior; ++k) {
        std::string v = "v" + std::to_string(k + 1);
        ct.vertices.push_back(v);
        std::size_t i = rng() % tris.size();
        auto [a, b, c] = tris[i];
        tris[i] = {a, b, v};
        tris.push_back({b, c, v});
        tris.push_back({c, a, v});
    }
    for (int f = 0; f < flips; ++f) {
        // directed edge -> triangle index
        std::map<std::pair<std::string, std::string>, std::size_t> owner;
        for (std::size_t i = 0; i < tris.size(); ++i)
            for (std::size_t k = 0; k < 3; ++k) owner[{tris[i][k], tris[i][(k + 1) % 3]}] = i;
        std::size_t i = rng() % tris.size(), k = rng() % 3;
        std::string a = tris[i][k], b = tris[i][(k + 1) % 3], c = tris[i][(k + 2) % 3];
        auto it = owner.find({b, a});
        if (it == owner.end()) continue;
        std::size_t j = it->second;
        std::string d;
        for (const auto &x : tris[j])
            if (x != a && x != b) d = x;
        // the new edge c-d must not exist already
        if (owner.count({c, d}) || owner.count({d, c})) continue;
        // keep vertex degrees at least 3 so links stay proper
        auto degree = [&](const std::string &v) {
            std::size_t n = 0;
            for (const auto &[e, t] : owner) n += e.first == v;
            return n;
        };
        bool a_boundary = ct.is_corner(a), b_boundary = ct.is_corner(b);
        if (degree(a) <= (a_boundary ? 2u : 3u) || degree(b) <= (b_boundary ? 2u : 3u)) continue;
        tris[i] = {a, d, c};
        tris[j] = {d, b, c};
    }
    int id = 0;
    for (const auto &t : tris) ct.triangles.push_back({"T" + std::to_string(++id), t});
    return ct;
}

} // namespace monsky::test_support
