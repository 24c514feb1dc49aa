#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "model.hpp"

namespace monsky {

struct RelevantConstraint {
    std::size_t constraint; // index into ct.constraints
    std::string first, second; // its first two vertices under the order
};

/// Corner-first vertex order together with the degrees of freedom α_v.
struct DrawingOrder {
    std::vector<std::string> sequence;
    std::vector<int> alpha; // parallel to sequence
    std::vector<std::vector<RelevantConstraint>> relevant; // parallel to sequence

    std::size_t position(const std::string &v) const {
        auto it = std::find(sequence.begin(), sequence.end(), v);
        if (it == sequence.end()) throw NotDrawingOrder("vertex " + v + " is not in the order");
        return static_cast<std::size_t>(it - sequence.begin());
    }
    int alpha_of(const std::string &v) const { return alpha[position(v)]; }
    int dimension() const {
        int s = 0;
        for (int a : alpha) s += a;
        return s;
    }
};

/// α values of a corner-first order p, q, s, r, v_1, ...; throws
/// NotDrawingOrder naming the first vertex with α < 0.
inline DrawingOrder compute_alpha(const ConstrainedTriangulation &ct, const std::vector<std::string> &sequence) {
    if (sequence.size() != ct.vertices.size())
        throw NotDrawingOrder("order has " + std::to_string(sequence.size()) + " vertices, triangulation has " +
                              std::to_string(ct.vertices.size()));
    const std::array<std::string, 4> head{ct.corners[P], ct.corners[Q], ct.corners[S], ct.corners[R]};
    for (std::size_t k = 0; k < 4; ++k)
        if (sequence[k] != head[k]) throw NotDrawingOrder("order must begin p, q, s, r");
    {
        std::set<std::string> seen(sequence.begin(), sequence.end());
        if (seen.size() != sequence.size()) throw NotDrawingOrder("order repeats a vertex");
        for (const auto &v : ct.vertices)
            if (!seen.count(v)) throw NotDrawingOrder("order omits vertex " + v);
    }
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < sequence.size(); ++i) pos[sequence[i]] = i;
    std::vector<std::vector<std::string>> cs;
    for (std::size_t c = 0; c < ct.constraints.size(); ++c) {
        auto vs = ct.constraint_vertices(c);
        std::sort(vs.begin(), vs.end(), [&](const std::string &a, const std::string &b) { return pos[a] < pos[b]; });
        cs.push_back(std::move(vs));
    }
    DrawingOrder out;
    out.sequence = sequence;
    out.alpha = {2, 2, 2, 0};
    out.relevant.resize(sequence.size());
    for (std::size_t j = 4; j < sequence.size(); ++j) {
        const std::string &v = sequence[j];
        int count = 0;
        for (std::size_t c = 0; c < cs.size(); ++c) {
            auto it = std::find(cs[c].begin(), cs[c].end(), v);
            if (it == cs[c].end()) continue;
            std::size_t prefix = static_cast<std::size_t>(it - cs[c].begin()) + 1;
            if (prefix >= 3) {
                ++count;
                out.relevant[j].push_back({c, cs[c][0], cs[c][1]});
            }
        }
        int a = 2 - count;
        if (a < 0) throw NotDrawingOrder("vertex " + v + " has alpha " + std::to_string(a));
        out.alpha.push_back(a);
    }
    return out;
}

/// Neighbour sets of the 1-skeleton.
inline std::map<std::string, std::set<std::string>> adjacency(const ConstrainedTriangulation &ct) {
    std::map<std::string, std::set<std::string>> adj;
    for (const auto &v : ct.vertices) adj[v];
    for (const auto &t : ct.triangles)
        for (std::size_t i = 0; i < 3; ++i) {
            adj[t.verts[i]].insert(t.verts[(i + 1) % 3]);
            adj[t.verts[(i + 1) % 3]].insert(t.verts[i]);
        }
    return adj;
}

/// Peeling layers R_1, R_2, ...: interior vertices of valence < 6 in the
/// graph left after removing earlier layers (each layer sorted).
inline std::vector<std::vector<std::string>> peeling_layers(const ConstrainedTriangulation &ct) {
    auto adj = adjacency(ct);
    std::set<std::string> remaining;
    for (const auto &v : ct.interior_vertices()) remaining.insert(v);
    std::vector<std::vector<std::string>> layers;
    while (!remaining.empty()) {
        std::vector<std::string> layer;
        for (const auto &v : remaining)
            if (adj[v].size() < 6) layer.push_back(v);
        if (layer.empty())
            throw PeelingStuck(std::to_string(remaining.size()) + " interior vertices remain, all of valence >= 6");
        for (const auto &v : layer) {
            for (const auto &w : adj[v]) adj[w].erase(v);
            adj.erase(v);
            remaining.erase(v);
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

/// Drawing order from the peeling construction: later layers come first,
/// ties broken lexicographically.
inline DrawingOrder find_drawing_order(const ConstrainedTriangulation &ct) {
    auto pairs = reducible_pairs(ct);
    if (!pairs.empty())
        throw Reducible("constraints " + std::to_string(pairs.front().first + 1) + " and " +
                        std::to_string(pairs.front().second + 1) + " share two or more vertices");
    auto layers = peeling_layers(ct);
    std::vector<std::string> seq{ct.corners[P], ct.corners[Q], ct.corners[S], ct.corners[R]};
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) seq.insert(seq.end(), it->begin(), it->end());
    return compute_alpha(ct, seq);
}

inline int deformation_dimension(const ConstrainedTriangulation &ct) { return find_drawing_order(ct).dimension(); }

/// 6 for the corners, 2 per interior vertex, minus 1 per constraint vertex
/// beyond the second.
inline int heuristic_dimension(const ConstrainedTriangulation &ct) {
    int d = 6 + 2 * static_cast<int>(ct.interior_vertices().size());
    for (std::size_t c = 0; c < ct.constraints.size(); ++c)
        d -= static_cast<int>(ct.constraint_vertices(c).size()) - 2;
    return d;
}

} // namespace monsky
