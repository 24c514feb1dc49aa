#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "model.hpp"

namespace monsky::io {

using json = nlohmann::ordered_json;

enum class DocumentKind { ConstrainedTriangulation, Dissection, GeneralizedDissection };

inline const char *to_string(DocumentKind k) {
    switch (k) {
    case DocumentKind::ConstrainedTriangulation: return "constrained-triangulation";
    case DocumentKind::Dissection: return "dissection";
    case DocumentKind::GeneralizedDissection: return "generalized-dissection";
    }
    return "";
}

/// A parsed input file. `ct` is filled for triangulations; `gd` for both
/// dissection kinds (classical dissections keep their constraints empty
/// until converted). `points` is an optional drawing attached to a
/// triangulation.
struct Document {
    DocumentKind kind = DocumentKind::ConstrainedTriangulation;
    ConstrainedTriangulation ct;
    GeneralizedDissection gd;
    std::map<std::string, Point> points;
    std::optional<std::array<std::string, 4>> corners; // as given, for dissections

    /// The constrained triangulation this document denotes.
    ConstrainedTriangulation triangulation(const std::vector<std::string> &fan_roots = {}) const {
        switch (kind) {
        case DocumentKind::ConstrainedTriangulation: return ct;
        case DocumentKind::Dissection:
            return generalized_to_ct(dissection_to_generalized(gd.name, gd.vertices, gd.points, gd.triangles, corners),
                                     fan_roots);
        case DocumentKind::GeneralizedDissection: return generalized_to_ct(gd, fan_roots);
        }
        return ct;
    }
};

namespace detail {

[[noreturn]] inline void fail(const std::string &path, const std::string &why) { throw SchemaError(path + ": " + why); }

inline const json &field(const json &obj, const std::string &key, const std::string &path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

inline std::string str(const json &j, const std::string &path) {
    if (!j.is_string()) fail(path, "expected a string");
    std::string s = j.get<std::string>();
    if (s.empty()) fail(path, "empty string");
    return s;
}

inline std::vector<std::string> str_list(const json &j, const std::string &path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline BigRational rational(const json &j, const std::string &path) {
    if (j.is_number_integer()) return BigRational(j.get<long>());
    if (!j.is_string()) fail(path, "expected an exact rational string \"a/b\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const SchemaError &e) {
        fail(path, e.what());
    }
}

inline std::map<std::string, Point> points(const json &j, const std::vector<std::string> &vertices) {
    if (!j.is_object()) fail("points", "expected an object");
    std::map<std::string, Point> out;
    for (const auto &[k, v] : j.items()) {
        std::string path = "points." + k;
        if (std::find(vertices.begin(), vertices.end(), k) == vertices.end()) fail(path, "unknown vertex");
        if (!v.is_array() || v.size() != 2) fail(path, "expected [x, y]");
        out.emplace(k, Point{rational(v[0], path + "[0]"), rational(v[1], path + "[1]")});
    }
    return out;
}

inline json point_json(const Point &p) { return json::array({monsky::to_string(p.x), monsky::to_string(p.y)}); }

} // namespace detail

inline Document parse_document(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError(std::string("<root>: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) detail::fail("<root>", "expected an object");
    Document doc;
    std::string kind = j.contains("kind") ? detail::str(j["kind"], "kind") : "constrained-triangulation";
    if (kind == "constrained-triangulation") doc.kind = DocumentKind::ConstrainedTriangulation;
    else if (kind == "dissection") doc.kind = DocumentKind::Dissection;
    else if (kind == "generalized-dissection") doc.kind = DocumentKind::GeneralizedDissection;
    else detail::fail("kind", "unknown kind " + kind);

    std::string name = j.contains("name") ? detail::str(j["name"], "name") : "unnamed";
    auto vertices = detail::str_list(detail::field(j, "vertices", ""), "vertices");
    {
        std::set<std::string> seen;
        for (const auto &v : vertices)
            if (!seen.insert(v).second) throw DuplicateId("vertices: vertex " + v + " appears twice");
    }
    std::array<std::string, 4> corners{};
    bool has_corners = j.contains("corners");
    if (has_corners) {
        auto c = detail::str_list(j["corners"], "corners");
        if (c.size() != 4) detail::fail("corners", "expected exactly 4 corners, got " + std::to_string(c.size()));
        for (std::size_t k = 0; k < 4; ++k) {
            if (std::find(vertices.begin(), vertices.end(), c[k]) == vertices.end())
                detail::fail("corners[" + std::to_string(k) + "]", "unknown vertex " + c[k]);
            corners[k] = c[k];
        }
    } else if (doc.kind != DocumentKind::Dissection) {
        detail::fail("corners", "missing");
    }

    const json &tj = detail::field(j, "triangles", "");
    if (!tj.is_array()) detail::fail("triangles", "expected an array");
    std::vector<OrientedTriangle> triangles;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < tj.size(); ++i) {
        std::string path = "triangles[" + std::to_string(i) + "]";
        OrientedTriangle t;
        t.id = detail::str(detail::field(tj[i], "id", path), path + ".id");
        auto vs = detail::str_list(detail::field(tj[i], "verts", path), path + ".verts");
        if (vs.size() != 3) detail::fail(path + ".verts", "expected 3 vertices");
        for (std::size_t k = 0; k < 3; ++k) {
            if (std::find(vertices.begin(), vertices.end(), vs[k]) == vertices.end())
                detail::fail(path + ".verts[" + std::to_string(k) + "]", "unknown vertex " + vs[k]);
            t.verts[k] = vs[k];
        }
        if (!ids.insert(t.id).second) throw DuplicateId(path + ".id: triangle " + t.id + " appears twice");
        triangles.push_back(std::move(t));
    }

    std::map<std::string, Point> pts;
    if (j.contains("points")) pts = detail::points(j["points"], vertices);

    const json empty = json::array();
    const json &cj = j.contains("constraints") ? j["constraints"] : empty;
    if (!cj.is_array()) detail::fail("constraints", "expected an array");

    if (doc.kind == DocumentKind::ConstrainedTriangulation) {
        doc.ct.name = name;
        doc.ct.vertices = vertices;
        doc.ct.corners = corners;
        doc.ct.triangles = std::move(triangles);
        for (std::size_t i = 0; i < cj.size(); ++i) {
            std::string path = "constraints[" + std::to_string(i) + "]";
            Constraint c;
            c.triangles = detail::str_list(detail::field(cj[i], "triangles", path), path + ".triangles");
            for (std::size_t k = 0; k < c.triangles.size(); ++k)
                if (!ids.count(c.triangles[k]))
                    detail::fail(path + ".triangles[" + std::to_string(k) + "]", "unknown triangle " + c.triangles[k]);
            doc.ct.constraints.push_back(std::move(c));
        }
        doc.points = std::move(pts);
        return doc;
    }

    doc.gd.name = name;
    doc.gd.vertices = vertices;
    doc.gd.corners = corners;
    doc.gd.triangles = std::move(triangles);
    for (const auto &v : vertices)
        if (!pts.count(v)) detail::fail("points", "vertex " + v + " has no point");
    doc.gd.points = std::move(pts);
    if (has_corners) doc.corners = corners;
    if (doc.kind == DocumentKind::Dissection) {
        if (!cj.empty()) detail::fail("constraints", "classical dissections derive their constraints");
        return doc;
    }
    for (std::size_t i = 0; i < cj.size(); ++i) {
        std::string path = "constraints[" + std::to_string(i) + "]";
        auto vs = detail::str_list(detail::field(cj[i], "vertices", path), path + ".vertices");
        for (std::size_t k = 0; k < vs.size(); ++k)
            if (std::find(vertices.begin(), vertices.end(), vs[k]) == vertices.end())
                detail::fail(path + ".vertices[" + std::to_string(k) + "]", "unknown vertex " + vs[k]);
        doc.gd.constraints.push_back(std::move(vs));
    }
    return doc;
}

inline json to_json(const ConstrainedTriangulation &ct, const std::map<std::string, Point> &pts = {}) {
    json j;
    j["name"] = ct.name;
    j["kind"] = "constrained-triangulation";
    j["vertices"] = ct.vertices;
    j["corners"] = ct.corners;
    j["triangles"] = json::array();
    for (const auto &t : ct.triangles) j["triangles"].push_back({{"id", t.id}, {"verts", t.verts}});
    j["constraints"] = json::array();
    for (const auto &c : ct.constraints) j["constraints"].push_back({{"triangles", c.triangles}});
    if (!pts.empty()) {
        j["points"] = json::object();
        for (const auto &v : ct.vertices)
            if (pts.count(v)) j["points"][v] = detail::point_json(pts.at(v));
    }
    return j;
}

inline json to_json(const GeneralizedDissection &gd, DocumentKind kind = DocumentKind::GeneralizedDissection) {
    json j;
    j["name"] = gd.name;
    j["kind"] = to_string(kind);
    j["vertices"] = gd.vertices;
    j["corners"] = gd.corners;
    j["triangles"] = json::array();
    for (const auto &t : gd.triangles) j["triangles"].push_back({{"id", t.id}, {"verts", t.verts}});
    if (kind == DocumentKind::GeneralizedDissection) {
        j["constraints"] = json::array();
        for (const auto &c : gd.constraints) j["constraints"].push_back({{"vertices", c}});
    }
    j["points"] = json::object();
    for (const auto &v : gd.vertices) j["points"][v] = detail::point_json(gd.points.at(v));
    return j;
}

inline json to_json(const Document &doc) {
    if (doc.kind == DocumentKind::ConstrainedTriangulation) return to_json(doc.ct, doc.points);
    return to_json(doc.gd, doc.kind);
}

inline std::string serialize(const Document &doc) { return to_json(doc).dump(2) + "\n"; }
inline std::string serialize(const ConstrainedTriangulation &ct) { return to_json(ct).dump(2) + "\n"; }

inline Document load_document(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

inline Document document(ConstrainedTriangulation ct) {
    Document d;
    d.ct = std::move(ct);
    return d;
}

inline Document document(GeneralizedDissection gd, DocumentKind kind) {
    Document d;
    d.kind = kind;
    if (kind == DocumentKind::Dissection) {
        gd.constraints.clear();
        d.corners = gd.corners;
    }
    d.gd = std::move(gd);
    return d;
}

} // namespace monsky::io
