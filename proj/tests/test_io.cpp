#include <gtest/gtest.h>

#include <regex>

#include "monsky/monsky.hpp"

using namespace monsky;

namespace {

std::string what_of(const std::string &text) {
    try {
        io::parse_document(text);
    } catch (const Error &e) {
        return e.what();
    }
    return "";
}

std::size_t count(const std::string &hay, const std::string &needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

const char *kDiag1 = R"({
  "name": "diag1",
  "vertices": ["p", "q", "r", "s", "u"],
  "corners": ["p", "q", "r", "s"],
  "triangles": [
    {"id": "A", "verts": ["p", "q", "u"]}, {"id": "B", "verts": ["q", "r", "u"]},
    {"id": "C", "verts": ["r", "s", "u"]}, {"id": "D", "verts": ["s", "p", "u"]}
  ]
})";

std::string replaced(std::string text, const std::string &from, const std::string &to) {
    return text.replace(text.find(from), from.size(), to);
}

} // namespace

TEST(Document, ParsesHandWrittenFile) {
    auto doc = io::parse_document(kDiag1);
    EXPECT_EQ(doc.kind, io::DocumentKind::ConstrainedTriangulation);
    EXPECT_EQ(serialize(doc), serialize(io::document(corpus::diag1())));
    EXPECT_TRUE(doc.ct.constraints.empty());
}

TEST(Document, RoundTripsEveryCorpusEntry) {
    for (const auto &name : corpus::names()) {
        auto ct = corpus::get(name);
        std::string text = io::serialize(ct);
        auto doc = io::parse_document(text);
        EXPECT_EQ(io::serialize(doc), text) << name;
        EXPECT_EQ(doc.ct.triangles.size(), ct.triangles.size());
        EXPECT_EQ(doc.ct.constraints.size(), ct.constraints.size());
    }
    for (const auto &name : corpus::dissection_names()) {
        auto gd = corpus::get_dissection(name);
        for (auto kind : {io::DocumentKind::Dissection, io::DocumentKind::GeneralizedDissection}) {
            std::string text = io::serialize(io::document(gd, kind));
            EXPECT_EQ(io::serialize(io::parse_document(text)), text) << name;
        }
    }
}

TEST(Document, AceHasThreeConstraints) {
    auto doc = io::parse_document(io::serialize(corpus::ace()));
    ASSERT_EQ(doc.ct.constraints.size(), 3u);
    std::set<std::set<std::string>> got;
    for (std::size_t i = 0; i < 3; ++i) {
        auto vs = doc.ct.constraint_vertices(i);
        got.insert(std::set<std::string>(vs.begin(), vs.end()));
    }
    EXPECT_EQ(got, (std::set<std::set<std::string>>{{"q", "v", "u"}, {"r", "s", "v"}, {"s", "p", "u"}}));
}

TEST(Document, PointsRoundTripExactly) {
    auto d = sample_generic_drawing(corpus::diag2(), 9);
    std::string text = io::to_json(corpus::diag2(), d.points).dump();
    auto doc = io::parse_document(text);
    EXPECT_EQ(doc.points, d.points);
    // rationals are strings "a/b"
    EXPECT_TRUE(std::regex_search(text, std::regex(R"("-?[0-9]+/[0-9]+")")));
    EXPECT_EQ(text.find("0."), std::string::npos);
}

TEST(Document, FiveCornersIsSchemaErrorAtCorners) {
    std::string text = replaced(kDiag1, R"("corners": ["p", "q", "r", "s"])", R"("corners": ["p", "q", "r", "s", "u"])");
    try {
        io::parse_document(text);
        FAIL() << "expected SchemaError";
    } catch (const SchemaError &e) {
        EXPECT_NE(std::string(e.what()).find("corners"), std::string::npos) << e.what();
    }
}

TEST(Document, SchemaErrorsCarryPaths) {
    EXPECT_NE(what_of("[1,2]").find("<root>"), std::string::npos);
    EXPECT_NE(what_of("{not json").find("invalid JSON"), std::string::npos);
    EXPECT_NE(what_of(R"({"corners": ["p","q","r","s"], "triangles": []})").find("vertices"), std::string::npos);
    std::string bad_vertex = replaced(kDiag1, R"(["q", "r", "u"])", R"(["q", "x", "u"])");
    EXPECT_NE(what_of(bad_vertex).find("triangles[1].verts[1]"), std::string::npos) << what_of(bad_vertex);
    std::string bad_constraint = kDiag1;
    bad_constraint.insert(bad_constraint.rfind('}'), R"(, "constraints": [{"triangles": ["A", "Z"]}])");
    EXPECT_NE(what_of(bad_constraint).find("constraints[0].triangles[1]"), std::string::npos) << what_of(bad_constraint);
    std::string bad_point = kDiag1;
    bad_point.insert(bad_point.rfind('}'), R"(, "points": {"p": ["1/0", "0"]})");
    EXPECT_NE(what_of(bad_point).find("points.p[0]"), std::string::npos) << what_of(bad_point);
    EXPECT_THROW(io::parse_document(bad_point), SchemaError);
    EXPECT_THROW(io::load_document("/nonexistent/file.json"), SchemaError);
}

TEST(Document, DuplicateIds) {
    std::string dup_vertex = replaced(kDiag1, R"("s", "u"])", R"("s", "s"])");
    EXPECT_THROW(io::parse_document(dup_vertex), DuplicateId);
    std::string dup_triangle = replaced(kDiag1, R"("id": "B")", R"("id": "A")");
    EXPECT_THROW(io::parse_document(dup_triangle), DuplicateId);
}

TEST(Document, DissectionConvertsOnDemand) {
    auto doc = io::parse_document(io::serialize(io::document(corpus::get_dissection("be-classical"),
                                                             io::DocumentKind::Dissection)));
    EXPECT_EQ(doc.kind, io::DocumentKind::Dissection);
    auto ct = doc.triangulation();
    EXPECT_TRUE(validate_ct(ct).ok);
    EXPECT_EQ(area_polynomial(ct).p.to_string(), "A - C + D - F");
}

TEST(Svg, OnePolygonPerLivingTriangleAndConstraint) {
    for (const auto &name : {"diag1", "diag2", "ace", "be-merged", "diagonal-3"}) {
        auto ct = corpus::get(name);
        auto d = sample_generic_drawing(ct, 3);
        std::string svg = render_svg(ct, d.points);
        EXPECT_EQ(count(svg, "<polygon"), living_triangles(ct).size() + ct.constraints.size()) << name;
        EXPECT_EQ(count(svg, "class=\"constraint\""), ct.constraints.size());
        EXPECT_EQ(svg, render_svg(ct, sample_generic_drawing(ct, 3).points));
        EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    }
}

TEST(Svg, NegativeTrianglesShaded) {
    // seed 42 draws ACE with E negatively oriented
    auto ct = corpus::ace();
    auto d = sample_generic_drawing(ct, 42);
    std::string svg = render_svg(ct, d.points);
    std::size_t negatives = 0;
    auto areas = living_areas(ct, d.points);
    for (const auto &a : areas) negatives += a < 0;
    EXPECT_GE(negatives, 1u);
    EXPECT_EQ(count(svg, "class=\"living negative\""), negatives);
    EXPECT_NE(svg.find("class=\"living negative\" data-id=\"E\""), std::string::npos);
}
