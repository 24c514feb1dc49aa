#include <gtest/gtest.h>

#include "monsky/areapoly.hpp"
#include "monsky/corpus.hpp"
#include "monsky/poly_parse.hpp"

using namespace monsky;

namespace {

MultiPoly expected(const AreaPolynomial &ap, const char *text) { return parse_poly(text, ap.vars()); }

std::vector<std::string> drawable() { return {"diag1", "diag2", "ace", "be-merged", "diagonal-2", "diagonal-3"}; }

} // namespace

TEST(AreaPolynomial, Diag1) {
    auto ap = area_polynomial(corpus::diag1());
    EXPECT_EQ(ap.p, expected(ap, "A - B + C - D"));
    EXPECT_EQ(ap.d, 1);
    EXPECT_EQ(ap.sign_witness, "A");
    EXPECT_EQ(ap.p.to_string(), "A - B + C - D");
}

TEST(AreaPolynomial, Diag2) {
    auto ap = area_polynomial(corpus::diag2());
    EXPECT_EQ(ap.p, expected(ap, "(A+C+E)^2 - 4*A*C - (B+D+F)^2 + 4*D*F"));
    EXPECT_EQ(ap.d, 2);
}

TEST(AreaPolynomial, Ace) {
    auto ap = area_polynomial(corpus::ace());
    EXPECT_EQ(*ap.vars(), (std::vector<std::string>{"A", "C", "E"}));
    EXPECT_EQ(ap.p, expected(ap, "(A+C+E)^2 - 4*A*C"));
    EXPECT_EQ(ap.p.to_string(), "A^2 - 2*A*C + 2*A*E + C^2 + 2*C*E + E^2");
}

TEST(AreaPolynomial, BeMerged) {
    auto ap = area_polynomial(corpus::be_merged());
    EXPECT_EQ(ap.p, expected(ap, "A - C + D - F"));
}

TEST(AreaPolynomial, NotDrawableInputs) {
    EXPECT_THROW(area_polynomial(corpus::be_split()), NotDrawable);
    EXPECT_THROW(area_polynomial(corpus::trianglicide()), NotDrawable);
    auto pinned = corpus::diag1();
    pinned.constraints = {{{"A"}}, {{"C"}}};
    EXPECT_THROW(area_polynomial(pinned), NotDrawable);
    auto broken = corpus::diag1();
    broken.corners = {"p", "r", "q", "s"};
    EXPECT_THROW(area_polynomial(broken), InvalidTriangulation);
}

TEST(AreaPolynomial, CorpusShape) {
    for (const auto &name : drawable()) {
        auto ap = area_polynomial(corpus::get(name));
        const auto &p = ap.p;
        EXPECT_TRUE(p.is_homogeneous()) << name;
        EXPECT_TRUE(p.has_integer_coefficients()) << name;
        EXPECT_EQ(abs(p.content()), 1) << name;
        // p - sigma^d has even coefficients, checked against an independently expanded sigma^d
        MultiPoly sigma(p.vars());
        for (std::size_t j = 0; j < p.num_vars(); ++j) sigma += MultiPoly::variable(p.vars(), j);
        MultiPoly diff = p - sigma.pow(static_cast<unsigned>(ap.d));
        for (const auto &t : diff.terms()) EXPECT_EQ(BigInt(t.coeff.get_num()) % 2, 0) << name;
        // every A_i^d has odd coefficient, and A_1^d is positive
        for (std::size_t j = 0; j < p.num_vars(); ++j) {
            BigRational c = p.coefficient(Monomial::variable(j, static_cast<unsigned>(ap.d)));
            EXPECT_NE(BigInt(c.get_num()) % 2, 0) << name;
        }
        EXPECT_GT(p.coefficient(Monomial::variable(0, static_cast<unsigned>(ap.d))), 0) << name;
    }
}

TEST(AreaPolynomial, OrderInvariance) {
    for (const auto &name : {"diag2", "ace"}) {
        auto ct = corpus::get(name);
        auto base = area_polynomial(ct);
        for (auto rest : {std::vector<std::string>{"u", "v"}, std::vector<std::string>{"v", "u"}}) {
            AreaPolyOptions opt;
            std::vector<std::string> seq{"p", "q", "s", "r"};
            seq.insert(seq.end(), rest.begin(), rest.end());
            opt.order = compute_alpha(ct, seq);
            EXPECT_EQ(area_polynomial(ct, opt).p, base.p) << name;
            opt.inner_lex = true;
            EXPECT_EQ(area_polynomial(ct, opt).p, base.p) << name;
        }
    }
}

TEST(AreaPolynomial, FanInvariance) {
    auto gd = corpus::ace_generalized();
    auto base = area_polynomial(corpus::ace()).p.to_string();
    for (const auto &r1 : gd.constraints[0])
        for (const auto &r3 : gd.constraints[2]) {
            auto ct = generalized_to_ct(gd, {r1, "", r3});
            EXPECT_EQ(area_polynomial(ct).p.to_string(), base) << r1 << " " << r3;
        }
    auto be = corpus::be_classical();
    auto bgd = dissection_to_generalized(be.name, be.vertices, be.points, be.triangles);
    std::string bbase;
    for (const auto &root : bgd.constraints[0]) {
        auto s = area_polynomial(generalized_to_ct(bgd, {root})).p.to_string();
        if (bbase.empty()) bbase = s;
        EXPECT_EQ(s, bbase) << root;
    }
    EXPECT_EQ(bbase, "A - C + D - F");
}

TEST(VerifyVanishing, CorpusTwentySamples) {
    for (const auto &name : drawable()) {
        auto ct = corpus::get(name);
        auto ap = area_polynomial(ct);
        EXPECT_TRUE(verify_vanishing(ap.p, ct, 20, 1000)) << name;
    }
}

TEST(VerifyVanishing, HandPlacedDrawings) {
    auto ap = area_polynomial(corpus::diag1());
    // central vertex anywhere, even outside the square
    for (auto [x, y] : std::vector<std::pair<long, long>>{{1, 1}, {-3, 7}, {5, 2}, {0, 9}}) {
        Point u{make_rational(x, 4), make_rational(y, 4)};
        std::map<std::string, Point> pts{{"p", {0, 0}}, {"q", {1, 0}}, {"r", {1, 1}}, {"s", {0, 1}}, {"u", u}};
        EXPECT_EQ(ap.p.evaluate(living_areas(corpus::diag1(), pts)), 0);
    }
    auto ace = area_polynomial(corpus::ace());
    std::vector<BigRational> areas{make_rational(1, 4), BigRational(1), make_rational(-1, 4)};
    EXPECT_EQ(ace.p.evaluate(areas), 0);
}

TEST(VerifyVanishing, WrongPolynomialDetected) {
    auto ct = corpus::diag2();
    auto ap = area_polynomial(ct);
    MultiPoly wrong = ap.p + MultiPoly::variable(ap.vars(), 0) * MultiPoly::variable(ap.vars(), 1) * BigRational(2);
    EXPECT_FALSE(verify_vanishing(wrong, ct, 5, 0));
}

TEST(Equidissection, Examples) {
    auto d1 = equidissection_obstruction(area_polynomial(corpus::diag1()).p);
    EXPECT_EQ(d1.p_at_ones, 0);
    EXPECT_TRUE(d1.deformable_to_equal_areas);
    auto ace = equidissection_obstruction(area_polynomial(corpus::ace()).p);
    EXPECT_EQ(ace.p_at_ones, 5);
    EXPECT_FALSE(ace.deformable_to_equal_areas);
}

TEST(CongruentSigmaMod2, Direct) {
    auto v = make_vars({"A", "B", "C"});
    EXPECT_TRUE(congruent_sigma_mod2(parse_poly("A - B + C", v), 1));
    EXPECT_TRUE(congruent_sigma_mod2(parse_poly("A^2 + 3*B^2 - C^2", v), 2));
    EXPECT_FALSE(congruent_sigma_mod2(parse_poly("A^2 + 2*A*B", v), 2));
    EXPECT_FALSE(congruent_sigma_mod2(parse_poly("A/2 + B + C", v), 1));
}
