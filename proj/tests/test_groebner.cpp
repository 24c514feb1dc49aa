#include <gtest/gtest.h>

#include <random>

#include "monsky/groebner.hpp"
#include "monsky/poly_parse.hpp"

using namespace monsky;

namespace {

std::vector<MultiPoly> polys(const VarList &v, std::initializer_list<const char *> src) {
    std::vector<MultiPoly> out;
    for (const char *s : src) out.push_back(parse_poly(s, v));
    return out;
}

std::vector<std::string> rendered(const std::vector<MultiPoly> &gb) {
    std::vector<std::string> out;
    for (const auto &g : gb) out.push_back(g.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Buchberger, CoordinateIdeal) {
    auto v = make_vars({"x", "y"});
    EXPECT_EQ(rendered(buchberger(polys(v, {"x", "y"}), TermOrder::lex())), (std::vector<std::string>{"x", "y"}));
}

TEST(Buchberger, HandRunExample) {
    auto v = make_vars({"x", "y"});
    auto gb = buchberger(polys(v, {"x^2 - 1", "x*y - 1"}), TermOrder::lex());
    EXPECT_EQ(rendered(gb), (std::vector<std::string>{"x - y", "y^2 - 1"}));
}

TEST(Buchberger, ZeroIdeal) {
    auto v = make_vars({"x"});
    EXPECT_TRUE(buchberger({}, TermOrder::grevlex()).empty());
    EXPECT_TRUE(buchberger(polys(v, {"0"}), TermOrder::grevlex()).empty());
}

TEST(Buchberger, UnitIdeal) {
    auto v = make_vars({"x", "y"});
    auto gb = buchberger(polys(v, {"x*y - 1", "x"}), TermOrder::grevlex());
    EXPECT_EQ(rendered(gb), (std::vector<std::string>{"1"}));
}

TEST(Buchberger, ReducedAndPrimitive) {
    auto v = make_vars({"x", "y", "z"});
    auto gens = polys(v, {"x^2*y - z/2", "x*y^2 - 3*z^2 + 1", "y*z - x"});
    for (auto order : {TermOrder::lex(), TermOrder::grevlex()}) {
        auto gb = buchberger(gens, order);
        ASSERT_FALSE(gb.empty());
        for (std::size_t i = 0; i < gb.size(); ++i) {
            EXPECT_TRUE(gb[i].has_integer_coefficients());
            EXPECT_EQ(abs(gb[i].content()), 1);
            // no term of g_i is divisible by the leading monomial of another element
            for (std::size_t j = 0; j < gb.size(); ++j) {
                if (i == j) continue;
                Monomial lj;
                int best = 0;
                for (const auto &t : gb[j].terms())
                    if (best++ == 0 || order.compare(t.mono, lj) > 0) lj = t.mono;
                for (const auto &t : gb[i].terms()) EXPECT_FALSE(lj.divides(t.mono));
            }
        }
        for (const auto &g : gens) EXPECT_TRUE(ideal_contains(gb, g, order));
    }
}

TEST(Buchberger, OrderIndependentIdeal) {
    // same ideal computed under two orders: each basis lies in the other's ideal
    auto v = make_vars({"a", "b", "c"});
    auto gens = polys(v, {"a^2 + b*c - 1", "a*b - c^2", "b^3 - a + c"});
    auto g1 = buchberger(gens, TermOrder::lex());
    auto g2 = buchberger(gens, TermOrder::grevlex());
    for (const auto &g : g1) EXPECT_TRUE(ideal_contains(g2, g, TermOrder::grevlex()));
    for (const auto &g : g2) EXPECT_TRUE(ideal_contains(g1, g, TermOrder::lex()));
}

TEST(Buchberger, MembershipSoundnessRandom) {
    std::mt19937_64 rng(99);
    auto v = make_vars({"x", "y", "z"});
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<MultiPoly> gens;
        for (int k = 0; k < 3; ++k) {
            std::vector<Term> terms;
            for (int t = 0; t < 3; ++t) {
                Monomial m;
                for (unsigned e = 0, d = static_cast<unsigned>(rng() % 3); e < d; ++e) {
                    std::size_t i = rng() % 3;
                    m.set(i, m[i] + 1);
                }
                terms.push_back({m, make_rational(static_cast<long>(rng() % 7) - 3)});
            }
            gens.push_back(MultiPoly::from_terms(v, terms));
        }
        auto gb = buchberger(gens, TermOrder::grevlex());
        for (const auto &g : gens) EXPECT_TRUE(ideal_contains(gb, g, TermOrder::grevlex()));
        // a combination with polynomial cofactors is also a member
        MultiPoly comb = gens[0] * parse_poly("x - 2*y", v) + gens[1] * parse_poly("z^2", v) - gens[2];
        EXPECT_TRUE(ideal_contains(gb, comb, TermOrder::grevlex()));
    }
}

TEST(Eliminate, Parabola) {
    auto v = make_vars({"x", "A", "B"});
    auto e = eliminate(polys(v, {"A - x", "B - x^2"}), {"x"});
    ASSERT_EQ(e.size(), 1u);
    EXPECT_TRUE(e[0] == parse_poly("B - A^2", v) || e[0] == parse_poly("A^2 - B", v));
}

TEST(Eliminate, CuspidalCubic) {
    auto v = make_vars({"x", "A", "B"});
    for (bool inner_lex : {false, true}) {
        auto e = eliminate(polys(v, {"A - x^2", "B - x^3"}), {"x"}, inner_lex);
        ASSERT_EQ(e.size(), 1u);
        EXPECT_TRUE(e[0].has_integer_coefficients());
        // brute-force oracle: A = x^2, B = x^3 satisfy the relation at sampled x
        for (int k = -10; k < 10; ++k) {
            BigRational x = make_rational(k, 3);
            std::vector<BigRational> pt{x, x * x, x * x * x};
            EXPECT_EQ(e[0].evaluate(pt), 0);
            EXPECT_EQ(pt[1] * pt[1] * pt[1], pt[2] * pt[2]);
        }
        MultiPoly expect = parse_poly("A^3 - B^2", v);
        EXPECT_TRUE(e[0] == expect || e[0] == -expect);
    }
}

TEST(Eliminate, LinearCollapse) {
    auto v = make_vars({"x", "A", "B"});
    auto e = eliminate(polys(v, {"A - x", "B - x", "x"}), {"x"});
    EXPECT_EQ(rendered(e), (std::vector<std::string>{"A", "B"}));
}

TEST(Eliminate, SoundnessOnParameterizedLocus) {
    // circle-like rational curve: A = 2s/(1+s^2), B = (1-s^2)/(1+s^2); t inverts the denominator
    auto v = make_vars({"s", "t", "A", "B"});
    auto gens = polys(v, {"A*(1 + s^2) - 2*s", "B*(1 + s^2) - (1 - s^2)", "t*(1 + s^2) - 1"});
    auto e = eliminate(gens, {"s", "t"});
    ASSERT_FALSE(e.empty());
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; ++k) {
        BigRational s = make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
        BigRational den = 1 + s * s;
        std::vector<BigRational> pt{s, 1 / den, 2 * s / den, (1 - s * s) / den};
        for (const auto &g : e) EXPECT_EQ(g.evaluate(pt), 0);
    }
    for (const auto &g : e)
        for (const auto &t : g.terms()) EXPECT_EQ(t.mono[0] + t.mono[1], 0u);
    MultiPoly circle = parse_poly("A^2 + B^2 - 1", v);
    EXPECT_TRUE(ideal_contains(buchberger(e, TermOrder::grevlex()), circle, TermOrder::grevlex()));
}

TEST(Eliminate, UnknownVariableRejected) {
    auto v = make_vars({"x"});
    EXPECT_THROW(eliminate(polys(v, {"x"}), {"y"}), AlgebraError);
}

TEST(Buchberger, StatsReported) {
    auto v = make_vars({"x", "y"});
    GroebnerStats st;
    auto gb = buchberger(polys(v, {"x^2 - 1", "x*y - 1"}), TermOrder::lex(), &st);
    EXPECT_EQ(st.basis_size, gb.size());
    EXPECT_GE(st.pairs_considered, 1u);
}
