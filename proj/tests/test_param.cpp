#include <gtest/gtest.h>

#include <random>

#include "monsky/corpus.hpp"
#include "monsky/param.hpp"
#include "monsky/poly_parse.hpp"
#include "support.hpp"

using namespace monsky;

namespace {

RationalFunction rf(const VarList &v, const std::string &num, const std::string &den = "1") {
    return RationalFunction(parse_poly(num, v), parse_poly(den, v));
}

Parameterization par_of(const ConstrainedTriangulation &ct, bool fixed = true) {
    return build_parameterization(ct, find_drawing_order(ct), fixed);
}

std::vector<std::string> drawable_corpus() { return {"diag1", "diag2", "ace", "be-merged", "diagonal-3"}; }

} // namespace

TEST(BuildParameterization, AceCoordinates) {
    auto par = par_of(corpus::ace());
    ASSERT_EQ(par.num_params(), 1u);
    const auto &v = par.params;
    EXPECT_EQ((*v)[0], "w1");
    EXPECT_EQ(par.coords.at("u").x, rf(v, "0"));
    EXPECT_EQ(par.coords.at("u").y, rf(v, "1 - w1"));
    EXPECT_EQ(par.coords.at("v").x, rf(v, "w1", "w1 - 1"));
    EXPECT_EQ(par.coords.at("v").y, rf(v, "1"));
}

TEST(BuildParameterization, Diag1TwoFreeParameters) {
    auto par = par_of(corpus::diag1());
    ASSERT_EQ(par.num_params(), 2u);
    EXPECT_EQ(par.coords.at("u").x, rf(par.params, "w1"));
    EXPECT_EQ(par.coords.at("u").y, rf(par.params, "w2"));
    EXPECT_EQ(par.coords.at("p").x, rf(par.params, "0"));
    EXPECT_EQ(par.coords.at("r").y, rf(par.params, "1"));
}

TEST(BuildParameterization, FreeCornersParallelogram) {
    for (const auto &name : drawable_corpus()) {
        auto ct = corpus::get(name);
        auto par = par_of(ct, false);
        const auto &g = par.coords;
        EXPECT_EQ(g.at("r").x, g.at("q").x + g.at("s").x - g.at("p").x) << name;
        EXPECT_EQ(g.at("r").y, g.at("q").y + g.at("s").y - g.at("p").y) << name;
        EXPECT_EQ(par.num_params(), static_cast<std::size_t>(find_drawing_order(ct).dimension())) << name;
    }
}

TEST(BuildParameterization, IdentitiesHoldSymbolically) {
    for (bool fixed : {true, false})
        for (const auto &name : drawable_corpus()) {
            auto ct = corpus::get(name);
            auto par = par_of(ct, fixed);
            const auto &g = par.coords;
            auto lhs = g.at("p") + g.at("r"), rhs = g.at("q") + g.at("s");
            EXPECT_TRUE(lhs == rhs) << name;
            for (std::size_t c = 0; c < ct.constraints.size(); ++c) {
                auto vs = ct.constraint_vertices(c);
                for (std::size_t k = 2; k < vs.size(); ++k)
                    EXPECT_TRUE(triangle_area(g.at(vs[0]), g.at(vs[1]), g.at(vs[k])).is_zero()) << name;
            }
        }
}

TEST(BuildParameterization, IdenticallyParallel) {
    // u pinned to both pq and sr: the two lines are parallel for every parameter value
    auto ct = corpus::diag1();
    ct.constraints = {{{"A"}}, {{"C"}}};
    ASSERT_TRUE(is_combinatorially_irreducible(ct));
    auto order = find_drawing_order(ct);
    EXPECT_EQ(order.alpha_of("u"), 0);
    EXPECT_THROW(build_parameterization(ct, order), IdenticallyParallel);
    EXPECT_THROW(sample_generic_drawing(ct, 0), DrawabilityUndecided);
}

TEST(AreaSystem, Diag1Formulas) {
    auto par = par_of(corpus::diag1());
    auto sys = area_system(corpus::diag1(), par);
    const auto &v = par.params;
    ASSERT_EQ(sys.living, (std::vector<std::string>{"A", "B", "C", "D"}));
    EXPECT_EQ(sys.W[0], rf(v, "w2/2"));
    EXPECT_EQ(sys.W[1], rf(v, "(1 - w1)/2"));
    EXPECT_EQ(sys.W[2], rf(v, "(1 - w2)/2"));
    EXPECT_EQ(sys.W[3], rf(v, "w1/2"));
    EXPECT_EQ(sys.sigma, rf(v, "1"));
}

TEST(AreaSystem, Diag2TriangleB) {
    auto par = par_of(corpus::diag2());
    auto sys = area_system(corpus::diag2(), par);
    // u = (w1, w2), v = (w3, w4)
    EXPECT_EQ(sys.W[1] * BigRational(2), rf(par.params, "w3*w2 - w1*w4 - w2 + w4"));
    EXPECT_EQ(sys.sigma, rf(par.params, "1"));
}

TEST(AreaSystem, AceFormulas) {
    auto par = par_of(corpus::ace());
    auto sys = area_system(corpus::ace(), par);
    const auto &v = par.params;
    EXPECT_EQ(sys.W[0], rf(v, "(1 - w1)/2"));
    EXPECT_EQ(sys.W[1], rf(v, "1", "2*(1 - w1)"));
    EXPECT_EQ(sys.W[2], rf(v, "w1^2", "2*(w1 - 1)"));
    EXPECT_EQ(sys.sigma, rf(v, "1"));
}

TEST(AreaSystem, FixedCornersSumToOne) {
    for (const auto &name : drawable_corpus()) {
        auto ct = corpus::get(name);
        auto sys = area_system(ct, par_of(ct));
        EXPECT_EQ(sys.sigma, RationalFunction::constant(sys.sigma.vars(), 1)) << name;
    }
}

TEST(AreaSystem, FreeCornerHomogeneity) {
    for (const auto &name : {"diag1", "diag2", "diagonal-3"}) {
        auto ct = corpus::get(name);
        auto par = par_of(ct, false);
        auto sys = area_system(ct, par);
        auto names = *par.params;
        names.push_back("lambda");
        auto big = make_vars(names);
        MultiPoly lambda = MultiPoly::variable(big, "lambda");
        std::vector<MultiPoly> scaled, plain;
        for (std::size_t i = 0; i < par.num_params(); ++i) {
            plain.push_back(MultiPoly::variable(big, i));
            scaled.push_back(lambda * MultiPoly::variable(big, i));
        }
        for (const auto &w : sys.W) {
            ASSERT_TRUE(w.is_polynomial());
            EXPECT_TRUE(w.num().is_homogeneous());
            EXPECT_EQ(w.substitute(scaled, big), w.substitute(plain, big) * RationalFunction(lambda * lambda)) << name;
        }
    }
}

TEST(EvaluateDrawing, AceAtHalf) {
    auto ct = corpus::ace();
    auto par = par_of(ct);
    std::vector<BigRational> w{make_rational(1, 2)};
    auto d = evaluate_drawing(ct, par, w);
    EXPECT_EQ(d.points.at("u"), (Point{0, make_rational(1, 2)}));
    EXPECT_EQ(d.points.at("v"), (Point{-1, 1}));
    EXPECT_EQ(living_areas(ct, d.points),
              (std::vector<BigRational>{make_rational(1, 4), BigRational(1), make_rational(-1, 4)}));
    // matches the stored generalized dissection
    auto gd = corpus::ace_generalized();
    for (const auto &[k, pt] : gd.points) EXPECT_EQ(d.points.at(k), pt) << k;
}

TEST(EvaluateDrawing, AceAtOneHitsPole) {
    auto ct = corpus::ace();
    auto par = par_of(ct);
    std::vector<BigRational> w{BigRational(1)};
    try {
        evaluate_drawing(ct, par, w);
        FAIL();
    } catch (const DenominatorVanishes &e) {
        EXPECT_EQ(std::string(e.what()), "DenominatorVanishes: v");
    }
}

TEST(EvaluateDrawing, Diag1Generic) {
    auto ct = corpus::diag1();
    std::vector<BigRational> w{make_rational(1, 3), make_rational(1, 2)};
    auto d = evaluate_drawing(ct, par_of(ct), w);
    EXPECT_EQ(d.points.at("u"), (Point{make_rational(1, 3), make_rational(1, 2)}));
    EXPECT_TRUE(d.flags.is_generic);
    for (bool c : d.flags.condition) EXPECT_TRUE(c);
}

TEST(CheckDrawing, ConstantMap) {
    auto ct = corpus::ace();
    std::map<std::string, Point> pts;
    for (const auto &v : ct.vertices) pts[v] = {0, 0};
    auto f = check_drawing(ct, pts);
    EXPECT_TRUE(f.is_drawing);
    EXPECT_FALSE(f.is_generic);
    EXPECT_FALSE(f.is_life_preserving);
}

TEST(CheckDrawing, DegenerateLivingTriangle) {
    auto ct = corpus::diag1();
    std::vector<BigRational> w{make_rational(1, 2), BigRational(0)};
    auto d = evaluate_drawing(ct, par_of(ct), w);
    EXPECT_TRUE(d.flags.is_drawing);
    EXPECT_FALSE(d.flags.condition[3]);
    EXPECT_FALSE(d.flags.is_life_preserving);
}

TEST(CheckDrawing, AccidentalCollinearityStillGeneric) {
    // u and v on the diagonal pr with no constraint through them
    auto ct = corpus::diag2();
    std::map<std::string, Point> pts{{"p", {0, 0}}, {"q", {1, 0}}, {"r", {1, 1}}, {"s", {0, 1}},
                                     {"u", {make_rational(1, 4), make_rational(1, 4)}},
                                     {"v", {make_rational(3, 4), make_rational(3, 4)}}};
    ASSERT_TRUE(collinear(pts["p"], pts["u"], pts["v"]));
    EXPECT_TRUE(check_drawing(ct, pts).is_generic);
}

TEST(CheckDrawing, ConditionsIndividually) {
    auto ct = corpus::ace();
    auto par = par_of(ct);
    std::vector<BigRational> w{make_rational(1, 2)};
    auto base = evaluate_drawing(ct, par, w).points;
    ASSERT_TRUE(check_drawing(ct, base).is_generic);
    auto bent = base;
    bent["u"].x = make_rational(1, 8); // u leaves line sp
    EXPECT_FALSE(check_drawing(ct, bent).condition[0]);
    EXPECT_FALSE(check_drawing(ct, bent).is_drawing);
    auto skew = base;
    skew["r"].x = 2;
    EXPECT_FALSE(check_drawing(ct, skew).condition[1]);
    auto flat = base;
    flat["s"] = {2, 0};
    flat["r"] = {3, 0};
    EXPECT_FALSE(check_drawing(ct, flat).condition[2]);
    auto clash = base;
    clash["v"] = clash["u"];
    EXPECT_FALSE(check_drawing(ct, clash).condition[4]);
}

TEST(Sampling, Diag1Succeeds) {
    for (std::uint64_t seed : {0u, 1u, 2u, 99u}) {
        auto d = sample_generic_drawing(corpus::diag1(), seed);
        EXPECT_TRUE(d.flags.is_generic);
    }
}

TEST(Sampling, Deterministic) {
    auto a = sample_generic_drawing(diagonal_case(3), 5);
    auto b = sample_generic_drawing(diagonal_case(3), 5);
    EXPECT_EQ(a.points, b.points);
}

TEST(Sampling, AceNegativeE) {
    auto ct = corpus::ace();
    auto d = sample_generic_drawing(ct, 42);
    ASSERT_TRUE(d.flags.is_generic);
    auto areas = living_areas(ct, d.points);
    EXPECT_LT(areas[2], 0);
    // for every real w1 < 1 the sign is negative: W_E = w1^2 / (2 (w1 - 1))
    for (int k = -20; k < 20; ++k) {
        std::vector<BigRational> w{make_rational(k, 21)};
        if (k == 0) continue;
        EXPECT_LT(living_areas(ct, evaluate_drawing(ct, par_of(ct), w).points)[2], 0);
    }
}

TEST(Sampling, FullyDeadUndecided) {
    EXPECT_THROW(sample_generic_drawing(corpus::trianglicide(), 0), DrawabilityUndecided);
}

TEST(Sampling, RoundTripRecoversParameters) {
    for (const auto &name : drawable_corpus()) {
        auto ct = corpus::get(name);
        auto par = par_of(ct);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            std::vector<BigRational> vals;
            auto d = sample_generic_drawing(ct, par, seed, {}, &vals);
            auto rec = recover_parameters(par, d.points);
            EXPECT_EQ(rec, vals) << name;
            EXPECT_EQ(evaluate_drawing(ct, par, rec).points, d.points) << name;
        }
    }
}

TEST(Sampling, InjectiveOnGenericPairs) {
    auto ct = diagonal_case(2);
    auto par = par_of(ct);
    int pairs = 0;
    for (std::uint64_t seed = 0; pairs < 50; seed += 2) {
        std::vector<BigRational> va, vb;
        auto a = sample_generic_drawing(ct, par, seed, {}, &va);
        auto b = sample_generic_drawing(ct, par, seed + 1, {}, &vb);
        if (va == vb) continue;
        EXPECT_NE(a.points, b.points);
        ++pairs;
    }
}

TEST(Affine, AreasScaleByDeterminant) {
    std::mt19937_64 rng(6);
    for (const auto &name : drawable_corpus()) {
        auto ct = corpus::get(name);
        auto d = sample_generic_drawing(ct, 3);
        for (int k = 0; k < 10; ++k) {
            AffineMap f;
            for (auto &x : f.m) x = make_rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
            f.b = {make_rational(static_cast<long>(rng() % 5)), make_rational(-1, 3)};
            auto before = living_areas(ct, d.points), after = living_areas(ct, monsky::apply(f, d.points));
            for (std::size_t j = 0; j < before.size(); ++j) EXPECT_EQ(after[j], before[j] * f.det()) << name;
        }
    }
}

TEST(Affine, NormalizingMap) {
    Point a{2, 1}, b{5, 2}, c{make_rational(1, 2), 4};
    auto f = normalizing_map(a, b, c);
    EXPECT_EQ(f(a), (Point{0, 0}));
    EXPECT_EQ(f(b), (Point{1, 0}));
    EXPECT_EQ(f(c), (Point{0, 1}));
    EXPECT_THROW(normalizing_map(a, a, c), DegenerateFrame);
}

TEST(Sampling, RandomHonestTriangulationsDrawable) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto ct = test_support::random_triangulation(rng, 1 + static_cast<int>(rng() % 5), 20);
        auto d = sample_generic_drawing(ct, static_cast<std::uint64_t>(trial));
        EXPECT_TRUE(d.flags.is_generic);
        BigRational total = 0;
        for (const auto &a : living_areas(ct, d.points)) total += a;
        EXPECT_EQ(total, 1);
    }
}
