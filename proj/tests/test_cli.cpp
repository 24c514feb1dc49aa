#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "monsky/corpus.hpp"
#include "monsky/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// stdout only; stderr is folded in when `merge` is set.
Run run(const std::string &args, bool merge = false) {
    std::string cmd = std::string(MONSKY_CLI_PATH) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / ("monsky_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

fs::path write(const std::string &name, const std::string &text) {
    fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p;
}

} // namespace

TEST(Cli, ValidateExitCodes) {
    auto good = write("diag1.json", monsky::io::serialize(monsky::corpus::diag1()));
    auto r = run("validate " + good.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(json::parse(r.out)["ok"].get<bool>());

    // two constraints sharing triangle B overlap
    auto bad = monsky::corpus::diag1();
    bad.constraints = {{{"A", "B"}}, {{"B", "C"}}};
    auto badp = write("bad.json", monsky::io::serialize(bad));
    r = run("validate " + badp.string());
    EXPECT_EQ(r.status, 1);
    auto j = json::parse(r.out);
    EXPECT_FALSE(j["ok"].get<bool>());
    EXPECT_EQ(j["violations"][0]["kind"], monsky::violation::kOverlapping);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("areapoly").status, 2);
    EXPECT_EQ(run("areapoly @diag1 --order banana").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, DomainErrorsExitOneWithName) {
    auto r = run("areapoly @be-split", true);
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("NotDrawable"), std::string::npos) << r.out;
    auto five = write("five.json", R"({"vertices":["p","q","r","s","u"],"corners":["p","q","r","s","u"],"triangles":[]})");
    r = run("validate " + five.string(), true);
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("SchemaError"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("corners"), std::string::npos) << r.out;
}

TEST(Cli, AreapolyAce) {
    auto r = run("areapoly @ace");
    ASSERT_EQ(r.status, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["p"], "A^2 - 2*A*C + 2*A*E + C^2 + 2*C*E + E^2");
    EXPECT_EQ(j["degree"], 2);
    auto lex = json::parse(run("areapoly @ace --order lex").out);
    EXPECT_EQ(lex["p"], j["p"]);
}

TEST(Cli, MonskyDiag1) {
    auto path = write("diag1.json", monsky::io::serialize(monsky::corpus::diag1()));
    auto r = run("monsky " + path.string());
    ASSERT_EQ(r.status, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["p"], "A - B + C - D");
    std::set<std::string> pair{j["f"].get<std::string>(), j["fTilde"].get<std::string>()};
    EXPECT_EQ(pair, (std::set<std::string>{"A + C", "B + D"}));
    EXPECT_TRUE(j["pCongruentSigmaMod2"].get<bool>());
    EXPECT_TRUE(j["identity2fEquals1"].get<bool>());
    EXPECT_TRUE(j["identity2fTildeEquals1"].get<bool>());
    EXPECT_TRUE(j["small"]["ok"].get<bool>());
    EXPECT_EQ(j["equidissection"]["pAtOnes"], "0");
}

TEST(Cli, OrderAndAreas) {
    auto j = json::parse(run("order @ace").out);
    EXPECT_EQ(j["dimension"], 7);
    EXPECT_EQ(j["alpha"]["u"], 1);
    EXPECT_EQ(j["alpha"]["v"], 0);
    EXPECT_EQ(run("order @ace --sequence p,q,s,r,v,u").status, 0);
    EXPECT_EQ(run("order @ace --sequence p,q,r,s,u,v").status, 1);
    auto a = json::parse(run("areas @diag1").out);
    EXPECT_EQ(a["sigma"], "1");
    EXPECT_EQ(a["parameters"].size(), 2u);
    auto f = json::parse(run("areas @diag1 --free-corners").out);
    EXPECT_FALSE(f["fixedCorners"].get<bool>());
}

TEST(Cli, SampleWritesSvg) {
    auto svg = scratch() / "ace.svg";
    auto r = run("sample @ace --seed 42 --svg " + svg.string());
    ASSERT_EQ(r.status, 0);
    auto j = json::parse(r.out);
    EXPECT_TRUE(j["flags"]["isGeneric"].get<bool>());
    std::ifstream in(svg);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t polys = 0;
    for (auto pos = text.find("<polygon"); pos != std::string::npos; pos = text.find("<polygon", pos + 1)) ++polys;
    EXPECT_EQ(polys, 3u + 3u); // living A, C, E and three constraints
    // deterministic given the seed
    EXPECT_EQ(run("sample @ace --seed 42").out, r.out);
}

TEST(Cli, ColorFindsRainbow) {
    auto j = json::parse(run("color @diag2 --seed 5").out);
    EXPECT_FALSE(j["rainbow"].get<std::string>().empty());
    EXPECT_EQ(j["rainbowCount"].get<int>() % 2, 1);
    EXPECT_LT(j["rainbowAreaValuation"].get<int>(), 0);
    EXPECT_EQ(j["colors"]["p"], "C");
    EXPECT_EQ(j["colors"]["q"], "A");
    EXPECT_EQ(j["colors"]["r"], "A");
    EXPECT_EQ(j["colors"]["s"], "B");
    EXPECT_EQ(run("color @ace --seed 5").status, 1);
}

TEST(Cli, CorpusAndDiagonal) {
    auto r = run("corpus list");
    EXPECT_EQ(r.status, 0);
    for (const auto &n : {"diag1", "diag2", "ace", "be-merged", "be-split", "trianglicide"})
        EXPECT_NE(r.out.find(n), std::string::npos) << n;
    auto emitted = run("corpus emit ace").out;
    EXPECT_EQ(emitted, monsky::io::serialize(monsky::corpus::ace()));
    auto path = write("ace-emitted.json", emitted);
    EXPECT_EQ(json::parse(run("areapoly " + path.string()).out)["p"], "A^2 - 2*A*C + 2*A*E + C^2 + 2*C*E + E^2");
    auto d3 = run("diagonal 3");
    EXPECT_EQ(d3.status, 0);
    EXPECT_EQ(json::parse(d3.out)["triangles"].size(), 8u);
    EXPECT_EQ(run("corpus emit nope").status, 1);
}

TEST(Cli, DissectionInput) {
    auto j = json::parse(run("areapoly @be-classical").out);
    EXPECT_EQ(j["p"], "A - C + D - F");
    auto v = json::parse(run("validate @bottom-midpoint").out);
    EXPECT_TRUE(v["ok"].get<bool>());
}
