// Copyright 2026 The Holder Arcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "holder/arc_io.hpp"
#include "holder/cli.hpp"
#include "holder/spiral.hpp"

namespace holder {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    Outcome o;
    o.code = cli::run(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string first_line(const fs::path& p)
{
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    return line;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path()
               / ("holder_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        std::ofstream seg(path("seg.json"));
        seg << R"({"t": [0, 0.5, 1], "x": [0, 0.5, 1], "y": [0, 0, 0]})";
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(Cli, BoundsReportsBothExponents)
{
    const auto o = run({"bounds", "--p", "0.6", "--q", "0.6", "--r", "0.5", "--se", "0.5"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto doc = o.doc();
    EXPECT_NEAR(doc["bound_43"].get<double>(), 5.0 / 6.0, 1e-12);
    EXPECT_NEAR(doc["bound_42"].get<double>(), 11.0 / 12.0, 1e-12);
    EXPECT_EQ(doc["tightest"], "bound_43");
    EXPECT_NE(o.err.find("tightest"), std::string::npos);
}

TEST_F(Cli, VariationOfUnitSegment)
{
    const auto o = run({"variation", "--s", "2", "--arc", path("seg.json"), "--profile-out", path("prof.csv")});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.doc()["value"].get<double>(), 1.0);
    EXPECT_EQ(first_line(path("prof.csv")), "i,t,V");
}

TEST_F(Cli, ClassifyConverges)
{
    const auto o = run({"classify", "--kind", "poly", "--p", "0.5", "--s", "3"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.doc()["verdict"], "converges");
}

TEST_F(Cli, EveryOutputCarriesConfigAndVersion)
{
    const auto o = run({"--seed", "7", "variation", "--s", "2", "--arc", path("seg.json")});
    const auto doc = o.doc();
    EXPECT_EQ(doc["version"], cli::version);
    EXPECT_EQ(doc["config"]["command"], "variation");
    EXPECT_EQ(doc["config"]["seed"], 7);
    EXPECT_EQ(doc["config"]["tolerances"]["sandwich_slack"], 0.05);
}

TEST_F(Cli, OutputIsDeterministic)
{
    const std::vector<std::string> args = {"gen", "--p", "0.5", "--turns", "4", "--samples-per-turn", "32",
                                           "--out", path("a.json")};
    const auto first = run(args);
    const auto arc1 = read_file(path("a.json"));
    const auto second = run(args);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(arc1, read_file(path("a.json")));

    const std::vector<std::string> est = {"holder-est", "--src", path("a.json"), "--dst", path("a.json"),
                                          "--max-pairs", "500"};
    EXPECT_EQ(run(est).out, run(est).out);
}

TEST_F(Cli, SpiralPipeline)
{
    ASSERT_EQ(run({"gen", "--p", "0.5", "--turns", "6", "--samples-per-turn", "64", "--out", path("s.json"),
                   "--rings-out", path("rings.csv"), "--validate"})
                  .code,
              0);
    EXPECT_EQ(first_line(path("rings.csv")), "j,phi_j,length_j,diam_j");

    auto o = run({"param", "--s", "3", "--arc", path("s.json"), "--out", path("u.csv")});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_TRUE(o.doc()["certificate"]["ok"].get<bool>());
    EXPECT_TRUE(o.doc()["meets_ratio_floor"].get<bool>());
    EXPECT_EQ(first_line(path("u.csv")), "u,x,y");

    o = run({"seminorm", "--alpha", "0.3333333333333333", "--arc", path("u.csv")});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_GT(o.doc()["seminorm"].get<double>(), 0.0);

    o = run({"rings", "--s", "3", "--arc", path("s.json"), "--rings-out", path("rv.csv")});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_TRUE(o.doc()["lower_ok"].get<bool>());
    EXPECT_EQ(first_line(path("rv.csv")), "j,phi_j,length_j,diam_j,V_j");

    o = run({"stretch", "--beta", "0.5", "--arc", path("s.json"), "--out", path("t.json")});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(io::read_arc(path("t.json")).size(), 6u * 64u + 1u);

    o = run({"holder-est", "--src", path("s.json"), "--dst", path("t.json"), "--alpha-step", "0.05"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.doc()["alphas"].size(), 20u);
}

TEST_F(Cli, GrowthWritesCsv)
{
    const auto o = run({"growth", "--s", "1", "--p", "0.5", "--Jlist", "10,20,40", "--samples-per-turn", "16",
                        "--out", path("g.csv")});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.doc()["values"].size(), 3u);
    EXPECT_EQ(first_line(path("g.csv")), "J,value");
    EXPECT_EQ(run({"growth", "--s", "1", "--Jlist", "10,x,40"}).code, 2);
    EXPECT_EQ(run({"growth", "--s", "1", "--Jlist", "10,20"}).code, 1);
}

TEST_F(Cli, TabulatedSpiralFromTable)
{
    std::ofstream table(path("phi.csv"));
    table << std::setprecision(17) << "t,phi\n";
    for (int n = 1; n <= 41; ++n) {
        table << two_pi * n << ',' << 1.0 / n << '\n';
    }
    table.close();
    const auto o = run({"classify", "--kind", "tab", "--table", path("phi.csv"), "--turns", "40", "--s", "1.5"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.doc()["verdict"], "converges");
    EXPECT_TRUE(o.doc()["empirical"].get<bool>());
    EXPECT_EQ(run({"gen", "--kind", "tab", "--turns", "3", "--out", path("x.json")}).code, 2);
}

TEST_F(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"variation", "--s", "2", "--arc", path("seg.json"), "--frobnicate"}).code, 2);
    EXPECT_EQ(run({"variation", "--arc", path("seg.json")}).code, 2);
    EXPECT_EQ(run({"gen", "--kind", "spline", "--out", path("x.json")}).code, 2);
    EXPECT_EQ(run({"--rel-eps", "0", "bounds", "--p", "1", "--q", "1", "--r", "1", "--se", "1"}).code, 2);
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("variation"), std::string::npos);
}

TEST_F(Cli, AnalysisErrorsExitOne)
{
    std::ofstream bad(path("bad.csv"));
    bad << "t,x,y\n0,0,0\n1,oops,0\n";
    bad.close();
    const auto parse = run({"variation", "--s", "2", "--arc", path("bad.csv")});
    EXPECT_EQ(parse.code, 1);
    EXPECT_NE(parse.err.find("line 3"), std::string::npos) << parse.err;
    EXPECT_NE(parse.err.find("\"x\""), std::string::npos) << parse.err;

    EXPECT_EQ(run({"variation", "--s", "0.5", "--arc", path("seg.json")}).code, 1);
    EXPECT_EQ(run({"bounds", "--p", "1", "--q", "0.5", "--r", "0.5", "--se", "0.5"}).code, 1);
    EXPECT_EQ(run({"classify", "--p", "0.5", "--s", "1"}).code, 1);

    ASSERT_EQ(run({"gen", "--p", "0.5", "--turns", "120", "--samples-per-turn", "256", "--out", path("big.csv")})
                  .code,
              0);
    const auto cap = run({"variation", "--s", "2", "--arc", path("big.csv")});
    EXPECT_EQ(cap.code, 1);
    EXPECT_NE(cap.err.find("cap"), std::string::npos);
}

TEST_F(Cli, ConfigFileAndOverrides)
{
    std::ofstream cfg(path("c.ini"));
    cfg << "seed=11\n[variation]\ns=1\n";
    cfg.close();
    auto o = run({"--config", path("c.ini"), "variation", "--arc", path("seg.json")});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.doc()["s"], 1.0);
    EXPECT_EQ(o.doc()["config"]["seed"], 11);
    o = run({"--config", path("c.ini"), "--seed", "12", "variation", "--arc", path("seg.json"), "--s", "2"});
    EXPECT_EQ(o.doc()["s"], 2.0);
    EXPECT_EQ(o.doc()["config"]["seed"], 12);
}

TEST_F(Cli, JobsFromEnvironment)
{
    ::setenv("HOLDER_JOBS", "3", 1);
    const auto env = run({"variation", "--s", "2", "--arc", path("seg.json")});
    const auto flag = run({"--jobs", "2", "variation", "--s", "2", "--arc", path("seg.json")});
    ::unsetenv("HOLDER_JOBS");
    EXPECT_EQ(env.doc()["config"]["jobs"], 3);
    EXPECT_EQ(flag.doc()["config"]["jobs"], 2);
}

TEST_F(Cli, ReportWritesSummary)
{
    const auto o = run({"report", "--out", path("report.json")});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto doc = json::parse(read_file(path("report.json")));
    EXPECT_EQ(doc["bounds"].size(), 3u);
    EXPECT_LT(doc["stretch"]["max_relative_deviation"].get<double>(), 1e-12);
    EXPECT_NEAR(doc["holder_estimate"]["forward_best_alpha"].get<double>(), 0.5, 0.05);
    EXPECT_EQ(doc["classify"][0]["verdict"], "diverges");
    EXPECT_EQ(doc["classify"][1]["verdict"], "converges");
    EXPECT_TRUE(doc["sandwich"]["lower_ok"].get<bool>());
}

} // namespace
} // namespace holder
