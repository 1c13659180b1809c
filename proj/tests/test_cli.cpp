#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(BEUKERS_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

} // namespace

TEST(Cli, EvalExamples)
{
    auto r = run("eval -m 3 -a 0,0");
    ASSERT_EQ(r.status, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["terms"], json::parse(R"({"5":"4"})"));
    EXPECT_EQ(j["constant"], "0");
    EXPECT_NEAR(j["value"].get<double>(), 4.1477110, 1e-7);

    r = run("eval -m 1 -a 0,0,1");
    j = json::parse(r.out);
    EXPECT_EQ(j["terms"], json::parse(R"({"3":"2"})"));
    EXPECT_EQ(j["constant"], "-1");
    EXPECT_NEAR(j["value"].get<double>(), 1.4041138, 1e-7);

    r = run("eval -m 0 -a 0,1,2");
    j = json::parse(r.out);
    EXPECT_EQ(j["constant"], "1/4");
    EXPECT_TRUE(j["terms"].empty());
    EXPECT_EQ(j["value"].get<double>(), 0.25);
}

TEST(Cli, EvalDivergentIsAnError)
{
    EXPECT_EQ(run("eval -m 0 -a 3").status, 2);
}

TEST(Cli, PfdExamples)
{
    auto j = json::parse(run("pfd 0^2,1").out);
    EXPECT_EQ(j["mu"], json::parse(R"([["-1","1"],["1"]])"));
    j = json::parse(run("pfd 0,1").out);
    EXPECT_EQ(j["lambda"], json::parse(R"(["1","-1"])"));
    j = json::parse(run("pfd 0,0").out);
    EXPECT_EQ(j["points"], json::parse("[0]"));
    EXPECT_EQ(j["multiplicities"], json::parse("[2]"));
    EXPECT_EQ(j["mu"], json::parse(R"([["0","1"]])"));
}

TEST(Cli, ParseErrorExitCode)
{
    EXPECT_EQ(run("pfd 0^x").status, 2);
    EXPECT_EQ(run("eval -m 1 -a 1,,2").status, 2);
}

TEST(Cli, DenomCheck)
{
    const auto r = run("denom-check -m 1 -a 1,3");
    ASSERT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["q"], "72");
    EXPECT_EQ(j["bound"], "72");
    EXPECT_EQ(j["divides"], true);
}

TEST(Cli, TableRows)
{
    const auto r = run("zeta5-table -n 10");
    ASSERT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    ASSERT_EQ(j.size(), 10u);
    EXPECT_EQ(j[0]["lower"].get<double>(), 0.375);
    EXPECT_EQ(j[0]["J3"].get<double>(), 4.4313);
    EXPECT_EQ(j[0]["upper"].get<double>(), 26.3189);
    EXPECT_EQ(j[0]["A"], "120");
    EXPECT_EQ(j[0]["B"], "-120");
    EXPECT_EQ(j[1]["J3"].get<double>(), 0.9474);
    EXPECT_EQ(j[9]["lower"].get<double>(), 0.0004);
    EXPECT_EQ(j[9]["J3"].get<double>(), 0.0058);
    EXPECT_EQ(j[9]["upper"].get<double>(), 0.5371);
}

TEST(Cli, TableCsvMatchesJson)
{
    const auto j = json::parse(run("zeta5-table -n 6 --precision 1e-8").out);
    std::istringstream csv(run("--format csv zeta5-table -n 6 --precision 1e-8").out);
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "n,lower,J3,upper,A,B,d,scaled");
    for (std::size_t i = 0; std::getline(csv, line); ++i) {
        std::vector<std::string> c;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) c.push_back(cell);
        ASSERT_EQ(c.size(), 8u);
        EXPECT_EQ(std::stod(c[2]), j[i]["J3"].get<double>());
        EXPECT_EQ(c[4], j[i]["A"].get<std::string>());
        EXPECT_EQ(std::stod(c[7]), j[i]["scaled"].get<double>());
    }
}

TEST(Cli, PrecisionWidensOutput)
{
    const auto j = json::parse(run("zeta5-table -n 1 --precision 1e-9").out);
    EXPECT_NEAR(j[0]["J3"].get<double>(), 4.4313306, 1e-7);
    EXPECT_NE(j[0]["J3"].get<double>(), 4.4313);
}

TEST(Cli, BoundsText)
{
    const auto r = run("--format text bounds -n 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("lower: 0.0234"), std::string::npos);
    EXPECT_NE(r.out.find("upper: 4.8341"), std::string::npos);
}

TEST(Cli, VerifyPassesAndFaultFails)
{
    auto r = run("verify --max-m 1 --max-n 2 --max-a 2");
    EXPECT_EQ(r.status, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["failures"], 0);

    r = run("verify --max-m 1 --max-n 2 --max-a 2 --inject-fault mu-sign");
    EXPECT_NE(r.status, 0);
    j = json::parse(r.out);
    EXPECT_EQ(j["ok"], false);
    EXPECT_GT(j["failures"].get<int>(), 0);

    EXPECT_EQ(run("verify --inject-fault bogus").status, 2);
}

TEST(Cli, VerifyWideGrid)
{
    const auto r = run("verify --max-m 3 --max-n 4 --max-a 5");
    EXPECT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["ok"], true);
    for (const auto& c : j["checks"]) EXPECT_GT(c["passed"].get<int>(), 0) << c["name"];
}

TEST(Cli, McIsReproducible)
{
    const auto a = run("mc-r2 -n 1 --samples 100000 --seed 9");
    const auto b = run("mc-r2 -n 1 --samples 100000 --seed 9");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = json::parse(a.out);
    EXPECT_NEAR(j["target"].get<double>(), 0.73856, 5e-6);
    EXPECT_EQ(j["samples"], 100000);
}

TEST(Cli, UsageErrors)
{
    EXPECT_NE(run("").status, 0);
    EXPECT_NE(run("eval -m 1").status, 0);
    EXPECT_NE(run("--format xml eval -m 1 -a 0").status, 0);
    EXPECT_NE(run("--precision -1 eval -m 1 -a 0").status, 0);
}
