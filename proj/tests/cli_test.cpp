#include "support.hpp"

#include "cli/app.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace sturm;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(STURM_GOLDEN_DIR) + "/" + name, std::ios::binary);
    EXPECT_TRUE(in) << name;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct GoldenCase {
    std::string file;
    std::vector<std::string> args;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, ByteEqualAcrossRuns) {
    const auto& c = GetParam();
    const Result first = run(c.args);
    const Result second = run(c.args);
    ASSERT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, golden(c.file));
    EXPECT_EQ(first.out, second.out);
}

std::vector<GoldenCase> golden_cases() {
    std::vector<GoldenCase> cases;
    for (const char* id : {"km", "kmn", "kmi", "lp", "sqrt5dev", "fibperiods"}) {
        cases.push_back({std::string(id) + ".tsv", {"table", id}});
        cases.push_back({std::string(id) + ".json", {"table", id, "--format", "json"}});
    }
    cases.push_back({"norms.tsv", {"table", "norms", "--digits", "2"}});
    cases.push_back({"norms.json", {"table", "norms", "--digits", "2", "--format", "json"}});
    cases.push_back({"kmn_sqrt3.tsv", {"table", "kmn", "--alpha", "[0;|2,1]", "--rho", "0", "--m", "1..10", "--n", "0..100"}});
    cases.push_back({"lagrange_fib.tsv", {"lagrange"}});
    cases.push_back({"lagrange_sqrt3.tsv", {"lagrange", "--alpha", "[0;|2,1]"}});
    cases.push_back({"lagrange_sqrt2.json", {"lagrange", "--alpha", "[0;|2]", "--format", "json"}});
    cases.push_back({"word_fib.txt", {"word", "--len", "100"}});
    cases.push_back({"partition_6.svg", {"svg", "partition", "--m", "6"}});
    cases.push_back({"partition_1.svg", {"svg", "partition", "--m", "1"}});
    return cases;
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden_cases()), [](const auto& info) {
    std::string name = info.param.file;
    for (char& ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    return name;
});

std::vector<std::string> column(const std::string& tsv, std::size_t index) {
    std::vector<std::string> out;
    std::istringstream in(tsv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        for (std::size_t i = 0; i <= index; ++i) std::getline(cells, cell, '\t');
        out.push_back(cell);
    }
    return out;
}

TEST(CliTable, Rows) {
    EXPECT_EQ(column(run({"table", "km", "--alpha", "fib", "--m", "1..21"}).out, 1),
              (std::vector<std::string>{"2", "4", "6", "2", "11", "3", "3", "17", "2", "5", "4", "2", "29", "2", "3", "8", "2", "8", "3", "2", "46"}));
    EXPECT_EQ(column(run({"table", "kmi", "--alpha", "fib", "--m", "10", "--i", "0..9"}).out, 2),
              (std::vector<std::string>{"1", "2", "3", "3", "4", "4", "4", "4", "4", "4"}));
    EXPECT_EQ(column(run({"table", "norms", "--alpha", "fib", "--m", "1..5", "--digits", "2"}).out, 1),
              (std::vector<std::string>{"0.38", "0.24", "0.15", "0.47", "0.09"}));
    EXPECT_EQ(column(run({"table", "lp", "--j", "2..6"}).out, 2), (std::vector<std::string>{"8", "19", "58", "142", "388"}));
}

TEST(CliTable, QuadrupleAndExpansionAreTheSameAngle) {
    EXPECT_EQ(run({"table", "km", "--alpha", "(-1,1,2,5)"}).out, run({"table", "km", "--alpha", "[0;|1]"}).out);
    EXPECT_EQ(run({"table", "km", "--alpha", "(-1,1,2,5)"}).out, run({"table", "km"}).out);
}

TEST(CliWord, PrintsLetters) {
    EXPECT_EQ(run({"word", "--len", "15"}).out, "abaababaabaabab\n");
    EXPECT_EQ(run({"word", "--rho", "0", "--len", "3"}).out, "bab\n");
    EXPECT_EQ(run({"word", "--rho", "0", "--convention", "zero-in-a", "--len", "3"}).out, "aab\n");
    EXPECT_EQ(run({"word", "--start", "9", "--len", "15"}).out, "baababaababaaba\n");
}

TEST(CliLagrange, ReportsExactValue) {
    const Result r = run({"lagrange", "--alpha", "[0;|2,1]"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("exact\t2*sqrt(3)\n"), std::string::npos);
    EXPECT_NE(r.out.find("approx\t3.464102\n"), std::string::npos);
    EXPECT_EQ(run({"lagrange", "--depth", "1"}).code, 2);
}

TEST(CliVerify, Passes) {
    EXPECT_EQ(run({"verify", "km", "--alpha", "fib", "--m", "1..21"}).code, 0);
    EXPECT_EQ(run({"verify", "kmn", "--alpha", "fib", "--m", "3,10", "--n", "0..20"}).code, 0);
    const Result r = run({"verify", "kmn", "--alpha", "[0;|2,1]", "--rho", "0", "--m", "1..10", "--n", "0..100"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "PASS verify kmn: 1010 cells agree\n");
    EXPECT_EQ(run({"verify", "kmi"}).code, 0);
    EXPECT_EQ(run({"verify", "lp"}).code, 0);
    EXPECT_EQ(run({"verify", "fibperiods"}).code, 0);
    EXPECT_EQ(run({"verify", "kmn", "--rho", "-7*alpha", "--convention", "zero-in-a", "--m", "1..8", "--n", "0..40"}).code, 0);
}

TEST(CliVerify, BudgetExceeded) {
    const Result r = run({"verify", "fibperiods", "--j", "3..20", "--budget", "1000000"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("budget exceeded"), std::string::npos);
    EXPECT_NE(r.out.find("partial:"), std::string::npos);
}

TEST(CliVerify, MismatchIsReported) {
    cli::VerifyOptions o{"km", cli::parse_alpha("fib"), {}, Convention::ZeroInB, "", "", "", ""};
    std::ostringstream out, err;
    cli::detail::Sweep sweep(o, out, err);
    EXPECT_TRUE(sweep.agree("(m=1)", "2", "2"));
    EXPECT_FALSE(sweep.agree("(m=2)", "4", "5"));
    EXPECT_EQ(sweep.finish(), cli::VerifyStatus::Mismatch);
    EXPECT_EQ(out.str(), "MISMATCH (m=2): formula=4 oracle=5\npartial: 1 cells agreed before stopping\n");
}

TEST(CliSvg, PartitionStructure) {
    const std::string svg = run({"svg", "partition", "--alpha", "fib", "--m", "6"}).out;
    std::size_t rects = 0;
    for (std::size_t p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1)) ++rects;
    EXPECT_EQ(rects, 7u);
    EXPECT_NE(svg.find("data-index=\"0\" data-left=\"0.000000\" data-right=\"0.145898\" data-factor=\"babaab\""), std::string::npos);
    const std::string one = run({"svg", "partition", "--m", "1"}).out;
    EXPECT_NE(one.find("data-right=\"0.381966\""), std::string::npos);
}

TEST(CliErrors, UsageExitCodeTwo) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"table", "nope"},
             {"table", "km", "--alpha", "(1,1,1,4)"},
             {"table", "km", "--alpha", "[1;|1]"},
             {"table", "km", "--m", "3..1"},
             {"table", "km", "--m", "0"},
             {"table", "km", "--format", "xml"},
             {"table", "lp", "--alpha", "[0;|2]"},
             {"word", "--rho", "1/0"},
             {"word", "--convention", "sideways"},
             {"verify", "nope"},
             {"svg", "partition", "--m", "0"},
             {"svg", "histogram", "--m", "3"},
             {"frobnicate"},
             {}}) {
        const Result r = run(args);
        EXPECT_EQ(r.code, 2) << (args.empty() ? "<none>" : args[0] + " " + (args.size() > 1 ? args[1] : ""));
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(CliParse, Ranges) {
    EXPECT_EQ(cli::parse_range("1..3,7"), (std::vector<long long>{1, 2, 3, 7}));
    EXPECT_EQ(cli::parse_range("3,10"), (std::vector<long long>{3, 10}));
    EXPECT_THROW(cli::parse_range("1..x"), cli::UsageError);
    EXPECT_THROW(cli::parse_range(""), cli::UsageError);
}

TEST(CliParse, Rho) {
    const auto r = cli::parse_rho("1/3-7*alpha");
    EXPECT_EQ(r.u, Rational(1, 3));
    EXPECT_EQ(r.v, -7);
    EXPECT_EQ(cli::parse_rho("alpha").v, 1);
    EXPECT_EQ(cli::parse_rho("0").v, 0);
    EXPECT_THROW(cli::parse_rho("beta"), cli::UsageError);
}

TEST(CliParse, Alpha) {
    EXPECT_TRUE(cli::parse_alpha("fib").fibonacci);
    EXPECT_TRUE(cli::parse_alpha("(-1,1,2,5)").fibonacci);
    EXPECT_EQ(cli::parse_alpha("[0;|2,1]").value, QI(-1, 1, 2, 3));
    EXPECT_EQ(cli::parse_alpha("(-1,1,1,2)").cf.str(), "[0;|2]");
    EXPECT_THROW(cli::parse_alpha("(1,2,3)"), cli::UsageError);
    EXPECT_THROW(cli::parse_alpha("0.5"), cli::UsageError);
}

}  // namespace
