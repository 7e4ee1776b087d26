#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome invoke(const std::string& args) {
    const std::string cmd = std::string(GQD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("gqd_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

double value_of(const std::string& out, const std::string& name) {
    std::smatch m;
    const std::regex re("(^|\\n)" + name + " = ([-+0-9.eE]+)");
    if (!std::regex_search(out, m, re)) return -1.0;
    return std::stod(m[2]);
}

const char* kMixedDm4 =
    "DM4\n0.25 0\n0 0\n0 0\n0 0\n0 0\n0.25 0\n0 0\n0 0\n0 0\n0 0\n0.25 0\n0 0\n0 0\n0 0\n0 0\n0.25 0\n";

}  // namespace

TEST_F(Cli, ComputeBellAnalytic) {
    const auto f = write("bell.x", "X\n0.5 0 0 0.5\n0.5 0 0 0\n");
    const Outcome r = invoke("compute " + f + " --measure both --method analytic");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(value_of(r.out, "gd"), 0.5);
    EXPECT_EQ(value_of(r.out, "ggqd"), 0.5);
    EXPECT_NE(r.out.find("case: Case1"), std::string::npos) << r.out;
}

TEST_F(Cli, ComputeMaximallyMixedAnyMethod) {
    const auto f = write("mixed.dm4", kMixedDm4);
    for (const char* method : {"analytic", "numeric", "brute"}) {
        const Outcome r = invoke("compute " + f + " --method " + method);
        EXPECT_EQ(r.code, 0) << r.out;
        EXPECT_NEAR(value_of(r.out, "gd"), 0.0, 1e-15) << method;
        EXPECT_NEAR(value_of(r.out, "ggqd"), 0.0, 1e-15) << method;
    }
}

TEST_F(Cli, BruteAgreesWithAnalytic) {
    const auto f = write("ref.x", "X\n0.35 0.3 0.2 0.15\n0.1 0 0.05 0\n");
    const Outcome a = invoke("compute " + f + " --method analytic");
    const Outcome b = invoke("compute " + f + " --method brute");
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    EXPECT_NEAR(value_of(a.out, "ggqd"), 0.025, 1e-12);
    EXPECT_NEAR(value_of(b.out, "ggqd"), value_of(a.out, "ggqd"), 1e-4);
    EXPECT_NEAR(value_of(b.out, "gd"), value_of(a.out, "gd"), 1e-4);
    EXPECT_NE(b.out.find("method=brute_force"), std::string::npos);
}

TEST_F(Cli, ComputeSingleMeasure) {
    const auto f = write("ref.x", "X\n0.35 0.3 0.2 0.15\n0.1 0 0.05 0\n");
    const Outcome r = invoke("compute " + f + " --measure gd");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("gd = "), std::string::npos);
    EXPECT_EQ(r.out.find("ggqd = "), std::string::npos);
}

TEST_F(Cli, ParseErrorExitsWithTwoAndLocation) {
    const auto f = write("bad.x", "X\n0.25 0.25 oops 0.25\n0 0 0 0\n");
    const Outcome r = invoke("compute " + f);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("line 2, column 11"), std::string::npos) << r.out;
}

TEST_F(Cli, ValidationFailureExitsWithThree) {
    const auto f = write("notpsd.x", "X\n0.25 0.25 0.25 0.25\n0.4 0 0 0\n");
    const Outcome r = invoke("compute " + f);
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("NotPSD"), std::string::npos) << r.out;
}

TEST_F(Cli, UnknownFlagsAndBadChoicesAreErrors) {
    const auto f = write("mixed.dm4", kMixedDm4);
    EXPECT_EQ(invoke("compute " + f + " --frobnicate").code, 2);
    EXPECT_EQ(invoke("compute " + f + " --method magic").code, 2);
    EXPECT_EQ(invoke("").code, 2);
    EXPECT_EQ(invoke("--help").code, 0);
}

TEST_F(Cli, SweepWritesDeterministicCsv) {
    const Outcome a = invoke("sweep --example ex4 --range 0:2:101 --out " + path("a.csv"));
    const Outcome b = invoke("sweep --example ex4 --range 0:2:101 --out " + path("b.csv"));
    ASSERT_EQ(a.code, 0) << a.out;
    ASSERT_EQ(b.code, 0) << b.out;
    const std::string csv = slurp(path("a.csv"));
    EXPECT_EQ(csv, slurp(path("b.csv")));
    EXPECT_EQ(csv.substr(0, 14), "param,gd,ggqd\n");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 102);
    EXPECT_NE(csv.find("\n0,0.5,0.5\n"), std::string::npos);
}

TEST_F(Cli, SweepExample5UsesDefaultAlpha) {
    const Outcome r = invoke("sweep --example ex5 --range 0:5:501");
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.starts_with("param,gd,ggqd\n0,0.0198,0.0198\n")) << r.out.substr(0, 80);
    const Outcome s = invoke("sweep --example ex5 --range 0:5:3 --alpha 0.5");
    ASSERT_EQ(s.code, 0);
    // alpha = 0.5 starts from a pure state with gd = ggqd = 2 alpha^2 beta^2.
    const std::string row = s.out.substr(14, s.out.find('\n', 14) - 14);
    const auto comma = row.find(',');
    EXPECT_NEAR(std::stod(row.substr(comma + 1)), 0.375, 1e-15) << row;
    EXPECT_NEAR(std::stod(row.substr(row.rfind(',') + 1)), 0.375, 1e-15) << row;
}

TEST_F(Cli, SweepErrors) {
    EXPECT_EQ(invoke("sweep --example ex3 --range 0:1").code, 2);
    EXPECT_EQ(invoke("sweep --example ex3 --range 0:1:1").code, 2);
    EXPECT_EQ(invoke("sweep --example ex9 --range 0:1:5").code, 2);
    EXPECT_EQ(invoke("sweep --example ex1 --range -1:1:5").code, 2);
    EXPECT_EQ(invoke("sweep --example ex3 --range 0:1:5 --out " + path("missing/dir/out.csv")).code, 4);
}

TEST_F(Cli, VerifySingleTrialPasses) {
    const Outcome r = invoke("verify --trials 1 --seed 42 --tol 1e-4 --out " + path("report.txt"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
    EXPECT_EQ(slurp(path("report.txt")), r.out);
}

TEST_F(Cli, VerifyFailureExitsWithOne) {
    const Outcome r = invoke("verify --trials 3 --seed 1 --tol 1e-15");
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("failing "), std::string::npos);
    EXPECT_EQ(invoke("verify --trials 0").code, 2);
    EXPECT_EQ(invoke("verify --tol -1").code, 2);
}
