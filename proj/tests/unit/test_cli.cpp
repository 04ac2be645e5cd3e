#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using gme::cli::kExitInvalidArgs;
using gme::cli::kExitIoError;
using gme::cli::kExitOk;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result invoke(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"gme"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for(const auto &a : storage) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Result r;
    r.code = gme::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out  = out.str();
    r.err  = err.str();
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("gme_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST(Cli, NoSubcommandIsInvalid) {
    EXPECT_EQ(invoke({}).code, kExitInvalidArgs);
    EXPECT_EQ(invoke({"frobnicate"}).code, kExitInvalidArgs);
}

TEST(Cli, HelpSucceeds) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("measure"), std::string::npos);
}

TEST(Cli, MeasureGhzJson) {
    const auto r = invoke({"measure", "--ghz", "3", "--json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["gbc"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(doc["gmc"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(doc["ggm"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(doc["fill"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(doc["cardinality"].get<int>(), 3);
    EXPECT_TRUE(doc["per_bipartition"].contains("0|12"));
}

TEST(Cli, MeasureWText) {
    const auto r = invoke({"measure", "--w", "4"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("bipartitions 7"), std::string::npos);
    EXPECT_NE(r.out.find("gbc"), std::string::npos);
    EXPECT_EQ(r.out.find("fill"), std::string::npos);
}

TEST(Cli, MeasureNeedsAState) {
    const auto r = invoke({"measure"});
    EXPECT_EQ(r.code, kExitInvalidArgs);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, MeasureRejectsOutOfRangeArity) {
    EXPECT_EQ(invoke({"measure", "--ghz", "1"}).code, kExitInvalidArgs);
    EXPECT_EQ(invoke({"measure", "--w", "15"}).code, kExitInvalidArgs);
}

TEST_F(CliFiles, MeasureStateFile) {
    const auto file = path("bell.json");
    std::ofstream(file) << R"({"dims":[2,2],"re":[0.7071067811865476,0,0,0.7071067811865476]})";
    const auto r = invoke({"measure", "--state-file", file, "--json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["gbc"].get<double>(), 1.0, 1e-12);
}

TEST_F(CliFiles, MeasureMissingFileIsIoError) {
    const auto r = invoke({"measure", "--state-file", path("absent.json")});
    EXPECT_EQ(r.code, kExitIoError);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST_F(CliFiles, MeasureUnnormalizedIsInvalid) {
    const auto file = path("bad.json");
    std::ofstream(file) << R"({"dims":[2,2],"re":[1,0,0,1]})";
    EXPECT_EQ(invoke({"measure", "--state-file", file}).code, kExitInvalidArgs);
}

TEST_F(CliFiles, SweepWritesCsvAndPlot) {
    const auto csv = path("b.csv");
    const auto gp  = path("b.gp");
    const auto r   = invoke({"sweep", "--family", "b", "--steps", "21", "--out", csv, "--plot", gp});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto text = slurp(csv);
    EXPECT_EQ(text.rfind("family,theta,gbc,gmc,ggm,fill\n", 0), 0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 22);
    EXPECT_NE(slurp(gp).find("b.csv"), std::string::npos);
    EXPECT_NE(r.out.find("peak gbc"), std::string::npos);
}

TEST_F(CliFiles, SweepFamilyAFirstRowIsGhz) {
    const auto csv = path("a.csv");
    ASSERT_EQ(invoke({"sweep", "--family", "a", "--steps", "5", "--out", csv}).code, kExitOk);
    const auto text = slurp(csv);
    const auto first = text.substr(text.find('\n') + 1, text.find('\n', text.find('\n') + 1) - text.find('\n') - 1);
    EXPECT_EQ(first.rfind("a,0,1,1,", 0), 0u) << first;
    EXPECT_EQ(first.substr(first.rfind(',') + 1), "1");
}

TEST_F(CliFiles, SweepFillOnFamilyCIsDiagnosed) {
    const auto r = invoke({"sweep", "--family", "c", "--measures", "gbc,fill", "--out", path("c.csv")});
    EXPECT_EQ(r.code, kExitInvalidArgs);
    EXPECT_NE(r.err.find("three-qubit"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(path("c.csv")));
}

TEST_F(CliFiles, SweepRejectsBadArguments) {
    EXPECT_EQ(invoke({"sweep", "--family", "z", "--out", path("z.csv")}).code, kExitInvalidArgs);
    EXPECT_EQ(invoke({"sweep", "--family", "a", "--steps", "1", "--out", path("z.csv")}).code, kExitInvalidArgs);
    EXPECT_EQ(invoke({"sweep", "--family", "a", "--measures", "entropy", "--out", path("z.csv")}).code, kExitInvalidArgs);
    EXPECT_EQ(invoke({"sweep", "--family", "a"}).code, kExitInvalidArgs);
}

TEST_F(CliFiles, SweepUnwritableOutputIsIoError) {
    const auto r = invoke({"sweep", "--family", "a", "--steps", "5", "--out", path("missing/dir/a.csv")});
    EXPECT_EQ(r.code, kExitIoError);
}

TEST_F(CliFiles, ClosedFormTable) {
    const auto csv = path("cf.csv");
    ASSERT_EQ(invoke({"closed-form", "--n-max", "20", "--out", csv}).code, kExitOk);
    const auto text = slurp(csv);
    EXPECT_EQ(text.rfind("n,gbc_ghz,gbc_w,ratio\n2,1,1,1\n", 0), 0u);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 20);
    EXPECT_EQ(invoke({"closed-form", "--n-max", "65", "--out", csv}).code, kExitInvalidArgs);
}

TEST_F(CliFiles, OrderingWritesFindings) {
    const auto out = path("fig1.json");
    const auto r   = invoke({"ordering", "--family-x", "a", "--family-y", "b", "--x", "fill", "--y", "gbc", "--out", out});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(slurp(out));
    EXPECT_EQ(doc["x"], "fill");
    EXPECT_EQ(doc["y"], "gbc");
    ASSERT_TRUE(doc["findings"].is_array());
    EXPECT_FALSE(doc["findings"].empty());
}

TEST_F(CliFiles, OrderingRejectsNegativeTolerance) {
    EXPECT_EQ(invoke({"ordering", "--match-tol", "-1", "--out", path("o.json")}).code, kExitInvalidArgs);
}
