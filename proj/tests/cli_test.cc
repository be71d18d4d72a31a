#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"

namespace fs = std::filesystem;

namespace eutactic::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) {
    return (fs::path(EUTACTIC_DATA_DIR) / name).string();
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

class CliFiles : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("eutactic_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    fs::path dir_;
};

TEST(Cli, VerifyPaper) {
    Result exact = run_cli({"verify-paper"});
    EXPECT_EQ(exact.code, kSuccess) << exact.out << exact.err;
    EXPECT_EQ(exact.out.find("FAIL"), std::string::npos);
    Result flt = run_cli({"--backend", "float", "--tolerance", "1e-10", "verify-paper"});
    EXPECT_EQ(flt.code, kSuccess) << flt.out;
}

TEST(Cli, VerifyPaperCorrupt) {
    Result r = run_cli({"verify-paper", "--corrupt"});
    EXPECT_EQ(r.code, kVerificationFailure);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("recombination"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, kUsageError);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
    EXPECT_EQ(run_cli({"--backend", "complex", "verify-paper"}).code, kUsageError);
    EXPECT_EQ(run_cli({"star", "check", "/nonexistent/file.star"}).code, kUsageError);
    EXPECT_EQ(run_cli({"simulate", "--dim", "3", "--keep", "4", "--messages", "2", "--trials", "1"}).code, kUsageError);
}

TEST(Cli, StarCheck) {
    Result ok = run_cli({"star", "check", data("quadrit_12.star")});
    EXPECT_EQ(ok.code, kSuccess);
    EXPECT_NE(ok.out.find("defect 0"), std::string::npos) << ok.out;
    Result bad = run_cli({"star", "check", data("substar_wx.star")});
    EXPECT_EQ(bad.code, kVerificationFailure);
    EXPECT_NE(bad.out.find("defect_squared 49/256"), std::string::npos) << bad.out;
}

TEST_F(CliFiles, StarDilate) {
    EXPECT_EQ(run_cli({"star", "dilate", data("substar_yz.star"), "--out-prefix", (dir_ / "x").string()}).code,
              kUsageError);
    Result r = run_cli({"star", "dilate", data("quadrit_34.star"), "--out-prefix", (dir_ / "lift").string()});
    EXPECT_EQ(r.code, kSuccess) << r.err;
    EXPECT_NE(r.err.find("float backend"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir_ / "lift.basis"));
    EXPECT_TRUE(fs::exists(dir_ / "lift.projector"));
    Result strict = run_cli({"--backend", "exact", "star", "dilate", data("quadrit_34.star"), "--out-prefix",
                             (dir_ / "strict").string()});
    EXPECT_EQ(strict.code, kUsageError);
}

TEST_F(CliFiles, ShareSplitAndRecombine) {
    Result s = run_cli({"share", "split", data("bit.codebook"), data("halves.split"), "--out-dir", dir_.string()});
    ASSERT_EQ(s.code, kSuccess) << s.err;
    std::string first = slurp(dir_ / "share_1.share");
    std::string second = slurp(dir_ / "share_2.share");
    // Party 1 holds y, z; party 2 holds w, x.
    EXPECT_NE(first.find("fragment 1/4*s2, -1/2, 0, 0"), std::string::npos) << first;
    EXPECT_NE(first.find("fragment -1/4, -1/4*s2, 0, 0"), std::string::npos) << first;
    EXPECT_NE(second.find("fragment 0, 0, -1/4*s2, 1/2*s2"), std::string::npos) << second;
    EXPECT_NE(second.find("fragment 0, 0, -3/4, -1/2"), std::string::npos) << second;

    fs::path recovered = dir_ / "recovered.codebook";
    Result r = run_cli({"share", "recombine", (dir_ / "share_1.share").string(), (dir_ / "share_2.share").string(),
                        "--out", recovered.string()});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    EXPECT_EQ(slurp(recovered), slurp(data("bit.codebook")));

    Result partial = run_cli({"share", "recombine", (dir_ / "share_2.share").string(), "--out",
                              (dir_ / "partial.codebook").string()});
    EXPECT_EQ(partial.code, kVerificationFailure);
}

TEST(Cli, Leakage) {
    Result worst = run_cli({"share", "leakage", data("worst_case.codebook"), data("worst_case.split")});
    EXPECT_EQ(worst.code, kSuccess) << worst.err;
    EXPECT_NE(worst.out.find("DETERMINISTIC"), std::string::npos);
    Result bit = run_cli({"share", "leakage", data("bit.codebook"), data("halves.split")});
    EXPECT_EQ(bit.code, kSuccess);
    EXPECT_NE(bit.out.find("PARTIAL"), std::string::npos);
    EXPECT_EQ(run_cli({"share", "leakage", data("bit.codebook"), data("halves.split"), "--priors", "0.5,0.6"}).code,
              kUsageError);
    Result structured = run_cli({"--format", "structured", "share", "leakage", data("bit.codebook"), data("halves.split")});
    EXPECT_EQ(structured.code, kSuccess);
    EXPECT_EQ(structured.out.front(), '{');
}

TEST_F(CliFiles, Compile) {
    fs::path out = dir_ / "encoder.circuit";
    Result r = run_cli({"compile", data("encoder.matrix"), "--out", out.string()});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    EXPECT_NE(r.out.find("residual"), std::string::npos);
    EXPECT_TRUE(fs::exists(out));
    EXPECT_NE(slurp(out).find("kind circuit"), std::string::npos);
}

TEST(Cli, SimulateDeterministic) {
    std::vector<std::string> args{"--seed", "7", "simulate", "--dim", "4", "--keep", "2", "--messages", "2",
                                  "--trials", "100"};
    Result a = run_cli(args);
    Result b = run_cli(args);
    EXPECT_EQ(a.code, kSuccess);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("100/100"), std::string::npos) << a.out;
    args[1] = "8";
    EXPECT_NE(run_cli(args).out, a.out);
}

}  // namespace
}  // namespace eutactic::cli
