#include "cli.hpp"

#include <trisect/emit.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace trisect::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

double parse(const std::string& s) {
    double v = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("trisect_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};

TEST_F(CliTest, TrisectNinety) {
    const auto r = run_cli({"trisect", "--angle-deg", "90", "--fold", "1"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["theta_deg"].get<double>(), 30.0, 1e-12);
    EXPECT_NEAR(j["b_star"].get<double>(), 1.7320508075688772, 1e-15);
    EXPECT_NEAR(j["unit_length"].get<double>(), 2.0, 1e-15);
    EXPECT_NEAR(j["n_point"]["x"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(j["n_point"]["y"].get<double>(), 2.0, 1e-12);
    EXPECT_NEAR(j["sin_theta_normalized"].get<double>(), 0.5, 1e-15);
    EXPECT_TRUE(j["verification"]["passed"].get<bool>());
    for (const char* key : {"three_theta_deg", "iterations", "angle_residual_rad"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST_F(CliTest, TrisectSixty) {
    const auto r = run_cli({"trisect", "--angle-deg", "60", "--fold", "1"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_NEAR(nlohmann::json::parse(r.out)["theta_deg"].get<double>(), 20.0, 1e-10);
}

TEST_F(CliTest, TrisectTextFormat) {
    const auto r = run_cli({"trisect", "--angle-deg", "45", "--format", "text"});
    ASSERT_EQ(r.code, kOk);
    const auto pos = r.out.find("\ntheta_deg: ");
    ASSERT_NE(pos, std::string::npos) << r.out;
    EXPECT_NEAR(std::stod(r.out.substr(pos + 12)), 15.0, 1e-9);
    EXPECT_NE(r.out.find("check jn_minus_2a: "), std::string::npos);
}

TEST_F(CliTest, TrisectExitCodes) {
    EXPECT_EQ(run_cli({"trisect", "--angle-deg", "120", "--fold", "1"}).code, kDomainError);
    EXPECT_EQ(run_cli({"trisect", "--angle-deg", "0"}).code, kDomainError);
    EXPECT_EQ(run_cli({"trisect", "--angle-deg", "450"}).code, kDomainError);
    EXPECT_EQ(run_cli({"trisect"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"trisect", "--angle-deg", "abc"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"trisect", "--angle-deg", "40", "--fold", "-1"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"trisect", "--angle-deg", "40", "--tol", "0"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"trisect", "--angle-deg", "40", "--format", "svg"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"trisect", "--angle-deg", "38", "--tol", "1e-20"}).code, kConvergenceError);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kBadArguments);
    EXPECT_EQ(run_cli({}).code, kBadArguments);
    EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST_F(CliTest, LocusCsv) {
    const auto path = dir_ / "locus.csv";
    const auto r = run_cli({"locus", "--fold", "1", "--b-min", "1.7320508075688772", "--b-max", "10", "--samples",
                            "3", "--output", path.string()});
    ASSERT_EQ(r.code, kOk) << r.err;
    std::istringstream in(slurp(path));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, kLocusCsvHeader);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream fields(line);
        std::string f;
        while (std::getline(fields, f, ',')) {
            row.push_back(parse(f));
        }
        ASSERT_EQ(row.size(), 8u);
        rows.push_back(row);
    }
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_NEAR(rows[0][1], 0.0, 1e-12);
    EXPECT_NEAR(rows[0][2], 2.0, 1e-12);
    for (const auto& row : rows) {
        EXPECT_NEAR(row[3], 3.0 * row[4], 1e-9);
    }
    EXPECT_LT(rows[0][0], rows[1][0]);
    EXPECT_LT(rows[1][0], rows[2][0]);
}

TEST_F(CliTest, LocusErrors) {
    EXPECT_EQ(run_cli({"locus", "--samples", "1"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"locus", "--b-min", "1.0"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"locus", "--b-min", "5", "--b-max", "4"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"locus", "--format", "json"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"locus", "--output", (dir_ / "missing" / "x.csv").string()}).code, kIoError);
}

TEST_F(CliTest, LocusDeterministic) {
    const auto p1 = dir_ / "a.csv";
    const auto p2 = dir_ / "b.csv";
    ASSERT_EQ(run_cli({"locus", "--fold", "0.7", "--samples", "500", "--output", p1.string()}).code, kOk);
    ASSERT_EQ(run_cli({"locus", "--fold", "0.7", "--samples", "500", "--output", p2.string()}).code, kOk);
    EXPECT_EQ(slurp(p1), slurp(p2));
    EXPECT_FALSE(slurp(p1).empty());
}

TEST_F(CliTest, RenderStructureAndDeterminism) {
    const auto p1 = dir_ / "a.svg";
    const auto p2 = dir_ / "b.svg";
    ASSERT_EQ(run_cli({"render", "--angle-deg", "75", "--fold", "1", "--output", p1.string()}).code, kOk);
    ASSERT_EQ(run_cli({"render", "--angle-deg", "75", "--fold", "1", "--output", p2.string()}).code, kOk);
    const std::string svg = slurp(p1);
    EXPECT_EQ(svg, slurp(p2));

    auto count = [&](const std::string& s, const std::string& needle) {
        std::size_t n = 0;
        for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
        return n;
    };
    EXPECT_EQ(count(svg, "<circle"), 2u);
    EXPECT_EQ(count(svg, "<polyline"), 1u);
    EXPECT_EQ(count(svg, ">N</text>"), 1u);

    const auto plain = run_cli({"render", "--fold", "1"});
    ASSERT_EQ(plain.code, kOk);
    EXPECT_EQ(count(plain.out, ">N</text>"), 0u);
    EXPECT_EQ(count(plain.out, "<circle"), 2u);
}

TEST_F(CliTest, RenderErrors) {
    EXPECT_EQ(run_cli({"render", "--angle-deg", "100"}).code, kDomainError);
    EXPECT_EQ(run_cli({"render", "--width", "10"}).code, kBadArguments);
    EXPECT_EQ(run_cli({"render", "--output", (dir_ / "no" / "x.svg").string()}).code, kIoError);
}

TEST_F(CliTest, OrigamiJson) {
    const auto r = run_cli({"origami", "--angle-deg", "30"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["angles_deg"]["alpha"].get<double>(), 10.0, 1e-10);
    EXPECT_NEAR(j["points"]["S"]["y"].get<double>(), 0.17364817766693035, 1e-12);
    EXPECT_TRUE(j["verification"]["passed"].get<bool>());
    EXPECT_EQ(run_cli({"origami", "--angle-deg", "90"}).code, kDomainError);
    EXPECT_EQ(run_cli({"origami", "--angle-deg", "30", "--format", "text"}).code, kOk);
}

TEST_F(CliTest, VerifyDefaultSweepPasses) {
    const auto r = run_cli({"verify", "--tol", "1e-10"});
    EXPECT_EQ(r.code, kOk) << r.out << r.err;
    EXPECT_NE(r.out.find("angles checked: 90"), std::string::npos);
    EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}

TEST_F(CliTest, VerifyDefaultToleranceAndJson) {
    const auto r = run_cli({"verify", "--format", "json"});
    ASSERT_EQ(r.code, kOk) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["angles_checked"].get<int>(), 90);
    EXPECT_LE(j["worst"]["locus_minus_oracle_rad"].get<double>(), 1e-12);
}

TEST_F(CliTest, VerifyBelowFloatingFloorFails) {
    const auto r = run_cli({"verify", "--tol", "1e-16"});
    EXPECT_EQ(r.code, kVerificationFailed);
    EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifySingleAngle) {
    EXPECT_EQ(run_cli({"verify", "--angle-deg", "90", "--fold", "0.5"}).code, kOk);
    EXPECT_EQ(run_cli({"verify", "--angle-deg", "95"}).code, kDomainError);
}

}  // namespace
}  // namespace trisect::cli
