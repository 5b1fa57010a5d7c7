#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "weylchar/serialize.hpp"

using namespace weylchar;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "weylchar");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Dimension) {
    const auto r = run_cli({"--no-cache", "dimension", "F4", "0", "0", "0", "1"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "26\n");
    EXPECT_EQ(run_cli({"--no-cache", "dimension", "F4", "0,1,0,0"}).out, "1274\n");
}

TEST(Cli, DimensionJson) {
    const auto r = run_cli({"--no-cache", "--format", "json", "dimension", "G2", "1", "0"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j.at("dim"), 7);
    EXPECT_EQ(j.at("hw"), Json::array({1, 0}));
}

TEST(Cli, CharacterText) {
    const auto r = run_cli({"--no-cache", "character", "A1", "3"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("dimension 4"), std::string::npos);
    EXPECT_NE(r.out.find("u1^3 + u1^2 + u1 + 1"), std::string::npos);
}

TEST(Cli, CharacterSpecialized) {
    const auto r = run_cli({"--no-cache", "--format", "json", "character", "F4", "1,0,0,0", "--spec", "x,x,y,y"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j.at("dim"), 52);
    EXPECT_EQ(j.at("specialized").at("names"), Json::array({"x", "y"}));
    EXPECT_EQ(evaluate_at_one(laurent_from_json(j.at("specialized").at("poly"))), 52);
}

TEST(Cli, Tensor) {
    const auto r = run_cli({"--no-cache", "tensor", "A2", "1,0", "0,1"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("= 3 x 3 = 9"), std::string::npos);
    EXPECT_NE(r.out.find("V([1,1])"), std::string::npos);
    EXPECT_NE(r.out.find("2 constituents"), std::string::npos);
    const auto j = Json::parse(run_cli({"--no-cache", "--format", "json", "tensor", "A2", "1,1", "1,1"}).out);
    EXPECT_EQ(j.at("dim_check"), 64);
    EXPECT_EQ(j.at("rhs").size(), 5u);
}

TEST(Cli, TablesMatchPublishedOrder) {
    const auto r = run_cli({"--no-cache", "tables", "F4", "--match-paper", "f4"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("rows per table: 24 96 96 24; tuples: 1152"), std::string::npos);
    EXPECT_NE(r.out.find("       1  {1,1,1,1}  +1\n"), std::string::npos);
    EXPECT_NE(r.out.find("       2  {1,1,1,2}  -1\n"), std::string::npos);
    EXPECT_EQ(run_cli({"--no-cache", "tables", "B2", "--match-paper", "f4"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"--no-cache", "tables", "F4", "--match-paper", "e8"}).code, cli::kExitUsage);
}

TEST(Cli, TablesJson) {
    const auto r = run_cli({"--no-cache", "--format", "json", "tables", "G2"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const auto s = gamma_system_from_json(Json::parse(r.out));
    EXPECT_EQ(s.order(), 12u);
}

TEST(Cli, VerifyGeneric) {
    const auto r = run_cli({"--no-cache", "verify", "B2"});
    EXPECT_EQ(r.code, cli::kExitOk) << r.out;
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"dimension"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"--no-cache", "dimension", "F4", "1", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"--no-cache", "dimension", "F4", "1", "0", "x", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"--no-cache", "dimension", "F4", "-1", "0", "0", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"--no-cache", "dimension", "Q7", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"--format", "xml", "dimension", "A1", "1"}).code, cli::kExitUsage);
    const auto r = run_cli({"--no-cache", "character", "A1", "1", "--spec", "x,y"});
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) {
    const auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("tensor"), std::string::npos);
}

TEST(Cli, CacheDirectoryOptionAndEnvironment) {
    const auto dir = std::filesystem::temp_directory_path() / "weylchar_cli_cache";
    std::filesystem::remove_all(dir);
    EXPECT_EQ(run_cli({"--cache-dir", dir.string(), "dimension", "B3", "1", "0", "0"}).out, "7\n");
    EXPECT_FALSE(std::filesystem::is_empty(dir));
    std::filesystem::remove_all(dir);

    const auto env_dir = std::filesystem::temp_directory_path() / "weylchar_cli_env_cache";
    std::filesystem::remove_all(env_dir);
    ::setenv("WEYLCHAR_CACHE", env_dir.c_str(), 1);
    EXPECT_EQ(run_cli({"dimension", "C3", "1", "0", "0"}).out, "6\n");
    ::unsetenv("WEYLCHAR_CACHE");
    EXPECT_TRUE(std::filesystem::exists(env_dir));
    EXPECT_FALSE(std::filesystem::is_empty(env_dir));
    std::filesystem::remove_all(env_dir);
}
