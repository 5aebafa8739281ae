#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fsb/stern_brocot.hpp"
#include "oracles.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = fsb::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(FSB_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in) << "missing golden file " << name;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(CliFarey, Plain) {
    EXPECT_EQ(run({"farey", "4"}).out, "0/1 1/4 1/3 1/2 2/3 3/4 1/1\n");
    EXPECT_EQ(run({"farey", "1"}).out, "0/1 1/1\n");
    EXPECT_EQ(run({"farey", "3", "--lines"}).out, "0/1\n1/3\n1/2\n2/3\n1/1\n");
}

TEST(CliFarey, Json) {
    const Result r = run({"farey", "5", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[\"0/1\",\"1/5\",\"1/4\",\"1/3\",\"2/5\",\"1/2\",\"3/5\",\"2/3\",\"3/4\",\"4/5\",\"1/1\"]\n");
    // global flag before the subcommand works too
    EXPECT_EQ(run({"--format", "json", "farey", "5"}).out, r.out);
}

TEST(CliFarey, Errors) {
    EXPECT_EQ(run({"farey", "0"}).code, 2);
    EXPECT_EQ(run({"farey", "abc"}).code, 2);
    EXPECT_EQ(run({"farey"}).code, 2);
    EXPECT_EQ(run({"farey", "4", "--format", "dot"}).code, 2);
    const Result big = run({"farey", "100001"});
    EXPECT_EQ(big.code, 1);
    EXPECT_NE(big.err.find("LimitExceeded"), std::string::npos);
}

TEST(CliSb, Examples) {
    EXPECT_EQ(run({"sb", "locate", "3/7"}).out, "LRR\n");
    EXPECT_EQ(run({"sb", "decode", "LRR"}).out, "3/7\n");
    EXPECT_EQ(run({"sb", "decode", ""}).out, "1/2\n");
    EXPECT_EQ(run({"sb", "locate", "1/2"}).out, "\n");
    EXPECT_EQ(run({"sb", "neighbors", "1/2"}).out, "0/1 1/1\n");
    EXPECT_EQ(run({"sb", "neighbors", "3/7"}).out, "2/5 1/2\n");
    EXPECT_EQ(run({"sb", "tree", "0"}).out, "1/2\n");
}

TEST(CliSb, Json) {
    EXPECT_EQ(run({"sb", "locate", "6/14", "--format", "json"}).out, "{\"fraction\":\"3/7\",\"path\":\"LRR\"}\n");
    EXPECT_EQ(run({"sb", "decode", "RRL", "--format", "json"}).out, "{\"path\":\"RRL\",\"fraction\":\"5/7\"}\n");
    EXPECT_EQ(run({"sb", "neighbors", "5/7", "--format", "json"}).out,
              "{\"fraction\":\"5/7\",\"left\":\"2/3\",\"right\":\"3/4\"}\n");
    EXPECT_EQ(run({"sb", "tree", "1", "--format", "json"}).out,
              "{\"depth\":1,\"levels\":[[\"1/2\"],[\"1/3\",\"2/3\"]]}\n");
}

TEST(CliSb, Errors) {
    const Result endpoint = run({"sb", "locate", "1/1"});
    EXPECT_EQ(endpoint.code, 1);
    EXPECT_NE(endpoint.err.find("OutOfRange"), std::string::npos);
    EXPECT_EQ(run({"sb", "locate", "three/7"}).code, 2);
    EXPECT_EQ(run({"sb", "locate", "3/0"}).code, 2);
    EXPECT_EQ(run({"sb", "decode", "LQ"}).code, 2);
    EXPECT_EQ(run({"sb", "neighbors", "0/1"}).code, 1);
    const Result deep = run({"sb", "tree", "13"});
    EXPECT_EQ(deep.code, 1);
    EXPECT_NE(deep.err.find("LimitExceeded"), std::string::npos);
    EXPECT_EQ(run({"sb"}).code, 2);
    EXPECT_EQ(run({"sb", "locate", "1/2", "--format", "dot"}).code, 2);
}

TEST(CliSb, TreeGolden) {
    EXPECT_EQ(run({"sb", "tree", "3", "--format", "dot"}).out, golden("sb_tree_3.dot"));
    EXPECT_EQ(run({"sb", "tree", "3"}).out, golden("sb_tree_3.txt"));
}

TEST(CliSb, LocateDecodeRoundTrip) {
    for (fsb::Int b = 2; b <= 50; ++b)
        for (fsb::Int a = 1; a < b; ++a) {
            if (fsb::oracle::trial_gcd(a, b) != 1) continue;
            const std::string f = std::to_string(a) + "/" + std::to_string(b);
            std::string p = run({"sb", "locate", f}).out;
            p.pop_back();
            ASSERT_EQ(run({"sb", "decode", p}).out, f + "\n");
        }
}

TEST(CliBezout, Examples) {
    EXPECT_EQ(run({"bezout", "5", "7", "--method", "tree"}).out, "x=3 y=-2\n");
    EXPECT_EQ(run({"bezout", "5", "7", "--method", "euclid"}).out, "x=3 y=-2\n");
    EXPECT_EQ(run({"bezout", "1", "1"}).out, "x=1 y=0\n");
    EXPECT_EQ(run({"bezout", "3", "7"}).out, "x=5 y=-2\n");
    EXPECT_EQ(run({"bezout", "3", "7", "--format", "json"}).out,
              "{\"m\":3,\"n\":7,\"x\":5,\"y\":-2,\"check\":\"m*x+n*y=1\"}\n");
}

TEST(CliBezout, Errors) {
    const Result r = run({"bezout", "6", "4"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("NotCoprime"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"bezout", "6", "4", "--method", "magic"}).code, 2);
    EXPECT_EQ(run({"bezout", "6"}).code, 2);
}

TEST(CliApprox, Examples) {
    EXPECT_EQ(run({"approx", "0.3333333", "10"}).out, "1/3\n");
    EXPECT_EQ(run({"approx", "0.70710678", "100"}).out, "70/99\n");
    EXPECT_EQ(run({"approx", "0.5", "2"}).out, "1/2\n");
    EXPECT_EQ(run({"approx", "0.5", "1"}).out, "0/1\n");
    EXPECT_EQ(run({"approx", "0.5", "2", "--format", "json"}).out,
              "{\"value\":\"0.5\",\"max_den\":2,\"fraction\":\"1/2\"}\n");
}

TEST(CliApprox, Errors) {
    EXPECT_EQ(run({"approx", "1.5", "10"}).code, 2);
    EXPECT_EQ(run({"approx", "0.5x", "10"}).code, 2);
    EXPECT_EQ(run({"approx", "0.5", "0"}).code, 2);
}

TEST(Cli, UsageAndHelp) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"farey", "4", "--format", "xml"}).code, 2);
}

TEST(Cli, Deterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"farey", "30"}, {"sb", "tree", "5", "--format", "dot"}, {"bezout", "17", "31"}, {"approx", "0.1", "7"}})
        EXPECT_EQ(run(args).out, run(args).out);
}
