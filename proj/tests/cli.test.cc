// Copyright 2026 The qperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperm/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace qperm;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"moments", "--variable", "m9"}).code, kExitUsage);
    EXPECT_EQ(run({"moments", "--variable", "m1", "--order", "99"}).code, kExitUsage);
    EXPECT_EQ(run({"density", "--variable", "m2", "--grid", "0.5:0.1:3"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--suite", "nothing"}).code, kExitUsage);
    EXPECT_EQ(run({"s4", "--weights", "1,1,1,1"}).code, kExitUsage);
    CliResult help = run({"--help"});
    EXPECT_EQ(help.code, kExitPass);
    EXPECT_NE(help.out.find("moments"), std::string::npos);
}

TEST(cli, moments_csv) {
    CliResult r = run({"moments", "--variable", "m2", "--order", "3", "--format", "csv"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out, "k,value\n1,1/4\n2,1/6\n3,1/8\n");
    CliResult wt = run({"moments", "--variable", "wt", "--order", "2", "--format", "csv"});
    EXPECT_EQ(wt.out, "k,value\n1,1/4\n2,1/12*t^2 + 1/6\n");
}

TEST(cli, moments_json) {
    CliResult r = run({"moments", "--variable", "vt", "--t", "1/2", "--order", "2", "--format", "json"});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "1");
    EXPECT_EQ(j["variable"], "vt");
    EXPECT_EQ(j["t"], "1/2");
    ASSERT_EQ(j["moments"].size(), 2u);
    EXPECT_EQ(j["moments"][0]["k"], 1);
    EXPECT_EQ(j["moments"][0]["value"], "1/4");
}

TEST(cli, s4_and_weingarten) {
    CliResult s4 = run({"s4", "--format", "csv"});
    EXPECT_EQ(s4.code, kExitPass);
    EXPECT_EQ(s4.out, "location,weight\n0/1,3/8\n1/4,1/3\n1/2,1/4\n1/1,1/24\n");
    CliResult w = run({"weingarten", "--k", "2", "--format", "json"});
    ASSERT_EQ(w.code, kExitPass);
    auto j = nlohmann::json::parse(w.out);
    EXPECT_EQ(j["schema"], "1");
    EXPECT_EQ(j["weingarten"][0][0], "1/12");
    EXPECT_EQ(j["gram"][0][0], "16/1");
}

TEST(cli, density) {
    CliResult r = run({"density", "--variable", "m4", "--grid", "0.2:0.4:2", "--format", "csv"});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    EXPECT_EQ(header, "x,density,converged,error_estimate");
    EXPECT_EQ(first.rfind("0.2,1.27323954", 0), 0u) << first;
    CliResult atom = run({"density", "--variable", "m1", "--atom", "0", "--format", "json"});
    ASSERT_EQ(atom.code, kExitPass) << atom.err;
    EXPECT_NE(atom.out.find("mass"), std::string::npos);
}

TEST(cli, mc_is_deterministic) {
    std::vector<std::string> args{"mc", "--variable", "m4", "--samples", "5000", "--seed", "8",
                                  "--order", "3", "--format", "json"};
    CliResult one = run(args);
    ASSERT_EQ(one.code, kExitPass) << one.err;
    args.insert(args.end(), {"--threads", "4"});
    CliResult four = run(args);
    EXPECT_EQ(one.out, four.out);
    auto j = nlohmann::json::parse(one.out);
    EXPECT_EQ(j["samples"], 5000);
    EXPECT_EQ(j["seed"], 8);
}

TEST(cli, verify_and_output_file) {
    auto path = std::filesystem::temp_directory_path() / "qperm_cli_test.csv";
    std::filesystem::remove(path);
    CliResult r = run({"verify", "--suite", "identities", "--format", "csv", "--output", path.string()});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "suite,check,result,seconds,detail");
    std::filesystem::remove(path);
    CliResult bad = run({"verify", "--suite", "identities", "--output", "/nonexistent/dir/x.csv"});
    EXPECT_EQ(bad.code, kExitFailure);
}
