// Copyright 2026 The sfwitness Authors
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

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gtest/gtest.h"
#include "json.hpp"

using namespace sfw::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "sfwitness");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, EvalDickeJson) {
    const auto r = call({"eval", "--state", "dicke:4,2", "--k", "0", "--c", "1,1,-1", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["sigma"].get<double>(), 5.0 / 3.0, 1e-15);
    EXPECT_NEAR(j["witness"].get<double>(), -2.0 / 3.0, 1e-15);
    EXPECT_EQ(j["detected"], true);
}

TEST(cli, EvalText) {
    const auto r = call({"eval", "--state", "dicke:4,2", "--k", "0", "--c", "1,1,-1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("1.66666666667"), std::string::npos) << r.out;
}

TEST(cli, RobustnessCsv) {
    const auto r = call({"robustness", "--state", "phased-dicke:6,3", "--k", "pi", "--c", "1,1,1",
                         "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("state_id,spec,p_star,q_star\n", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("0.19354838709677"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0.10197348986"), std::string::npos) << r.out;
}

TEST(cli, ScanCsv) {
    const auto r = call({"scan", "--state", "phased-dicke:4,2", "--c", "1,1,1", "--k-grid", "0,pi",
                         "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("k,sigma,witness\n", 0), 0u);
    EXPECT_NE(r.out.find("\n3.1415926535897931,1.4444444444444"), std::string::npos) << r.out;
    const auto lin = call({"scan", "--state", "dicke:4,2", "--c", "1,1,-1", "--k-linspace", "0:pi:5",
                           "--format", "csv"});
    ASSERT_EQ(lin.code, kExitOk) << lin.err;
    EXPECT_NE(lin.out.find("\n0.78539816339744828,"), std::string::npos) << lin.out;
}

TEST(cli, BisepBoundJson) {
    const auto r = call({"bisep-bound", "--n", "3", "--k", "0", "--c", "1,1,1", "--restarts", "5",
                         "--format", "json", "--product"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GT(j["bound"].get<double>(), 0.9);
    EXPECT_TRUE(j.contains("product_bound"));
    const auto cut = call({"bisep-bound", "--state", "phased-dicke:4,2", "--k", "pi", "--c", "1,1,1",
                           "--restarts", "10", "--cut", "1,2", "--format", "json"});
    ASSERT_EQ(cut.code, kExitOk) << cut.err;
    EXPECT_EQ(nlohmann::json::parse(cut.out)["best_cut"]["label"], "{1,2}|{3,4}");
}

TEST(cli, SampleCsvIsSeedDeterministic) {
    const std::vector<std::string> args{"sample", "--state", "dicke:4,2", "--c", "1,1,-1", "--shots",
                                        "100,1000", "--seed", "4", "--format", "csv"};
    const auto a = call(args);
    const auto b = call(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("shots,estimate,std_error\n", 0), 0u);
}

TEST(cli, CorrelatorsCsv) {
    const auto r = call({"correlators", "--state", "dicke:3,1", "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("i,j,alpha,beta,value\n", 0), 0u);
    EXPECT_NE(r.out.find("\n1,2,x,x,0.66666666666666"), std::string::npos) << r.out;
}

TEST(cli, ExitCodes) {
    EXPECT_EQ(call({"eval", "--state", "nosuch:1", "--c", "1,1,1"}).code, kExitInput);
    EXPECT_EQ(call({"eval", "--state", "dicke:4,2", "--c", "2,1,1"}).code, kExitInput);
    EXPECT_EQ(call({"eval", "--state", "dicke:4,2", "--k", "pie", "--c", "1,1,1"}).code, kExitInput);
    EXPECT_EQ(call({"frobnicate"}).code, kExitInput);
    EXPECT_EQ(call({"bisep-bound", "--n", "13", "--c", "1,1,1", "--restarts", "1"}).code, kExitResource);
    EXPECT_EQ(call({"eval", "--state", "dicke:20,1", "--c", "1,1,1"}).code, kExitResource);
    EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(cli, BuildStateCatalog) {
    EXPECT_TRUE(std::holds_alternative<sfw::StateVector>(build_state("ghz-superposition:pi/3,-")));
    EXPECT_TRUE(std::holds_alternative<sfw::StateVector>(build_state("dicke-ghz-superposition:0.4,+")));
    EXPECT_TRUE(std::holds_alternative<sfw::StateVector>(build_state("basis:0101")));
    EXPECT_TRUE(std::holds_alternative<sfw::DensityMatrix>(build_state("product:0,0,1;1,0,0")));
}
