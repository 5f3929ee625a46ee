// Copyright 2026 The eacqc Authors
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

#include "eacqc/cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = eacqc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ConcatExample) {
  const auto r = run({"concat", "--inner", "[[5,1,3;0]]", "--outer", "[[3,1,3;2]]_2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[[15,1,\xE2\x89\xA5" "9;2]] net=-1\n");
}

TEST(Cli, ConcatMixedAndAsymmetric) {
  auto r = run({"concat", "--inner", "15x[[4,2,2;0]]", "--inner", "1x[[5,2,2;0]]", "--inner", "1x[[3,2,2;1]]",
                "--outer", "[[17,5,9;4]]_4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[[68,10,\xE2\x89\xA5" "18;9]] net=1\n");
  r = run({"concat", "--inner", "[[2,1,2/1;0]]", "--outer", "[[3,1,3/3;2]]"});
  EXPECT_EQ(r.out, "[[6,1,6/3;2]] net=-1\n");
  r = run({"concat", "--inner", "[[3,1,3/2;0]]", "--outer", "[[3,1,3/3;2]]"});
  EXPECT_EQ(r.code, 1);
  r = run({"concat", "--inner", "[[3,1,3/2;0]]", "--outer", "[[3,1,3/3;2]]", "--relaxed"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, ConcatJson) {
  const auto r = run({"concat", "--inner", "[[5,1,3;0]]", "--outer", "[[3,1,3;2]]", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("n"), 15);
  EXPECT_EQ(j.at("c"), 2);
  EXPECT_EQ(j.at("d_is_lower_bound"), true);
  EXPECT_EQ(j.at("net"), -1);
}

TEST(Cli, BoundHammingExample) {
  const auto r = run({"bound", "hamming", "--code", "[[15,1,9;2]]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lhs=123841 rhs=65536 verdict=VIOLATED\n");
}

TEST(Cli, BoundVariants) {
  EXPECT_EQ(run({"bound", "hamming", "--code", "[[5,1,3;0]]"}).out, "lhs=16 rhs=16 verdict=SATISFIED\n");
  EXPECT_EQ(run({"bound", "asym", "--code", "[[6,1,6/3;2]]"}).out, "lhs=154 rhs=128 verdict=VIOLATED\n");
  EXPECT_EQ(run({"bound", "asym", "--code", "[[6,1,6;2]]"}).code, 2);
  const auto csv = run({"bound", "hamming", "--code", "[[15,1,9;2]]", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "code,lhs,rhs,verdict,margin_log2");
  const auto e = run({"bound", "entropy", "--n", "10", "--i", "5"});
  EXPECT_NE(e.out.find("binom=252"), std::string::npos);
  EXPECT_EQ(run({"bound", "rate", "--delta", "0.6", "--c-over-n", "0.2"}).code, 0);
  EXPECT_EQ(run({"bound", "entropy", "--n", "10", "--i", "1"}).code, 1);
  EXPECT_EQ(run({"bound", "volume"}).code, 2);
}

TEST(Cli, BigIntegersPrintExactly) {
  const auto r = run({"family", "--id", "I", "--n2", "101"});
  ASSERT_EQ(r.code, 0);
  const auto lhs_at = r.out.find("lhs=") + 4;
  const std::string lhs = r.out.substr(lhs_at, r.out.find(' ', lhs_at) - lhs_at);
  EXPECT_GT(lhs.size(), 100u);
  EXPECT_EQ(lhs.find_first_not_of("0123456789"), std::string::npos);
  EXPECT_NE(r.out.find("verdict=VIOLATED"), std::string::npos);
}

TEST(Cli, FamilyScan) {
  const auto r = run({"family", "--id", "II", "--from", "4", "--to", "12", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 5);
  EXPECT_EQ(run({"family", "--id", "II", "--n2", "5"}).code, 1);
  EXPECT_EQ(run({"family", "--id", "VI", "--n2", "5"}).code, 2);
  EXPECT_EQ(run({"family", "--id", "ASYM", "--n2", "3"}).out.substr(0, 48),
            "inner=[[2,1,2/1;0]] outer=[[3,1,3/3;2]] result=[");
}

TEST(Cli, Construct) {
  auto r = run({"construct", "css", "--n", "3", "--k1", "1", "--d1", "3", "--k2", "1", "--d2", "3", "--h1",
                "1 1 0;0 1 1", "--h2", "1 1 0;0 1 1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[[3,1,\xE2\x89\xA5" "3;2]] net=-1\n");
  r = run({"construct", "hermitian", "--n", "3", "--k", "2", "--d", "2", "--q", "2", "--h", "1 1 1"});
  EXPECT_EQ(r.out, "[[3,2,\xE2\x89\xA5" "2;1]] net=1\n");
  r = run({"construct", "eaqmds", "--n", "17", "--k1", "9", "--c", "4", "--q", "4"});
  EXPECT_EQ(r.out.substr(0, 21), "[[17,5,9;4]]_4 net=1 ");
  EXPECT_NE(r.out.find("singleton_identity=true"), std::string::npos);
  EXPECT_EQ(run({"construct", "css", "--n", "3", "--h1", "1 z", "--h2", "1"}).code, 2);
}

TEST(Cli, ConstructMatrixFromFile) {
  const std::string path = ::testing::TempDir() + "eacqc_cli_h.txt";
  std::ofstream(path) << "1 1 0\n0 1 1\n";
  const auto r = run({"construct", "css", "--n", "3", "--k1", "1", "--d1", "3", "--k2", "1", "--d2", "3", "--h1",
                      "@" + path, "--h2", "@" + path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"construct", "css", "--h1", "@/nonexistent/eacqc", "--h2", "1"}).code, 2);
}

TEST(Cli, OracleTables) {
  auto r = run({"oracle", "--code", "rep"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "c00=1\nc10=9\nc11=18\nc12=18\nc20=6\nc21=38\nc22=55\nc31=40\nc32=71\ntotal=256 decoder=ebit-first\n");
  r = run({"oracle", "--code", "bowen", "--format", "json"});
  EXPECT_EQ(r.out,
            "{\"n\":3,\"c\":2,\"k\":1,\"counts\":[[0,0,1],[0,1,6],[1,0,9],[1,2,18],[2,1,36],[2,2,81],[3,0,6],"
            "[3,1,54],[3,2,45]]}\n");
  r = run({"oracle", "--generators", "ZZI,IZZ", "--n-alice", "3", "--k", "1", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 10), "i,j,count\n");
  EXPECT_EQ(run({"oracle", "--generators", "ZZI,XII", "--n-alice", "3", "--k", "1"}).code, 1);
  EXPECT_EQ(run({"oracle", "--code", "steane"}).code, 2);
}

TEST(Cli, ThresholdMatchesLibrary) {
  const auto r = run({"threshold", "--curve", "eacqc-rep", "--ratio", "0.01"});
  ASSERT_EQ(r.code, 0);
  const auto th = eacqc::find_threshold(eacqc::Curve::FE_EACQC_REP, 0.01);
  EXPECT_EQ(r.out, eacqc::format_double(*th, 6) + "\n");
  EXPECT_EQ(run({"threshold", "--curve", "513"}).out, "0.0901962\n");
  EXPECT_EQ(run({"threshold", "--curve", "unencoded"}).code, 1);
  EXPECT_EQ(run({"threshold"}).code, 2);
}

TEST(Cli, FidelityCsv) {
  const auto r = run({"fidelity", "--curves", "unencoded,cqc25", "--p-min", "0", "--p-max", "0.1", "--step", "0.05"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p,fe_unencoded,fe_cqc25\n0,1,1\n0.05,0.9625," +
                       eacqc::format_double(eacqc::eval_fidelity(eacqc::Curve::FE_CQC25, 0.05)) + "\n0.1,0.925," +
                       eacqc::format_double(eacqc::eval_fidelity(eacqc::Curve::FE_CQC25, 0.1)) + "\n");
  const auto one = run({"fidelity", "--p", "0.2", "--format", "json"});
  const auto j = nlohmann::json::parse(one.out);
  EXPECT_EQ(j.at("rows").size(), 1u);
  EXPECT_EQ(run({"fidelity", "--p", "1.5"}).code, 1);
}

TEST(Cli, Catalog) {
  auto r = run({"catalog", "--table", "S3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 20);
  r = run({"catalog", "--table", "S4", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 13);
  EXPECT_EQ(run({"catalog", "--table", "S9"}).code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"concat", "--inner", "[[5,1,3;0]]"}).code, 2);
  EXPECT_EQ(run({"concat", "--inner", "[[5,1,3;0]]", "--outer", "[[3,1"}).code, 2);
  const auto r = run({"bound", "hamming", "--code", "[[5,1,3]]", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"bound", "hamming", "--code", "[[5,1,3]]", "--format", "xml"}).code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run({"concat", "--inner", "[[4,2,2;0]]", "--outer", "[[17,5,9;4]]"}).code, 1);
  EXPECT_EQ(run({"bound", "hamming", "--code", "[[17,5,9;4]]_4"}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("concat"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"fidelity", "--ratio", "0.1", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> scan{"family", "--id", "III", "--from", "3", "--to", "41", "--threads", "4"};
  EXPECT_EQ(run(scan).out, run({"family", "--id", "III", "--from", "3", "--to", "41"}).out);
}
