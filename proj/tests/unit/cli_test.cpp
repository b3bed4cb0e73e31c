/*
    Copyright 2026 The corrforms Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/json_io.hpp"
#include "test_support.hpp"

namespace corrforms {
namespace {

using cli::Json;
using testing::P;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::string write(const std::string& name, const std::string& text) {
    const std::filesystem::path dir = std::filesystem::path(::testing::TempDir()) / "corrforms_cli";
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = dir / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::string t6_t2() {
    return write("t6_t2.json",
                 R"({"sigma1": ["0","0","0","0","0","0","1"], "sigma2": ["0","0","1"],
                     "omega": {"num": ["1"], "den": ["0","1"], "weight": 1}})");
  }
  std::string cheb() { return write("cheb.json", R"({"sigma1": ["2","0","-4","0","1"], "sigma2": ["-2","0","1"]})"); }
  std::string cubic() { return write("cubic.json", R"({"sigma1": ["0","1","0","1"], "sigma2": ["0","1"]})"); }
  std::string twisted() {
    return write("twisted.json", R"({"sigma1": ["1","0","3","0","3","0","1"], "sigma2": ["1","0","1"]})");
  }
};

TEST_F(CliTest, CheckMonomialPair) {
  const Outcome o = run({"check", t6_t2()});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["lambda"], "3");
  EXPECT_EQ(j["conductor"], 2);
  EXPECT_EQ(j["bound"], "11/2");
  EXPECT_EQ(j["holds"], true);
  EXPECT_EQ(j["affine_conductor"], 1);
  EXPECT_EQ(j["weight_sum"]["holds"], true);
  // Leading keys stay in a fixed order.
  EXPECT_EQ(j.begin().key(), "lambda");
}

TEST_F(CliTest, CheckEqualMapsGivesOne) {
  const std::string f = write("same.json", R"({"sigma1": ["1","2","0","1"], "sigma2": ["1","2","0","1"],
                                                "omega": {"num": ["3","1"], "den": ["1","0","1"], "weight": 2}})");
  const Outcome o = run({"check", f});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.json()["lambda"], "1");
  EXPECT_TRUE(o.json()["bound"].is_null());
}

TEST_F(CliTest, CheckNotSemiInvariant) {
  const std::string f = write("cubic_dlog.json", R"({"sigma1": ["0","1","0","1"], "sigma2": ["0","1"],
                                                     "omega": {"num": ["1"], "den": ["0","1"], "weight": 1}})");
  const Outcome o = run({"check", f});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.json()["lambda"].is_null());
  EXPECT_EQ(o.json()["semi_invariant"], false);
  EXPECT_NE(o.err.find("not semi-invariant"), std::string::npos);
}

TEST_F(CliTest, CheckOmegaFromSeparateFile) {
  const std::string form = write("form.json", R"({"num": ["1"], "den": ["-4","0","1"], "weight": 2})");
  const Outcome o = run({"check", cheb(), "--omega", form});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.json()["lambda"], "4");
  EXPECT_EQ(o.json()["conductor"], 3);
  EXPECT_EQ(o.json()["bound"], "7");
  EXPECT_EQ(run({"check", cheb()}).code, cli::kExitUsage);
}

TEST_F(CliTest, CheckWithMobiusConjugation) {
  const std::string f = write("moved.json", R"({"sigma1": ["0","0","0","0","0","0","1"], "sigma2": ["0","0","1"],
                                               "omega": {"num": ["1"], "den": ["0","1"], "weight": 1},
                                               "mobius": {"a": "1", "b": "2", "c": "0", "d": "1"}})");
  const Outcome o = run({"check", f});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.json()["lambda"], "3");
  EXPECT_EQ(o.json()["conductor"], 2);
}

TEST_F(CliTest, MalformedInputIsUsageError) {
  const Outcome bad_json = run({"check", write("bad.json", "{\"sigma1\": [")});
  EXPECT_EQ(bad_json.code, cli::kExitUsage);
  EXPECT_NE(bad_json.err.find("bad.json"), std::string::npos);

  const Outcome bad_coeff = run({"detect", write("badc.json", R"({"sigma1": ["1","x"], "sigma2": ["0","1"]})")});
  EXPECT_EQ(bad_coeff.code, cli::kExitUsage);
  EXPECT_NE(bad_coeff.err.find("/sigma1/1"), std::string::npos) << bad_coeff.err;

  EXPECT_EQ(run({"detect", write("badf.json", R"({"field": {"Fp": 4}, "sigma1": ["0","0","1"], "sigma2": ["0","1"]})")}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"detect", write("const.json", R"({"sigma1": ["3"], "sigma2": ["0","1"]})")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"detect", "/nonexistent/file.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, DetectExamples) {
  const Json mult = run({"detect", t6_t2()}).json();
  EXPECT_EQ(mult["status"], "cyclic");
  EXPECT_EQ(mult["weight"], 1);
  EXPECT_EQ(mult["lambda"], "3");
  EXPECT_EQ(mult["form"]["a"], "0");

  const Json w2 = run({"detect", cheb()}).json();
  EXPECT_EQ(w2["status"], "cyclic");
  EXPECT_EQ(w2["weight"], 2);
  EXPECT_EQ(w2["lambda"], "4");
  EXPECT_EQ(w2["form"]["s"], "0");
  EXPECT_EQ(w2["form"]["q"], "-4");

  const Outcome trivial = run({"detect", cubic()});
  EXPECT_EQ(trivial.code, cli::kExitOk);
  EXPECT_EQ(trivial.json()["status"], "trivial");
  EXPECT_EQ(trivial.json()["complete"], false);
}

TEST_F(CliTest, DetectPreconditionsExitThree) {
  EXPECT_EQ(run({"detect", write("eq.json", R"({"sigma1": ["0","0","1"], "sigma2": ["1","0","1"]})")}).code,
            cli::kExitMath);
  EXPECT_EQ(run({"detect", write("rev.json", R"({"sigma1": ["0","1"], "sigma2": ["0","0","1"]})")}).code,
            cli::kExitMath);
  EXPECT_EQ(run({"detect", write("rat.json", R"({"sigma1": {"num": ["1","0","0","1"], "den": ["0","1"]}, "sigma2": ["0","1"]})")}).code,
            cli::kExitMath);
}

// The CLI only serializes what the library computes.
TEST_F(CliTest, DetectIsThinAdapter) {
  const Correspondence c(RationalMap(gen_chebyshev(4)), RationalMap(gen_chebyshev(2)));
  EXPECT_EQ(run({"detect", cheb()}).out, cli::to_json(find_primitive(c)).dump(2) + "\n");
  const auto d = decompose_power_pair(P({1, 0, 1}).pow(3), P({1, 0, 1}));
  EXPECT_EQ(run({"decompose", twisted()}).out, cli::to_json(d).dump(2) + "\n");
}

TEST_F(CliTest, SweepExamples) {
  const Outcome o = run({"sweep", twisted(), "--pmin", "29", "--pmax", "100", "--jobs", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream lines(o.out);
  std::string line;
  std::size_t entries = 0;
  Json summary;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    if (j.contains("summary")) {
      summary = j["summary"];
      continue;
    }
    ++entries;
    EXPECT_EQ(j["status"], "cyclic");
    EXPECT_EQ(j["weight"], 1);
    EXPECT_EQ(j["lambda"], "3");
  }
  EXPECT_EQ(entries, 16u);
  EXPECT_EQ(summary["weight1_evidence"], true);

  const Outcome cheb_sweep = run({"sweep", cheb(), "--pmin", "17", "--pmax", "60"});
  ASSERT_EQ(cheb_sweep.code, 0);
  std::istringstream cl(cheb_sweep.out);
  while (std::getline(cl, line)) {
    const Json j = Json::parse(line);
    if (j.contains("summary")) continue;
    if (j["status"] == "skipped") continue;
    EXPECT_EQ(j["weight"], 2) << line;
  }
}

TEST_F(CliTest, SweepUsageAndDeterminism) {
  EXPECT_EQ(run({"sweep", twisted(), "--pmin", "100", "--pmax", "29"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"sweep", twisted(), "--pmin", "2", "--pmax", "29", "--jobs", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"sweep", twisted(), "--pmax", "29"}).code, cli::kExitUsage);
  const std::string fp = write("fp.json", R"({"field": {"Fp": 7}, "sigma1": ["0","0","1"], "sigma2": ["0","1"]})");
  EXPECT_EQ(run({"sweep", fp, "--pmin", "2", "--pmax", "29"}).code, cli::kExitMath);

  const std::string one = run({"sweep", cheb(), "--pmin", "2", "--pmax", "400", "--jobs", "1"}).out;
  EXPECT_EQ(run({"sweep", cheb(), "--pmin", "2", "--pmax", "400", "--jobs", "4"}).out, one);
  ::setenv("CORRFORMS_JOBS", "3", 1);
  EXPECT_EQ(run({"sweep", cheb(), "--pmin", "2", "--pmax", "400"}).out, one);
  ::setenv("CORRFORMS_JOBS", "zero", 1);
  EXPECT_EQ(run({"sweep", cheb(), "--pmin", "2", "--pmax", "400"}).code, cli::kExitUsage);
  ::unsetenv("CORRFORMS_JOBS");
}

TEST_F(CliTest, DecomposeExamples) {
  const Json d = run({"decompose", write("dec.json", R"({"sigma1": ["0","0","1","4","6","4","1"], "sigma2": ["0","1","2","1"]})")}).json();
  EXPECT_EQ(d["result"], "decomposition");
  EXPECT_EQ(d["sigma"], Json::parse(R"(["0","1","2","1"])"));
  EXPECT_EQ(d["m"], 2);
  EXPECT_EQ(d["h"], 1);
  const Outcome none = run({"decompose", write("none.json", R"({"sigma1": ["0","0","1","1"], "sigma2": ["0","1","1"]})")});
  EXPECT_EQ(none.code, cli::kExitOk);
  EXPECT_EQ(none.json()["result"], "none");
  const Json id = run({"decompose", write("id.json", R"({"sigma1": ["0","1"], "sigma2": ["0","1"]})")}).json();
  EXPECT_EQ(id["m"], 1);
  EXPECT_EQ(id["h"], 1);
  EXPECT_EQ(run({"decompose", write("fpd.json", R"({"field": {"Fp": 5}, "sigma1": ["0","0","1"], "sigma2": ["0","1"]})")}).code,
            cli::kExitMath);
}

TEST_F(CliTest, BoundExamples) {
  EXPECT_EQ(run({"bound", "--gx", "0", "--gy", "0", "--d1", "6", "--d2", "2"}).out, "\"11/2\"\n");
  EXPECT_EQ(run({"bound", "--gx", "1", "--gy", "1", "--d1", "5", "--d2", "2"}).out, "\"0\"\n");
  EXPECT_EQ(run({"bound", "--gx", "0", "--gy", "0", "--d1", "2", "--d2", "2"}).code, cli::kExitMath);
  EXPECT_EQ(run({"bound", "--gx", "0", "--d1", "6", "--d2", "2"}).code, cli::kExitUsage);
}

TEST_F(CliTest, GeneratorsRoundTrip) {
  const Outcome cheb_doc = run({"gen", "chebyshev", "--d1", "4", "--d2", "2"});
  ASSERT_EQ(cheb_doc.code, 0) << cheb_doc.err;
  const cli::InputDocument doc = cli::parse_document(cheb_doc.json());
  EXPECT_EQ(doc.sigma1, RationalMap(gen_chebyshev(4)));
  EXPECT_EQ(doc.sigma2, RationalMap(gen_chebyshev(2)));

  const Outcome mult = run({"gen", "multiplicative", "--sigma", R"(["1","0","1"])", "--m", "3", "--h", "1"});
  ASSERT_EQ(mult.code, 0) << mult.err;
  EXPECT_EQ(cli::parse_document(mult.json()).sigma1, RationalMap(P({1, 0, 1}).pow(3)));

  const Outcome mono = run({"gen", "monomial", "--m", "5", "--h", "3"});
  ASSERT_EQ(mono.code, 0) << mono.err;
  EXPECT_EQ(cli::parse_document(mono.json()).sigma2, RationalMap(Polynomial::monomial(testing::S(1), 3)));
  EXPECT_EQ(run({"gen", "monomial", "--m", "4", "--h", "2"}).code, cli::kExitMath);
}

TEST(JsonIo, DocumentRoundTrip) {
  const Correspondence c(RationalMap(testing::R(P({1, 0, 2}), P({-1, 1}))), RationalMap(P({0, 3})));
  const DifferentialForm w = testing::form(P({1}), P({2, 1}), -2);
  const Json j = cli::document_json(c, w);
  const cli::InputDocument back = cli::parse_document(Json::parse(j.dump()));
  EXPECT_EQ(back.sigma1, c.sigma1());
  EXPECT_EQ(back.sigma2, c.sigma2());
  ASSERT_TRUE(back.omega.has_value());
  EXPECT_EQ(*back.omega, w);
  const Json fp = cli::document_json(Correspondence(RationalMap(P({0, 0, 1}, Field::prime(7))),
                                                    RationalMap(P({0, 1}, Field::prime(7)))));
  EXPECT_EQ(cli::parse_document(fp).field, Field::prime(7));
}

TEST(JsonIo, AcceptsIntegersAndRationals) {
  const Polynomial p = cli::parse_polynomial(Json::parse(R"([1, "-1/2", "3"])"), testing::kQ, "/p");
  EXPECT_EQ(p, Polynomial(testing::kQ, {testing::S(1), testing::Sq(-1, 2), testing::S(3)}));
  EXPECT_THROW((void)cli::parse_polynomial(Json::parse("[1.5]"), testing::kQ, "/p"), ParseError);
  EXPECT_THROW((void)cli::parse_field(Json::parse(R"("R")"), "/field"), ParseError);
}

}  // namespace
}  // namespace corrforms
