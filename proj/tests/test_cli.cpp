/*
   Copyright 2026 The symtensor Authors

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

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>

#include "cli.hpp"

namespace symtensor::cli {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

TEST(CliSeries, TwoQuadricsJson) {
  const auto r = run({"series", "2Q(3)", "--max-degree", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["spec"], "2Q(3)");
  EXPECT_EQ(j["coefficients"], nlohmann::json({1, 0, 3, 0, 6, 0, 10}));
  EXPECT_EQ(j["krull_dim"], 3);
  EXPECT_EQ(j["rational_form"]["numerator"], nlohmann::json({1}));
  EXPECT_EQ(j["rational_form"]["denominator_weights"], nlohmann::json({2, 2, 2}));
  EXPECT_TRUE(j["provenance"].is_string());
  EXPECT_TRUE(j["flags"].is_array());
  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(r.out);
  for (const auto& [k, v] : ordered.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"spec", "coefficients", "rational_form", "krull_dim", "provenance", "flags"}));
}

TEST(CliSeries, AbelianCurveDefaultDepth) {
  const auto r = run({"series", "Ab(1)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["coefficients"], nlohmann::json(std::vector<int>(9, 1)));
}

TEST(CliSeries, QuadricSurfaceIsKuenneth) {
  const auto r = run({"series", "Q(2)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["coefficients"], nlohmann::json({1, 6, 19, 44, 85, 146, 231, 344, 489}));
}

TEST(CliSeries, ByteDeterministic) {
  for (const char* spec : {"Gr(2,4)", "Klein(2T)", "Prod(Q(1),Hitchin(g=2,r=2,d=1,fixed))"}) {
    const auto a = run({"series", spec, "--format", "json"}), b = run({"series", spec, "--format", "json"});
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(CliSeries, NullRationalFormWhenUnrecovered) {
  // a window of 8 is too small for the octahedral form, but the Molien window
  // is widened automatically, so the form is present
  const auto r = run({"series", "Klein(2O)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["rational_form"].is_null());
  const auto t = run({"series", "Trivial(general_type)", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(t.out)["krull_dim"], 0);
}

TEST(CliSeries, TextAndCsv) {
  const auto t = run({"series", "Pn(1)", "--max-degree", "3"});
  EXPECT_NE(t.out.find("coefficients:  1 3 5 7"), std::string::npos) << t.out;
  EXPECT_NE(t.out.find("(1 + t) / (1 - t)^2"), std::string::npos);
  const auto c = run({"series", "Pn(1)", "--max-degree", "3", "--format", "csv"});
  EXPECT_EQ(lines(c.out).at(0), "spec,c0,c1,c2,c3,krull,provenance");
  EXPECT_EQ(lines(c.out).at(1).rfind("Pn(1),1,3,5,7,2,", 0), 0u);
}

TEST(CliIdealDump, QuadricCurve) {
  const auto r = run({"ideal-dump", "Q(1)"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p12^2 + p13^2 + p23^2\n");
}

TEST(CliIdealDump, GrassmannianLinesAndRoundTrip) {
  const auto r = run({"ideal-dump", "Gr(1,2)"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  EXPECT_NE(std::find(ls.begin(), ls.end(), "u11 + u22"), ls.end());
  EXPECT_NE(std::find(ls.begin(), ls.end(), "u11*u22 - u12*u21"), ls.end());
  for (const char* spec : {"Gr(1,2)", "Gr(2,4)", "Q(3)"}) {
    const auto dump = run({"ideal-dump", spec});
    const auto I = presentation_of(parse_variety_spec(spec));
    std::vector<Polynomial> parsed;
    for (const auto& l : lines(dump.out)) parsed.push_back(Polynomial::parse(l, I.context()));
    ASSERT_EQ(parsed.size(), I.generators().size());
    for (std::size_t k = 0; k < parsed.size(); ++k) EXPECT_EQ(parsed[k], I.generators()[k]);
  }
}

TEST(CliIdealDump, ClosedFormRejected) {
  const auto r = run({"ideal-dump", "2Q(3)"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("closed form"), std::string::npos);
}

TEST(CliTable, QuadricCurveEqualsProjectiveLine) {
  const auto r = run({"table", "Pn(1)", "Q(1)", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  auto coeffs = [](const std::string& row) {
    const auto first = row.find(',');
    auto last = first;
    for (int k = 0; k < 10; ++k) last = row.find(',', last + 1);
    return row.substr(first, last - first);
  };
  EXPECT_EQ(coeffs(ls[1]), coeffs(ls[2]));
}

TEST(CliTable, DihedralOddEntriesVanish) {
  const auto r = run({"table", "Klein(BD,2)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  const auto c = j[0]["coefficients"].get<std::vector<int>>();
  for (std::size_t p = 1; p < c.size(); p += 2) EXPECT_EQ(c[p], 0);
  const auto md = run({"table", "Klein(BD,2)", "Ab(1)"});
  EXPECT_EQ(lines(md.out).size(), 4u);
  EXPECT_EQ(lines(md.out)[0].rfind("| spec | c0 |", 0), 0u);
}

TEST(CliTable, EmptyListIsUsageError) { EXPECT_EQ(run({"table"}).code, kUsage); }

TEST(CliExitCodes, Usage) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({"series"}).code, kUsage);
  EXPECT_EQ(run({"series", "Pn(1", "--format", "json"}).code, kUsage);
  EXPECT_EQ(run({"series", "Pn(0)"}).code, kUsage);
  EXPECT_EQ(run({"series", "Pn(1)", "--format", "yaml"}).code, kUsage);
  EXPECT_EQ(run({"series", "Pn(1)", "--timeout", "0"}).code, kUsage);
  EXPECT_EQ(run({"series", "Pn(1)", "--max-degree", "-1"}).code, kUsage);
  EXPECT_EQ(run({"series", "Q(4)"}).code, kUsage);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(CliExitCodes, ForceLiftsCap) {
  const auto r = run({"series", "Q(4)", "--force", "--max-degree", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["krull_dim"], 8);
}

TEST(CliExitCodes, LimitReportsDiagnostics) {
  const auto r = run({"series", "Gr(2,4)", "--gb-max-degree", "2"});
  EXPECT_EQ(r.code, kLimit);
  EXPECT_NE(r.err.find("pairs processed"), std::string::npos);
  EXPECT_NE(r.err.find("max degree reached: 2"), std::string::npos);
}

TEST(CliExitCodes, ErrorMapping) {
  std::ostringstream err;
  EXPECT_EQ(guarded(err, []() -> int { throw IntegrityError("negative coefficient"); }), kIntegrity);
  EXPECT_EQ(guarded(err, []() -> int { throw LimitExceeded("timeout", {}); }), kLimit);
  EXPECT_EQ(guarded(err, []() -> int { throw ParseError("bad"); }), kUsage);
  EXPECT_EQ(guarded(err, []() -> int { throw CapExceeded("cap"); }), kUsage);
  EXPECT_EQ(guarded(err, []() -> int { return kVerifyFailed; }), kVerifyFailed);
  EXPECT_NE(err.str().find("integrity error: negative coefficient"), std::string::npos);
}

TEST(CliVerify, ReducedDepthPasses) {
  const auto r = run({"verify", "--max-degree", "4"});
  EXPECT_EQ(r.code, kOk) << r.out;
  for (const char* id : {"] 1 ", "] 2 ", "] 3a ", "] 3b ", "] 4 ", "] 5 ", "] 6 ", "] 7 ", "] 8 ", "] 9 "})
    EXPECT_NE(r.out.find(std::string("[PASS") + id), std::string::npos) << id;
}

TEST(CliVerify, TinyGroebnerLimitSkipsHeavyChecks) {
  const auto r = run({"verify", "--gb-max-degree", "1", "--format", "json"});
  EXPECT_EQ(r.code, kLimit);
  const auto j = nlohmann::json::parse(r.out);
  std::set<std::string> skipped;
  for (const auto& c : j["checks"]) {
    EXPECT_NE(c["status"], "FAIL") << c["id"];
    if (c["status"] == "SKIPPED-BY-LIMIT") skipped.insert(c["id"].get<std::string>());
  }
  EXPECT_EQ(skipped, (std::set<std::string>{"1", "2", "3a", "3b", "7"}));
  EXPECT_EQ(j["exit_code"], kLimit);
}

}  // namespace
}  // namespace symtensor::cli
