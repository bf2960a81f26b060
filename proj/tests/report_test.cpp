// Copyright 2026 The lieorbit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "lieorbit/report.hpp"

namespace lieorbit {
namespace {

VerificationReport sample() {
  VerificationReport r;
  r.suite = "demo";
  r.seed = 7;
  r.primes = {2, 3};
  r.duration_ms = 12.5;
  r.pass("b.claim", "anchor b", "fine");
  r.fail("a.claim", "anchor a", "x=1", "broken");
  r.skip("c.claim", "anchor c", "no samples");
  r.notes.push_back("a note");
  r.sort_claims();
  return r;
}

TEST(Report, Totals) {
  const VerificationReport r = sample();
  EXPECT_EQ(r.count(Status::pass), 1u);
  EXPECT_EQ(r.count(Status::fail), 1u);
  EXPECT_EQ(r.count(Status::skipped), 1u);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.claims.front().id, "a.claim");
  ASSERT_NE(r.find("c.claim"), nullptr);
  EXPECT_EQ(r.find("zzz"), nullptr);
}

TEST(Report, JsonSchema) {
  const auto j = nlohmann::json::parse(to_json(sample()));
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["primes"], nlohmann::json::array({2, 3}));
  EXPECT_EQ(j["duration_ms"], 0);
  EXPECT_EQ(j["totals"]["fail"], 1);
  EXPECT_EQ(j["totals"]["total"], 3);
  EXPECT_EQ(j["ok"], false);
  ASSERT_EQ(j["claims"].size(), 3u);
  EXPECT_EQ(j["claims"][0]["id"], "a.claim");
  EXPECT_EQ(j["claims"][0]["counterexample"], "x=1");
  EXPECT_FALSE(j["claims"][1].contains("counterexample"));
  EXPECT_EQ(j["notes"][0], "a note");
}

TEST(Report, CanonicalJsonIgnoresTiming) {
  VerificationReport a = sample(), b = sample();
  b.duration_ms = 99;
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_NE(to_json(a, false), to_json(b, false));
}

TEST(Report, Text) {
  const std::string t = to_text(sample());
  EXPECT_NE(t.find("[fail] a.claim"), std::string::npos);
  EXPECT_NE(t.find("counterexample: x=1"), std::string::npos);
  EXPECT_NE(t.find("1 passed, 1 failed, 1 skipped"), std::string::npos);
  EXPECT_NE(t.find("FAILED"), std::string::npos);
}

TEST(Report, MergeSortsAndAccumulates) {
  VerificationReport a = sample();
  VerificationReport b;
  b.pass("0.first", "x");
  b.notes.push_back("other");
  a.merge(b);
  EXPECT_EQ(a.claims.front().id, "0.first");
  EXPECT_EQ(a.claims.size(), 4u);
  EXPECT_EQ(a.notes.size(), 2u);
}

}  // namespace
}  // namespace lieorbit
