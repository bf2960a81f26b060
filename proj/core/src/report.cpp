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

#include "lieorbit/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace lieorbit {

std::string to_json(const VerificationReport& report, bool canonical) {
  // nlohmann::json keeps object keys sorted.
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : report.claims) {
    nlohmann::json j{{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"detail", c.detail}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    claims.push_back(std::move(j));
  }
  nlohmann::json doc{
      {"suite", report.suite},
      {"claims", std::move(claims)},
      {"totals",
       {{"pass", report.count(Status::pass)},
        {"fail", report.count(Status::fail)},
        {"skipped", report.count(Status::skipped)},
        {"total", report.claims.size()}}},
      {"seed", report.seed},
      {"primes", report.primes},
      {"duration_ms", canonical ? 0.0 : report.duration_ms},
      {"notes", report.notes},
      {"ok", report.ok()},
  };
  return doc.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.claims) {
    os << '[' << to_string(c.status) << "] " << c.id;
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
    if (c.counterexample) os << "    counterexample: " << *c.counterexample << '\n';
  }
  for (const auto& n : report.notes) os << "note: " << n << '\n';
  os << "suite " << report.suite << ": " << report.count(Status::pass) << " passed, " << report.count(Status::fail)
     << " failed, " << report.count(Status::skipped) << " skipped (seed " << report.seed << ")\n";
  os << (report.ok() ? "OK" : "FAILED") << '\n';
  return os.str();
}

}  // namespace lieorbit
