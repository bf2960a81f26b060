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

#pragma once

#include <string>

#include "lieorbit/verify.hpp"

namespace lieorbit {

/// JSON with sorted keys. In canonical mode duration_ms is written as 0 so
/// equal runs produce identical bytes.
std::string to_json(const VerificationReport& report, bool canonical = true);
std::string to_text(const VerificationReport& report);

}  // namespace lieorbit
