// Copyright 2026 The stabaut Authors
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

#ifndef STABAUT_REPORT_H_
#define STABAUT_REPORT_H_

#include <cstddef>

#include "json.hpp"
#include "stabaut/automorphism.h"
#include "stabaut/code_analysis.h"
#include "stabaut/stabilizer_group.h"

namespace stabaut {

/// Structured export. Permutations use 1-based cycle notation, twists the
/// LocalCliffordTwist::to_string format.
nlohmann::json to_json(const AutomorphismResult& result, bool include_elements = true);
AutomorphismResult automorphism_result_from_json(const nlohmann::json& doc, std::size_t n);

nlohmann::json to_json(const CodeParameters& params);
nlohmann::json to_json(const CodespaceBasis& basis);
nlohmann::json to_json(const StabilizerGroup& group);

}  // namespace stabaut

#endif  // STABAUT_REPORT_H_
