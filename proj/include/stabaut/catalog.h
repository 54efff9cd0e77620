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

#ifndef STABAUT_CATALOG_H_
#define STABAUT_CATALOG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabaut {

/// Where an expected value comes from: reported together with the generators
/// in the literature, or established by an independent computation.
enum class Provenance { published, computed };

struct Expected {
  std::uint64_t value = 0;
  Provenance source = Provenance::published;
};

struct CatalogExpectation {
  std::optional<Expected> n;
  std::optional<Expected> k;
  std::optional<Expected> d;
  std::optional<Expected> strong_order;
  std::optional<Expected> weak_order;
  std::optional<Expected> clifford_order;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> generators;
  CatalogExpectation expected;
};

std::span<const CatalogEntry> catalog();

/// Throws std::out_of_range listing the known names.
const CatalogEntry& catalog_lookup(std::string_view name);

/// Contents of a code file: one signed Pauli string per line, '#' starts a
/// comment, blank lines are ignored. A comment containing "[[n,k,d]]" or
/// "[[n,k]]" declares the expected parameters.
struct CodeFile {
  std::vector<std::string> generators;
  std::optional<std::size_t> declared_n;
  std::optional<std::size_t> declared_k;
  std::optional<std::size_t> declared_d;
};

CodeFile parse_code_text(std::string_view text);
CodeFile load_code_file(const std::filesystem::path& path);

}  // namespace stabaut

#endif  // STABAUT_CATALOG_H_
