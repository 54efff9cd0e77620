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

#include "stabaut/catalog.h"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace stabaut {
namespace {

Expected published(std::uint64_t v) { return {v, Provenance::published}; }

CatalogExpectation params(std::uint64_t n, std::uint64_t k, std::optional<std::uint64_t> d,
                          std::optional<std::uint64_t> strong = std::nullopt,
                          std::optional<std::uint64_t> weak = std::nullopt,
                          std::optional<std::uint64_t> clifford = std::nullopt) {
  CatalogExpectation e;
  e.n = published(n);
  e.k = published(k);
  if (d) e.d = published(*d);
  if (strong) e.strong_order = published(*strong);
  if (weak) e.weak_order = published(*weak);
  if (clifford) e.clifford_order = published(*clifford);
  return e;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> kEntries = {
      {"513",
       "[[5,1,3]] perfect code, cyclic; strong = weak = D10",
       {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"},
       params(5, 1, 3, 10, 10, 120)},
      {"604",
       "[[6,0,4]] maximally entangled state extending the [[5,1,3]] code",
       {"IXZZXI", "IIXZZX", "IXIXZZ", "IZXIXZ", "XXXXXX", "ZZZZZZ"},
       params(6, 0, 4, 10, 60, 720)},
      {"713",
       "[[7,1,3]] Steane code from the [7,4] Hamming code",
       {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"},
       params(7, 1, 3, 168, 168, 168)},
      {"833",
       "[[8,3,3]] code; weak group AGL(1,8), clifford group AGammaL(1,8)",
       {"XIZIYZXY", "IXZZYXYI", "IZXIYYZX", "IZIYZXXY", "ZZZZZZZZ"},
       params(8, 3, 3, 8, 56, 168)},
      {"823",
       "[[8,2,3]] subcode of the [[8,3,3]] code",
       {"XIZIYZXY", "IXZZYXYI", "IZXIYYZX", "IZZYZXZZ", "IIZIIIYX", "ZZZZZZZZ"},
       params(8, 2, 3, 2, 2)},
      {"1004",
       "[[10,0,4]] cyclic code; clifford group M10.2 of order 1440",
       {"XIIZXZXZII", "IXIIZXZXZI", "IIXIIZXZXZ", "ZIIXIIZXZX", "XZIIXIIZXZ", "ZXZIIXIIZX",
        "XZXZIIXIIZ", "ZXZXZIIXII", "IZXZXZIIXI", "IIZXZXZIIX"},
       params(10, 0, 4, 20, 20, 1440)},
      {"1115",
       "[[11,1,5]] code, smallest correcting two arbitrary errors",
       {"ZZZZZZIIIII", "XXXXXXIIIII", "IIIZXYYYYXZ", "IIIXYZZZZYX", "ZYXIIIZYXII",
        "XZYIIIXZYII", "IIIZYXXYZII", "IIIXZYZXYII", "ZXYIIIZZZXY", "YZXIIIYYYZX"},
       params(11, 1, 5)},
      {"ex24",
       "3-qubit code <XZZ, ZXZ> with strong group {(1), (12)}",
       {"XZZ", "ZXZ"},
       params(3, 1, std::nullopt, 2)},
      {"ex28",
       "3-qubit state <XXX, YYI, ZXZ>: strong group Z2, weak group S3",
       {"XXX", "YYI", "ZXZ"},
       params(3, 0, std::nullopt, 2, 6)},
      {"422a",
       "[[4,2,2]] code <XXXX, ZZZZ> with strong group S4",
       {"XXXX", "ZZZZ"},
       params(4, 2, 2, 24)},
      {"422b",
       "[[4,2,2]] code <XXZZ, YYXX>: strong = weak = Z2 x Z2, clifford group S4",
       {"XXZZ", "YYXX"},
       params(4, 2, 2, 4, 4, 24)},
  };
  return kEntries;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::span<const CatalogEntry> catalog() { return entries(); }

const CatalogEntry& catalog_lookup(std::string_view name) {
  for (const CatalogEntry& entry : entries()) {
    if (entry.name == name) return entry;
  }
  std::string known;
  for (const CatalogEntry& entry : entries()) {
    if (!known.empty()) known += ", ";
    known += entry.name;
  }
  throw std::out_of_range("unknown code '" + std::string(name) + "'; available: " + known);
}

CodeFile parse_code_text(std::string_view text) {
  static const std::regex kParams(R"(\[\[\s*(\d+)\s*,\s*(\d+)\s*(?:,\s*(\d+)\s*)?\]\])");
  CodeFile file;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      std::string comment = line.substr(hash + 1);
      std::smatch match;
      if (!file.declared_n && std::regex_search(comment, match, kParams)) {
        file.declared_n = std::stoul(match[1].str());
        file.declared_k = std::stoul(match[2].str());
        if (match[3].matched) file.declared_d = std::stoul(match[3].str());
      }
      body = line.substr(0, hash);
    }
    std::string generator = trim(body);
    if (generator.empty()) continue;
    for (char c : generator) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected one Pauli string per line");
      }
    }
    file.generators.push_back(std::move(generator));
  }
  if (file.generators.empty()) throw std::invalid_argument("code file has no generators");
  return file;
}

CodeFile load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_code_text(buffer.str());
}

}  // namespace stabaut
