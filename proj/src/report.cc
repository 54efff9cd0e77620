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

#include "stabaut/report.h"

#include <string>
#include <vector>

namespace stabaut {

using nlohmann::json;

json to_json(const AutomorphismResult& result, bool include_elements) {
  json doc;
  doc["kind"] = std::string(to_string(result.kind));
  doc["order"] = result.order;
  doc["transitivity_degree"] = result.transitivity_degree;
  doc["cyclic"] = result.is_cyclic;
  json gens = json::array();
  for (const Permutation& g : result.generators) gens.push_back(g.cycle_string());
  doc["generators"] = gens;
  if (!include_elements) return doc;

  json elements = json::array();
  for (std::size_t i = 0; i < result.elements.size(); ++i) {
    json item;
    item["perm"] = result.elements[i].cycle_string();
    if (i < result.witnesses.size()) {
      const ElementWitness& w = result.witnesses[i];
      if (const auto* signs = std::get_if<SignVector>(&w)) {
        item["signs"] = *signs;
      } else {
        item["twist"] = std::get<LocalCliffordTwist>(w).to_string();
      }
    }
    elements.push_back(std::move(item));
  }
  doc["elements"] = std::move(elements);
  return doc;
}

AutomorphismResult automorphism_result_from_json(const json& doc, std::size_t n) {
  AutomorphismResult result;
  result.kind = parse_automorphism_kind(doc.at("kind").get<std::string>());
  result.order = doc.at("order").get<std::uint64_t>();
  result.transitivity_degree = doc.at("transitivity_degree").get<int>();
  result.is_cyclic = doc.at("cyclic").get<bool>();
  for (const json& g : doc.at("generators")) {
    result.generators.push_back(Permutation::parse_cycles(g.get<std::string>(), n));
  }
  if (doc.contains("elements")) {
    for (const json& item : doc.at("elements")) {
      result.elements.push_back(Permutation::parse_cycles(item.at("perm").get<std::string>(), n));
      if (item.contains("signs")) {
        result.witnesses.emplace_back(item.at("signs").get<SignVector>());
      } else if (item.contains("twist")) {
        result.witnesses.emplace_back(LocalCliffordTwist::parse(item.at("twist").get<std::string>()));
      }
    }
  }
  return result;
}

json to_json(const CodeParameters& params) {
  json doc;
  doc["n"] = params.n;
  doc["k"] = params.k;
  doc["d"] = params.d;
  doc["degenerate_convention"] = params.degenerate_convention;
  doc["witness"] = serialize_pauli(params.witness);
  return doc;
}

json to_json(const CodespaceBasis& basis) {
  json vectors = json::array();
  for (const SparseState& v : basis.vectors) {
    json terms = json::array();
    for (const BasisTerm& t : primitive(v)) {
      terms.push_back({{"basis", basis.label(t.basis)},
                       {"re", t.coefficient.re},
                       {"im", t.coefficient.im}});
    }
    vectors.push_back(std::move(terms));
  }
  return json{{"n", basis.num_qubits}, {"vectors", std::move(vectors)}};
}

json to_json(const StabilizerGroup& group) {
  json gens = json::array();
  for (const PauliOperator& g : group.generators()) gens.push_back(serialize_pauli(g));
  return json{{"n", group.num_qubits()},
              {"m", group.num_generators()},
              {"k", group.num_logical_qubits()},
              {"generators", std::move(gens)}};
}

}  // namespace stabaut
