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

#include "stabaut/stabilizer_group.h"

#include <bit>
#include <mutex>

namespace stabaut {

struct StabilizerGroup::IndexCache {
  std::once_flag once;
  std::unique_ptr<ElementIndex> index;
};

ElementIndex::ElementIndex(std::span<const PauliOperator> elements) {
  signs_.reserve(elements.size() * 2);
  for (const PauliOperator& e : elements) signs_[Key{e.x_bits(), e.z_bits()}] = e.sign();
}

int ElementIndex::sign_of(std::uint64_t x_bits, std::uint64_t z_bits) const {
  auto it = signs_.find(Key{x_bits, z_bits});
  return it == signs_.end() ? 0 : it->second;
}

StabilizerGroup StabilizerGroup::build(std::span<const PauliOperator> generators,
                                       BuildOptions options) {
  using Kind = StabilizerError::Kind;
  if (generators.empty()) {
    throw StabilizerError(Kind::bad_input, "a stabilizer group needs at least one generator");
  }
  StabilizerGroup group;
  group.num_qubits_ = generators.front().num_qubits();
  group.index_ = std::make_shared<IndexCache>();

  for (std::size_t i = 0; i < generators.size(); ++i) {
    const PauliOperator& g = generators[i];
    if (g.num_qubits() != group.num_qubits_) {
      throw StabilizerError(Kind::bad_input,
                            "generator " + std::to_string(i + 1) + " has " +
                                std::to_string(g.num_qubits()) + " qubits, expected " +
                                std::to_string(group.num_qubits_),
                            i);
    }
    if (!g.has_real_phase()) {
      throw StabilizerError(Kind::bad_phase,
                            "generator " + std::to_string(i + 1) + " has an imaginary phase", i);
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commutes(generators[i], generators[j])) {
        throw StabilizerError(Kind::non_commuting,
                              "generators " + std::to_string(i + 1) + " (" +
                                  serialize_pauli(generators[i]) + ") and " +
                                  std::to_string(j + 1) + " (" + serialize_pauli(generators[j]) +
                                  ") anticommute",
                              i, j);
      }
    }
  }

  for (std::size_t i = 0; i < generators.size(); ++i) {
    const PauliOperator& g = generators[i];
    std::uint64_t x = g.x_bits();
    std::uint64_t z = g.z_bits();
    std::uint64_t combination = 0;
    if (!group.reduce_row(x, z, combination)) {
      PauliOperator replay = group.product(combination);
      bool same_sign = replay.phase_exp() == g.phase_exp();
      if (options.reduce && same_sign) {
        group.dropped_.push_back(i);
        continue;
      }
      if (options.reduce) {
        throw StabilizerError(Kind::contains_minus_identity,
                              "generator " + std::to_string(i + 1) + " (" + serialize_pauli(g) +
                                  ") times a product of earlier generators is -I",
                              i);
      }
      throw StabilizerError(Kind::dependent_generators,
                            "generator " + std::to_string(i + 1) + " (" + serialize_pauli(g) +
                                ") is a signed product of earlier generators",
                            i);
    }
    std::size_t index = group.generators_.size();
    if (index >= 64) {
      throw StabilizerError(Kind::bad_input, "more than 64 independent generators", i);
    }
    unsigned pivot = x != 0 ? static_cast<unsigned>(std::countr_zero(x))
                            : 64U + static_cast<unsigned>(std::countr_zero(z));
    group.echelon_.push_back(EchelonRow{x, z, combination | (std::uint64_t{1} << index), pivot});
    group.generators_.push_back(g);
  }
  return group;
}

// Rows are stored in insertion order and each row was reduced against all
// earlier rows, so a single forward pass clears every pivot.
bool StabilizerGroup::reduce_row(std::uint64_t& x, std::uint64_t& z,
                                 std::uint64_t& combination) const {
  for (const EchelonRow& row : echelon_) {
    bool hit = row.pivot < 64 ? ((x >> row.pivot) & 1U) : ((z >> (row.pivot - 64)) & 1U);
    if (hit) {
      x ^= row.x;
      z ^= row.z;
      combination ^= row.combination;
    }
  }
  return (x | z) != 0;
}

std::optional<std::uint64_t> StabilizerGroup::decompose(const PauliOperator& p) const {
  if (p.num_qubits() != num_qubits_) {
    throw std::invalid_argument("operator size does not match the stabilizer group");
  }
  std::uint64_t x = p.x_bits();
  std::uint64_t z = p.z_bits();
  std::uint64_t combination = 0;
  if (reduce_row(x, z, combination)) return std::nullopt;
  return combination;
}

PauliOperator StabilizerGroup::product(std::uint64_t combination) const {
  PauliOperator out = PauliOperator::identity(num_qubits_);
  while (combination != 0) {
    auto i = static_cast<std::size_t>(std::countr_zero(combination));
    out = multiply(out, generators_[i]);
    combination &= combination - 1;
  }
  return out;
}

MembershipAnswer StabilizerGroup::contains(const PauliOperator& p) const {
  if (!p.has_real_phase()) {
    throw std::domain_error("membership query with an imaginary phase: " + p.letters());
  }
  std::optional<std::uint64_t> combination = decompose(p);
  if (!combination) return {MembershipStatus::absent, 0};
  PauliOperator replay = product(*combination);
  if (replay.phase_exp() == p.phase_exp()) return {MembershipStatus::exact, 1};
  return {MembershipStatus::up_to_sign, -1};
}

bool StabilizerGroup::in_normalizer(const PauliOperator& p) const {
  for (const PauliOperator& g : generators_) {
    if (!commutes(g, p)) return false;
  }
  return true;
}

std::vector<PauliOperator> StabilizerGroup::enumerate_elements() const {
  std::size_t m = generators_.size();
  if (m > kMaxEnumerableGenerators) {
    throw std::length_error("refusing to enumerate 2^" + std::to_string(m) +
                            " elements (limit is 2^" + std::to_string(kMaxEnumerableGenerators) +
                            ")");
  }
  std::vector<PauliOperator> out;
  out.reserve(std::size_t{1} << m);
  out.push_back(PauliOperator::identity(num_qubits_));
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t half = out.size();
    for (std::size_t c = 0; c < half; ++c) out.push_back(multiply(out[c], generators_[i]));
  }
  return out;
}

const ElementIndex& StabilizerGroup::element_index() const {
  std::call_once(index_->once, [this] {
    std::vector<PauliOperator> elements = enumerate_elements();
    index_->index = std::make_unique<ElementIndex>(elements);
  });
  return *index_->index;
}

StabilizerGroup build_group(std::span<const std::string> generators, BuildOptions options) {
  std::vector<PauliOperator> parsed;
  parsed.reserve(generators.size());
  for (const std::string& text : generators) parsed.push_back(parse_pauli(text));
  return StabilizerGroup::build(parsed, options);
}

}  // namespace stabaut
