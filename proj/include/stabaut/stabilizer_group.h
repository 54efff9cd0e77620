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

#ifndef STABAUT_STABILIZER_GROUP_H_
#define STABAUT_STABILIZER_GROUP_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "stabaut/pauli.h"

namespace stabaut {

/// Enumerating 2^m elements is refused above this many generators.
inline constexpr std::size_t kMaxEnumerableGenerators = 20;

enum class MembershipStatus { exact, up_to_sign, absent };

/// Result of a membership query. `sign` is +1 when p is in S, -1 when -p is
/// in S, and 0 when neither is.
struct MembershipAnswer {
  MembershipStatus status = MembershipStatus::absent;
  int sign = 0;

  bool in_group_up_to_sign() const { return status != MembershipStatus::absent; }
  friend bool operator==(const MembershipAnswer&, const MembershipAnswer&) = default;
};

/// Raised when a generator list does not define a stabilizer group.
class StabilizerError : public std::invalid_argument {
 public:
  enum class Kind { non_commuting, contains_minus_identity, dependent_generators, bad_phase, bad_input };

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  StabilizerError(Kind kind, const std::string& what, std::size_t first = npos,
                  std::size_t second = npos)
      : std::invalid_argument(what), kind_(kind), first_(first), second_(second) {}

  Kind kind() const { return kind_; }
  /// 0-based generator indices involved, or npos.
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  Kind kind_;
  std::size_t first_;
  std::size_t second_;
};

struct BuildOptions {
  /// Drop generators that are signed products of earlier ones instead of
  /// failing. A dependent generator with the opposite sign still fails with
  /// contains_minus_identity.
  bool reduce = false;
};

/// Hash table from check-matrix row to the sign of the matching element.
class ElementIndex {
 public:
  explicit ElementIndex(std::span<const PauliOperator> elements);

  /// +1 / -1 for the sign of the element with these letters, 0 if none.
  int sign_of(std::uint64_t x_bits, std::uint64_t z_bits) const;
  std::size_t size() const { return signs_.size(); }

 private:
  struct Key {
    std::uint64_t x;
    std::uint64_t z;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>{}(k.x * 0x9E3779B97F4A7C15ULL ^ (k.z + 0x632BE59BD9B4E019ULL));
    }
  };
  std::unordered_map<Key, int, KeyHash> signs_;
};

/// An abelian subgroup of the Pauli group without -I, given by m independent
/// generators. Immutable after construction; safe to query from many threads.
class StabilizerGroup {
 public:
  static StabilizerGroup build(std::span<const PauliOperator> generators, BuildOptions options = {});

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_generators() const { return generators_.size(); }
  std::size_t num_logical_qubits() const { return num_qubits_ - generators_.size(); }
  const std::vector<PauliOperator>& generators() const { return generators_; }
  /// Input positions dropped by BuildOptions::reduce.
  const std::vector<std::size_t>& dropped_generators() const { return dropped_; }

  /// Bit i of the result selects generator i. Empty when p's check-matrix
  /// row is outside the span of the generators.
  std::optional<std::uint64_t> decompose(const PauliOperator& p) const;
  /// Signed product of the selected generators, in index order.
  PauliOperator product(std::uint64_t combination) const;

  /// Echelon solve followed by a signed replay. p must be Hermitian.
  MembershipAnswer contains(const PauliOperator& p) const;

  /// True iff p commutes with every generator.
  bool in_normalizer(const PauliOperator& p) const;

  /// All 2^m elements, identity first; element c is product(c).
  std::vector<PauliOperator> enumerate_elements() const;

  /// Built on first use, then shared read-only.
  const ElementIndex& element_index() const;

 private:
  struct EchelonRow {
    std::uint64_t x;
    std::uint64_t z;
    std::uint64_t combination;
    unsigned pivot;  // < 64: bit of x; >= 64: bit (pivot - 64) of z
  };
  struct IndexCache;

  StabilizerGroup() = default;
  bool reduce_row(std::uint64_t& x, std::uint64_t& z, std::uint64_t& combination) const;

  std::size_t num_qubits_ = 0;
  std::vector<PauliOperator> generators_;
  std::vector<EchelonRow> echelon_;
  std::vector<std::size_t> dropped_;
  std::shared_ptr<IndexCache> index_;
};

/// Parses and validates signed Pauli strings. Imaginary phases are rejected.
StabilizerGroup build_group(std::span<const std::string> generators, BuildOptions options = {});

}  // namespace stabaut

#endif  // STABAUT_STABILIZER_GROUP_H_
