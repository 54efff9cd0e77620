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

#ifndef STABAUT_AUTOMORPHISM_H_
#define STABAUT_AUTOMORPHISM_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stabaut/pauli.h"
#include "stabaut/stabilizer_group.h"

namespace stabaut {

/// strong: sigma(S) = S. weak: sigma(S) = S up to the signs of elements.
/// clifford: sigma(S) = S after a per-slot permutation of {X, Y, Z}.
/// As permutation sets, strong is a subgroup of weak, which is a subgroup of
/// clifford.
enum class AutomorphismKind { strong, weak, clifford };

std::string_view to_string(AutomorphismKind kind);
AutomorphismKind parse_automorphism_kind(std::string_view text);

/// Per-generator sign e_i with sigma(g_i) = e_i * t_i for some t_i in S.
using SignVector = std::vector<int>;

/// Sign vector for strong and weak members, twist for clifford members.
using ElementWitness = std::variant<SignVector, LocalCliffordTwist>;

struct AutomorphismResult {
  AutomorphismKind kind = AutomorphismKind::strong;
  std::uint64_t order = 0;
  /// Sorted lexicographically by image array; the identity comes first.
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;
  /// Parallel to `elements`; may be empty when witnesses were not requested.
  std::vector<ElementWitness> witnesses;
  int transitivity_degree = 0;
  /// True when some element is an n-cycle.
  bool is_cyclic = false;

  friend bool operator==(const AutomorphismResult&, const AutomorphismResult&) = default;
};

/// A Pauli gamma with sigma(C) = gamma . C, i.e. gamma S gamma^-1 = sigma(S).
struct WeakTwistWitness {
  PauliOperator gamma;
};

/// Raised when a constructed witness fails its own verification.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a search would exceed its size limits.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

bool is_strong(const StabilizerGroup& group, const Permutation& sigma);

/// Signs of the permuted generators when sigma is a weak automorphism.
std::optional<SignVector> is_weak(const StabilizerGroup& group, const Permutation& sigma);

/// Solves for a Pauli whose commutation pattern with the targets of the
/// permuted generators matches the sign vector, then verifies the
/// conjugation. Throws std::invalid_argument when sigma is not weak.
WeakTwistWitness weak_twist_witness(const StabilizerGroup& group, const Permutation& sigma);

/// True iff gamma S gamma^-1 = sigma(S) as signed sets.
bool is_weak_witness(const StabilizerGroup& group, const Permutation& sigma,
                     const PauliOperator& gamma);

/// Lexicographically least twist (slot-major, LetterPermutation order) that
/// carries every permuted generator into S up to sign, if any.
std::optional<LocalCliffordTwist> is_clifford(const StabilizerGroup& group,
                                              const Permutation& sigma);

/// True iff rho . sigma(g_i) lies in S up to sign for every generator.
bool is_twist_witness(const StabilizerGroup& group, const Permutation& sigma,
                      const LocalCliffordTwist& rho);

inline constexpr std::size_t kMaxSearchQubits = 12;

struct SearchProgress {
  std::uint64_t nodes = 0;   // partial assignments visited
  std::uint64_t pruned = 0;  // partial assignments rejected by the filters
  std::uint64_t leaves = 0;  // complete permutations that reached a membership check
  std::uint64_t found = 0;   // members found so far
};

struct SearchOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
  bool with_witnesses = true;
  /// Called from worker threads, one call at a time, roughly every
  /// `progress_interval` nodes.
  std::function<void(const SearchProgress&)> progress;
  std::uint64_t progress_interval = std::uint64_t{1} << 22;
};

/// Exact automorphism group by depth-first search over slot images with
/// letter (strong, weak) or identity-pattern (clifford) pruning.
/// Throws BudgetExceeded for n > kMaxSearchQubits.
AutomorphismResult compute_group(const StabilizerGroup& group, AutomorphismKind kind,
                                 SearchOptions options = {});

/// Small generating set chosen greedily, longest cycles first. Also checks
/// that `elements` is closed under composition; throws std::invalid_argument
/// otherwise.
std::vector<Permutation> generating_set(std::span<const Permutation> elements);

/// Largest t <= 5 such that the group is transitive on ordered t-tuples of
/// distinct points. Throws std::invalid_argument if `elements` is not a group.
int transitivity_degree(std::span<const Permutation> elements, std::size_t n);

}  // namespace stabaut

#endif  // STABAUT_AUTOMORPHISM_H_
