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

#ifndef STABAUT_CODE_ANALYSIS_H_
#define STABAUT_CODE_ANALYSIS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabaut/pauli.h"
#include "stabaut/stabilizer_group.h"

namespace stabaut {

struct CodeParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  /// True when k = 0 and d is the minimal weight of a non-identity element
  /// of S rather than of a logical operator.
  bool degenerate_convention = false;
  /// Lexicographically first operator of weight d that realises the distance.
  PauliOperator witness;
};

struct DistanceOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/// Weight-ascending search. Positions are visited in lexicographic order of
/// the support, letters in the order X < Y < Z.
CodeParameters distance(const StabilizerGroup& group, DistanceOptions options = {});

/// Exact Gaussian integer coefficient. Elements of S with an odd number of
/// Y factors contribute imaginary amplitudes.
struct GaussianInteger {
  std::int64_t re = 0;
  std::int64_t im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

struct BasisTerm {
  std::uint64_t basis = 0;  // bit j is qubit j + 1
  GaussianInteger coefficient;
  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

using SparseState = std::vector<BasisTerm>;

inline constexpr std::size_t kMaxBasisQubits = 14;

struct CodespaceBasis {
  std::size_t num_qubits = 0;
  /// Unnormalized images sum_{s in S} s|j> with terms in ascending basis order.
  std::vector<SparseState> vectors;

  /// Binary label of a computational basis state, qubit 1 first.
  std::string label(std::uint64_t basis) const;
};

/// Applies the group sum to |0>, |1>, ... and keeps the first 2^k nonzero,
/// independent images. Never forms a 2^n x 2^n matrix.
CodespaceBasis codespace_basis(const StabilizerGroup& group);

/// Divides out the gcd of all coefficient parts, so a stabilizer state has
/// unit coefficients.
SparseState primitive(const SparseState& state);

/// "+00000", "-11011", "+i010", ... one term per entry.
std::string format_term(const BasisTerm& term, std::size_t num_qubits);

/// Applies a Pauli operator to a sparse state.
SparseState apply_pauli(const PauliOperator& p, const SparseState& state);

struct CorrectabilityReport {
  bool correctable = true;
  /// First (i, j) in input order with E_i^dagger E_j in N(S) - S.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

CorrectabilityReport check_correctable(const StabilizerGroup& group,
                                       std::span<const PauliOperator> errors);

/// Every Pauli error of weight 1..max_weight on n qubits, lexicographic by
/// support with letters X < Y < Z.
std::vector<PauliOperator> errors_up_to_weight(std::size_t n, std::size_t max_weight);

}  // namespace stabaut

#endif  // STABAUT_CODE_ANALYSIS_H_
