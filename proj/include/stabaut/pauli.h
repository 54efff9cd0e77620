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

#ifndef STABAUT_PAULI_H_
#define STABAUT_PAULI_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabaut {

/// Largest supported qubit count. Every operator fits in one machine word
/// per bit vector.
inline constexpr std::size_t kMaxQubits = 64;

/// Single-qubit Pauli letter. Bit 0 is the X part and bit 1 the Z part of
/// the check-matrix column, so Y = X|Z.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(PauliLetter letter);

/// An n-qubit Pauli operator i^phase_exp * X^{a_1}Z^{b_1} (x) ... (x) X^{a_n}Z^{b_n}.
///
/// The (a|b) pair is the check-matrix row of the operator. Slot j (0-based)
/// lives in bit j of both bit vectors. Y is stored as X|Z with one factor of
/// i absorbed into the phase, since Y = iXZ.
class PauliOperator {
 public:
  PauliOperator() = default;
  PauliOperator(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                unsigned phase_exp = 0);

  static PauliOperator identity(std::size_t num_qubits);
  /// Positive-sign operator with the given letter string (no sign prefix).
  static PauliOperator from_letters(std::string_view letters);

  std::size_t num_qubits() const { return num_qubits_; }
  std::uint64_t x_bits() const { return x_bits_; }
  std::uint64_t z_bits() const { return z_bits_; }
  unsigned phase_exp() const { return phase_exp_; }

  PauliLetter letter(std::size_t slot) const;
  std::size_t num_y() const;
  bool is_identity_letters() const { return (x_bits_ | z_bits_) == 0; }

  /// True when the operator is Hermitian, i.e. its overall scalar is +1 or -1.
  bool has_real_phase() const;
  /// +1 or -1. Throws std::domain_error when the phase is imaginary.
  int sign() const;

  /// Letter string without sign, e.g. "XIZ".
  std::string letters() const;
  bool same_letters(const PauliOperator& other) const {
    return num_qubits_ == other.num_qubits_ && x_bits_ == other.x_bits_ &&
           z_bits_ == other.z_bits_;
  }

  PauliOperator negated() const;
  PauliOperator adjoint() const;
  /// The +1-sign representative with the same letters.
  PauliOperator positive() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  std::uint64_t x_bits_ = 0;
  std::uint64_t z_bits_ = 0;
  std::uint32_t num_qubits_ = 0;
  std::uint8_t phase_exp_ = 0;
};

/// Parses `['-']['i']? {I|X|Y|Z}+`. Throws std::invalid_argument.
PauliOperator parse_pauli(std::string_view text);

/// Inverse of parse_pauli for Hermitian operators ("-ZZX", "YYI").
/// Throws std::domain_error when the residual phase is imaginary.
std::string serialize_pauli(const PauliOperator& p);

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) {
  return multiply(p, q);
}

/// Symplectic inner product of the two check-matrix rows.
bool commutes(const PauliOperator& p, const PauliOperator& q);

std::size_t weight(const PauliOperator& p);

/// Number of distinct letters (I, X, Y, Z) used across all slots of all
/// operators; between 1 and 4.
int complexity(std::span<const PauliOperator> ops);

/// Bijection on qubit slots. Stored 0-based; printed and parsed 1-based in
/// cycle notation.
class Permutation {
 public:
  Permutation() = default;
  /// images[i] is the 0-based image of slot i. Throws when not a bijection.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t n);
  static Permutation from_one_based(std::span<const int> images);
  /// Parses juxtaposed cycles such as "(1 3 5)(2 6 4)". Fixed points may be
  /// omitted; "()" and "" are the identity. When n <= 9 a cycle may also be
  /// written without separators, e.g. "(12345)".
  static Permutation parse_cycles(std::string_view text, std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t slot) const { return images_[slot]; }
  const std::vector<std::uint8_t>& images() const { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t longest_cycle() const;
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// Composition (a * b)(i) = a(b(i)): b acts first.
Permutation operator*(const Permutation& a, const Permutation& b);

/// Moves tensor factor j of p to slot sigma(j). The phase is unchanged.
PauliOperator apply_permutation(const Permutation& sigma, const PauliOperator& p);

/// Element of S3 acting on the letters {X, Y, Z}; I is always fixed.
/// Declaration order is the tie-break order used for twist witnesses.
/// Cycles follow the usual convention: (XYZ) sends X to Y, Y to Z, Z to X.
enum class LetterPermutation : std::uint8_t { id, xy, xz, yz, xyz, xzy };

inline constexpr std::size_t kNumLetterPermutations = 6;

PauliLetter apply(LetterPermutation perm, PauliLetter letter);
std::string_view to_string(LetterPermutation perm);
LetterPermutation parse_letter_permutation(std::string_view text);

/// One letter permutation per slot: an element of S3^n.
class LocalCliffordTwist {
 public:
  LocalCliffordTwist() = default;
  explicit LocalCliffordTwist(std::vector<LetterPermutation> slots) : slots_(std::move(slots)) {}

  static LocalCliffordTwist identity(std::size_t n) {
    return LocalCliffordTwist(std::vector<LetterPermutation>(n, LetterPermutation::id));
  }

  std::size_t size() const { return slots_.size(); }
  LetterPermutation operator[](std::size_t slot) const { return slots_[slot]; }
  const std::vector<LetterPermutation>& slots() const { return slots_; }
  bool is_identity() const;

  /// Space separated, e.g. "(YZ) (YZ) (XZ) (XY) (XZ)"; identity slots print "id".
  std::string to_string() const;
  static LocalCliffordTwist parse(std::string_view text);

  friend bool operator==(const LocalCliffordTwist&, const LocalCliffordTwist&) = default;
  friend auto operator<=>(const LocalCliffordTwist&, const LocalCliffordTwist&) = default;

 private:
  std::vector<LetterPermutation> slots_;
};

/// Applies the per-slot letter permutations. The result carries the
/// positive sign: twists act on operators only up to sign.
PauliOperator apply_twist(const LocalCliffordTwist& rho, const PauliOperator& p);

}  // namespace stabaut

#endif  // STABAUT_PAULI_H_
