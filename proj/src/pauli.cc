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

#include "stabaut/pauli.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace stabaut {
namespace {

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_size(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("Pauli operators act on different numbers of qubits: " +
                                std::to_string(p.num_qubits()) + " vs " +
                                std::to_string(q.num_qubits()));
  }
}

// Phase exponent of the +1-sign operator with these letters.
unsigned positive_phase(std::uint64_t x, std::uint64_t z) {
  return static_cast<unsigned>(std::popcount(x & z)) & 3U;
}

// Images of X, Y, Z (indexed through letter_index) under each S3 element.
constexpr std::array<std::array<PauliLetter, 3>, kNumLetterPermutations> kLetterImages = {{
    {PauliLetter::X, PauliLetter::Y, PauliLetter::Z},  // id
    {PauliLetter::Y, PauliLetter::X, PauliLetter::Z},  // (XY)
    {PauliLetter::Z, PauliLetter::Y, PauliLetter::X},  // (XZ)
    {PauliLetter::X, PauliLetter::Z, PauliLetter::Y},  // (YZ)
    {PauliLetter::Y, PauliLetter::Z, PauliLetter::X},  // (XYZ)
    {PauliLetter::Z, PauliLetter::X, PauliLetter::Y},  // (XZY)
}};

constexpr std::array<std::string_view, kNumLetterPermutations> kLetterPermNames = {
    "id", "(XY)", "(XZ)", "(YZ)", "(XYZ)", "(XZY)"};

int letter_index(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::X:
      return 0;
    case PauliLetter::Y:
      return 1;
    case PauliLetter::Z:
      return 2;
    default:
      return -1;
  }
}

}  // namespace

char to_char(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::I:
      return 'I';
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Y:
      return 'Y';
    case PauliLetter::Z:
      return 'Z';
  }
  return '?';
}

PauliOperator::PauliOperator(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                             unsigned phase_exp)
    : x_bits_(x_bits), z_bits_(z_bits), num_qubits_(static_cast<std::uint32_t>(num_qubits)),
      phase_exp_(static_cast<std::uint8_t>(phase_exp & 3U)) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 64], got " +
                                std::to_string(num_qubits));
  }
  if (((x_bits | z_bits) & ~low_mask(num_qubits)) != 0) {
    throw std::invalid_argument("bit vector wider than the qubit count");
  }
}

PauliOperator PauliOperator::identity(std::size_t num_qubits) {
  return PauliOperator(num_qubits, 0, 0, 0);
}

PauliOperator PauliOperator::from_letters(std::string_view letters) {
  PauliOperator p = parse_pauli(letters);
  return p.positive();
}

PauliLetter PauliOperator::letter(std::size_t slot) const {
  unsigned code = static_cast<unsigned>((x_bits_ >> slot) & 1U) |
                  (static_cast<unsigned>((z_bits_ >> slot) & 1U) << 1);
  return static_cast<PauliLetter>(code);
}

std::size_t PauliOperator::num_y() const {
  return static_cast<std::size_t>(std::popcount(x_bits_ & z_bits_));
}

bool PauliOperator::has_real_phase() const {
  return ((phase_exp_ + 4U - positive_phase(x_bits_, z_bits_)) & 1U) == 0;
}

int PauliOperator::sign() const {
  unsigned residual = (phase_exp_ + 4U - positive_phase(x_bits_, z_bits_)) & 3U;
  if (residual == 0) return 1;
  if (residual == 2) return -1;
  throw std::domain_error("operator has an imaginary phase: " + letters());
}

std::string PauliOperator::letters() const {
  std::string out(num_qubits_, 'I');
  for (std::size_t j = 0; j < num_qubits_; ++j) out[j] = to_char(letter(j));
  return out;
}

PauliOperator PauliOperator::negated() const {
  PauliOperator out = *this;
  out.phase_exp_ = static_cast<std::uint8_t>((phase_exp_ + 2U) & 3U);
  return out;
}

PauliOperator PauliOperator::adjoint() const {
  // (i^k X^a Z^b)^dagger = i^-k Z^b X^a = i^-k (-1)^{a.b} X^a Z^b
  PauliOperator out = *this;
  unsigned flip = 2U * static_cast<unsigned>(std::popcount(x_bits_ & z_bits_));
  out.phase_exp_ = static_cast<std::uint8_t>((4U - phase_exp_ + flip) & 3U);
  return out;
}

PauliOperator PauliOperator::positive() const {
  PauliOperator out = *this;
  out.phase_exp_ = static_cast<std::uint8_t>(positive_phase(x_bits_, z_bits_));
  return out;
}

PauliOperator parse_pauli(std::string_view text) {
  unsigned phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  std::string_view body = text.substr(pos);
  if (body.empty()) {
    throw std::invalid_argument("empty Pauli string: '" + std::string(text) + "'");
  }
  if (body.size() > kMaxQubits) {
    throw std::invalid_argument("Pauli string longer than 64 qubits");
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t j = 0; j < body.size(); ++j) {
    std::uint64_t bit = std::uint64_t{1} << j;
    switch (body[j]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        phase += 1;
        break;
      default:
        throw std::invalid_argument("illegal character '" + std::string(1, body[j]) +
                                    "' in Pauli string '" + std::string(text) + "'");
    }
  }
  return PauliOperator(body.size(), x, z, phase);
}

std::string serialize_pauli(const PauliOperator& p) {
  static const char* const kPrefix[4] = {"", "i", "-", "-i"};
  unsigned residual = (p.phase_exp() + 4U - positive_phase(p.x_bits(), p.z_bits())) & 3U;
  return kPrefix[residual] + p.letters();
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  require_same_size(p, q);
  // Moving q's X factors left past p's Z factors costs (-1)^{b_p . a_q}.
  unsigned swaps = static_cast<unsigned>(std::popcount(p.z_bits() & q.x_bits()));
  return PauliOperator(p.num_qubits(), p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits(),
                       p.phase_exp() + q.phase_exp() + 2U * swaps);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  require_same_size(p, q);
  int form = std::popcount(p.x_bits() & q.z_bits()) + std::popcount(p.z_bits() & q.x_bits());
  return (form & 1) == 0;
}

std::size_t weight(const PauliOperator& p) {
  return static_cast<std::size_t>(std::popcount(p.x_bits() | p.z_bits()));
}

int complexity(std::span<const PauliOperator> ops) {
  if (ops.empty()) throw std::invalid_argument("complexity of an empty operator set");
  unsigned seen = 0;
  std::size_t n = ops.front().num_qubits();
  for (const PauliOperator& p : ops) {
    if (p.num_qubits() != n) throw std::invalid_argument("operators of different sizes");
    for (std::size_t j = 0; j < n; ++j) seen |= 1U << static_cast<unsigned>(p.letter(j));
  }
  return std::popcount(seen);
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxQubits) {
    throw std::invalid_argument("permutation size must be in [1, 64]");
  }
  std::uint64_t seen = 0;
  for (std::uint8_t v : images_) {
    if (v >= images_.size() || (seen >> v) & 1U) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen |= std::uint64_t{1} << v;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint8_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<std::uint8_t> zero_based;
  zero_based.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size())) {
      throw std::invalid_argument("permutation image out of range: " + std::to_string(v));
    }
    zero_based.push_back(static_cast<std::uint8_t>(v - 1));
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t n) {
  if (n == 0 || n > kMaxQubits) throw std::invalid_argument("permutation size must be in [1, 64]");
  Permutation result = identity(n);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  std::vector<std::vector<int>> cycles;
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw std::invalid_argument("expected '(' in cycle notation: '" + std::string(text) + "'");
    }
    ++pos;
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("unterminated cycle in '" + std::string(text) + "'");
    }
    std::string_view body = text.substr(pos, close - pos);
    pos = close + 1;
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ','))
        ++i;
      std::size_t start = i;
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])) && body[i] != ',')
        ++i;
      if (i > start) tokens.push_back(body.substr(start, i - start));
    }
    std::vector<int> cycle;
    bool compact = tokens.size() == 1 && tokens[0].size() > 1 && n <= 9;
    for (std::string_view tok : tokens) {
      if (compact) {
        for (char c : tok) {
          if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("bad slot in cycle: '" + std::string(tok) + "'");
          }
          cycle.push_back(c - '0');
        }
        continue;
      }
      int v = 0;
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw std::invalid_argument("bad slot in cycle: '" + std::string(tok) + "'");
        }
        v = v * 10 + (c - '0');
        if (v > 1000) break;
      }
      cycle.push_back(v);
    }
    for (std::size_t a = 0; a < cycle.size(); ++a) {
      if (cycle[a] < 1 || cycle[a] > static_cast<int>(n)) {
        throw std::invalid_argument("slot " + std::to_string(cycle[a]) + " out of range 1.." +
                                    std::to_string(n));
      }
      for (std::size_t b = 0; b < a; ++b) {
        if (cycle[a] == cycle[b]) {
          throw std::invalid_argument("repeated slot " + std::to_string(cycle[a]) + " in cycle");
        }
      }
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  // Juxtaposed cycles compose right to left.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<std::uint8_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>(i);
    const std::vector<int>& cycle = *it;
    for (std::size_t a = 0; a < cycle.size(); ++a) {
      images[static_cast<std::size_t>(cycle[a] - 1)] =
          static_cast<std::uint8_t>(cycle[(a + 1) % cycle.size()] - 1);
    }
    result = Permutation(std::move(images)) * result;
  }
  return result;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::longest_cycle() const {
  std::size_t best = 0;
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if ((seen >> i) & 1U) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !((seen >> j) & 1U); j = images_[j]) {
      seen |= std::uint64_t{1} << j;
      ++len;
    }
    best = std::max(best, len);
  }
  return best;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if ((seen >> i) & 1U || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !((seen >> j) & 1U); j = images_[j]) {
      seen |= std::uint64_t{1} << j;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<std::uint8_t> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = static_cast<std::uint8_t>(a(b(i)));
  return Permutation(std::move(images));
}

PauliOperator apply_permutation(const Permutation& sigma, const PauliOperator& p) {
  if (sigma.size() != p.num_qubits()) {
    throw std::invalid_argument("permutation size " + std::to_string(sigma.size()) +
                                " does not match operator size " +
                                std::to_string(p.num_qubits()));
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    std::uint64_t target = std::uint64_t{1} << sigma(j);
    if ((p.x_bits() >> j) & 1U) x |= target;
    if ((p.z_bits() >> j) & 1U) z |= target;
  }
  return PauliOperator(p.num_qubits(), x, z, p.phase_exp());
}

// ---------------------------------------------------------------------------
// Letter permutations and twists

PauliLetter apply(LetterPermutation perm, PauliLetter letter) {
  int idx = letter_index(letter);
  if (idx < 0) return PauliLetter::I;
  return kLetterImages[static_cast<std::size_t>(perm)][static_cast<std::size_t>(idx)];
}

std::string_view to_string(LetterPermutation perm) {
  return kLetterPermNames[static_cast<std::size_t>(perm)];
}

LetterPermutation parse_letter_permutation(std::string_view text) {
  if (text == "()" || text == "1" || text == "(1)") return LetterPermutation::id;
  for (std::size_t i = 0; i < kNumLetterPermutations; ++i) {
    if (kLetterPermNames[i] == text) return static_cast<LetterPermutation>(i);
  }
  // Cycles may start at any letter: (YX), (ZXY), ...
  if (text.size() >= 4 && text.front() == '(' && text.back() == ')') {
    std::string_view body = text.substr(1, text.size() - 2);
    std::array<PauliLetter, 3> images = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
    auto from_char = [](char c) -> int {
      return c == 'X' ? 0 : c == 'Y' ? 1 : c == 'Z' ? 2 : -1;
    };
    constexpr std::array<PauliLetter, 3> kLetters = {PauliLetter::X, PauliLetter::Y,
                                                     PauliLetter::Z};
    bool ok = body.size() == 2 || body.size() == 3;
    for (std::size_t a = 0; ok && a < body.size(); ++a) {
      int from = from_char(body[a]);
      int to = from_char(body[(a + 1) % body.size()]);
      ok = from >= 0 && to >= 0 && from != to;
      if (ok) images[static_cast<std::size_t>(from)] = kLetters[static_cast<std::size_t>(to)];
    }
    if (ok) {
      for (std::size_t i = 0; i < kNumLetterPermutations; ++i) {
        if (kLetterImages[i] == images) return static_cast<LetterPermutation>(i);
      }
    }
  }
  throw std::invalid_argument("not a permutation of {X,Y,Z}: '" + std::string(text) + "'");
}

bool LocalCliffordTwist::is_identity() const {
  return std::all_of(slots_.begin(), slots_.end(),
                     [](LetterPermutation p) { return p == LetterPermutation::id; });
}

std::string LocalCliffordTwist::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < slots_.size(); ++j) {
    if (j) out += ' ';
    out += stabaut::to_string(slots_[j]);
  }
  return out;
}

LocalCliffordTwist LocalCliffordTwist::parse(std::string_view text) {
  std::vector<LetterPermutation> slots;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',')
      ++i;
    if (i > start) slots.push_back(parse_letter_permutation(text.substr(start, i - start)));
  }
  return LocalCliffordTwist(std::move(slots));
}

PauliOperator apply_twist(const LocalCliffordTwist& rho, const PauliOperator& p) {
  if (rho.size() != p.num_qubits()) {
    throw std::invalid_argument("twist size " + std::to_string(rho.size()) +
                                " does not match operator size " +
                                std::to_string(p.num_qubits()));
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    auto code = static_cast<std::uint64_t>(apply(rho[j], p.letter(j)));
    x |= (code & 1U) << j;
    z |= ((code >> 1) & 1U) << j;
  }
  return PauliOperator(p.num_qubits(), x, z, positive_phase(x, z));
}

}  // namespace stabaut
