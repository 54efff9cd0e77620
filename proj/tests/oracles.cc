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

#include "oracles.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace oracle {

using stabaut::PauliOperator;
using stabaut::Permutation;
using stabaut::StabilizerGroup;

namespace {

Matrix square(std::initializer_list<Complex> entries) {
  Matrix m{2, std::vector<Complex>(entries)};
  return m;
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r{x.dim * y.dim, std::vector<Complex>(x.dim * y.dim * x.dim * y.dim)};
  for (std::size_t a = 0; a < x.dim; ++a)
    for (std::size_t b = 0; b < x.dim; ++b)
      for (std::size_t c = 0; c < y.dim; ++c)
        for (std::size_t d = 0; d < y.dim; ++d)
          r.at(a * y.dim + c, b * y.dim + d) = x.at(a, b) * y.at(c, d);
  return r;
}

Matrix scaled(Matrix m, Complex s) {
  for (Complex& v : m.a) v *= s;
  return m;
}

const Complex kI{0, 1};

Matrix single(char letter) {
  switch (letter) {
    case 'I': return square({1, 0, 0, 1});
    case 'X': return square({0, 1, 1, 0});
    case 'Y': return square({0, -kI, kI, 0});
    case 'Z': return square({1, 0, 0, -1});
  }
  throw std::invalid_argument("bad letter");
}

std::vector<std::pair<std::string, int>> signed_strings(const StabilizerGroup& g) {
  std::vector<std::pair<std::string, int>> out;
  for (const PauliOperator& p : g.generators()) out.emplace_back(p.letters(), p.sign());
  return out;
}

std::vector<int> images_of(const Permutation& p) { return p.one_based(); }

template <typename Accept>
std::vector<Permutation> scan(std::size_t n, Accept accept) {
  std::vector<std::uint8_t> images(n);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  std::vector<Permutation> out;
  do {
    Permutation p(images);
    if (accept(p)) out.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool twisted_all_in(const std::vector<std::string>& permuted, const std::vector<int>& twist,
                    const SignedSet& set) {
  for (const std::string& s : permuted) {
    std::string t = s;
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = twist_letter(twist[j], t[j]);
    if (!set.contains_letters(t)) return false;
  }
  return true;
}

// Advances a base-6 odometer whose most significant digit is slot 1.
bool next_twist(std::vector<int>& t) {
  for (std::size_t j = t.size(); j-- > 0;) {
    if (++t[j] < 6) return true;
    t[j] = 0;
  }
  return false;
}

}  // namespace

Matrix matmul(const Matrix& x, const Matrix& y) {
  Matrix r{x.dim, std::vector<Complex>(x.dim * x.dim)};
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t k = 0; k < x.dim; ++k) {
      Complex v = x.at(i, k);
      if (v == Complex{}) continue;
      for (std::size_t j = 0; j < x.dim; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

Matrix matrix_of_text(const std::string& text) {
  std::size_t pos = 0;
  Complex scale{1, 0};
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') scale = -scale;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    scale *= kI;
    ++pos;
  }
  Matrix m{1, {Complex{1, 0}}};
  for (; pos < text.size(); ++pos) m = kron(m, single(text[pos]));
  return scaled(m, scale);
}

Matrix matrix_of_bits(const PauliOperator& p) {
  const Matrix x = single('X');
  const Matrix z = single('Z');
  const Matrix id = single('I');
  Matrix m{1, {Complex{1, 0}}};
  for (std::size_t j = 0; j < p.num_qubits(); ++j) {
    Matrix f = id;
    if ((p.x_bits() >> j) & 1) f = matmul(f, x);
    if ((p.z_bits() >> j) & 1) f = matmul(f, z);
    m = kron(m, f);
  }
  Complex phase{1, 0};
  for (unsigned k = 0; k < p.phase_exp() % 4; ++k) phase *= kI;
  return scaled(m, phase);
}

std::vector<std::string> all_letter_strings(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::string> next;
    for (const std::string& s : out)
      for (char c : std::string("IXYZ")) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

std::string permute_letters(const std::vector<int>& one_based_images, const std::string& s) {
  std::string out(s.size(), '?');
  for (std::size_t j = 0; j < s.size(); ++j) out[one_based_images[j] - 1] = s[j];
  return out;
}

char twist_letter(int index, char letter) {
  if (letter == 'I') return 'I';
  // Rows: id, (XY), (XZ), (YZ), (XYZ): X->Y->Z->X, (XZY): X->Z->Y->X.
  static const char* table[6] = {"XYZ", "YXZ", "ZYX", "XZY", "YZX", "ZXY"};
  int col = letter == 'X' ? 0 : letter == 'Y' ? 1 : 2;
  return table[index][col];
}

SignedSet closure(const std::vector<PauliOperator>& generators) {
  SignedSet set;
  if (generators.empty()) return set;
  std::deque<PauliOperator> queue{PauliOperator::identity(generators.front().num_qubits())};
  set.signed_elements.insert({queue.front().letters(), 1});
  while (!queue.empty()) {
    PauliOperator e = queue.front();
    queue.pop_front();
    for (const PauliOperator& g : generators) {
      PauliOperator f = e * g;
      if (set.signed_elements.insert({f.letters(), f.sign()}).second) queue.push_back(f);
    }
  }
  for (const auto& [l, s] : set.signed_elements) set.letters.insert(l);
  return set;
}

std::vector<Permutation> naive_strong(const StabilizerGroup& g) {
  SignedSet set = closure(g.generators());
  auto gens = signed_strings(g);
  return scan(g.num_qubits(), [&](const Permutation& p) {
    auto im = images_of(p);
    for (const auto& [l, s] : gens)
      if (!set.contains_signed(permute_letters(im, l), s)) return false;
    return true;
  });
}

std::vector<Permutation> naive_weak(const StabilizerGroup& g) {
  SignedSet set = closure(g.generators());
  auto gens = signed_strings(g);
  return scan(g.num_qubits(), [&](const Permutation& p) {
    auto im = images_of(p);
    for (const auto& [l, s] : gens)
      if (!set.contains_letters(permute_letters(im, l))) return false;
    return true;
  });
}

std::vector<Permutation> naive_clifford(const StabilizerGroup& g) {
  SignedSet set = closure(g.generators());
  auto gens = signed_strings(g);
  const std::size_t n = g.num_qubits();
  return scan(n, [&](const Permutation& p) {
    auto im = images_of(p);
    std::vector<std::string> permuted;
    for (const auto& [l, s] : gens) permuted.push_back(permute_letters(im, l));
    std::vector<int> twist(n, 0);
    do {
      if (twisted_all_in(permuted, twist, set)) return true;
    } while (next_twist(twist));
    return false;
  });
}

std::optional<std::vector<int>> least_twist(const StabilizerGroup& g, const Permutation& sigma) {
  SignedSet set = closure(g.generators());
  auto im = images_of(sigma);
  std::vector<std::string> permuted;
  for (const auto& [l, s] : signed_strings(g)) permuted.push_back(permute_letters(im, l));
  std::vector<int> twist(g.num_qubits(), 0);
  do {
    if (twisted_all_in(permuted, twist, set)) return twist;
  } while (next_twist(twist));
  return std::nullopt;
}

std::size_t brute_force_distance(const StabilizerGroup& g) {
  SignedSet set = closure(g.generators());
  auto gens = signed_strings(g);
  const std::size_t n = g.num_qubits();
  const bool k_zero = g.num_logical_qubits() == 0;
  std::size_t best = n + 1;
  for (const std::string& s : all_letter_strings(n)) {
    std::size_t w = n - static_cast<std::size_t>(std::count(s.begin(), s.end(), 'I'));
    if (w == 0 || w >= best) continue;
    if (k_zero) {
      if (set.contains_letters(s)) best = w;
      continue;
    }
    bool normalizes = true;
    for (const auto& [l, sign] : gens) {
      int clashes = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (l[j] != 'I' && s[j] != 'I' && l[j] != s[j]) ++clashes;
      if (clashes % 2) {
        normalizes = false;
        break;
      }
    }
    if (normalizes && !set.contains_letters(s)) best = w;
  }
  return best;
}

bool conjugation_matches(const StabilizerGroup& g, const Permutation& sigma,
                         const PauliOperator& gamma) {
  SignedSet set = closure(g.generators());
  auto im = images_of(sigma);
  std::set<std::pair<std::string, int>> conjugated;
  std::set<std::pair<std::string, int>> permuted;
  for (const auto& [l, s] : set.signed_elements) {
    PauliOperator e = stabaut::parse_pauli((s < 0 ? "-" : "") + l);
    PauliOperator c = gamma * e * gamma.adjoint();
    if (!c.has_real_phase()) return false;
    conjugated.insert({c.letters(), c.sign()});
    permuted.insert({permute_letters(im, l), s});
  }
  return conjugated == permuted;
}

bool is_group(const std::vector<Permutation>& elements) {
  if (elements.empty()) return false;
  std::set<Permutation> set(elements.begin(), elements.end());
  if (!set.count(Permutation::identity(elements.front().size()))) return false;
  for (const Permutation& a : elements) {
    if (!set.count(a.inverse())) return false;
    for (const Permutation& b : elements)
      if (!set.count(a * b)) return false;
  }
  return true;
}

}  // namespace oracle
