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

#include "stabaut/code_analysis.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace stabaut {
namespace {

constexpr std::uint64_t kLetterX = 1;  // PauliLetter codes in X < Y < Z order
constexpr std::uint64_t kLetterY = 3;
constexpr std::uint64_t kLetterZ = 2;
constexpr std::uint64_t kLetterOrder[3] = {kLetterX, kLetterY, kLetterZ};

// Advances `combo` to the next w-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  std::size_t w = combo.size();
  for (std::size_t i = w; i-- > 0;) {
    if (combo[i] < n - w + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < w; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Calls visit(p) for each of the 3^w letter assignments on `combo`, with the
// first position most significant. Stops early when visit returns true.
template <typename Visit>
bool for_each_letters(std::size_t n, const std::vector<std::size_t>& combo, Visit&& visit) {
  std::size_t w = combo.size();
  std::vector<unsigned> digits(w, 0);
  while (true) {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < w; ++i) {
      std::uint64_t code = kLetterOrder[digits[i]];
      x |= (code & 1U) << combo[i];
      z |= ((code >> 1) & 1U) << combo[i];
    }
    if (visit(PauliOperator(n, x, z, 0).positive())) return true;
    std::size_t i = w;
    while (i > 0 && digits[i - 1] == 2) digits[--i] = 0;
    if (i == 0) return false;
    ++digits[i - 1];
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

GaussianInteger times_i_power(GaussianInteger v, unsigned k) {
  switch (k & 3U) {
    case 0:
      return v;
    case 1:
      return {-v.im, v.re};
    case 2:
      return {-v.re, -v.im};
    default:
      return {v.im, -v.re};
  }
}

}  // namespace

CodeParameters distance(const StabilizerGroup& group, DistanceOptions options) {
  const std::size_t n = group.num_qubits();
  CodeParameters params;
  params.n = n;
  params.k = group.num_logical_qubits();
  params.degenerate_convention = params.k == 0;

  auto is_hit = [&](const PauliOperator& p) {
    bool in_span = group.decompose(p).has_value();
    if (params.degenerate_convention) return in_span;
    return !in_span && group.in_normalizer(p);
  };

  const unsigned threads = resolve_threads(options.threads);
  constexpr std::size_t kBatch = 2048;
  for (std::size_t w = 1; w <= n; ++w) {
    std::vector<std::size_t> combo(w);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    bool more = true;
    while (more) {
      std::vector<std::vector<std::size_t>> batch;
      batch.reserve(kBatch);
      while (more && batch.size() < kBatch) {
        batch.push_back(combo);
        more = next_combination(combo, n);
      }
      std::vector<std::optional<PauliOperator>> hits(batch.size());
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> best{batch.size()};
      auto worker = [&] {
        for (std::size_t i = next++; i < batch.size(); i = next++) {
          if (i > best.load()) break;
          for_each_letters(n, batch[i], [&](const PauliOperator& p) {
            if (!is_hit(p)) return false;
            hits[i] = p;
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return true;
          });
        }
      };
      if (threads <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
      }
      // Every index below `best` was fully scanned, so the smallest hit is
      // the lexicographic minimum regardless of scheduling.
      for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i]) {
          params.d = w;
          params.witness = *hits[i];
          return params;
        }
      }
    }
  }
  throw std::logic_error("distance search found no operator; the group is inconsistent");
}

std::string CodespaceBasis::label(std::uint64_t basis) const {
  std::string out(num_qubits, '0');
  for (std::size_t j = 0; j < num_qubits; ++j) {
    if ((basis >> j) & 1U) out[j] = '1';
  }
  return out;
}

CodespaceBasis codespace_basis(const StabilizerGroup& group) {
  const std::size_t n = group.num_qubits();
  if (n > kMaxBasisQubits) {
    throw std::length_error("codespace basis limited to " + std::to_string(kMaxBasisQubits) +
                            " qubits, got " + std::to_string(n));
  }
  const std::vector<PauliOperator> elements = group.enumerate_elements();
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t wanted = std::size_t{1} << group.num_logical_qubits();

  CodespaceBasis basis;
  basis.num_qubits = n;
  std::vector<GaussianInteger> amplitude(dim);
  std::vector<bool> covered(dim, false);
  for (std::uint64_t j = 0; j < dim && basis.vectors.size() < wanted; ++j) {
    if (covered[j]) continue;
    for (const PauliOperator& s : elements) {
      // X^a Z^b |j> = (-1)^{b.j} |j ^ a>
      unsigned k = s.phase_exp() + 2U * static_cast<unsigned>(std::popcount(s.z_bits() & j));
      GaussianInteger term = times_i_power({1, 0}, k);
      GaussianInteger& slot = amplitude[j ^ s.x_bits()];
      slot.re += term.re;
      slot.im += term.im;
    }
    // Images of one X-coset are proportional, images of different cosets
    // have disjoint support.
    SparseState state;
    for (const PauliOperator& s : elements) {
      std::uint64_t target = j ^ s.x_bits();
      if (covered[target]) continue;
      covered[target] = true;
      if (!amplitude[target].is_zero()) state.push_back({target, amplitude[target]});
      amplitude[target] = {};
    }
    if (state.empty()) continue;
    std::sort(state.begin(), state.end(),
              [](const BasisTerm& a, const BasisTerm& b) { return a.basis < b.basis; });
    basis.vectors.push_back(std::move(state));
  }
  if (basis.vectors.size() != wanted) {
    throw std::logic_error("found " + std::to_string(basis.vectors.size()) +
                           " codespace vectors, expected " + std::to_string(wanted));
  }
  return basis;
}

SparseState primitive(const SparseState& state) {
  std::int64_t g = 0;
  for (const BasisTerm& t : state) {
    g = std::gcd(g, std::gcd(t.coefficient.re, t.coefficient.im));
  }
  if (g <= 1) return state;
  SparseState out = state;
  for (BasisTerm& t : out) {
    t.coefficient.re /= g;
    t.coefficient.im /= g;
  }
  return out;
}

std::string format_term(const BasisTerm& term, std::size_t num_qubits) {
  std::string bits(num_qubits, '0');
  for (std::size_t j = 0; j < num_qubits; ++j) {
    if ((term.basis >> j) & 1U) bits[j] = '1';
  }
  const GaussianInteger& c = term.coefficient;
  if (c.im == 0 && (c.re == 1 || c.re == -1)) return (c.re > 0 ? "+" : "-") + bits;
  if (c.re == 0 && (c.im == 1 || c.im == -1)) return (c.im > 0 ? "+i" : "-i") + bits;
  std::string coeff = "(" + std::to_string(c.re) + (c.im < 0 ? "" : "+") + std::to_string(c.im) + "i)";
  return "+" + coeff + bits;
}

SparseState apply_pauli(const PauliOperator& p, const SparseState& state) {
  SparseState out;
  out.reserve(state.size());
  for (const BasisTerm& t : state) {
    unsigned k = p.phase_exp() + 2U * static_cast<unsigned>(std::popcount(p.z_bits() & t.basis));
    out.push_back({t.basis ^ p.x_bits(), times_i_power(t.coefficient, k)});
  }
  std::sort(out.begin(), out.end(),
            [](const BasisTerm& a, const BasisTerm& b) { return a.basis < b.basis; });
  return out;
}

CorrectabilityReport check_correctable(const StabilizerGroup& group,
                                       std::span<const PauliOperator> errors) {
  for (std::size_t i = 0; i < errors.size(); ++i) {
    PauliOperator left = errors[i].adjoint();
    for (std::size_t j = 0; j < errors.size(); ++j) {
      PauliOperator e = multiply(left, errors[j]);
      if (group.in_normalizer(e) && !group.decompose(e).has_value()) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {};
}

std::vector<PauliOperator> errors_up_to_weight(std::size_t n, std::size_t max_weight) {
  std::vector<PauliOperator> out;
  for (std::size_t w = 1; w <= std::min(n, max_weight); ++w) {
    std::vector<std::size_t> combo(w);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    do {
      for_each_letters(n, combo, [&](const PauliOperator& p) {
        out.push_back(p);
        return false;
      });
    } while (next_combination(combo, n));
  }
  return out;
}

}  // namespace stabaut
