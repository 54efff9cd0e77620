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

#include "stabaut/automorphism.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace stabaut {
namespace {

// Letter code (I=0, X=1, Z=2, Y=3) to index in {X, Y, Z}.
constexpr std::array<int, 4> kLetterIndex = {-1, 0, 2, 1};

// Images of X, Y, Z under each LetterPermutation, as indices into {X, Y, Z}.
constexpr std::array<std::array<std::int8_t, 3>, kNumLetterPermutations> kPermIndex = {{
    {0, 1, 2},
    {1, 0, 2},
    {2, 1, 0},
    {0, 2, 1},
    {1, 2, 0},
    {2, 0, 1},
}};

inline unsigned code_at(std::uint64_t x, std::uint64_t z, std::size_t slot) {
  return static_cast<unsigned>((x >> slot) & 1U) | (static_cast<unsigned>((z >> slot) & 1U) << 1);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    const auto& im = p.images();
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(im.data()), im.size()));
  }
};

void require_size(const StabilizerGroup& group, const Permutation& sigma) {
  if (sigma.size() != group.num_qubits()) {
    throw std::invalid_argument("permutation acts on " + std::to_string(sigma.size()) +
                                " slots but the code has " + std::to_string(group.num_qubits()) +
                                " qubits");
  }
}

std::vector<PauliOperator> permuted_generators(const StabilizerGroup& group,
                                               const Permutation& sigma) {
  std::vector<PauliOperator> out;
  out.reserve(group.num_generators());
  for (const PauliOperator& g : group.generators()) out.push_back(apply_permutation(sigma, g));
  return out;
}

// Letters and signs of all 2^m elements of S, plus a bucket of element
// indices per support pattern.
struct ElementTable {
  std::size_t n = 0;
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> z;
  std::vector<int> sign;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_support;

  explicit ElementTable(const StabilizerGroup& group) : n(group.num_qubits()) {
    std::vector<PauliOperator> elements = group.enumerate_elements();
    x.reserve(elements.size());
    z.reserve(elements.size());
    sign.reserve(elements.size());
    for (std::size_t c = 0; c < elements.size(); ++c) {
      x.push_back(elements[c].x_bits());
      z.push_back(elements[c].z_bits());
      sign.push_back(elements[c].sign());
      by_support[elements[c].x_bits() | elements[c].z_bits()].push_back(
          static_cast<std::uint32_t>(c));
    }
  }
};

// Backtracking over target elements for each permuted generator, keeping a
// partial injective letter map per slot. One instance per thread.
class TwistSolver {
 public:
  explicit TwistSolver(const ElementTable& table) : table_(table), fwd_(table.n), inv_(table.n) {}

  bool exists(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> zs) {
    if (!prepare(xs, zs)) return false;
    reset_maps();
    return assign(0);
  }

  std::optional<LocalCliffordTwist> least(std::span<const std::uint64_t> xs,
                                          std::span<const std::uint64_t> zs) {
    if (!exists(xs, zs)) return std::nullopt;
    std::uint64_t touched = 0;
    for (const Target& t : targets_) touched |= t.support;
    std::vector<LetterPermutation> slots(table_.n, LetterPermutation::id);
    for (std::size_t j = 0; j < table_.n; ++j) {
      if (!((touched >> j) & 1U)) continue;
      bool placed = false;
      for (std::size_t p = 0; p < kNumLetterPermutations && !placed; ++p) {
        slots[j] = static_cast<LetterPermutation>(p);
        reset_maps();
        for (std::size_t v = 0; v <= j; ++v) fix_slot(v, slots[v]);
        placed = assign(0);
      }
      if (!placed) throw InternalInconsistency("twist prefix search lost a feasible solution");
    }
    return LocalCliffordTwist(std::move(slots));
  }

 private:
  struct Target {
    std::uint64_t x;
    std::uint64_t z;
    std::uint64_t support;
    const std::vector<std::uint32_t>* candidates;
  };
  struct Change {
    std::uint8_t slot;
    std::int8_t from;
    std::int8_t to;
  };
  using LetterMap = std::array<std::int8_t, 3>;

  bool prepare(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> zs) {
    targets_.clear();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::uint64_t support = xs[i] | zs[i];
      auto it = table_.by_support.find(support);
      if (it == table_.by_support.end()) return false;
      targets_.push_back({xs[i], zs[i], support, &it->second});
    }
    std::stable_sort(targets_.begin(), targets_.end(), [](const Target& a, const Target& b) {
      return a.candidates->size() < b.candidates->size();
    });
    return true;
  }

  void reset_maps() {
    for (std::size_t v = 0; v < table_.n; ++v) {
      fwd_[v] = {-1, -1, -1};
      inv_[v] = {-1, -1, -1};
    }
    log_.clear();
  }

  void fix_slot(std::size_t v, LetterPermutation p) {
    for (int a = 0; a < 3; ++a) {
      std::int8_t b = kPermIndex[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)];
      fwd_[v][static_cast<std::size_t>(a)] = b;
      inv_[v][static_cast<std::size_t>(b)] = static_cast<std::int8_t>(a);
    }
  }

  bool assign(std::size_t depth) {
    if (depth == targets_.size()) return true;
    const Target& t = targets_[depth];
    for (std::uint32_t c : *t.candidates) {
      std::size_t mark = log_.size();
      bool ok = true;
      for (std::uint64_t sup = t.support; sup != 0 && ok; sup &= sup - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(sup));
        auto a = static_cast<std::int8_t>(kLetterIndex[code_at(t.x, t.z, v)]);
        auto b = static_cast<std::int8_t>(kLetterIndex[code_at(table_.x[c], table_.z[c], v)]);
        std::int8_t& f = fwd_[v][static_cast<std::size_t>(a)];
        std::int8_t& r = inv_[v][static_cast<std::size_t>(b)];
        if (f == b) continue;
        if (f == -1 && r == -1) {
          f = b;
          r = a;
          log_.push_back({static_cast<std::uint8_t>(v), a, b});
        } else {
          ok = false;
        }
      }
      if (ok && assign(depth + 1)) return true;
      while (log_.size() > mark) {
        const Change& ch = log_.back();
        fwd_[ch.slot][static_cast<std::size_t>(ch.from)] = -1;
        inv_[ch.slot][static_cast<std::size_t>(ch.to)] = -1;
        log_.pop_back();
      }
    }
    return false;
  }

  const ElementTable& table_;
  std::vector<Target> targets_;
  std::vector<LetterMap> fwd_;
  std::vector<LetterMap> inv_;
  std::vector<Change> log_;
};

std::uint64_t pack(const std::uint8_t* images, std::size_t n) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < n; ++i) key |= static_cast<std::uint64_t>(images[i]) << (4 * i);
  return key;
}

std::uint64_t compose_packed(std::uint64_t a, std::uint64_t b, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t bi = (b >> (4 * i)) & 0xF;
    out |= ((a >> (4 * bi)) & 0xF) << (4 * i);
  }
  return out;
}

// Shared read-only state of one search.
class SearchEngine {
 public:
  SearchEngine(const StabilizerGroup& group, AutomorphismKind kind)
      : kind_(kind), n_(group.num_qubits()), m_(group.num_generators()), table_(group) {
    const std::size_t count = table_.x.size();
    words_ = (count + 63) / 64;
    masks_.assign(n_ * 4 * words_, 0);
    for (std::size_t c = 0; c < count; ++c) {
      for (std::size_t v = 0; v < n_; ++v) {
        mask(v, letter_class(code_at(table_.x[c], table_.z[c], v)))[c / 64] |=
            std::uint64_t{1} << (c % 64);
      }
    }
    for (const PauliOperator& g : group.generators()) {
      gen_x_.push_back(g.x_bits());
      gen_z_.push_back(g.z_bits());
      gen_sign_.push_back(g.sign());
    }
    // Images of a generator keep its letter counts (strong, weak) or its
    // weight (clifford).
    initial_.assign(m_ * words_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      auto signature = [&](std::uint64_t x, std::uint64_t z) {
        if (kind_ == AutomorphismKind::clifford) return std::array<int, 3>{std::popcount(x | z), 0, 0};
        return std::array<int, 3>{std::popcount(x & ~z), std::popcount(x & z), std::popcount(z & ~x)};
      };
      auto want = signature(gen_x_[i], gen_z_[i]);
      for (std::size_t c = 0; c < count; ++c) {
        if (signature(table_.x[c], table_.z[c]) == want) {
          initial_[i * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
        }
      }
    }
  }

  unsigned letter_class(unsigned code) const {
    if (kind_ == AutomorphismKind::clifford) return code == 0 ? 0U : 1U;
    return code;
  }
  std::uint64_t* mask(std::size_t slot, unsigned cls) { return &masks_[(slot * 4 + cls) * words_]; }
  const std::uint64_t* mask(std::size_t slot, unsigned cls) const {
    return &masks_[(slot * 4 + cls) * words_];
  }

  AutomorphismKind kind_;
  std::size_t n_;
  std::size_t m_;
  std::size_t words_ = 0;
  ElementTable table_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> initial_;
  std::vector<std::uint64_t> gen_x_;
  std::vector<std::uint64_t> gen_z_;
  std::vector<int> gen_sign_;
};

struct SharedProgress {
  std::mutex mutex;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> pruned{0};
  std::atomic<std::uint64_t> leaves{0};
  std::atomic<std::uint64_t> found{0};
  std::uint64_t next_report = 0;
  const SearchOptions* options = nullptr;
};

class SearchWorker {
 public:
  SearchWorker(const SearchEngine& engine, SharedProgress& shared)
      : e_(engine), shared_(shared), solver_(engine.table_),
        stack_((engine.n_ + 1) * engine.m_ * engine.words_), images_(engine.n_),
        image_x_(engine.m_), image_z_(engine.m_) {
    std::copy(e_.initial_.begin(), e_.initial_.end(), stack_.begin());
  }

  void run_root(std::size_t first_image) {
    used_ = 0;
    descend(0, first_image);
    flush();
  }

  std::vector<Permutation>& found() { return found_; }

 private:
  // Tries slot `depth` -> `v`; recurses when every generator keeps a candidate.
  void descend(std::size_t depth, std::size_t v) {
    ++nodes_;
    const std::size_t block = e_.m_ * e_.words_;
    const std::uint64_t* prev = &stack_[depth * block];
    std::uint64_t* next = &stack_[(depth + 1) * block];
    for (std::size_t i = 0; i < e_.m_; ++i) {
      const std::uint64_t* mk = e_.mask(v, e_.letter_class(code_at(e_.gen_x_[i], e_.gen_z_[i], depth)));
      std::uint64_t any = 0;
      for (std::size_t w = 0; w < e_.words_; ++w) {
        next[i * e_.words_ + w] = prev[i * e_.words_ + w] & mk[w];
        any |= next[i * e_.words_ + w];
      }
      if (any == 0) {
        ++pruned_;
        maybe_report();
        return;
      }
    }
    images_[depth] = static_cast<std::uint8_t>(v);
    used_ |= std::uint64_t{1} << v;
    if (depth + 1 == e_.n_) {
      leaf(next);
    } else {
      for (std::size_t u = 0; u < e_.n_; ++u) {
        if (!((used_ >> u) & 1U)) descend(depth + 1, u);
      }
    }
    used_ &= ~(std::uint64_t{1} << v);
    maybe_report();
  }

  void leaf(const std::uint64_t* candidates) {
    ++leaves_;
    bool member = true;
    switch (e_.kind_) {
      case AutomorphismKind::strong:
        for (std::size_t i = 0; i < e_.m_ && member; ++i) {
          const std::uint64_t* cand = candidates + i * e_.words_;
          std::size_t w = 0;
          while (cand[w] == 0) ++w;
          std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(cand[w]));
          member = e_.table_.sign[c] == e_.gen_sign_[i];
        }
        break;
      case AutomorphismKind::weak:
        break;  // letters of every image already matched an element of S
      case AutomorphismKind::clifford:
        member = clifford_leaf();
        break;
    }
    if (member) {
      found_.push_back(Permutation(images_));
      ++found_count_;
    }
  }

  bool clifford_leaf() {
    const std::size_t n = e_.n_;
    std::uint64_t key = pack(images_.data(), n);
    if (cache_enabled_ && known_.contains(key)) return true;
    for (std::size_t i = 0; i < e_.m_; ++i) {
      std::uint64_t x = 0;
      std::uint64_t z = 0;
      for (std::size_t j = 0; j < n; ++j) {
        x |= ((e_.gen_x_[i] >> j) & 1U) << images_[j];
        z |= ((e_.gen_z_[i] >> j) & 1U) << images_[j];
      }
      image_x_[i] = x;
      image_z_[i] = z;
    }
    if (!solver_.exists(image_x_, image_z_)) return false;
    if (cache_enabled_) extend_known(key);
    return true;
  }

  // Members already implied by group closure skip the twist search.
  void extend_known(std::uint64_t key) {
    constexpr std::size_t kCacheLimit = std::size_t{1} << 18;
    const std::size_t n = e_.n_;
    known_gens_.push_back(key);
    std::vector<std::uint64_t> queue;
    if (known_.empty()) {
      std::uint64_t id = 0;
      for (std::size_t i = 0; i < n; ++i) id |= static_cast<std::uint64_t>(i) << (4 * i);
      known_.insert(id);
    }
    queue.assign(known_.begin(), known_.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::uint64_t g : known_gens_) {
        std::uint64_t prod = compose_packed(queue[head], g, n);
        if (known_.insert(prod).second) {
          queue.push_back(prod);
          if (known_.size() > kCacheLimit) {
            cache_enabled_ = false;
            known_.clear();
            return;
          }
        }
      }
    }
  }

  void maybe_report() {
    if (nodes_ + pruned_ < 65536) return;
    flush();
  }

  void flush() {
    shared_.nodes += nodes_;
    shared_.pruned += pruned_;
    shared_.leaves += leaves_;
    shared_.found += found_count_;
    nodes_ = pruned_ = leaves_ = found_count_ = 0;
    const SearchOptions& opt = *shared_.options;
    if (!opt.progress) return;
    std::uint64_t total = shared_.nodes.load();
    std::lock_guard<std::mutex> lock(shared_.mutex);
    if (total < shared_.next_report) return;
    shared_.next_report = total + opt.progress_interval;
    opt.progress(SearchProgress{total, shared_.pruned.load(), shared_.leaves.load(),
                                shared_.found.load()});
  }

  const SearchEngine& e_;
  SharedProgress& shared_;
  TwistSolver solver_;
  std::vector<std::uint64_t> stack_;
  std::vector<std::uint8_t> images_;
  std::vector<std::uint64_t> image_x_;
  std::vector<std::uint64_t> image_z_;
  std::uint64_t used_ = 0;
  std::vector<Permutation> found_;
  std::unordered_set<std::uint64_t> known_;
  std::vector<std::uint64_t> known_gens_;
  bool cache_enabled_ = true;
  std::uint64_t nodes_ = 0;
  std::uint64_t pruned_ = 0;
  std::uint64_t leaves_ = 0;
  std::uint64_t found_count_ = 0;
};

std::optional<LocalCliffordTwist> least_twist(TwistSolver& solver, const StabilizerGroup& group,
                                              const Permutation& sigma) {
  std::vector<std::uint64_t> xs;
  std::vector<std::uint64_t> zs;
  for (const PauliOperator& g : permuted_generators(group, sigma)) {
    xs.push_back(g.x_bits());
    zs.push_back(g.z_bits());
  }
  return solver.least(xs, zs);
}

}  // namespace

std::string_view to_string(AutomorphismKind kind) {
  switch (kind) {
    case AutomorphismKind::strong:
      return "strong";
    case AutomorphismKind::weak:
      return "weak";
    case AutomorphismKind::clifford:
      return "clifford";
  }
  return "?";
}

AutomorphismKind parse_automorphism_kind(std::string_view text) {
  if (text == "strong") return AutomorphismKind::strong;
  if (text == "weak") return AutomorphismKind::weak;
  if (text == "clifford") return AutomorphismKind::clifford;
  throw std::invalid_argument("unknown automorphism kind '" + std::string(text) +
                              "' (expected strong, weak or clifford)");
}

bool is_strong(const StabilizerGroup& group, const Permutation& sigma) {
  require_size(group, sigma);
  for (const PauliOperator& g : group.generators()) {
    if (group.contains(apply_permutation(sigma, g)).status != MembershipStatus::exact) return false;
  }
  return true;
}

std::optional<SignVector> is_weak(const StabilizerGroup& group, const Permutation& sigma) {
  require_size(group, sigma);
  SignVector signs;
  signs.reserve(group.num_generators());
  for (const PauliOperator& g : group.generators()) {
    MembershipAnswer answer = group.contains(apply_permutation(sigma, g));
    if (!answer.in_group_up_to_sign()) return std::nullopt;
    signs.push_back(answer.sign);
  }
  return signs;
}

bool is_weak_witness(const StabilizerGroup& group, const Permutation& sigma,
                     const PauliOperator& gamma) {
  require_size(group, sigma);
  Permutation back = sigma.inverse();
  // Conjugation by gamma and by sigma^-1 are automorphisms, so checking the
  // generators checks the whole group.
  for (const PauliOperator& g : group.generators()) {
    PauliOperator conjugated = commutes(gamma, g) ? g : g.negated();
    if (group.contains(apply_permutation(back, conjugated)).status != MembershipStatus::exact) {
      return false;
    }
  }
  return true;
}

WeakTwistWitness weak_twist_witness(const StabilizerGroup& group, const Permutation& sigma) {
  std::optional<SignVector> signs = is_weak(group, sigma);
  if (!signs) {
    throw std::invalid_argument("permutation " + sigma.cycle_string() +
                                " is not a weak automorphism");
  }
  const std::size_t n = group.num_qubits();
  // Row i: gamma must anticommute with t_i (the element of S matching
  // sigma(g_i)) exactly when the sign is -1. Unknown u = (gamma_x | gamma_z);
  // <gamma, t> = gamma_x . t_z + gamma_z . t_x, so the coefficient row is
  // (t_z | t_x).
  struct Row {
    std::uint64_t cx;  // coefficients of gamma_x
    std::uint64_t cz;  // coefficients of gamma_z
    bool rhs;
  };
  std::vector<Row> rows;
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    PauliOperator image = apply_permutation(sigma, gens[i]);
    rows.push_back({image.z_bits(), image.x_bits(), (*signs)[i] < 0});
  }
  // Gauss-Jordan elimination over GF(2), free variables set to zero.
  std::vector<std::pair<std::size_t, unsigned>> pivots;  // (row, column)
  std::size_t r = 0;
  for (unsigned col = 0; col < 2 * n && r < rows.size(); ++col) {
    auto bit = [&](const Row& row) {
      return col < n ? ((row.cx >> col) & 1U) : ((row.cz >> (col - n)) & 1U);
    };
    std::size_t sel = r;
    while (sel < rows.size() && !bit(rows[sel])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != r && bit(rows[k])) {
        rows[k].cx ^= rows[r].cx;
        rows[k].cz ^= rows[r].cz;
        rows[k].rhs = rows[k].rhs != rows[r].rhs;
      }
    }
    pivots.emplace_back(r, col);
    ++r;
  }
  for (std::size_t k = r; k < rows.size(); ++k) {
    if (rows[k].rhs) throw InternalInconsistency("commutation system for gamma is inconsistent");
  }
  std::uint64_t gx = 0;
  std::uint64_t gz = 0;
  for (auto [row, col] : pivots) {
    if (!rows[row].rhs) continue;
    if (col < n) {
      gx |= std::uint64_t{1} << col;
    } else {
      gz |= std::uint64_t{1} << (col - n);
    }
  }
  PauliOperator gamma = PauliOperator(n, gx, gz, 0).positive();
  if (!is_weak_witness(group, sigma, gamma)) {
    throw InternalInconsistency("constructed gamma " + serialize_pauli(gamma) +
                                " does not conjugate S onto sigma(S)");
  }
  return {gamma};
}

std::optional<LocalCliffordTwist> is_clifford(const StabilizerGroup& group,
                                              const Permutation& sigma) {
  require_size(group, sigma);
  ElementTable table(group);
  TwistSolver solver(table);
  return least_twist(solver, group, sigma);
}

bool is_twist_witness(const StabilizerGroup& group, const Permutation& sigma,
                      const LocalCliffordTwist& rho) {
  require_size(group, sigma);
  if (rho.size() != group.num_qubits()) return false;
  for (const PauliOperator& g : group.generators()) {
    if (!group.contains(apply_twist(rho, apply_permutation(sigma, g))).in_group_up_to_sign()) {
      return false;
    }
  }
  return true;
}

AutomorphismResult compute_group(const StabilizerGroup& group, AutomorphismKind kind,
                                 SearchOptions options) {
  const std::size_t n = group.num_qubits();
  if (n > kMaxSearchQubits) {
    throw BudgetExceeded("automorphism search is limited to " + std::to_string(kMaxSearchQubits) +
                         " qubits, got " + std::to_string(n));
  }
  SearchEngine engine(group, kind);
  SharedProgress shared;
  shared.options = &options;
  shared.next_report = options.progress_interval;

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::atomic<std::size_t> next_root{0};
  std::vector<std::vector<Permutation>> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto run = [&](unsigned t) {
    try {
      SearchWorker worker(engine, shared);
      for (std::size_t root = next_root++; root < n; root = next_root++) worker.run_root(root);
      partial[t] = std::move(worker.found());
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (std::thread& th : pool) th.join();
  }
  for (const std::exception_ptr& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  AutomorphismResult result;
  result.kind = kind;
  for (auto& part : partial) {
    result.elements.insert(result.elements.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
  }
  std::sort(result.elements.begin(), result.elements.end());
  result.order = result.elements.size();
  result.generators = generating_set(result.elements);
  result.transitivity_degree = transitivity_degree(result.elements, n);
  result.is_cyclic = std::any_of(result.elements.begin(), result.elements.end(),
                                 [n](const Permutation& p) { return p.longest_cycle() == n; });

  if (options.with_witnesses) {
    result.witnesses.reserve(result.elements.size());
    if (kind == AutomorphismKind::clifford) {
      TwistSolver solver(engine.table_);
      for (const Permutation& p : result.elements) {
        std::optional<LocalCliffordTwist> twist = least_twist(solver, group, p);
        if (!twist) throw InternalInconsistency("search member " + p.cycle_string() + " has no twist");
        result.witnesses.emplace_back(std::move(*twist));
      }
    } else {
      for (const Permutation& p : result.elements) {
        std::optional<SignVector> signs = is_weak(group, p);
        if (!signs) throw InternalInconsistency("search member " + p.cycle_string() + " is not weak");
        result.witnesses.emplace_back(std::move(*signs));
      }
    }
  }
  return result;
}

std::vector<Permutation> generating_set(std::span<const Permutation> elements) {
  if (elements.empty()) throw std::invalid_argument("empty permutation set is not a group");
  const std::size_t n = elements.front().size();
  std::unordered_set<Permutation, PermutationHash> members;
  for (const Permutation& p : elements) {
    if (p.size() != n) throw std::invalid_argument("permutations of different sizes");
    if (!members.insert(p).second) {
      throw std::invalid_argument("duplicate element " + p.cycle_string());
    }
  }
  if (!members.contains(Permutation::identity(n))) {
    throw std::invalid_argument("permutation set does not contain the identity");
  }

  std::vector<Permutation> preferred(elements.begin(), elements.end());
  std::stable_sort(preferred.begin(), preferred.end(), [](const Permutation& a, const Permutation& b) {
    std::size_t la = a.longest_cycle();
    std::size_t lb = b.longest_cycle();
    if (la != lb) return la > lb;
    return a < b;
  });

  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> span{Permutation::identity(n)};
  for (const Permutation& candidate : preferred) {
    if (span.contains(candidate)) continue;
    gens.push_back(candidate);
    std::vector<Permutation> queue(span.begin(), span.end());
    queue.push_back(candidate);
    span.insert(candidate);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Permutation& g : gens) {
        Permutation product = queue[head] * g;
        if (span.insert(product).second) {
          if (!members.contains(product)) {
            throw std::invalid_argument("permutation set is not closed: " +
                                        queue[head].cycle_string() + " * " + g.cycle_string() +
                                        " = " + product.cycle_string() + " is missing");
          }
          queue.push_back(std::move(product));
        }
      }
    }
  }
  return gens;
}

int transitivity_degree(std::span<const Permutation> elements, std::size_t n) {
  generating_set(elements);
  if (elements.front().size() != n) throw std::invalid_argument("degree does not match elements");
  int degree = 0;
  std::uint64_t tuples = 1;
  for (std::size_t t = 1; t <= std::min<std::size_t>(5, n); ++t) {
    tuples *= n - t + 1;
    if (elements.size() < tuples) break;
    std::unordered_set<std::string> orbit;
    for (const Permutation& p : elements) {
      std::string key(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(t));
      orbit.insert(std::move(key));
    }
    if (orbit.size() != tuples) break;
    degree = static_cast<int>(t);
  }
  return degree;
}

}  // namespace stabaut
