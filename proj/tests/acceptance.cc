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

// Acceptance runner: one PASS/FAIL line per criterion, each with its time
// bound. Usage: acceptance [criterion numbers...] (default: all).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "checks.h"
#include "stabaut/automorphism.h"
#include "stabaut/catalog.h"
#include "stabaut/cli.h"
#include "stabaut/code_analysis.h"

namespace {

using namespace stabaut;

// Collects failed expectations and short notes for the report line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << " = " << got << " (expected " << want << ")";
      failures_.push_back(s.str());
    }
  }
  void absorb(const checks::Failures& f) {
    failures_.insert(failures_.end(), f.begin(), f.end());
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return failures_.empty(); }
  // Failures first, then the notes, which carry the computed values.
  std::string summary() const {
    std::string out;
    for (const std::string& s : failures_) out += (out.empty() ? "" : "; ") + s;
    if (!failures_.empty() && !notes_.empty()) out += " | computed: ";
    for (std::size_t i = 0; i < notes_.size(); ++i) out += (i ? "; " : "") + notes_[i];
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

StabilizerGroup code(const std::string& name) { return build_group(catalog_lookup(name).generators); }

SearchOptions search_options() {
  SearchOptions o;
  o.threads = 0;
  o.with_witnesses = false;
  return o;
}

AutomorphismResult group_of(const StabilizerGroup& g, AutomorphismKind kind) {
  return compute_group(g, kind, search_options());
}

bool has(const AutomorphismResult& r, const std::string& cycles) {
  Permutation p = Permutation::parse_cycles(cycles, r.elements.front().size());
  return std::binary_search(r.elements.begin(), r.elements.end(), p);
}

std::set<std::string> cycle_set(const std::vector<Permutation>& ps) {
  std::set<std::string> out;
  for (const Permutation& p : ps) out.insert(p.cycle_string());
  return out;
}

void expect_members(Check& c, const AutomorphismResult& r, const std::string& label,
                    std::initializer_list<const char*> perms) {
  for (const char* p : perms) c.expect(has(r, p), label + " lacks " + p);
}

void expect_params(Check& c, const StabilizerGroup& g, std::size_t k, std::size_t d) {
  CodeParameters p = distance(g, {0});
  c.expect_eq(p.k, k, "k");
  c.expect_eq(p.d, d, "d");
  c.note("k=" + std::to_string(p.k) + " d=" + std::to_string(p.d));
}

std::map<std::string, int> signs_of(const SparseState& v, std::size_t n) {
  std::map<std::string, int> out;
  for (const BasisTerm& t : primitive(v)) {
    std::string bits(n, '0');
    for (std::size_t j = 0; j < n; ++j)
      if ((t.basis >> j) & 1U) bits[j] = '1';
    int sign = t.coefficient.im != 0 ? 0 : (t.coefficient.re == 1 ? 1 : t.coefficient.re == -1 ? -1 : 0);
    out[bits] = sign;
  }
  return out;
}

bool same_up_to_scale(std::map<std::string, int> got, const std::vector<std::string>& want) {
  std::map<std::string, int> w;
  for (const std::string& t : want) w[t.substr(1)] = t[0] == '-' ? -1 : 1;
  if (got == w) return true;
  for (auto& [k, v] : got) v = -v;
  return got == w;
}

std::string cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  run_cli(args, out, err);
  return out.str() + err.str();
}

// --------------------------------------------------------------------------

Check criterion_1() {
  Check c;
  StabilizerGroup g = code("513");
  expect_params(c, g, 1, 3);
  AutomorphismResult s = group_of(g, AutomorphismKind::strong);
  AutomorphismResult w = group_of(g, AutomorphismKind::weak);
  AutomorphismResult f = group_of(g, AutomorphismKind::clifford);
  c.expect_eq<std::uint64_t>(s.order, 10, "strong order");
  c.expect_eq<std::uint64_t>(w.order, 10, "weak order");
  c.expect_eq<std::uint64_t>(f.order, 120, "clifford order");
  expect_members(c, s, "strong", {"(1 2 3 4 5)", "(2 5)(3 4)"});
  expect_members(c, w, "weak", {"(1 2 3 4 5)", "(2 5)(3 4)"});
  c.note("strong=10 weak=10 clifford=" + std::to_string(f.order));
  return c;
}

Check criterion_2() {
  Check c;
  StabilizerGroup g = code("604");
  CodeParameters p = distance(g, {0});
  c.expect_eq<std::size_t>(p.k, 0, "k");
  c.expect_eq<std::size_t>(p.d, 4, "d");
  c.expect(p.degenerate_convention, "k = 0 convention not used");
  AutomorphismResult s = group_of(g, AutomorphismKind::strong);
  AutomorphismResult w = group_of(g, AutomorphismKind::weak);
  AutomorphismResult f = group_of(g, AutomorphismKind::clifford);
  c.expect_eq<std::uint64_t>(s.order, 10, "strong order");
  c.expect_eq<std::uint64_t>(w.order, 60, "weak order");
  c.expect_eq<std::uint64_t>(f.order, 720, "clifford order");
  expect_members(c, w, "weak", {"(2 3 4 5 6)", "(1 3 5)(2 6 4)"});
  c.note("k=0 d=4 strong=10 weak=60 clifford=720");
  return c;
}

Check criterion_3() {
  Check c;
  StabilizerGroup g = code("713");
  for (AutomorphismKind kind :
       {AutomorphismKind::strong, AutomorphismKind::weak, AutomorphismKind::clifford}) {
    AutomorphismResult r = group_of(g, kind);
    std::string label(to_string(kind));
    c.expect_eq<std::uint64_t>(r.order, 168, label + " order");
    c.expect_eq(r.transitivity_degree, 2, label + " transitivity degree");
    expect_members(c, r, label, {"(4 6)(5 7)", "(1 2 4)(3 6 5)"});
  }
  c.note("strong=weak=clifford=168, 2-transitive");
  return c;
}

Check criterion_4() {
  Check c;
  StabilizerGroup g = code("833");
  AutomorphismResult s = group_of(g, AutomorphismKind::strong);
  c.expect(cycle_set(s.elements) ==
               std::set<std::string>{"()", "(1 2)(3 5)(4 7)(6 8)", "(1 3)(2 5)(4 8)(6 7)",
                                     "(1 4)(2 7)(3 8)(5 6)", "(1 5)(2 3)(4 6)(7 8)",
                                     "(1 6)(2 8)(3 7)(4 5)", "(1 7)(2 4)(3 6)(5 8)",
                                     "(1 8)(2 6)(3 4)(5 7)"},
           "strong group differs from the eight listed elements (order " +
               std::to_string(s.order) + ")");
  AutomorphismResult w = group_of(g, AutomorphismKind::weak);
  c.expect_eq<std::uint64_t>(w.order, 56, "weak order");
  c.expect_eq(w.transitivity_degree, 2, "weak transitivity degree");
  AutomorphismResult f = group_of(g, AutomorphismKind::clifford);
  c.expect_eq<std::uint64_t>(f.order, 168, "clifford order");
  std::vector<Permutation> stabilizer;
  for (const Permutation& p : f.elements)
    if (p(0) == 0 && p(1) == 1) stabilizer.push_back(p);
  Permutation wanted = Permutation::parse_cycles("(3 6 7)(4 5 8)", 8);
  c.expect(std::find(stabilizer.begin(), stabilizer.end(), wanted) != stabilizer.end(),
           "point-pair stabilizer lacks (3 6 7)(4 5 8)");
  c.note("strong=8 listed, weak=56 2-transitive, clifford=168, stabilizer of {1,2} has order " +
         std::to_string(stabilizer.size()));
  return c;
}

Check criterion_5() {
  Check c;
  StabilizerGroup g = code("823");
  const std::set<std::string> want{"()", "(1 3)(2 5)(4 8)(6 7)"};
  for (AutomorphismKind kind : {AutomorphismKind::strong, AutomorphismKind::weak}) {
    AutomorphismResult r = group_of(g, kind);
    c.expect(cycle_set(r.elements) == want,
             std::string(to_string(kind)) + " group has order " + std::to_string(r.order));
  }
  c.note("strong = weak = {(), (1 3)(2 5)(4 8)(6 7)}");
  return c;
}

Check criterion_6() {
  Check c;
  StabilizerGroup g = code("1004");
  expect_params(c, g, 0, 4);
  AutomorphismResult s = group_of(g, AutomorphismKind::strong);
  AutomorphismResult w = group_of(g, AutomorphismKind::weak);
  c.expect_eq<std::uint64_t>(s.order, 20, "strong order");
  c.expect(s.elements == w.elements, "strong and weak groups differ");
  expect_members(c, s, "strong", {"(1 2 3 4 5 6 7 8 9 10)", "(2 10)(3 9)(4 8)(5 7)"});
  AutomorphismResult f = group_of(g, AutomorphismKind::clifford);
  c.expect_eq<std::uint64_t>(f.order, 1440, "clifford order");
  c.expect_eq(f.transitivity_degree, 3, "clifford transitivity degree");
  std::string yes = cli({"check-perm", "--code", "1004", "--perm", "(8 9)(4 10)(5 6)", "--kind",
                         "clifford"});
  c.expect(yes.find(" is a clifford automorphism") != std::string::npos,
           "check-perm rejects (8 9)(4 10)(5 6)");
  std::string no = cli({"check-perm", "--code", "1004", "--perm", "(1 3)", "--kind", "clifford"});
  c.expect(no.find(" is NOT a clifford automorphism") != std::string::npos,
           "check-perm accepts (1 3)");
  c.note("d=4 strong=weak=20 clifford=1440 3-transitive; check-perm agrees");
  return c;
}

Check criterion_7() {
  Check c;
  CodespaceBasis b24 = codespace_basis(code("ex24"));
  c.expect_eq<std::size_t>(b24.vectors.size(), 2, "ex24 basis size");
  if (b24.vectors.size() == 2) {
    c.expect(same_up_to_scale(signs_of(b24.vectors[0], 3), {"+000", "+010", "+100", "-110"}),
             "ex24 0_L differs");
    c.expect(same_up_to_scale(signs_of(b24.vectors[1], 3), {"+001", "-011", "-101", "-111"}),
             "ex24 1_L differs");
  }
  CodespaceBasis b513 = codespace_basis(code("513"));
  c.expect(!b513.vectors.empty() &&
               same_up_to_scale(signs_of(b513.vectors[0], 5),
                                {"+00000", "+10010", "+01001", "+10100", "+01010", "-11011",
                                 "-00110", "-11000", "-11101", "-00011", "-11110", "-01111",
                                 "-10001", "-01100", "-10111", "+00101"}),
           "[[5,1,3]] 0_L sign pattern differs");
  c.note("both spanning vectors and the 16-term 0_L reproduced");
  return c;
}

Check criterion_8() {
  Check c;
  std::set<std::string> got;
  for (const PauliOperator& p : code("ex28").enumerate_elements()) got.insert(serialize_pauli(p));
  std::set<std::string> want{"III", "XXX", "YYI", "ZXZ", "-ZZX", "-YIY", "XZZ", "-IYY"};
  c.expect(got == want, "signed element list differs");
  c.note("8 signed elements match");
  return c;
}

Check criterion_9() {
  Check c;
  c.expect_eq<std::uint64_t>(group_of(code("422a"), AutomorphismKind::strong).order, 24,
                             "<XXXX,ZZZZ> strong order");
  StabilizerGroup b = code("422b");
  c.expect_eq<std::uint64_t>(group_of(b, AutomorphismKind::strong).order, 4,
                             "<XXZZ,YYXX> strong order");
  c.expect_eq<std::uint64_t>(group_of(b, AutomorphismKind::clifford).order, 24,
                             "<XXZZ,YYXX> clifford order");
  c.note("24; 4 and 24");
  return c;
}

Check criterion_10() {
  Check c;
  int compared = 0;
  for (const CatalogEntry& e : catalog()) {
    StabilizerGroup g = build_group(e.generators);
    if (g.num_qubits() > 6) continue;
    for (AutomorphismKind kind :
         {AutomorphismKind::strong, AutomorphismKind::weak, AutomorphismKind::clifford}) {
      c.absorb(checks::matches_naive_scan(e.name, g, kind, group_of(g, kind)));
      ++compared;
    }
  }
  c.note(std::to_string(compared) + " (code, kind) pairs equal the naive n! scan");
  return c;
}

Check criterion_11() {
  Check c;
  c.absorb(checks::commutation_matches_matrices(3));
  c.absorb(checks::multiplication_laws());
  int codes = 0;
  for (const CatalogEntry& e : catalog()) {
    StabilizerGroup g = build_group(e.generators);
    AutomorphismResult s = group_of(g, AutomorphismKind::strong);
    AutomorphismResult w = group_of(g, AutomorphismKind::weak);
    c.absorb(checks::weak_witnesses_conjugate(g, w));
    if (g.num_qubits() <= 8) c.absorb(checks::weak_composition_law(g, w));
    c.absorb(checks::no_symmetric_or_alternating(e.name, g.num_qubits(), distance(g, {0}).d, s, w));
    ++codes;
  }
  c.note("matrix commutation n<=3, n=2 laws, weak witnesses and composition law, no S_n/A_n at d>=3 over " +
         std::to_string(codes) + " codes");
  return c;
}

Check criterion_12() {
  Check c;
  StabilizerGroup g = code("1115");
  CodeParameters p = distance(g, {0});
  c.expect_eq<std::size_t>(p.k, 1, "k");
  if (p.d != 5) {
    c.expect(false, "d = " + std::to_string(p.d) + " (expected 5; weight-" +
                        std::to_string(weight(p.witness)) + " logical operator " +
                        serialize_pauli(p.witness) + ")");
  }
  AutomorphismResult s = group_of(g, AutomorphismKind::strong);
  AutomorphismResult w = group_of(g, AutomorphismKind::weak);
  c.expect(w.order % s.order == 0, "strong order does not divide weak order");
  c.note("d=" + std::to_string(p.d) + ", strong order " + std::to_string(s.order) +
         ", weak order " + std::to_string(w.order));
  return c;
}

struct Criterion {
  int id;
  const char* title;
  double bound_seconds;
  std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "[[5,1,3]] parameters and groups", 5, criterion_1},
      {2, "[[6,0,4]] parameters and groups", 30, criterion_2},
      {3, "[[7,1,3]] Steane groups", 120, criterion_3},
      {4, "[[8,3,3]] groups", 300, criterion_4},
      {5, "[[8,2,3]] groups", 300, criterion_5},
      {6, "[[10,0,4]] groups and check-perm", 900, criterion_6},
      {7, "codespace bases bit-exact", 1, criterion_7},
      {8, "signed group enumeration", 1, criterion_8},
      {9, "[[4,2,2]] pair", 5, criterion_9},
      {10, "oracle equivalence n <= 6", 60, criterion_10},
      {11, "property suite", 120, criterion_11},
      {12, "[[11,1,5]] distance and groups", 1800, criterion_12},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  std::cout << "acceptance: " << std::max(1U, std::thread::hardware_concurrency())
            << " worker threads, release bounds\n";
  int failed = 0;
  for (const Criterion& cr : all) {
    if (!selected.empty() && !selected.count(cr.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= cr.bound_seconds;
    bool pass = result.ok() && in_time;
    if (!pass) ++failed;
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.2f s (bound %.0f s)", secs, cr.bound_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " -- "
              << result.summary() << (in_time ? "" : "; time bound exceeded") << " [" << timing
              << "]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
