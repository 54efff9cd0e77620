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

#include "stabaut/cli.h"

#include <chrono>
#include <optional>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabaut/automorphism.h"
#include "stabaut/catalog.h"
#include "stabaut/code_analysis.h"
#include "stabaut/report.h"
#include "stabaut/stabilizer_group.h"

namespace stabaut {
namespace {

using nlohmann::json;

// Clifford searches from this many qubits up need --allow-long.
constexpr std::size_t kLongCliffordQubits = 11;

struct CodeSource {
  std::string code;
  std::string file;
  bool reduce = false;
  bool as_json = false;
  unsigned threads = 0;
};

void add_source_options(CLI::App* cmd, CodeSource& src) {
  auto* code = cmd->add_option("--code", src.code, "Catalog code name (see `catalog`)");
  auto* file = cmd->add_option("--file", src.file, "Code file: one signed Pauli string per line")
                   ->check(CLI::ExistingFile);
  code->excludes(file);
  file->excludes(code);
  cmd->add_flag("--reduce", src.reduce, "Drop generators that are products of earlier ones");
  cmd->add_flag("--json", src.as_json, "Emit a JSON document instead of text");
  cmd->add_option("--threads", src.threads, "Worker threads (default: available parallelism)");
}

struct LoadedCode {
  std::string label;
  StabilizerGroup group;
};

LoadedCode load(const CodeSource& src) {
  std::vector<std::string> generators;
  std::string label;
  if (!src.code.empty()) {
    const CatalogEntry& entry = catalog_lookup(src.code);
    generators = entry.generators;
    label = entry.name;
  } else if (!src.file.empty()) {
    generators = load_code_file(src.file).generators;
    label = src.file;
  } else {
    throw std::invalid_argument("one of --code or --file is required");
  }
  BuildOptions options;
  options.reduce = src.reduce;
  return {label, build_group(generators, options)};
}

std::string header(const LoadedCode& code) {
  const StabilizerGroup& g = code.group;
  return "code: " + code.label + " (n=" + std::to_string(g.num_qubits()) +
         ", m=" + std::to_string(g.num_generators()) +
         ", k=" + std::to_string(g.num_logical_qubits()) + ")";
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string join_cycles(const std::vector<Permutation>& perms) {
  std::string s;
  for (const Permutation& p : perms) {
    if (!s.empty()) s += ", ";
    s += p.cycle_string();
  }
  return s.empty() ? "()" : s;
}

std::string witness_text(const ElementWitness& w) {
  if (const auto* signs = std::get_if<SignVector>(&w)) {
    std::string s = "signs ";
    for (int v : *signs) s += v > 0 ? '+' : '-';
    return s;
  }
  return "twist " + std::get<LocalCliffordTwist>(w).to_string();
}

int cmd_validate(const CodeSource& src, std::ostream& out) {
  LoadedCode code = load(src);
  if (src.as_json) {
    json doc = to_json(code.group);
    doc["valid"] = true;
    json dropped = json::array();
    for (std::size_t i : code.group.dropped_generators()) dropped.push_back(i + 1);
    doc["dropped"] = dropped;
    print_json(out, doc);
    return 0;
  }
  out << header(code) << "\nvalid stabilizer group\n";
  for (std::size_t i : code.group.dropped_generators()) {
    out << "dropped dependent generator " << (i + 1) << '\n';
  }
  return 0;
}

int cmd_params(const CodeSource& src, std::ostream& out, bool distance_only) {
  LoadedCode code = load(src);
  CodeParameters p = distance(code.group, DistanceOptions{src.threads});
  if (src.as_json) {
    print_json(out, to_json(p));
    return 0;
  }
  if (distance_only) {
    out << "d=" << p.d << " witness=" << serialize_pauli(p.witness) << '\n';
    return 0;
  }
  out << "n=" << p.n << " k=" << p.k << " d=" << p.d;
  if (p.degenerate_convention) out << " (degenerate convention: minimal weight of S - {I})";
  out << '\n';
  return 0;
}

int cmd_basis(const CodeSource& src, std::ostream& out) {
  LoadedCode code = load(src);
  CodespaceBasis basis = codespace_basis(code.group);
  if (src.as_json) {
    print_json(out, to_json(basis));
    return 0;
  }
  for (std::size_t v = 0; v < basis.vectors.size(); ++v) {
    if (v) out << '\n';
    for (const BasisTerm& t : primitive(basis.vectors[v])) {
      out << format_term(t, basis.num_qubits) << '\n';
    }
  }
  return 0;
}

int cmd_check_errors(const CodeSource& src, const std::vector<std::string>& error_texts,
                     std::size_t max_weight, std::ostream& out) {
  LoadedCode code = load(src);
  std::vector<PauliOperator> errors;
  if (error_texts.empty()) {
    errors = errors_up_to_weight(code.group.num_qubits(), max_weight);
  } else {
    for (const std::string& e : error_texts) errors.push_back(parse_pauli(e));
  }
  CorrectabilityReport report = check_correctable(code.group, errors);
  if (src.as_json) {
    json doc{{"correctable", report.correctable}, {"num_errors", errors.size()}};
    if (report.violation) {
      auto [i, j] = *report.violation;
      doc["violation"] = {serialize_pauli(errors[i]), serialize_pauli(errors[j])};
    }
    print_json(out, doc);
    return 0;
  }
  out << errors.size() << " errors: ";
  if (report.correctable) {
    out << "correctable\n";
  } else {
    auto [i, j] = *report.violation;
    out << "not correctable; E" << (i + 1) << "^* E" << (j + 1) << " is a logical operator ("
        << serialize_pauli(errors[i]) << ", " << serialize_pauli(errors[j]) << ")\n";
  }
  return 0;
}

int cmd_aut(const CodeSource& src, const std::string& kind_text, bool list_elements,
            bool allow_long, std::ostream& out, std::ostream& err) {
  LoadedCode code = load(src);
  AutomorphismKind kind = parse_automorphism_kind(kind_text);
  if (kind == AutomorphismKind::clifford && code.group.num_qubits() >= kLongCliffordQubits &&
      !allow_long) {
    throw BudgetExceeded("clifford search on " + std::to_string(code.group.num_qubits()) +
                         " qubits has unbounded runtime; pass --allow-long (limit without it: " +
                         std::to_string(kLongCliffordQubits - 1) + " qubits)");
  }
  SearchOptions options;
  options.threads = src.threads;
  options.with_witnesses = list_elements || src.as_json;
  auto start = std::chrono::steady_clock::now();
  options.progress = [&err, start](const SearchProgress& p) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "[" << static_cast<long>(secs) << "s] scanned " << p.nodes << " pruned " << p.pruned
        << " leaves " << p.leaves << " found " << p.found << '\n';
  };
  AutomorphismResult result = compute_group(code.group, kind, options);
  if (src.as_json) {
    print_json(out, to_json(result, list_elements));
    return 0;
  }
  out << header(code) << '\n'
      << "kind: " << to_string(kind) << '\n'
      << "order: " << result.order << '\n'
      << "generators: " << join_cycles(result.generators) << '\n'
      << "transitivity degree: " << result.transitivity_degree << '\n'
      << "cyclic: " << (result.is_cyclic ? "yes" : "no") << '\n';
  if (list_elements) {
    for (std::size_t i = 0; i < result.elements.size(); ++i) {
      out << result.elements[i].cycle_string();
      if (i < result.witnesses.size()) out << "  " << witness_text(result.witnesses[i]);
      out << '\n';
    }
  }
  return 0;
}

int cmd_check_perm(const CodeSource& src, const std::string& perm_text,
                   const std::string& kind_text, std::ostream& out) {
  LoadedCode code = load(src);
  AutomorphismKind kind = parse_automorphism_kind(kind_text);
  Permutation sigma = Permutation::parse_cycles(perm_text, code.group.num_qubits());
  json doc{{"perm", sigma.cycle_string()}, {"kind", std::string(to_string(kind))}};
  bool member = false;
  std::string detail;
  switch (kind) {
    case AutomorphismKind::strong:
      member = is_strong(code.group, sigma);
      break;
    case AutomorphismKind::weak: {
      std::optional<SignVector> signs = is_weak(code.group, sigma);
      member = signs.has_value();
      if (member) {
        PauliOperator gamma = weak_twist_witness(code.group, sigma).gamma;
        doc["signs"] = *signs;
        doc["gamma"] = serialize_pauli(gamma);
        detail = witness_text(*signs) + "\ngamma: " + serialize_pauli(gamma);
      }
      break;
    }
    case AutomorphismKind::clifford: {
      std::optional<LocalCliffordTwist> twist = is_clifford(code.group, sigma);
      member = twist.has_value();
      if (member) {
        doc["twist"] = twist->to_string();
        detail = "twist: " + twist->to_string();
      }
      break;
    }
  }
  doc["member"] = member;
  if (src.as_json) {
    print_json(out, doc);
    return 0;
  }
  out << sigma.cycle_string() << (member ? " is" : " is NOT") << " a " << to_string(kind)
      << " automorphism of " << code.label << '\n';
  if (!detail.empty()) out << detail << '\n';
  return 0;
}

int cmd_catalog(const std::string& name, bool as_json, std::ostream& out) {
  auto describe = [](const CatalogEntry& e) {
    json doc{{"name", e.name}, {"description", e.description}, {"generators", e.generators}};
    json expected = json::object();
    json sources = json::object();
    auto put = [&](const char* key, const std::optional<Expected>& v) {
      if (!v) return;
      expected[key] = v->value;
      sources[key] = v->source == Provenance::published ? "published" : "computed";
    };
    put("n", e.expected.n);
    put("k", e.expected.k);
    put("d", e.expected.d);
    put("strong_order", e.expected.strong_order);
    put("weak_order", e.expected.weak_order);
    put("clifford_order", e.expected.clifford_order);
    doc["expected"] = expected;
    doc["sources"] = sources;
    return doc;
  };
  if (!name.empty()) {
    const CatalogEntry& e = catalog_lookup(name);
    if (as_json) {
      print_json(out, describe(e));
      return 0;
    }
    out << "# " << e.name << ": " << e.description << '\n';
    for (const std::string& g : e.generators) out << g << '\n';
    return 0;
  }
  if (as_json) {
    json all = json::array();
    for (const CatalogEntry& e : catalog()) all.push_back(describe(e));
    print_json(out, all);
    return 0;
  }
  for (const CatalogEntry& e : catalog()) out << e.name << "\t" << e.description << '\n';
  return 0;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilizer code analysis: parameters, codespace bases and automorphism groups"};
  app.require_subcommand(1);

  CodeSource src;
  std::string kind = "strong";
  std::string perm;
  std::string catalog_name;
  std::vector<std::string> error_texts;
  std::size_t max_weight = 1;
  bool list_elements = false;
  bool allow_long = false;
  bool catalog_json = false;

  auto* validate = app.add_subcommand("validate", "Check that the generators define a stabilizer group");
  add_source_options(validate, src);
  auto* params = app.add_subcommand("params", "Print [[n,k,d]]");
  add_source_options(params, src);
  auto* dist = app.add_subcommand("distance", "Print the distance and a minimal-weight witness");
  add_source_options(dist, src);
  auto* basis = app.add_subcommand("basis", "Print a codespace basis (n <= 14)");
  add_source_options(basis, src);
  auto* check_errors = app.add_subcommand("check-errors", "Test an error set for correctability");
  add_source_options(check_errors, src);
  check_errors->add_option("--error", error_texts, "Error operator (repeatable)");
  check_errors->add_option("--max-weight", max_weight,
                           "Use every error of weight 1..W when no --error is given");
  auto* aut = app.add_subcommand("aut", "Compute an automorphism group");
  add_source_options(aut, src);
  aut->add_option("--kind", kind, "strong, weak or clifford")
      ->check(CLI::IsMember({"strong", "weak", "clifford"}));
  aut->add_flag("--elements", list_elements, "List every element with its witness");
  aut->add_flag("--allow-long", allow_long, "Permit clifford searches on 11 or more qubits");
  auto* check_perm = app.add_subcommand("check-perm", "Test one permutation for membership");
  add_source_options(check_perm, src);
  check_perm->add_option("--perm", perm, "Cycle notation, e.g. \"(1 3)(2 4)\"")->required();
  check_perm->add_option("--kind", kind, "strong, weak or clifford")
      ->check(CLI::IsMember({"strong", "weak", "clifford"}));
  auto* cat = app.add_subcommand("catalog", "List built-in codes or print one");
  cat->add_option("--code", catalog_name, "Print the generators of this code");
  cat->add_flag("--json", catalog_json, "Emit JSON");

  std::vector<std::string> argv_storage{"stabaut"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (validate->parsed()) return cmd_validate(src, out);
    if (params->parsed()) return cmd_params(src, out, false);
    if (dist->parsed()) return cmd_params(src, out, true);
    if (basis->parsed()) return cmd_basis(src, out);
    if (check_errors->parsed()) return cmd_check_errors(src, error_texts, max_weight, out);
    if (aut->parsed()) return cmd_aut(src, kind, list_elements, allow_long, out, err);
    if (check_perm->parsed()) return cmd_check_perm(src, perm, kind, out);
    if (cat->parsed()) return cmd_catalog(catalog_name, catalog_json, out);
  } catch (const StabilizerError& e) {
    err << "invalid stabilizer group: " << e.what() << '\n';
    return 3;
  } catch (const BudgetExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace stabaut
