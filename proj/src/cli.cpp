// Copyright 2026 The pogs Authors
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

#include "pogs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pogs/automorphisms.hpp"
#include "pogs/format.hpp"
#include "pogs/fuzzy.hpp"
#include "pogs/generator.hpp"
#include "pogs/ideals.hpp"
#include "pogs/theorems.hpp"

namespace pogs {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StructureFile load_structure(const std::string& path) {
  try {
    return parse_structure(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

FuzzySubset load_fuzzy(const std::string& path, std::size_t n) {
  FuzzySubset mu = [&] {
    try {
      return parse_fuzzy(read_file(path));
    } catch (const ParseError& e) {
      throw InputError(path + ": " + e.what());
    }
  }();
  if (mu.size() != n) {
    throw InputError(path + ": fuzzy subset has " + std::to_string(mu.size()) +
                     " grades but the structure has " + std::to_string(n) +
                     " elements");
  }
  return mu;
}

std::vector<Grade> parse_grade_list(const std::string& text) {
  std::vector<Grade> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(Grade::parse(item));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string join_grades(std::span<const Grade> grades) {
  std::string out;
  for (std::size_t i = 0; i < grades.size(); ++i) {
    if (i) out += ',';
    out += grades[i].str();
  }
  return out;
}

int report_verdict(std::ostream& out, std::string_view what, const Verdict& v,
                   const Labels& labels) {
  if (v) {
    out << what << ": pass\n";
    return kExitOk;
  }
  out << what << ": fail\n"
      << "clause: " << clause_name(v.witness()->clause) << "\n"
      << "witness: " << v.witness()->describe(labels) << "\n";
  return kExitFailed;
}

// --- subcommands ---------------------------------------------------------

int cmd_validate(const std::string& path, std::ostream& out) {
  std::string text = read_file(path);
  try {
    const StructureFile file = parse_structure(text);
    const PoGammaSemigroup& s = file.structure;
    out << "valid: |S|=" << s.n() << " |Gamma|=" << s.m()
        << " strict-order-pairs=" << s.order().strict_pairs().size() << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    switch (e.code()) {
      case ParseErrorCode::kAssociativity:
      case ParseErrorCode::kOrderAxiom:
      case ParseErrorCode::kCompatibility:
        out << "invalid: " << parse_error_code_name(e.code()) << " (line "
            << e.line() << ")\n"
            << "witness: " << e.witness()->describe() << "\n";
        return kExitFailed;
      default:
        throw InputError(path + ": " + e.what());
    }
  }
}

int cmd_auts(const std::string& path, std::ostream& out) {
  const StructureFile file = load_structure(path);
  const auto auts = enumerate_automorphisms(file.structure);
  out << "automorphisms: " << auts.size() << "\n";
  for (const auto& f : auts) out << f.str() << "\n";
  return kExitOk;
}

int cmd_ideals(const std::string& path, bool characteristic, std::ostream& out) {
  const StructureFile file = load_structure(path);
  const PoGammaSemigroup& s = file.structure;
  std::vector<CrispSubset> ideals = enumerate_interior_ideals(s);
  if (characteristic) {
    const auto auts = enumerate_automorphisms(s);
    std::erase_if(ideals, [&](const CrispSubset& a) {
      return !is_characteristic_interior_ideal(s, a, auts).passed();
    });
  }
  out << (characteristic ? "characteristic interior ideals: "
                         : "interior ideals: ")
      << ideals.size() << "\n";
  for (const auto& a : ideals) out << a.str(file.labels) << "\n";
  return kExitOk;
}

int cmd_cuts(const std::string& path, bool levels_only,
             const std::optional<std::string>& at, std::ostream& out) {
  FuzzySubset mu = [&] {
    try {
      return parse_fuzzy(read_file(path));
    } catch (const ParseError& e) {
      throw InputError(path + ": " + e.what());
    }
  }();
  const std::vector<Grade> levels = image_levels(mu);
  if (at) {
    const Grade t = Grade::parse(*at);
    out << "cut " << t << ": " << t_cut(mu, t).str() << "\n";
    return kExitOk;
  }
  out << "levels: " << join_grades(levels) << "\n";
  if (levels_only) return kExitOk;
  if (levels.front() != Grade::zero()) {
    out << "cut " << Grade::zero() << ": " << t_cut(mu, Grade::zero()).str() << "\n";
  }
  for (const Grade& t : levels) out << "cut " << t << ": " << t_cut(mu, t).str() << "\n";
  return kExitOk;
}

int cmd_check(const std::string& predicate, const std::string& structure_path,
              const std::string& subject, std::ostream& out) {
  const StructureFile file = load_structure(structure_path);
  const PoGammaSemigroup& s = file.structure;
  const std::string what = "check " + predicate;
  if (predicate == "subsemigroup") {
    return report_verdict(out, what, is_subsemigroup(s, parse_subset(subject, s.n())), file.labels);
  }
  if (predicate == "interior") {
    return report_verdict(out, what, is_interior_ideal(s, parse_subset(subject, s.n())), file.labels);
  }
  if (predicate == "characteristic") {
    return report_verdict(out, what,
                          is_characteristic_interior_ideal(s, parse_subset(subject, s.n())),
                          file.labels);
  }
  const FuzzySubset mu = load_fuzzy(subject, s.n());
  if (predicate == "fuzzy-subsemigroup") {
    return report_verdict(out, what, is_fuzzy_subsemigroup(s, mu), file.labels);
  }
  if (predicate == "fuzzy-interior") {
    return report_verdict(out, what, is_fuzzy_interior_ideal(s, mu), file.labels);
  }
  return report_verdict(out, what, is_fuzzy_characteristic_interior_ideal(s, mu),
                        file.labels);
}

int cmd_witness(const std::string& structure_path, const std::string& fuzzy_path,
                std::ostream& out) {
  const StructureFile file = load_structure(structure_path);
  const FuzzySubset mu = load_fuzzy(fuzzy_path, file.structure.n());
  const auto w = extract_midpoint_witness(file.structure, mu);
  if (!w) {
    out << "no witness: subsemigroup and interior clauses hold\n";
    return kExitOk;
  }
  out << w->describe(file.labels) << "\n";
  return kExitFailed;
}

struct VerifyArgs {
  std::string which;
  std::size_t max_n = 2;
  std::size_t max_m = 1;
  std::string grades = "0,1/2,1";
  std::string orders = "discrete";
  std::uint64_t seed = 0;
  std::optional<std::size_t> sample;
  std::size_t jobs = 1;
  std::optional<std::string> ceiling;
};

void print_tally(std::ostream& out, std::string_view name, const CheckTally& t) {
  out << name << ": checks=" << t.checks << " consistent=" << t.consistent
      << " forward-holds=" << t.forward_holds << "\n";
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  ResourceCeiling ceiling = ResourceCeiling::from_environment();
  if (args.ceiling) ceiling = ceiling.with_dims(*args.ceiling);

  GeneratorConfig config{.max_n = args.max_n,
                         .max_m = args.max_m,
                         .orders = args.orders == "all" ? OrderMode::kAllCompatible
                                                        : OrderMode::kDiscreteOnly,
                         .grade_set = parse_grade_list(args.grades),
                         .seed = args.seed};
  config.validate();
  const std::vector<PoGammaSemigroup> corpus = build_corpus(config, ceiling);

  SweepOptions options{.level_criterion = args.which == "thm33" || args.which == "all",
                       .char_function_criterion = args.which == "thm34" || args.which == "all",
                       .lemma = args.which == "lemma1" || args.which == "all",
                       .jobs = args.jobs,
                       .samples_per_structure = args.sample,
                       .seed = args.seed};
  const SweepSummary summary = sweep(corpus, config.grade_set, options);

  out << "verify " << args.which << "\n"
      << "corpus: max-n=" << args.max_n << " max-m=" << args.max_m
      << " orders=" << (config.orders == OrderMode::kAllCompatible ? "all" : "discrete")
      << " grades=" << join_grades(config.grade_set) << "\n";
  if (args.sample) {
    out << "fuzzy subsets: sampled " << *args.sample << " per structure, seed="
        << args.seed << "\n";
  } else {
    out << "fuzzy subsets: exhaustive\n";
  }
  out << "structures: " << summary.structures << "\n"
      << "fuzzy-subsets: " << summary.fuzzy_subsets << "\n"
      << "crisp-subsets: " << summary.crisp_subsets << "\n";
  if (options.level_criterion) {
    print_tally(out, "thm33 level criterion", summary.level_criterion);
    out << "thm33 midpoint witnesses: found=" << summary.midpoint_witnesses
        << " sound=" << summary.midpoint_sound << "\n";
  }
  if (options.char_function_criterion) {
    print_tally(out, "thm34 characteristic-function criterion",
                summary.char_function_criterion);
  }
  if (options.lemma) print_tally(out, "lemma1 characteristic-function interior", summary.lemma);
  out << "refutations: " << summary.refutations.size() << "\n";
  for (std::size_t k = 0; k < summary.refutations.size(); ++k) {
    const Refutation& r = summary.refutations[k];
    out << "refutation " << k + 1 << ": " << check_kind_name(r.kind)
        << " structure #" << r.structure_index << " subject " << r.subject
        << " forward=" << r.report.forward << " backward=" << r.report.backward
        << "\n";
    if (r.report.witness) out << "  witness: " << r.report.witness->describe() << "\n";
    std::istringstream lines(render_structure(r.structure));
    for (std::string line; std::getline(lines, line);) out << "  | " << line << "\n";
  }
  out << "result: " << (summary.refutations.empty() ? "consistent" : "REFUTED") << "\n";
  return summary.refutations.empty() ? kExitOk : kExitFailed;
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Finite partially ordered Gamma-semigroups: fuzzy interior ideal "
               "predicates and exhaustive criterion checks",
               "pogs"};
  app.require_subcommand(1);

  std::string structure_path;
  std::string fuzzy_path;

  auto* validate = app.add_subcommand("validate", "Parse and validate a structure file");
  validate->add_option("structure", structure_path, "Structure file (.pogs)")->required();

  auto* auts = app.add_subcommand("auts", "List Aut(S)");
  auts->add_option("structure", structure_path, "Structure file (.pogs)")->required();

  bool want_interior = false;
  bool want_characteristic = false;
  auto* ideals = app.add_subcommand("ideals", "List interior ideals");
  ideals->add_option("structure", structure_path, "Structure file (.pogs)")->required();
  auto* interior_flag = ideals->add_flag("--interior", want_interior, "Interior ideals (default)");
  ideals->add_flag("--characteristic", want_characteristic,
                   "Characteristic interior ideals only")
      ->excludes(interior_flag);

  bool levels_only = false;
  std::optional<std::string> cut_at;
  auto* cuts = app.add_subcommand("cuts", "Print the level cuts of a fuzzy subset");
  cuts->add_option("fuzzy", fuzzy_path, "Fuzzy file (.fz)")->required();
  cuts->add_flag("--levels", levels_only, "Only print the image levels");
  cuts->add_option("--at", cut_at, "Print the cut at one level t");

  std::string predicate;
  std::string subject;
  auto* check = app.add_subcommand("check", "Evaluate one predicate");
  check->add_option("predicate", predicate, "Predicate")
      ->required()
      ->check(CLI::IsMember({"subsemigroup", "interior", "characteristic",
                             "fuzzy-subsemigroup", "fuzzy-interior",
                             "fuzzy-characteristic"}));
  check->add_option("structure", structure_path, "Structure file (.pogs)")->required();
  check->add_option("subject", subject,
                    "Subset like 0,2 for crisp predicates; fuzzy file otherwise")
      ->required();

  auto* witness = app.add_subcommand("witness", "Extract a midpoint witness");
  witness->add_option("structure", structure_path, "Structure file (.pogs)")->required();
  witness->add_option("fuzzy", fuzzy_path, "Fuzzy file (.fz)")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Exhaustive criterion sweep");
  verify->add_option("which", verify_args.which, "thm33, thm34, lemma1 or all")
      ->required()
      ->check(CLI::IsMember({"thm33", "thm34", "lemma1", "all"}));
  verify->add_option("--max-n", verify_args.max_n, "Largest carrier size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-m", verify_args.max_m, "Largest sort-set size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--grades", verify_args.grades, "Comma-separated grades p/q");
  verify->add_option("--orders", verify_args.orders, "discrete or all")
      ->check(CLI::IsMember({"discrete", "all"}));
  verify->add_option("--seed", verify_args.seed, "Seed for --sample");
  verify->add_option("--sample", verify_args.sample,
                     "Sample this many fuzzy subsets per structure")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", verify_args.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--ceiling", verify_args.ceiling,
                     "Override the enumeration ceiling, NxM");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(structure_path, out);
    if (*auts) return cmd_auts(structure_path, out);
    if (*ideals) return cmd_ideals(structure_path, want_characteristic, out);
    if (*cuts) return cmd_cuts(fuzzy_path, levels_only, cut_at, out);
    if (*check) return cmd_check(predicate, structure_path, subject, out);
    if (*witness) return cmd_witness(structure_path, fuzzy_path, out);
    if (*verify) return cmd_verify(verify_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pogs
