// Copyright 2026 The Authors.
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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclomatroid/catalog.hpp"
#include "cyclomatroid/drivers.hpp"
#include "cyclomatroid/errors.hpp"
#include "cyclomatroid/flat_search.hpp"
#include "cyclomatroid/matroid.hpp"
#include "cyclomatroid/report.hpp"
#include "cyclomatroid/representation.hpp"

namespace cyclomatroid::cli {
namespace {

struct LoadedInput {
  Representation representation;
  std::string source;
};

LoadedInput LoadInput(const std::string& input) {
  if (std::filesystem::exists(input)) {
    try {
      return {ReadMatrixFile(input), input};
    } catch (const ParseError& e) {
      throw ParseError(input + ":" + e.what(), 0, 0);
    }
  }
  if (IsCatalogRef(input)) return {BuildCatalogRef(input), input};
  throw ParseError("'" + input + "' is neither a readable file nor a catalog entry", 0, 0);
}

std::uint64_t ParseBudget(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value >= 1) || value > 1e18 || value != std::floor(value)) {
    throw UsageError("bad --budget '" + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

std::string Plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

int CountPoints(const Matroid& m, const ElementSet& s) {
  ElementSet seen = m.EmptySet();
  int points = 0;
  for (std::size_t e = s.First(); e < s.universe(); e = s.NextFrom(e + 1)) {
    if (seen.Contains(e) || m.IsLoop(e)) continue;
    seen |= m.ParallelClass(e);
    ++points;
  }
  return points;
}

void PrintTrace(std::ostream& out, const ConstructionTrace& trace) {
  for (const ConstructionLevel& level : trace.levels) {
    auto set = [](const std::vector<std::string>& labels) {
      std::string s = "{";
      for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
      return s + "}";
    };
    out << "level k=" << level.k << " (rank " << level.rank << ")\n";
    if (level.k > 2) {
      out << "  F   = " << set(level.contracted) << "\n";
      out << "  F1  = " << set(level.f1) << "\n";
      out << "  F2  = " << set(level.f2) << "\n";
      out << "  x,y = " << level.x << "," << level.y << "\n";
      out << "  z,w = " << level.z << "," << level.w << (level.swapped ? " (x,y swapped)" : "")
          << "\n";
      out << "  F'  = " << set(level.f_prime) << "\n";
    }
    out << "  out = " << set(level.output) << "\n";
  }
}

// --- catalog ---------------------------------------------------------------

int CmdCatalog(const std::vector<std::string>& exports, std::ostream& out) {
  if (!exports.empty()) {
    WriteMatrixFile(BuildCatalogRef(exports[0]), exports[1]);
    out << "wrote " << exports[0] << " to " << exports[1] << "\n";
    return kExitFound;
  }
  for (const CatalogEntry& entry : CatalogEntries()) {
    out << entry.name;
    if (!entry.parameters.empty()) {
      out << ":" << entry.parameters << "  (defaults ";
      for (std::size_t i = 0; i < entry.defaults.size(); ++i) {
        out << (i ? "," : "") << entry.defaults[i];
      }
      out << ")";
    }
    out << "\n  " << entry.description << "\n";
    for (const CertifiedFact& fact : entry.certified_facts) {
      out << "  certified";
      if (!fact.params.empty()) {
        out << " at ";
        for (std::size_t i = 0; i < fact.params.size(); ++i) {
          out << (i ? "," : "") << fact.params[i];
        }
      }
      out << ": " << fact.property << " = " << fact.expected << "\n";
    }
  }
  return kExitFound;
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
  std::string input;
  std::optional<int> flats;
  bool simple = false;
  bool summary = false;
};

int CmdAnalyze(const AnalyzeOptions& options, std::ostream& out) {
  const LoadedInput input = LoadInput(options.input);
  const Matroid m(input.representation);
  const bool default_view = !options.flats && !options.simple;
  if (options.summary || default_view) {
    int loops = 0;
    for (std::size_t e = 0; e < m.size(); ++e) loops += m.IsLoop(e);
    out << "conductor: " << input.representation.conductor() << "\n";
    out << "rank: " << m.Rank() << "\n";
    out << "elements: " << m.size() << "\n";
    out << "points: " << CountPoints(m, m.Ground()) << "\n";
    out << "loops: " << loops << "\n";
    out << "simple: " << (m.IsSimple() ? "yes" : "no") << "\n";
  }
  if (options.simple) {
    out << "simple: " << (m.IsSimple() ? "yes" : "no") << "\n";
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (m.IsLoop(e)) out << "loop " << m.label(e) << "\n";
    }
    const Simplification s = m.Simplify();
    for (std::size_t r = 0; r < s.simple.size(); ++r) {
      const ElementSet cls = s.Lift(ElementSet(s.simple.size(), {r}));
      if (cls.Count() > 1) out << "parallel class " << m.Format(cls) << "\n";
    }
  }
  if (options.flats) {
    const int k = *options.flats;
    if (k < 0 || k > m.Rank()) {
      throw PreconditionError("--flats " + std::to_string(k) + " outside [0, " +
                              std::to_string(m.Rank()) + "]");
    }
    bool loopless = true;
    for (std::size_t e = 0; e < m.size(); ++e) loopless = loopless && !m.IsLoop(e);
    const std::vector<Flat> flats = m.FlatsOfRank(k);
    out << "rank-" << k << " flats: " << flats.size() << "\n";
    for (const Flat& flat : flats) {
      out << m.Format(flat.elements) << "  " << Plural(CountPoints(m, flat.elements), "point");
      if (loopless && k >= 1) {
        out << ", " << (IsOrdinary(m, flat) ? "ordinary" : "not ordinary") << ", "
            << (IsElementary(m, flat) ? "elementary" : "not elementary");
      }
      out << "\n";
    }
  }
  return kExitFound;
}

// --- find ------------------------------------------------------------------

struct FindOptions {
  std::string input;
  int k = 2;
  std::string method = "constructive";
  std::string strategy = "enumerate";
  bool trace = false;
  bool json = false;
  bool timing = false;
  std::string budget = "1e7";
};

int CmdFind(const FindOptions& options, bool ordinary, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const LoadedInput input = LoadInput(options.input);
  const Matroid m(input.representation);
  WorkBudget budget(ParseBudget(options.budget));

  SearchReport report;
  report.mode = SearchMode::kVerify;
  report.instance.source = input.source;
  report.instance.rank = m.Rank();
  report.instance.conductor = input.representation.conductor();
  report.instance.columns = m.size();
  report.instance.k = options.k;

  std::optional<OrdinaryWitness> witness;
  std::optional<Flat> flat;
  int code = kExitFound;
  try {
    if (ordinary && options.method == "constructive") {
      const FPrimeStrategy strategy = options.strategy == "greedy" ? FPrimeStrategy::kGreedy
                                                                   : FPrimeStrategy::kEnumerate;
      ConstructiveResult result = FindOrdinaryFlatConstructive(m, options.k, strategy);
      if (!IsOrdinary(m, result.witness.flat)) {
        throw InternalInconsistency("constructed flat failed the ordinary recheck");
      }
      witness = result.witness;
      if (options.trace) report.trace = result.trace;
    } else if (ordinary) {
      witness = FindOrdinaryFlatBrute(m, options.k, &budget);
    } else if (options.method == "constructive") {
      flat = FindElementaryFlat(m, options.k, &budget);
    } else {
      flat = FindElementaryFlatBrute(m, options.k, &budget);
    }
  } catch (const BudgetExceeded& e) {
    report.outcome = Outcome::kBudgetExceeded;
    report.note = e.what();
    code = kExitBudget;
  } catch (const ConstructionError& e) {
    report.note = e.what();
    report.trace = e.trace();
    code = kExitVerifyFailure;
  } catch (const InternalInconsistency& e) {
    report.note = e.what();
    code = kExitVerifyFailure;
  }

  if (witness) report.witness = ToPayload(m, *witness);
  if (flat) report.witness = ToPayload(m, *flat);
  if (code == kExitFound) {
    report.outcome = report.witness ? Outcome::kWitnessFound : Outcome::kExhausted;
    if (!report.witness) code = kExitNone;
  } else if (code == kExitVerifyFailure) {
    report.outcome = Outcome::kExhausted;
  }
  report.stats.rank_calls = m.stats().rank_calls.load();
  report.stats.flats_enumerated = budget.flats_enumerated();
  report.stats.ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (options.json) {
    out << ToJson(report, options.timing).dump(2) << "\n";
    return code;
  }
  const char* kind = ordinary ? "ordinary" : "elementary";
  if (witness) {
    out << kind << " rank-" << options.k << " flat: " << m.Format(witness->flat.elements) << "\n";
    out << "point: " << m.Format(witness->point.elements) << "\n";
    out << "complement: " << m.Format(witness->complement.elements) << "\n";
  } else if (flat) {
    out << kind << " rank-" << options.k << " flat: " << m.Format(flat->elements) << "\n";
    out << "points: " << CountPoints(m, flat->elements) << "\n";
  } else if (code == kExitNone) {
    out << "no " << kind << " rank-" << options.k << " flat ("
        << Plural(budget.flats_enumerated(), "flat") << " enumerated)\n";
  } else {
    out << "error: " << report.note << "\n";
  }
  if (report.trace) PrintTrace(out, *report.trace);
  return code;
}

// --- verify / search ------------------------------------------------------

struct TrialFlags {
  int k = 2;
  int trials = 100;
  std::uint64_t seed = 1;
  std::optional<int> cols;
  int conductor = 1;
  int bound = 10;
  int threads = 1;
  bool json = false;
  bool timing = false;
  std::string dir = ".";
};

RandomTrialOptions ToTrialOptions(const TrialFlags& flags) {
  RandomTrialOptions options;
  options.trials = flags.trials;
  options.seed = flags.seed;
  options.columns = flags.cols;
  options.conductor = flags.conductor;
  options.bound = flags.bound;
  options.threads = flags.threads;
  return options;
}

std::string WitnessText(const SearchReport& report) {
  if (!report.witness) return "none";
  std::string s = "{";
  for (std::size_t i = 0; i < report.witness->flat.size(); ++i) {
    s += (i ? "," : "") + report.witness->flat[i];
  }
  return s + "}";
}

std::filesystem::path Dump(const TrialFlags& flags, const std::string& stem,
                           const Representation& rep) {
  std::filesystem::create_directories(flags.dir);
  const std::filesystem::path path = std::filesystem::path(flags.dir) / (stem + ".mat");
  WriteMatrixFile(rep, path);
  return path;
}

int CmdVerify(const std::string& suite_name, bool k_given, const TrialFlags& flags,
              std::ostream& out) {
  const std::optional<Suite> suite = ParseSuite(suite_name);
  if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
  if (*suite == Suite::kKelly && k_given && flags.k != 2) {
    throw UsageError("the kelly suite is fixed at k=2 (rank 4)");
  }
  const TrialRun run = RunVerifySuite(*suite, flags.k, ToTrialOptions(flags));
  const int k = *suite == Suite::kKelly ? 2 : flags.k;

  std::vector<std::string> dumped;
  for (std::size_t i = 0; i < run.reports.size(); ++i) {
    if (run.reports[i].witness) continue;
    dumped.push_back(Dump(flags,
                          "verify-" + ToString(*suite) + "-seed" + std::to_string(flags.seed) +
                              "-trial" + std::to_string(i),
                          run.instances[i])
                         .string());
  }

  if (flags.json) {
    Json doc;
    doc["suite"] = ToString(*suite);
    doc["k"] = k;
    doc["rank"] = SuiteRank(*suite, k);
    doc["seed"] = flags.seed;
    doc["trials"] = flags.trials;
    doc["passed"] = run.passed;
    doc["dumped"] = dumped;
    Json reports = Json::array();
    for (const SearchReport& report : run.reports) reports.push_back(ToJson(report, flags.timing));
    doc["reports"] = std::move(reports);
    out << doc.dump(2) << "\n";
  } else {
    out << "verify " << ToString(*suite) << ": k=" << k << " rank=" << SuiteRank(*suite, k)
        << " trials=" << flags.trials << " seed=" << flags.seed
        << " conductor=" << flags.conductor << "\n";
    for (std::size_t i = 0; i < run.reports.size(); ++i) {
      const SearchReport& r = run.reports[i];
      out << "trial " << i << " cols=" << r.instance.columns << " "
          << (r.witness ? "pass " : "FAIL ") << WitnessText(r);
      if (!r.note.empty()) out << "  (" << r.note << ")";
      out << "\n";
    }
    out << ToString(*suite) << ": " << run.passed << "/" << flags.trials << " pass\n";
    for (const std::string& path : dumped) out << "dumped " << path << "\n";
  }
  return run.passed == flags.trials ? kExitFound : kExitVerifyFailure;
}

int CmdSearch(int conjecture_number, const std::string& budget_text, const TrialFlags& flags,
              std::ostream& out) {
  if (conjecture_number != 1 && conjecture_number != 2) {
    throw UsageError("--conjecture must be 1 or 2");
  }
  if (flags.k < 2) throw UsageError("--k must be at least 2");
  const Conjecture conjecture = static_cast<Conjecture>(conjecture_number);
  const ConjectureRun run =
      RunConjectureSearch(conjecture, flags.k, ToTrialOptions(flags), ParseBudget(budget_text));

  std::optional<std::string> dumped;
  if (run.search.counterexample) {
    const std::size_t i = *run.search.counterexample;
    dumped = Dump(flags,
                  "counterexample-conj" + std::to_string(conjecture_number) + "-k" +
                      std::to_string(flags.k) + "-seed" + std::to_string(flags.seed) +
                      "-trial" + std::to_string(i),
                  run.instances[i])
                 .string();
  }
  const std::string verdict = run.search.counterexample ? "counterexample"
                              : run.search.budget_exceeded ? "budget_exceeded"
                                                           : "verify_pass";
  if (flags.json) {
    Json doc;
    doc["conjecture"] = conjecture_number;
    doc["k"] = flags.k;
    doc["rank"] = ConjecturedRank(conjecture, flags.k);
    doc["seed"] = flags.seed;
    doc["trials"] = flags.trials;
    doc["outcome"] = verdict;
    doc["counterexample_file"] = dumped ? Json(*dumped) : Json(nullptr);
    Json reports = Json::array();
    for (const SearchReport& r : run.search.reports) reports.push_back(ToJson(r, flags.timing));
    doc["reports"] = std::move(reports);
    out << doc.dump(2) << "\n";
  } else {
    out << "search conjecture " << conjecture_number << ": k=" << flags.k
        << " rank=" << ConjecturedRank(conjecture, flags.k) << " trials=" << flags.trials
        << " seed=" << flags.seed << " conductor=" << flags.conductor << "\n";
    for (std::size_t i = 0; i < run.search.reports.size(); ++i) {
      const SearchReport& r = run.search.reports[i];
      out << "trial " << i << " cols=" << r.instance.columns << " " << ToString(r.outcome)
          << " " << WitnessText(r) << "\n";
    }
    out << "outcome: " << verdict << "\n";
    if (dumped) out << "counterexample written to " << *dumped << "\n";
  }
  if (run.search.counterexample) return kExitCounterexample;
  if (run.search.budget_exceeded) return kExitBudget;
  return kExitFound;
}

void AddTrialFlags(CLI::App* cmd, TrialFlags& flags, const char* dir_flag) {
  cmd->add_option("--trials", flags.trials, "Number of random instances")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", flags.seed, "Base seed (printed with every run)");
  cmd->add_option("--cols", flags.cols, "Columns per instance (default: rank+4..rank+6)");
  cmd->add_option("--conductor", flags.conductor, "Cyclotomic conductor of the entries");
  cmd->add_option("--bound", flags.bound, "Bound on numerators and denominators");
  cmd->add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", flags.json, "Machine-readable output");
  cmd->add_flag("--timing", flags.timing, "Include wall time in JSON output");
  cmd->add_option(dir_flag, flags.dir, "Directory for dumped instances");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for ordinary and elementary flats of complex-representable "
               "matroids"};
  app.name("cyclomatroid");
  app.require_subcommand(1);

  std::vector<std::string> exports;
  CLI::App* catalog = app.add_subcommand("catalog", "List catalog entries or export one");
  catalog->add_option("--export", exports, "REF FILE: write a catalog entry as a matrix file")
      ->expected(2);

  AnalyzeOptions analyze_options;
  CLI::App* analyze = app.add_subcommand("analyze", "Rank, simplicity and flat slices");
  analyze->add_option("input", analyze_options.input, "Matrix file or catalog ref")->required();
  analyze->add_option("--flats", analyze_options.flats, "List the rank-K flats");
  analyze->add_flag("--simple", analyze_options.simple, "Report loops and parallel classes");
  analyze->add_flag("--summary", analyze_options.summary, "Rank, size and simplicity");

  FindOptions ordinary_options;
  FindOptions elementary_options;
  auto add_find = [&](const char* name, const char* help, FindOptions& o, bool ordinary) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("input", o.input, "Matrix file or catalog ref")->required();
    cmd->add_option("--k", o.k, "Rank of the flat")->required();
    cmd->add_option("--method", o.method, "brute or constructive")
        ->check(CLI::IsMember({"brute", "constructive"}));
    if (ordinary) {
      cmd->add_option("--strategy", o.strategy, "How F' is chosen: enumerate or greedy")
          ->check(CLI::IsMember({"enumerate", "greedy"}));
      cmd->add_flag("--trace", o.trace, "Print the construction levels");
    }
    cmd->add_flag("--json", o.json, "Machine-readable output");
    cmd->add_flag("--timing", o.timing, "Include wall time in JSON output");
    cmd->add_option("--budget", o.budget, "Closure computations allowed in brute mode");
    return cmd;
  };
  CLI::App* find_ordinary =
      add_find("find-ordinary", "Find an ordinary rank-k flat", ordinary_options, true);
  CLI::App* find_elementary =
      add_find("find-elementary", "Find an elementary rank-k flat", elementary_options, false);

  std::string suite;
  TrialFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "Randomized checks of the theorems");
  verify->add_option("--suite", suite, "kelly, main-theorem or corollary")->required();
  CLI::Option* verify_k = verify->add_option("--k", verify_flags.k, "Rank of the sought flat");
  AddTrialFlags(verify, verify_flags, "--dump-dir");

  int conjecture = 0;
  std::string search_budget = "1e7";
  TrialFlags search_flags;
  search_flags.trials = 50;
  CLI::App* search = app.add_subcommand("search", "Counterexample search for the conjectures");
  search->add_option("--conjecture", conjecture, "1 (ordinary) or 2 (elementary)")->required();
  search->add_option("--k", search_flags.k, "Rank of the sought flat");
  search->add_option("--budget", search_budget, "Closure computations per instance");
  AddTrialFlags(search, search_flags, "--out-dir");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*catalog) return CmdCatalog(exports, out);
    if (*analyze) return CmdAnalyze(analyze_options, out);
    if (*find_ordinary) return CmdFind(ordinary_options, true, out);
    if (*find_elementary) return CmdFind(elementary_options, false, out);
    if (*verify) return CmdVerify(suite, verify_k->count() > 0, verify_flags, out);
    if (*search) return CmdSearch(conjecture, search_budget, search_flags, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const GenerationError& e) {
    err << "generation failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitParse;
}

}  // namespace cyclomatroid::cli
