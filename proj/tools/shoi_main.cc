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

// Command-line front end.
//
// Exit codes: 0 consistent, 1 inconsistent, 2 parse or IO error, 3 budget
// exceeded, 4 verification failed.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "shoi/generators.h"
#include "shoi/oracle.h"
#include "shoi/parser.h"
#include "shoi/tableau.h"
#include "shoi/trace.h"
#include "shoi/verifier.h"

namespace {

enum Exit {
  kExitConsistent = 0,
  kExitInconsistent = 1,
  kExitInputError = 2,
  kExitBudget = 3,
  kExitVerifyFailed = 4,
};

struct CheckFlags {
  std::string path;
  std::optional<int> paper_m;
  int64_t max_nodes = 100000;
  int64_t max_bp_nodes = 10000;
  double timeout_s = 300;
  std::string trace_file;
};

void AddCheckFlags(CLI::App* cmd, CheckFlags* f) {
  cmd->add_option("file", f->path, "ontology file (.shoi)")->required();
  cmd->add_option("--paper-m", f->paper_m,
                  "pin the master problem's big-M (10 reproduces the "
                  "worked-example numbers)");
  cmd->add_option("--max-nodes", f->max_nodes, "completion graph node budget")
      ->capture_default_str();
  cmd->add_option("--max-bp-nodes", f->max_bp_nodes,
                  "branch-and-price nodes per AM call")
      ->capture_default_str();
  cmd->add_option("--timeout-s", f->timeout_s, "wall clock budget in seconds")
      ->capture_default_str();
  cmd->add_option("--trace-file", f->trace_file,
                  "write the JSON-lines trace here");
}

void SetupLogging() {
  auto logger = spdlog::stderr_color_mt("shoi");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("SHOI_LOG")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
}

std::optional<shoi::KnowledgeBase> Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << path << ": cannot open\n";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return shoi::BuildKnowledgeBase(shoi::ParseOntology(ss.str()));
  } catch (const shoi::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

shoi::TableauOptions MakeOptions(const CheckFlags& f) {
  shoi::TableauOptions o;
  if (f.paper_m) {
    o.paper_m = *f.paper_m == 10;
    o.big_m = shoi::Rational(*f.paper_m);
  }
  o.max_nodes = f.max_nodes;
  o.max_bp_nodes = f.max_bp_nodes;
  o.deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(f.timeout_s));
  return o;
}

void PrintStats(const shoi::TableauStats& s, double ms) {
  std::cout << "nodes_created " << s.nodes_created << "\n";
  std::cout << "rules";
  for (const auto& [tag, count] : s.rules) std::cout << " " << tag << "=" << count;
  std::cout << "\n";
  std::cout << "am_invocations " << s.am_invocations << "\n";
  std::cout << "columns_generated " << s.columns_generated << "\n";
  std::cout << "bp_nodes " << s.bp_nodes << "\n";
  std::cout << "branch_points " << s.branch_points << "\n";
  std::cout << "backtracks " << s.backtracks << "\n";
  std::cout << "time_ms " << ms << "\n";
}

int VerdictExit(shoi::Verdict v) {
  switch (v) {
    case shoi::Verdict::kConsistent:
      return kExitConsistent;
    case shoi::Verdict::kInconsistent:
      return kExitInconsistent;
    case shoi::Verdict::kGaveUp:
      return kExitBudget;
  }
  return kExitBudget;
}

struct Run {
  shoi::TableauResult result;
  double ms = 0;
};

// Runs the check with the trace going to --trace-file, or to fallback when
// no file is given (may be null).
std::optional<Run> Check(const shoi::KnowledgeBase& kb, const CheckFlags& f,
                         std::ostream* fallback,
                         std::vector<nlohmann::json>* records = nullptr) {
  shoi::TableauOptions opts = MakeOptions(f);
  std::ofstream file;
  std::ostream* sink = fallback;
  if (!f.trace_file.empty()) {
    file.open(f.trace_file);
    if (!file) {
      std::cerr << f.trace_file << ": cannot write\n";
      return std::nullopt;
    }
    sink = &file;
  }
  std::unique_ptr<shoi::TraceWriter> writer;
  if (sink) writer = std::make_unique<shoi::TraceWriter>(*sink);
  if (writer || records) {
    opts.trace = [&](const nlohmann::json& j) {
      if (writer) writer->Write(j);
      if (records) records->push_back(j);
    };
  }
  auto start = std::chrono::steady_clock::now();
  Run run;
  run.result = shoi::CheckConsistency(kb, opts);
  run.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
               .count();
  spdlog::info("checked {} in {:.1f} ms", f.path, run.ms);
  return run;
}

int CmdCheck(const CheckFlags& f) {
  auto kb = Load(f.path);
  if (!kb) return kExitInputError;
  auto run = Check(*kb, f, nullptr);
  if (!run) return kExitInputError;
  std::cout << shoi::VerdictName(run->result.verdict) << "\n";
  if (run->result.verdict == shoi::Verdict::kGaveUp) {
    std::cout << "reason " << run->result.gave_up_reason << "\n";
  }
  PrintStats(run->result.stats, run->ms);
  return VerdictExit(run->result.verdict);
}

int CmdTrace(const CheckFlags& f) {
  auto kb = Load(f.path);
  if (!kb) return kExitInputError;
  std::vector<nlohmann::json> records;
  auto run = Check(*kb, f, &std::cerr, &records);
  if (!run) return kExitInputError;
  std::cout << shoi::HumanSummary(records);
  return VerdictExit(run->result.verdict);
}

int CmdVerify(const CheckFlags& f, int oracle_k) {
  auto kb = Load(f.path);
  if (!kb) return kExitInputError;
  auto run = Check(*kb, f, nullptr);
  if (!run) return kExitInputError;
  const shoi::TableauResult& r = run->result;
  std::cout << shoi::VerdictName(r.verdict) << "\n";
  if (r.verdict == shoi::Verdict::kGaveUp) return kExitBudget;
  if (r.verdict == shoi::Verdict::kInconsistent) {
    std::cout << "verification skipped: no completion graph for an "
                 "inconsistent ontology\n";
    return kExitInconsistent;
  }
  shoi::VerificationReport report =
      shoi::VerifyTableauProperties(r.graph, kb->tbox, kb->rbox);
  std::cout << report.ToString();
  bool ok = report.AllPassed();
  if (oracle_k > 0) {
    shoi::OracleResult o = shoi::BruteForceConsistency(*kb, oracle_k);
    if (o.status == shoi::OracleStatus::kConsistent) {
      std::cout << "oracle CONSISTENT (domain " << o.k << ")\n"
                << o.model.ToString();
    } else {
      // Not a disagreement: a consistent ontology may need a larger domain.
      std::cout << "oracle found no model up to domain " << o.k << "\n";
    }
  }
  return ok ? kExitConsistent : kExitVerifyFailed;
}

int CmdGen(const std::string& family, int n, const std::string& variant,
           int extra, const std::string& out_path) {
  shoi::GeneratedOntology g;
  if (family == "testont") {
    if (variant != "cons" && variant != "incons") {
      std::cerr << "--variant must be cons or incons\n";
      return kExitInputError;
    }
    g = shoi::GenTestOnt(n, variant == "cons" ? shoi::TestOntVariant::kCons
                                              : shoi::TestOntVariant::kIncons);
  } else if (family == "ca_provinces") {
    g = shoi::GenMembers(extra, shoi::MembersFamily::kCaProvinces);
  } else if (family == "eu_members") {
    g = shoi::GenMembers(extra, shoi::MembersFamily::kEuMembers);
  } else {
    std::cerr << "unknown family " << family << "\n";
    return kExitInputError;
  }
  std::ostream* metrics = &std::cout;
  if (out_path.empty()) {
    std::cout << g.text;
    metrics = &std::cerr;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << out_path << ": cannot write\n";
      return kExitInputError;
    }
    out << g.text;
  }
  *metrics << "axioms " << g.metrics.axioms << "\nconcepts "
           << g.metrics.concepts << "\nindividuals " << g.metrics.individuals
           << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  SetupLogging();
  CLI::App app{"SHOI consistency checker"};
  app.require_subcommand(1);

  CheckFlags check_flags;
  CLI::App* check = app.add_subcommand("check", "decide consistency");
  AddCheckFlags(check, &check_flags);

  CheckFlags trace_flags;
  CLI::App* trace = app.add_subcommand(
      "trace", "decide consistency and print the rule and ILP trace");
  AddCheckFlags(trace, &trace_flags);

  CheckFlags verify_flags;
  int oracle_k = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "check the tableau properties of the final graph");
  AddCheckFlags(verify, &verify_flags);
  verify->add_option("--oracle", oracle_k,
                     "also search for a finite model up to this domain size");

  std::string family;
  int n = 5;
  std::string variant = "cons";
  int extra = 0;
  std::string out_path;
  CLI::App* gen = app.add_subcommand("gen", "write a benchmark ontology");
  gen->add_option("family", family, "testont, ca_provinces or eu_members")
      ->required();
  gen->add_option("--n", n, "testont size")->capture_default_str();
  gen->add_option("--variant", variant, "cons or incons")->capture_default_str();
  gen->add_option("--extra", extra, "extra members")->capture_default_str();
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }
  try {
    if (*check) return CmdCheck(check_flags);
    if (*trace) return CmdTrace(trace_flags);
    if (*verify) return CmdVerify(verify_flags, oracle_k);
    if (*gen) return CmdGen(family, n, variant, extra, out_path);
  } catch (const shoi::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
