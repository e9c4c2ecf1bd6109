// proofscope: enumerate, analyze, compare and minimize resolution refutations.
//
// Exit codes
//   0  success (enumerate/prove: at least one proof)
//   1  enumerate/prove: saturated without a proof
//   2  enumerate/prove: limit reached without a proof;
//      minimize: goal unprovable or probe budget exhausted
//   3  usage error
//   4  unreadable or malformed input
//   5  reports from different problems
//   6  internal error

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "proofscope/analysis.hpp"
#include "proofscope/clausify.hpp"
#include "proofscope/minimizer.hpp"
#include "proofscope/report.hpp"
#include "proofscope/saturation.hpp"
#include "proofscope/tptp.hpp"

namespace fs = std::filesystem;
using namespace proofscope;

namespace {

enum Exit : int {
  kProof = 0,
  kSaturated = 1,
  kLimit = 2,
  kUsage = 3,
  kBadInput = 4,
  kMismatch = 5,
  kInternal = 6,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchFlags {
  std::optional<std::size_t> max_proofs;
  std::size_t max_weight = 64;
  std::size_t max_given = 100000;
  std::size_t max_kept = 500000;
  std::string sos = "conjecture";
  bool no_dedup = false;
  bool given_set = false;
};

struct CommonFlags {
  std::string out_dir;
  std::vector<std::string> include_dirs;
  bool quiet = false;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
  cmd->add_option("--max-proofs", f.max_proofs, "Stop after this many distinct proofs")->check(CLI::PositiveNumber);
  cmd->add_option("--max-weight", f.max_weight, "Discard derived clauses heavier than this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-given", f.max_given, "Stop after selecting this many given clauses")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-kept", f.max_kept, "Stop after keeping this many clauses")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--sos", f.sos, "Set of support: the negated conjecture, or all inputs")
      ->check(CLI::IsMember({"conjecture", "all"}))
      ->capture_default_str();
  cmd->add_flag("--no-dedup", f.no_dedup, "Report every empty-clause occurrence");
}

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--out", f.out_dir, "Directory for reports (default: next to the input)");
  cmd->add_option("--include-dir,-I", f.include_dirs, "Extra include root");
  cmd->add_flag("--quiet,-q", f.quiet, "Do not print the text report");
}

SearchConfig to_config(const SearchFlags& f) {
  SearchConfig c;
  c.max_proofs = f.max_proofs;
  c.max_weight = f.max_weight;
  c.max_given = f.max_given;
  c.max_kept_clauses = f.max_kept;
  c.sos_policy = f.sos == "all" ? SosPolicy::all_input : SosPolicy::negated_conjecture_only;
  c.dedup_proofs = !f.no_dedup;
  return c;
}

void require_readable(const std::string& file) {
  std::ifstream in(file);
  if (!in || fs::is_directory(file)) throw BadInputError("cannot read " + file);
}

std::vector<fs::path> include_roots(const CommonFlags& f) {
  std::vector<fs::path> roots(f.include_dirs.begin(), f.include_dirs.end());
  if (const char* env = std::getenv("PROOFSCOPE_INCLUDE_DIR"); env && *env) roots.emplace_back(env);
  return roots;
}

fs::path output_base(const fs::path& input, const CommonFlags& f) {
  const fs::path dir = f.out_dir.empty() ? input.parent_path() : fs::path(f.out_dir);
  if (!f.out_dir.empty()) fs::create_directories(dir);
  return dir / input.stem();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_timing(const fs::path& base, double seconds) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["wall_time_seconds"] = seconds;
  write_file(base.string() + ".timing.json", render_json(j));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_enumerate(const std::string& command, const std::string& file, const SearchFlags& sf, const CommonFlags& cf,
                  const std::string& log_path) {
  const auto start = std::chrono::steady_clock::now();
  SearchConfig config = to_config(sf);
  if (command == "prove" && !sf.max_proofs) config.max_proofs = 1;

  require_readable(file);
  const ProblemSpec spec = parse_problem_file(file, include_roots(cf));
  const ClausifiedProblem cp = clausify(spec);
  if (cp.clauses.empty()) throw UsageError(file + ": problem has no clauses");
  SaturationResult result = saturate(cp.clauses, config);

  EnumerationReport report;
  report.manifest.command = command;
  report.manifest.inputs = {fs::path(file).filename().string()};
  report.manifest.config = config;
  report.manifest.counters = result.counters;
  report.manifest.status = to_string(result.status);
  report.manifest.limit = result.limit;
  report.problem_name = spec.name;
  report.fingerprint = problem_fingerprint(cp.clauses);
  report.raw_empty_clauses = result.counters.empty_clauses;
  report.analysis = analyze(result.refutations);
  report.proofs = std::move(result.refutations);

  const fs::path base = output_base(file, cf);
  write_file(base.string() + ".report.json", render_json(to_json(report)));
  const std::string text = render_text(report);
  write_file(base.string() + ".report.txt", text);
  if (!log_path.empty()) write_file(log_path, result.log.to_text());
  write_timing(base, seconds_since(start));
  if (!cf.quiet) std::cout << text;

  if (!report.proofs.empty()) return kProof;
  return result.status == SaturationStatus::saturated ? kSaturated : kLimit;
}

int cmd_minimize(const std::string& file, const SearchFlags& sf, const CommonFlags& cf) {
  const auto start = std::chrono::steady_clock::now();
  SearchConfig probe_config = to_config(sf);
  if (!sf.given_set) probe_config.max_given = default_probe_config().max_given;
  probe_config.max_proofs = 1;

  require_readable(file);
  const ProblemSpec spec = parse_problem_file(file, include_roots(cf));
  const bool has_goal = std::any_of(spec.inputs.begin(), spec.inputs.end(), [](const AnnotatedInput& in) {
    return in.role == Role::conjecture || in.role == Role::negated_conjecture;
  });
  if (!has_goal) throw UsageError(file + ": minimize needs a conjecture or negated conjecture");

  MinimizationReport report;
  try {
    report.result = minimize_premises(spec, probe_config);
  } catch (const MinimizationError& e) {
    std::cerr << "proofscope: " << file << ": " << e.what() << "\n";
    return kLimit;
  }
  report.minimal_verified = verify_minimality(spec, report.result.kept, probe_config);
  flag_cardinality_gap(spec, report.result, probe_config);
  report.problem_name = spec.name;
  report.manifest.command = "minimize";
  report.manifest.inputs = {fs::path(file).filename().string()};
  report.manifest.config = probe_config;
  report.manifest.status = report.minimal_verified ? "minimal" : "not_verified";

  std::vector<std::string> header = {"Premise-minimized from " + fs::path(file).filename().string()};
  if (report.result.removed.empty()) {
    header.push_back("No premise removed");
  } else {
    for (const auto& l : report.result.removed) header.push_back("Removed: " + l);
  }

  const fs::path base = output_base(file, cf);
  write_file(base.string() + ".min.p", write_problem(spec, header, report.result.removed));
  write_file(base.string() + ".minimize.json", render_json(to_json(report)));
  const std::string text = render_text(report);
  write_file(base.string() + ".minimize.txt", text);
  write_timing(base, seconds_since(start));
  if (!cf.quiet) std::cout << text;
  return kProof;
}

int cmd_analyze(const std::vector<std::string>& files, const CommonFlags& cf) {
  std::vector<ProofDag> proofs;
  std::optional<LoadedReport> first;
  for (const auto& f : files) {
    require_readable(f);
    LoadedReport r = load_report(f);
    if (first && r.fingerprint != first->fingerprint) {
      throw MismatchError(f + " is a report for a different problem than " + files.front());
    }
    for (auto& p : r.proofs) proofs.push_back(std::move(p));
    if (!first) first = std::move(r);
  }
  if (proofs.empty()) {
    std::cout << "no proofs\n";
    return kProof;
  }
  EnumerationReport report;
  report.manifest.command = "analyze";
  for (const auto& f : files) report.manifest.inputs.push_back(fs::path(f).filename().string());
  report.manifest.status = "analyzed";
  report.problem_name = first->problem_name;
  report.fingerprint = first->fingerprint;
  report.analysis = analyze(proofs);
  report.proofs = std::move(proofs);
  const std::string text = render_text(report);
  if (!cf.out_dir.empty()) {
    fs::create_directories(cf.out_dir);
    const fs::path base = fs::path(cf.out_dir) / (report.problem_name + ".analysis");
    write_file(base.string() + ".json", render_json(to_json(report)));
    write_file(base.string() + ".txt", text);
  }
  if (!cf.quiet) std::cout << text;
  return kProof;
}

int cmd_diff(const std::vector<std::string>& files, std::size_t a, std::optional<std::size_t> b) {
  if (files.empty() || files.size() > 2) throw UsageError("diff takes one or two report files");
  for (const auto& f : files) require_readable(f);
  const LoadedReport r1 = load_report(files[0]);
  const LoadedReport r2 = files.size() == 2 ? load_report(files[1]) : r1;
  if (r1.fingerprint != r2.fingerprint || r1.problem_name != r2.problem_name) {
    throw MismatchError("reports are for different problems: " + r1.problem_name + " and " + r2.problem_name);
  }
  const std::size_t second = b.value_or(files.size() == 2 ? 0 : 1);
  if (a >= r1.proofs.size()) throw UsageError("proof index " + std::to_string(a) + " out of range");
  if (second >= r2.proofs.size()) throw UsageError("proof index " + std::to_string(second) + " out of range");
  const ProofDiff d = proof_diff(r1.proofs[a], r2.proofs[second]);
  std::cout << render_diff(d, "proof " + std::to_string(a), "proof " + std::to_string(second));
  return kProof;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, compare and minimize resolution refutations"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  SearchFlags sf;
  CommonFlags cf;
  std::string file;
  std::string log_path;
  std::vector<std::string> files;
  std::size_t first_index = 0;
  std::optional<std::size_t> second_index;

  CLI::App* enumerate = app.add_subcommand("enumerate", "Search for refutations and report all distinct proofs");
  CLI::App* prove = app.add_subcommand("prove", "Search for a single refutation");
  for (CLI::App* cmd : {enumerate, prove}) {
    add_search_flags(cmd, sf);
    add_common_flags(cmd, cf);
    cmd->add_option("--log", log_path, "Write the derivation log to this file");
    cmd->add_option("problem", file, "Problem file")->required();
  }

  CLI::App* minimize = app.add_subcommand("minimize", "Drop premises not needed for the conjecture");
  add_search_flags(minimize, sf);
  add_common_flags(minimize, cf);
  minimize->add_option("problem", file, "Problem file")->required();

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze the proofs stored in reports");
  add_common_flags(analyze_cmd, cf);
  analyze_cmd->add_option("reports", files, "Report files")->required();

  CLI::App* diff = app.add_subcommand("diff", "Compare two proofs from one or two reports");
  diff->add_option("--first", first_index, "Proof index in the first report")->capture_default_str();
  diff->add_option("--second", second_index, "Proof index in the second report");
  diff->add_option("reports", files, "Report files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  for (CLI::App* cmd : {minimize}) {
    if (cmd->parsed()) sf.given_set = cmd->count("--max-given") > 0;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate("enumerate", file, sf, cf, log_path);
    if (prove->parsed()) return cmd_enumerate("prove", file, sf, cf, log_path);
    if (minimize->parsed()) return cmd_minimize(file, sf, cf);
    if (analyze_cmd->parsed()) return cmd_analyze(files, cf);
    if (diff->parsed()) return cmd_diff(files, first_index, second_index);
  } catch (const UsageError& e) {
    std::cerr << "proofscope: " << e.what() << "\n";
    return kUsage;
  } catch (const MismatchError& e) {
    std::cerr << "proofscope: " << e.what() << "\n";
    return kMismatch;
  } catch (const BadInputError& e) {
    std::cerr << "proofscope: " << e.what() << "\n";
    return kBadInput;
  } catch (const ParseError& e) {
    std::cerr << "proofscope: " << e.what() << "\n";
    return kBadInput;
  } catch (const ClausifyError& e) {
    std::cerr << "proofscope: " << e.what() << "\n";
    return kBadInput;
  } catch (const ReportError& e) {
    std::cerr << "proofscope: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "proofscope: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
