#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "proofscope/analysis.hpp"
#include "proofscope/clausify.hpp"
#include "proofscope/minimizer.hpp"
#include "proofscope/saturation.hpp"

namespace proofscope {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Run metadata embedded in every report. Wall time is kept out of the
/// report itself so that identical runs produce identical files.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  SearchConfig config;
  SaturationCounters counters;
  std::string status;
  std::string limit;
};

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// FNV-1a over the printed clauses and roles of the clausified problem.
std::uint64_t problem_fingerprint(const std::vector<InputClause>& clauses);
std::string fingerprint_hex(std::uint64_t fp);

Json to_json(const SearchConfig& c);
Json to_json(const SaturationCounters& c);
Json to_json(const RunManifest& m);
Json to_json(const ProofDag& p);
Json to_json(const ProofMetrics& m);
Json to_json(const ProofDiff& d);
Json to_json(const AnalysisReport& r);

/// Inverse of to_json(ProofDag); clauses are re-parsed and canonicalized.
ProofDag proof_from_json(const Json& j);

struct EnumerationReport {
  RunManifest manifest;
  std::string problem_name;
  std::uint64_t fingerprint = 0;
  std::size_t raw_empty_clauses = 0;
  std::vector<ProofDag> proofs;
  AnalysisReport analysis;
};

Json to_json(const EnumerationReport& r);
std::string render_json(const Json& j);
std::string render_text(const EnumerationReport& r);

/// Proofs and problem identity read back from a saved enumeration report.
struct LoadedReport {
  std::string problem_name;
  std::uint64_t fingerprint = 0;
  std::vector<ProofDag> proofs;
};

LoadedReport load_report(const std::filesystem::path& path);
LoadedReport report_from_json(const Json& j);

struct MinimizationReport {
  RunManifest manifest;
  std::string problem_name;
  MinimizationResult result;
  bool minimal_verified = false;
};

Json to_json(const MinimizationReport& r);
std::string render_text(const MinimizationReport& r);

/// Plain-text rendering of a pairwise diff between proofs `a` and `b`.
std::string render_diff(const ProofDiff& d, const std::string& a, const std::string& b);

}  // namespace proofscope
