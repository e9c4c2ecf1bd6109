#include "proofscope/report.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "proofscope/canonical.hpp"
#include "proofscope/hash.hpp"
#include "proofscope/tptp.hpp"

namespace proofscope {

namespace {

Json optional_count(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json clause_list(const ClauseSet& s) {
  Json out = Json::array();
  for (const auto& [key, c] : s) out.push_back(key);
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string rpad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::uint64_t problem_fingerprint(const std::vector<InputClause>& clauses) {
  std::uint64_t h = fnv1a("");
  for (const auto& c : clauses) {
    h = hash_combine(h, fnv1a(to_string(c.role)));
    h = hash_combine(h, fnv1a(to_string(c.clause)));
  }
  return h;
}

std::string fingerprint_hex(std::uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fp));
  return buf;
}

Json to_json(const SearchConfig& c) {
  Json j;
  j["max_proofs"] = optional_count(c.max_proofs);
  j["max_weight"] = optional_count(c.max_weight);
  j["max_given"] = optional_count(c.max_given);
  j["max_kept_clauses"] = optional_count(c.max_kept_clauses);
  j["sos_policy"] = to_string(c.sos_policy);
  j["dedup_proofs"] = c.dedup_proofs;
  return j;
}

Json to_json(const SaturationCounters& c) {
  Json j;
  j["given"] = c.given;
  j["generated"] = c.generated;
  j["kept"] = c.kept;
  j["discarded_subsumed"] = c.discarded_subsumed;
  j["back_subsumed"] = c.back_subsumed;
  j["discarded_weight"] = c.discarded_weight;
  j["discarded_tautology"] = c.discarded_tautology;
  j["empty_clauses"] = c.empty_clauses;
  return j;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["inputs"] = m.inputs;
  j["config"] = to_json(m.config);
  j["tool_version"] = kToolVersion;
  j["counters"] = to_json(m.counters);
  j["status"] = m.status;
  j["limit"] = m.limit.empty() ? Json(nullptr) : Json(m.limit);
  return j;
}

Json to_json(const ProofDag& p) {
  Json j;
  j["root"] = p.root;
  Json nodes = Json::array();
  for (const auto& [id, r] : p.nodes) {
    Json n;
    n["id"] = id;
    n["clause"] = to_string(r.clause);
    n["rule"] = to_string(r.rule);
    n["parents"] = r.parents;
    if (r.input_label) n["label"] = *r.input_label;
    if (r.input_role) n["role"] = to_string(*r.input_role);
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

ProofDag proof_from_json(const Json& j) {
  try {
    ProofDag p;
    p.root = j.at("root").get<ClauseId>();
    for (const auto& n : j.at("nodes")) {
      InferenceRecord r;
      r.id = n.at("id").get<ClauseId>();
      r.clause = canonical_clause(parse_clause(n.at("clause").get<std::string>()));
      const auto rule = parse_rule(n.at("rule").get<std::string>());
      if (!rule) throw ReportError("unknown rule '" + n.at("rule").get<std::string>() + "'");
      r.rule = *rule;
      r.parents = n.at("parents").get<std::vector<ClauseId>>();
      if (n.contains("label")) r.input_label = n["label"].get<std::string>();
      if (n.contains("role")) {
        const auto role = parse_role(n["role"].get<std::string>());
        if (!role) throw ReportError("unknown role '" + n["role"].get<std::string>() + "'");
        r.input_role = *role;
      }
      if (!p.nodes.emplace(r.id, r).second) throw ReportError("duplicate node id " + std::to_string(r.id));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(std::string("malformed proof: ") + e.what());
  } catch (const ParseError& e) {
    throw ReportError(std::string("malformed clause in proof: ") + e.what());
  }
}

Json to_json(const ProofMetrics& m) {
  Json j;
  j["length"] = m.length;
  j["input_count"] = m.input_count;
  j["derived_count"] = m.derived_count;
  j["max_clause_weight"] = m.max_clause_weight;
  j["depth"] = m.depth;
  return j;
}

Json to_json(const ProofDiff& d) {
  Json j;
  j["identical"] = d.identical;
  j["final_step_only"] = d.final_step_only;
  j["only_first"] = clause_list(d.only_first);
  j["only_second"] = clause_list(d.only_second);
  j["shared_count"] = d.shared.size();
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  Json spectrum = Json::object();
  for (const auto& [len, n] : r.spectrum) spectrum[std::to_string(len)] = n;
  j["spectrum"] = std::move(spectrum);
  j["identity"] = r.identity;
  j["shared"] = r.shared;
  j["common_core"] = clause_list(r.common_core);
  Json diffs = Json::array();
  for (const auto& pd : r.diffs) {
    Json d = to_json(pd.diff);
    diffs.push_back(Json{{"first", pd.first}, {"second", pd.second}});
    for (auto it = d.begin(); it != d.end(); ++it) diffs.back()[it.key()] = it.value();
  }
  j["diffs"] = std::move(diffs);
  return j;
}

Json to_json(const EnumerationReport& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["manifest"] = to_json(r.manifest);
  j["problem"] = Json{{"name", r.problem_name}, {"fingerprint", fingerprint_hex(r.fingerprint)}};
  j["raw_empty_clauses"] = r.raw_empty_clauses;
  Json proofs = Json::array();
  for (std::size_t i = 0; i < r.proofs.size(); ++i) {
    Json p = to_json(r.proofs[i]);
    Json entry;
    entry["index"] = i;
    entry["metrics"] = i < r.analysis.metrics.size() ? to_json(r.analysis.metrics[i]) : Json(nullptr);
    entry["root"] = p["root"];
    entry["nodes"] = p["nodes"];
    proofs.push_back(std::move(entry));
  }
  j["proofs"] = std::move(proofs);
  const Json a = to_json(r.analysis);
  for (auto it = a.begin(); it != a.end(); ++it) j[it.key()] = it.value();
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string render_text(const EnumerationReport& r) {
  std::ostringstream out;
  const RunManifest& m = r.manifest;
  out << "problem      " << r.problem_name << " (" << fingerprint_hex(r.fingerprint) << ")\n";
  out << "command      " << m.command << "\n";
  out << "status       " << m.status;
  if (!m.limit.empty()) out << " (" << m.limit << ")";
  out << ", " << r.proofs.size() << " proof" << (r.proofs.size() == 1 ? "" : "s") << "\n";
  out << "raw empty    " << r.raw_empty_clauses << "\n";
  out << "counters     given " << m.counters.given << ", generated " << m.counters.generated << ", kept "
      << m.counters.kept << ", subsumed " << m.counters.discarded_subsumed << ", back-subsumed "
      << m.counters.back_subsumed << ", weight " << m.counters.discarded_weight << ", tautologies "
      << m.counters.discarded_tautology << "\n";
  if (r.proofs.empty()) return out.str();

  out << "\nspectrum\n";
  for (const auto& [len, n] : r.analysis.spectrum) out << "  " << rpad(std::to_string(len), 6) << "  " << n << "\n";

  out << "\nproof  length  inputs  derived  depth  max-weight\n";
  for (std::size_t i = 0; i < r.analysis.metrics.size(); ++i) {
    const ProofMetrics& pm = r.analysis.metrics[i];
    out << rpad(std::to_string(i), 5) << rpad(std::to_string(pm.length), 8) << rpad(std::to_string(pm.input_count), 8)
        << rpad(std::to_string(pm.derived_count), 9) << rpad(std::to_string(pm.depth), 7)
        << rpad(std::to_string(pm.max_clause_weight), 12) << "\n";
  }

  out << "\ncommon core  " << r.analysis.common_core.size() << " clauses\n";
  for (const auto& [key, c] : r.analysis.common_core) out << "  " << key << "\n";

  if (r.proofs.size() > 1) {
    out << "\nshared clauses\n";
    const std::size_t n = r.proofs.size();
    out << pad("", 6);
    for (std::size_t j = 0; j < n; ++j) out << rpad(std::to_string(j), 6);
    out << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << rpad(std::to_string(i), 6);
      for (std::size_t j = 0; j < n; ++j) {
        std::string cell = std::to_string(r.analysis.shared[i][j]);
        if (i != j && r.analysis.identity[i][j]) cell += "=";
        out << rpad(cell, 6);
      }
      out << "\n";
    }
  }

  for (std::size_t i = 0; i < r.proofs.size(); ++i) {
    out << "\nproof " << i << "\n" << r.proofs[i].to_text();
  }
  return out.str();
}

LoadedReport report_from_json(const Json& j) {
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw ReportError("unsupported report format_version " + j.at("format_version").dump());
    }
    LoadedReport out;
    out.problem_name = j.at("problem").at("name").get<std::string>();
    out.fingerprint = std::stoull(j.at("problem").at("fingerprint").get<std::string>(), nullptr, 16);
    for (const auto& p : j.at("proofs")) out.proofs.push_back(proof_from_json(p));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  }
}

LoadedReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ReportError("cannot read " + path.string());
  try {
    return report_from_json(Json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ReportError(path.string() + ": " + e.what());
  }
}

Json to_json(const MinimizationReport& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["manifest"] = to_json(r.manifest);
  j["problem"] = Json{{"name", r.problem_name}};
  j["probe_config"] = to_json(r.result.budget_config);
  j["probes"] = r.result.probes;
  j["kept"] = r.result.kept;
  j["removed"] = r.result.removed;
  Json verdicts = Json::object();
  for (const auto& [label, v] : r.result.verdicts) verdicts[label] = to_string(v);
  j["verdicts"] = std::move(verdicts);
  j["minimal_verified"] = r.minimal_verified;
  j["exhaustive_minimum"] = r.result.exhaustive_minimum ? Json(*r.result.exhaustive_minimum) : Json(nullptr);
  j["cardinality_gap"] = r.result.cardinality_gap;
  return j;
}

std::string render_text(const MinimizationReport& r) {
  std::ostringstream out;
  out << "problem      " << r.problem_name << "\n";
  out << "probes       " << r.result.probes << "\n";
  out << "kept         " << r.result.kept.size() << "\n";
  for (const auto& l : r.result.kept) {
    const auto it = r.result.verdicts.find(l);
    out << "  " << pad(l, 24) << (it == r.result.verdicts.end() ? "needed" : to_string(it->second)) << "\n";
  }
  out << "removed      " << r.result.removed.size() << "\n";
  for (const auto& l : r.result.removed) out << "  " << l << "\n";
  out << "1-minimal    " << (r.minimal_verified ? "verified" : "not verified") << "\n";
  if (r.result.exhaustive_minimum) {
    out << "minimum      " << r.result.exhaustive_minimum->size() << " premises";
    if (r.result.cardinality_gap) out << " (smaller than the kept set)";
    out << "\n";
  }
  return out.str();
}

std::string render_diff(const ProofDiff& d, const std::string& a, const std::string& b) {
  std::ostringstream out;
  if (d.identical) {
    out << "identical\n";
    return out.str();
  }
  out << "shared " << d.shared.size() << " clauses";
  if (d.final_step_only) out << ", differ only at the final step";
  out << "\n";
  out << "only in " << a << " (" << d.only_first.size() << ")\n";
  for (const auto& [key, c] : d.only_first) out << "  " << key << "\n";
  out << "only in " << b << " (" << d.only_second.size() << ")\n";
  for (const auto& [key, c] : d.only_second) out << "  " << key << "\n";
  return out.str();
}

}  // namespace proofscope
