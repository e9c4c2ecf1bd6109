#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "proofscope/report.hpp"
#include "proofscope/tptp.hpp"

using namespace proofscope;

namespace {

EnumerationReport build(const std::vector<InputClause>& in, const SearchConfig& config = SearchConfig()) {
  SaturationResult r = saturate(in, config);
  EnumerationReport rep;
  rep.manifest.command = "enumerate";
  rep.manifest.inputs = {"x.p"};
  rep.manifest.config = config;
  rep.manifest.counters = r.counters;
  rep.manifest.status = to_string(r.status);
  rep.manifest.limit = r.limit;
  rep.problem_name = "x";
  rep.fingerprint = problem_fingerprint(in);
  rep.raw_empty_clauses = r.counters.empty_clauses;
  rep.analysis = analyze(r.refutations);
  rep.proofs = std::move(r.refutations);
  return rep;
}

std::vector<InputClause> two() {
  return {{parse_clause("p | q"), Role::axiom, "a"},
          {parse_clause("-p"), Role::axiom, "b"},
          {parse_clause("-q"), Role::axiom, "c"}};
}

}  // namespace

TEST_CASE("json layout") {
  const Json j = to_json(build(two()));
  CHECK(j["format_version"] == kFormatVersion);
  for (const char* key : {"manifest", "problem", "proofs", "spectrum", "identity", "shared", "common_core", "diffs"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["manifest"]["config"]["max_proofs"].is_null());
  CHECK(j["manifest"]["config"]["max_weight"] == 64);
  CHECK(j["manifest"]["tool_version"] == kToolVersion);
  CHECK_FALSE(j["manifest"].contains("wall_time_seconds"));
  CHECK(j["spectrum"]["5"] == 2);
  CHECK(j["proofs"].size() == 2);
  CHECK(j["proofs"][0]["metrics"]["length"] == 5);
  CHECK(j["identity"][0][1] == false);
  CHECK(j["shared"][0][1] == 4);
  CHECK(j["diffs"][0]["final_step_only"] == true);
}

TEST_CASE("proofs survive a json round trip") {
  const EnumerationReport rep = build(two());
  const LoadedReport back = report_from_json(Json::parse(render_json(to_json(rep))));
  CHECK(back.problem_name == "x");
  CHECK(back.fingerprint == rep.fingerprint);
  REQUIRE(back.proofs.size() == rep.proofs.size());
  for (std::size_t i = 0; i < rep.proofs.size(); ++i) {
    CHECK(back.proofs[i].to_text() == rep.proofs[i].to_text());
    CHECK(proofs_identical(back.proofs[i], rep.proofs[i]));
    CHECK(check_proof(back.proofs[i]));
  }
}

TEST_CASE("first-order proofs survive a json round trip") {
  SearchConfig c;
  c.max_given = 200;
  const EnumerationReport rep = build({{parse_clause("-c(f(A,B)) | -d(A) | c(B)"), Role::axiom, "a"},
                                       {parse_clause("d(e)"), Role::axiom, "b"},
                                       {parse_clause("c(f(e,g))"), Role::axiom, "c"},
                                       {parse_clause("-c(g)"), Role::negated_conjecture, "d"}},
                                      c);
  REQUIRE_FALSE(rep.proofs.empty());
  const LoadedReport back = report_from_json(to_json(rep));
  for (std::size_t i = 0; i < rep.proofs.size(); ++i) CHECK(proofs_identical(back.proofs[i], rep.proofs[i]));
}

TEST_CASE("rendering is deterministic") {
  const std::string a = render_json(to_json(build(two())));
  const std::string b = render_json(to_json(build(two())));
  CHECK(a == b);
  CHECK(render_text(build(two())) == render_text(build(two())));
}

TEST_CASE("text report") {
  const std::string t = render_text(build(two()));
  CHECK(t.find("status       saturated, 2 proofs") != std::string::npos);
  CHECK(t.find("spectrum") != std::string::npos);
  CHECK(t.find("common core  4 clauses") != std::string::npos);
  const std::string sat = render_text(build({{parse_clause("p"), Role::axiom, "a"}}));
  CHECK(sat.find("saturated, 0 proofs") != std::string::npos);
}

TEST_CASE("fingerprint depends on clauses and roles") {
  auto in = two();
  const auto fp = problem_fingerprint(in);
  in[2].role = Role::negated_conjecture;
  CHECK(problem_fingerprint(in) != fp);
  CHECK(fingerprint_hex(0xabc) == "0000000000000abc");
}

TEST_CASE("malformed reports") {
  CHECK_THROWS_AS(report_from_json(Json::parse("{}")), ReportError);
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"format_version": 99})")), ReportError);
  Json j = to_json(build(two()));
  j["proofs"][0]["nodes"][0]["rule"] = "paramodulate";
  CHECK_THROWS_AS(report_from_json(j), ReportError);
  j = to_json(build(two()));
  j["proofs"][0]["nodes"][0]["clause"] = "p |";
  CHECK_THROWS_AS(report_from_json(j), ReportError);
  CHECK_THROWS_AS(load_report("/nonexistent/report.json"), ReportError);
  const auto path = std::filesystem::temp_directory_path() / "proofscope_bad.json";
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_report(path), ReportError);
}

TEST_CASE("minimization report") {
  MinimizationReport m;
  m.problem_name = "m";
  m.result.kept = {"a", "b"};
  m.result.removed = {"c"};
  m.result.verdicts = {{"a", PremiseVerdict::needed}, {"b", PremiseVerdict::unknown}, {"c", PremiseVerdict::redundant}};
  m.result.exhaustive_minimum = std::vector<std::string>{"a"};
  m.result.cardinality_gap = true;
  const Json j = to_json(m);
  CHECK(j["format_version"] == kFormatVersion);
  CHECK(j["cardinality_gap"] == true);
  CHECK(j["verdicts"]["b"] == "unknown");
  const std::string t = render_text(m);
  CHECK(t.find("smaller than the kept set") != std::string::npos);
}

TEST_CASE("diff rendering") {
  const EnumerationReport rep = build(two());
  CHECK(render_diff(proof_diff(rep.proofs[0], rep.proofs[0]), "a", "b") == "identical\n");
  const std::string d = render_diff(proof_diff(rep.proofs[0], rep.proofs[1]), "proof 0", "proof 1");
  CHECK(d.find("differ only at the final step") != std::string::npos);
  CHECK(d.find("only in proof 0 (1)") != std::string::npos);
}
