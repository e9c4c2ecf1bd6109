#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "proofscope/formula.hpp"

namespace proofscope {

struct ParseOptions {
  /// Used in diagnostics and to resolve relative includes.
  std::string file_name;
  std::string problem_name;
  /// Extra roots searched for `include('...')` after the including file's directory.
  std::vector<std::filesystem::path> include_dirs;
};

/// Parses TPTP-style `cnf`/`fof` annotated formulas, `%` and `/* */`
/// comments and `include` directives. Throws ParseError on syntax errors,
/// arity clashes, duplicate labels, unsupported features and unreadable
/// includes.
ProblemSpec parse_problem(std::string_view source, const ParseOptions& options = {});

ProblemSpec parse_problem_file(const std::filesystem::path& path,
                               std::vector<std::filesystem::path> include_dirs = {});

/// Parses a bare CNF disjunction such as `c(f(A,B)) | -d(A) | c(B)`.
/// Variables are numbered by first occurrence.
Clause parse_clause(std::string_view text);

/// Renders the problem back to input syntax. Inputs whose labels are in
/// `omit` are skipped; `header` lines are emitted as `%` comments.
std::string write_problem(const ProblemSpec& spec, const std::vector<std::string>& header = {},
                          const std::vector<std::string>& omit = {});

}  // namespace proofscope
