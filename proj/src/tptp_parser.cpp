#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "proofscope/tptp.hpp"

namespace proofscope {

namespace {

enum class Tok {
  lower_word,
  upper_word,
  dollar_word,
  quoted,
  number,
  distinct,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  dot,
  colon,
  bang,
  question,
  tilde,
  minus,
  vline,
  amp,
  implies,
  implied,
  iff,
  xor_,
  nor,
  nand,
  equals,
  not_equals,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::string file) : src_(src), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        t.kind = Tok::end;
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '$') {
        std::string word;
        word += advance();
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          word += advance();
        }
        if (c == '$') {
          if (word.size() == 1) error(t, "expected a word after '$'");
          t.kind = Tok::dollar_word;
        } else {
          t.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::upper_word : Tok::lower_word;
        }
        t.text = std::move(word);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
        t.kind = Tok::number;
      } else if (c == '\'' || c == '"') {
        advance();
        for (;;) {
          if (pos_ >= src_.size()) error(t, "unterminated quoted string");
          char d = advance();
          if (d == c) break;
          if (d == '\\') {
            if (pos_ >= src_.size()) error(t, "unterminated quoted string");
            d = advance();
          }
          t.text += d;
        }
        t.kind = c == '\'' ? Tok::quoted : Tok::distinct;
        if (t.kind == Tok::quoted && t.text.empty()) error(t, "empty quoted name");
      } else {
        t.kind = punct(t);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  bool looking_at(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (looking_at("/*")) {
        Token start{Tok::end, {}, line_, column_};
        advance();
        advance();
        while (!looking_at("*/")) {
          if (pos_ >= src_.size()) error(start, "unterminated block comment");
          advance();
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Tok punct(Token& t) {
    struct Op {
      std::string_view text;
      Tok kind;
    };
    // Longest operators first.
    static constexpr Op ops[] = {
        {"<=>", Tok::iff}, {"<~>", Tok::xor_}, {"=>", Tok::implies}, {"<=", Tok::implied},
        {"~|", Tok::nor},  {"~&", Tok::nand},  {"!=", Tok::not_equals}, {"(", Tok::lparen},
        {")", Tok::rparen}, {"[", Tok::lbracket}, {"]", Tok::rbracket}, {",", Tok::comma},
        {".", Tok::dot},   {":", Tok::colon},  {"!", Tok::bang},     {"?", Tok::question},
        {"~", Tok::tilde}, {"-", Tok::minus},  {"|", Tok::vline},    {"&", Tok::amp},
        {"=", Tok::equals},
    };
    for (const auto& op : ops) {
      if (looking_at(op.text)) {
        for (std::size_t i = 0; i < op.text.size(); ++i) advance();
        t.text = std::string(op.text);
        return op.kind;
      }
    }
    error(t, std::string("unexpected character '") + src_[pos_] + "'");
  }

  [[noreturn]] void error(const Token& at, const std::string& msg) const {
    throw ParseError(file_, at.line, at.column, msg);
  }

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct ParseState {
  ProblemSpec spec;
  std::set<std::string> labels;
  std::vector<std::filesystem::path> include_dirs;
  std::vector<std::filesystem::path> include_stack;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file, ParseState& state)
      : toks_(std::move(tokens)), file_(std::move(file)), state_(state) {}

  void parse_inputs(const std::set<std::string>* selection) {
    while (peek().kind != Tok::end) {
      const Token& head = peek();
      if (head.kind != Tok::lower_word) error(head, "expected an annotated formula");
      if (head.text == "include") {
        parse_include();
      } else if (head.text == "cnf" || head.text == "fof") {
        parse_annotated(selection);
      } else if (head.text == "tff" || head.text == "thf" || head.text == "tcf" || head.text == "tpi") {
        error(head, "unsupported input language '" + head.text + "'");
      } else {
        error(head, "unknown directive '" + head.text + "'");
      }
    }
  }

  Clause parse_bare_clause() {
    free_vars_.clear();
    cnf_mode_ = true;
    next_var_ = 0;
    FormulaPtr f = parse_formula();
    expect(Tok::end, "end of input");
    return formula_to_clause(f, toks_.front());
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) error(peek(), std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void error(const Token& at, const std::string& msg) const {
    throw ParseError(file_, at.line, at.column, msg);
  }

  void declare(const Token& at, const std::string& name, std::size_t arity, bool predicate) {
    if (auto err = declare_symbol(state_.spec.symbols, name, arity, predicate)) error(at, *err);
  }

  std::string parse_name() {
    const Token& t = next();
    if (t.kind == Tok::lower_word || t.kind == Tok::quoted || t.kind == Tok::number) return t.text;
    error(t, "expected a formula name");
  }

  void parse_include() {
    const Token& head = next();
    expect(Tok::lparen, "'('");
    const Token& file_tok = expect(Tok::quoted, "a quoted file name");
    std::set<std::string> selection;
    bool has_selection = false;
    if (accept(Tok::comma)) {
      has_selection = true;
      expect(Tok::lbracket, "'['");
      if (!accept(Tok::rbracket)) {
        do {
          selection.insert(parse_name());
        } while (accept(Tok::comma));
        expect(Tok::rbracket, "']'");
      }
    }
    expect(Tok::rparen, "')'");
    expect(Tok::dot, "'.'");

    const std::filesystem::path rel(file_tok.text);
    std::vector<std::filesystem::path> candidates;
    if (rel.is_absolute()) {
      candidates.push_back(rel);
    } else {
      if (!file_.empty()) candidates.push_back(std::filesystem::path(file_).parent_path() / rel);
      for (const auto& dir : state_.include_dirs) candidates.push_back(dir / rel);
      if (file_.empty()) candidates.push_back(rel);
    }
    for (const auto& c : candidates) {
      std::error_code ec;
      if (!std::filesystem::is_regular_file(c, ec)) continue;
      const auto canon = std::filesystem::weakly_canonical(c, ec);
      if (std::find(state_.include_stack.begin(), state_.include_stack.end(), canon) !=
          state_.include_stack.end()) {
        error(head, "recursive include of '" + file_tok.text + "'");
      }
      std::ifstream in(c, std::ios::binary);
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string text = buf.str();
      state_.include_stack.push_back(canon);
      Parser sub(Lexer(text, c.string()).run(), c.string(), state_);
      sub.parse_inputs(has_selection ? &selection : nullptr);
      state_.include_stack.pop_back();
      return;
    }
    error(file_tok, "cannot resolve include '" + file_tok.text + "'");
  }

  void parse_annotated(const std::set<std::string>* selection) {
    const Token& head = next();
    const bool cnf = head.text == "cnf";
    expect(Tok::lparen, "'('");
    const Token& label_tok = peek();
    std::string label = parse_name();
    expect(Tok::comma, "','");
    const Token& role_tok = expect(Tok::lower_word, "a role");
    auto role = parse_role(role_tok.text);
    if (!role) error(role_tok, "unsupported role '" + role_tok.text + "'");
    expect(Tok::comma, "','");

    free_vars_.clear();
    bound_.clear();
    names_.clear();
    next_var_ = 0;
    cnf_mode_ = cnf;
    const Token& formula_tok = peek();
    FormulaPtr f = parse_formula();
    if (accept(Tok::comma)) skip_annotation();
    expect(Tok::rparen, "')'");
    expect(Tok::dot, "'.'");

    if (selection && !selection->count(label)) return;
    if (!state_.labels.insert(label).second) error(label_tok, "duplicate label '" + label + "'");
    if (*role == Role::conjecture && state_.spec.has_conjecture()) {
      error(role_tok, "more than one conjecture");
    }

    AnnotatedInput in;
    in.label = std::move(label);
    in.role = *role;
    in.is_cnf = cnf;
    in.var_names = names_;
    in.source_file = file_;
    in.line = head.line;
    if (cnf) {
      in.clause = formula_to_clause(f, formula_tok);
      in.formula = clause_formula(*in.clause);
    } else {
      in.formula = std::move(f);
    }
    state_.spec.inputs.push_back(std::move(in));
  }

  void skip_annotation() {
    int depth = 0;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::end) error(t, "unterminated annotation");
      if (depth == 0 && t.kind == Tok::rparen) return;
      if (t.kind == Tok::lparen || t.kind == Tok::lbracket) ++depth;
      if (t.kind == Tok::rparen || t.kind == Tok::rbracket) --depth;
      next();
    }
  }

  Clause formula_to_clause(const FormulaPtr& f, const Token& at) {
    std::vector<Literal> lits;
    std::vector<FormulaPtr> parts;
    if (f->kind() == Formula::Kind::disjunction) {
      parts = f->children();
    } else {
      parts.push_back(f);
    }
    for (const auto& p : parts) {
      if (p->kind() == Formula::Kind::atom) {
        lits.push_back({true, p->atom()});
      } else if (p->kind() == Formula::Kind::negation && p->child()->kind() == Formula::Kind::atom) {
        lits.push_back({false, p->child()->atom()});
      } else if (p->kind() == Formula::Kind::constant && !p->value()) {
        continue;
      } else if (p->kind() == Formula::Kind::disjunction) {
        Clause inner = formula_to_clause(p, at);
        lits.insert(lits.end(), inner.literals().begin(), inner.literals().end());
      } else {
        error(at, "a cnf formula must be a disjunction of literals");
      }
    }
    return Clause(std::move(lits));
  }

  // formula := implication ((<=> | <~>) implication)?
  // implication := or ((=> | <=) implication)?
  FormulaPtr parse_formula() {
    FormulaPtr lhs = parse_implication();
    const Tok k = peek().kind;
    if (k == Tok::iff || k == Tok::xor_) {
      next();
      FormulaPtr eq = Formula::equivalence(lhs, parse_implication());
      return k == Tok::iff ? eq : Formula::negation(eq);
    }
    return lhs;
  }

  FormulaPtr parse_implication() {
    FormulaPtr lhs = parse_or();
    if (accept(Tok::implies)) return Formula::implication(lhs, parse_implication());
    if (accept(Tok::implied)) return Formula::implication(parse_implication(), lhs);
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr first = parse_and();
    if (peek().kind == Tok::nor) {
      next();
      return Formula::negation(Formula::disjunction({first, parse_and()}));
    }
    std::vector<FormulaPtr> parts{first};
    while (accept(Tok::vline)) parts.push_back(parse_and());
    return parts.size() == 1 ? first : Formula::disjunction(std::move(parts));
  }

  FormulaPtr parse_and() {
    FormulaPtr first = parse_unary();
    if (peek().kind == Tok::nand) {
      next();
      return Formula::negation(Formula::conjunction({first, parse_unary()}));
    }
    std::vector<FormulaPtr> parts{first};
    while (accept(Tok::amp)) parts.push_back(parse_unary());
    return parts.size() == 1 ? first : Formula::conjunction(std::move(parts));
  }

  FormulaPtr parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::tilde:
      case Tok::minus:
        next();
        return Formula::negation(parse_unary());
      case Tok::bang:
      case Tok::question: {
        if (cnf_mode_) error(t, "quantifiers are not allowed in cnf");
        next();
        expect(Tok::lbracket, "'['");
        std::vector<int> vars;
        const std::size_t scope = bound_.size();
        do {
          const Token& v = expect(Tok::upper_word, "a variable");
          if (accept(Tok::colon)) error(v, "typed variables are not supported");
          const int id = next_var_++;
          bound_.emplace_back(v.text, id);
          names_[id] = v.text;
          vars.push_back(id);
        } while (accept(Tok::comma));
        expect(Tok::rbracket, "']'");
        expect(Tok::colon, "':'");
        FormulaPtr body = parse_unary();
        bound_.resize(scope);
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
          body = t.kind == Tok::bang ? Formula::forall(*it, body) : Formula::exists(*it, body);
        }
        return body;
      }
      case Tok::lparen: {
        next();
        FormulaPtr f = parse_formula();
        expect(Tok::rparen, "')'");
        return f;
      }
      default:
        return parse_atomic();
    }
  }

  FormulaPtr parse_atomic() {
    const Token& t = peek();
    if (t.kind == Tok::dollar_word && (t.text == "$true" || t.text == "$false")) {
      next();
      if (cnf_mode_ && t.text == "$true") error(t, "$true is not supported in cnf");
      return Formula::constant(t.text == "$true");
    }
    if (t.kind == Tok::dollar_word) error(t, "unsupported defined symbol '" + t.text + "'");
    TermPtr lhs = parse_term();
    const Tok k = peek().kind;
    if (k == Tok::equals || k == Tok::not_equals) {
      const Token& op = next();
      TermPtr rhs = parse_term();
      declare_term(lhs, t);
      declare_term(rhs, op);
      declare(op, "=", 2, true);
      auto atom = Formula::atom(Term::application(equality_symbol(), {lhs, rhs}));
      return k == Tok::equals ? atom : Formula::negation(atom);
    }
    if (lhs->is_variable()) error(t, "expected a predicate, found variable '" + t.text + "'");
    declare(t, lhs->functor().name(), lhs->arity(), true);
    for (const auto& a : lhs->args()) declare_term(a, t);
    return Formula::atom(lhs);
  }

  void declare_term(const TermPtr& term, const Token& at) {
    if (term->is_variable()) return;
    declare(at, term->functor().name(), term->arity(), false);
    for (const auto& a : term->args()) declare_term(a, at);
  }

  TermPtr parse_term() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::upper_word:
        return Term::variable(lookup_var(t));
      case Tok::lower_word:
      case Tok::quoted:
        break;
      case Tok::number:
        error(t, "numbers are not supported");
      case Tok::distinct:
        error(t, "distinct objects are not supported");
      case Tok::dollar_word:
        error(t, "unsupported defined symbol '" + t.text + "'");
      default:
        error(t, "expected a term");
    }
    std::vector<TermPtr> args;
    if (accept(Tok::lparen)) {
      do {
        args.push_back(parse_term());
      } while (accept(Tok::comma));
      expect(Tok::rparen, "')'");
    }
    return Term::application(Symbol::intern(t.text), std::move(args));
  }

  int lookup_var(const Token& t) {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (it->first == t.text) return it->second;
    }
    if (!cnf_mode_) error(t, "unbound variable '" + t.text + "'");
    auto it = free_vars_.find(t.text);
    if (it != free_vars_.end()) return it->second;
    const int id = next_var_++;
    free_vars_.emplace(t.text, id);
    names_[id] = t.text;
    return id;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string file_;
  ParseState& state_;

  bool cnf_mode_ = false;
  int next_var_ = 0;
  std::vector<std::pair<std::string, int>> bound_;
  std::map<std::string, int> free_vars_;
  std::map<int, std::string> names_;
};

std::string quote_label(const std::string& label) {
  const bool plain = !label.empty() && (std::islower(static_cast<unsigned char>(label[0])) ||
                                        std::all_of(label.begin(), label.end(), [](unsigned char c) {
                                          return std::isdigit(c);
                                        })) &&
                     std::all_of(label.begin(), label.end(),
                                 [](unsigned char c) { return std::isalnum(c) || c == '_'; });
  if (plain) return label;
  std::string out = "'";
  for (char c : label) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

}  // namespace

ProblemSpec parse_problem(std::string_view source, const ParseOptions& options) {
  ParseState state;
  state.include_dirs = options.include_dirs;
  state.spec.name = options.problem_name;
  if (!options.file_name.empty()) {
    std::error_code ec;
    state.include_stack.push_back(std::filesystem::weakly_canonical(options.file_name, ec));
  }
  Parser parser(Lexer(source, options.file_name).run(), options.file_name, state);
  parser.parse_inputs(nullptr);
  return std::move(state.spec);
}

ProblemSpec parse_problem_file(const std::filesystem::path& path, std::vector<std::filesystem::path> include_dirs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  ParseOptions options;
  options.file_name = path.string();
  options.problem_name = path.stem().string();
  options.include_dirs = std::move(include_dirs);
  return parse_problem(buf.str(), options);
}

Clause parse_clause(std::string_view text) {
  ParseState state;
  Parser parser(Lexer(text, "").run(), "", state);
  return parser.parse_bare_clause();
}

std::string write_problem(const ProblemSpec& spec, const std::vector<std::string>& header,
                          const std::vector<std::string>& omit) {
  std::string out;
  for (const auto& h : header) out += "% " + h + "\n";
  if (!header.empty()) out += "\n";
  for (const auto& in : spec.inputs) {
    if (std::find(omit.begin(), omit.end(), in.label) != omit.end()) continue;
    if (in.is_cnf) {
      std::string body;
      const Clause& c = *in.clause;
      if (c.empty()) {
        body = "$false";
      } else {
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (i) body += " | ";
          FormulaPtr a = Formula::atom(c[i].atom);
          body += to_tptp(c[i].positive ? *a : *Formula::negation(a), in.var_names);
        }
      }
      out += "cnf(" + quote_label(in.label) + ", " + to_string(in.role) + ", " + body + ").\n";
    } else {
      out += "fof(" + quote_label(in.label) + ", " + to_string(in.role) + ", " +
             to_tptp(*in.formula, in.var_names) + ").\n";
    }
  }
  return out;
}

}  // namespace proofscope
