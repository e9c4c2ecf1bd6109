#include "proofscope/saturation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "proofscope/analysis.hpp"
#include "proofscope/canonical.hpp"
#include "proofscope/inference.hpp"

namespace proofscope {

SearchConfig SearchConfig::unlimited() {
  SearchConfig c;
  c.max_weight.reset();
  c.max_given.reset();
  c.max_kept_clauses.reset();
  return c;
}

void SearchConfig::validate() const {
  auto check = [](const std::optional<std::size_t>& v, const char* name) {
    if (v && *v == 0) throw std::invalid_argument(std::string(name) + " must be positive");
  };
  check(max_proofs, "max_proofs");
  check(max_weight, "max_weight");
  check(max_given, "max_given");
  check(max_kept_clauses, "max_kept_clauses");
}

std::string to_string(SosPolicy p) {
  return p == SosPolicy::all_input ? "all_input" : "negated_conjecture_only";
}

std::string to_string(SaturationStatus s) {
  switch (s) {
    case SaturationStatus::saturated: return "saturated";
    case SaturationStatus::limit_reached: return "limit_reached";
    case SaturationStatus::proofs_exhausted_by_max: return "proofs_exhausted_by_max";
  }
  return "saturated";
}

namespace {

std::uint64_t bit(std::size_t h) { return std::uint64_t{1} << ((h ^ (h >> 7)) % 64); }

void term_mask(const Term& t, std::uint64_t& m) {
  if (t.is_variable()) return;
  m |= bit(t.functor().hash() * 3 + 2);
  for (const auto& a : t.args()) term_mask(*a, m);
}

// Bloom mask over signed predicates and function symbols: c can only
// subsume d if mask(c) is a subset of mask(d), since every symbol of c
// survives in its instance.
std::uint64_t literal_mask(const Clause& c) {
  std::uint64_t m = 0;
  for (const auto& l : c.literals()) {
    m |= bit(l.predicate().hash() * 3 + (l.positive ? 1 : 0));
    for (const auto& a : l.atom->args()) term_mask(*a, m);
  }
  return m;
}

struct KeptClause {
  Clause clause;
  std::uint64_t mask = 0;
  bool alive = false;
};

class Engine {
 public:
  explicit Engine(const SearchConfig& config) : config_(config) {}

  SaturationResult run(const std::vector<InputClause>& inputs) {
    const bool has_nc = std::any_of(inputs.begin(), inputs.end(),
                                    [](const InputClause& c) { return c.role == Role::negated_conjecture; });
    const bool all_sos = config_.sos_policy == SosPolicy::all_input || !has_nc;

    for (const auto& in : inputs) {
      add_input(in, all_sos || in.role == Role::negated_conjecture);
      if (stopped_) return finish();
    }

    while (!passive_.empty()) {
      if (config_.max_given && result_.counters.given >= *config_.max_given) {
        fire("max_given");
        break;
      }
      const auto [weight, given] = *passive_.begin();
      passive_.erase(passive_.begin());
      if (!kept_.at(given).alive) continue;
      ++result_.counters.given;
      active_.push_back(given);
      infer_from(given);
      if (stopped_) break;
    }
    return finish();
  }

 private:
  void fire(const char* limit) {
    if (result_.limit.empty()) result_.limit = limit;
    limited_ = true;
  }

  SaturationResult finish() {
    if (max_proofs_hit_) {
      result_.status = SaturationStatus::proofs_exhausted_by_max;
      result_.limit = "max_proofs";
    } else if (limited_) {
      result_.status = SaturationStatus::limit_reached;
    } else {
      result_.status = SaturationStatus::saturated;
    }
    result_.refutations = config_.dedup_proofs ? proofs_.release() : std::move(raw_);
    return std::move(result_);
  }

  void add_input(const InputClause& in, bool sos) {
    const Clause c = canonical_clause(in.clause);
    if (is_tautology(c)) {
      ++result_.counters.discarded_tautology;
      return;
    }
    InferenceRecord r;
    r.clause = c;
    r.rule = Rule::input;
    r.input_label = in.label;
    r.input_role = in.role;
    if (c.empty()) {
      record_empty(std::move(r));
      return;
    }
    if (const auto by = subsumer_of(c)) {
      ++result_.counters.discarded_subsumed;
      // The subsumer stands in for a dropped support clause.
      if (sos) promote(*by);
      return;
    }
    const std::size_t passive_before = passive_.size();
    const ClauseId id = keep(std::move(r));
    // Likewise when a usable input back-subsumes support clauses.
    if (sos || passive_.size() < passive_before) {
      passive_.emplace(c.weight(), id);
    } else {
      active_.push_back(id);
    }
  }

  void promote(ClauseId id) {
    const auto it = std::find(active_.begin(), active_.end(), id);
    if (it == active_.end()) return;
    active_.erase(it);
    passive_.emplace(kept_.at(id).clause.weight(), id);
  }

  void infer_from(ClauseId given) {
    const Clause g = kept_.at(given).clause;
    for (Clause& f : factor(g)) {
      process(std::move(f), Rule::factor, {given});
      if (stopped_) return;
    }
    // Snapshot: clauses kept during this step are not partners yet.
    const std::vector<ClauseId> partners = active_;
    for (ClauseId pid : partners) {
      if (!kept_.at(pid).alive) continue;
      const Clause& partner = kept_.at(pid).clause;
      if (!complementary(g, partner)) continue;
      const Clause other = rename_apart(g, partner);
      const bool self = pid == given;
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = self ? i + 1 : 0; j < other.size(); ++j) {
          if (g[i].positive == other[j].positive || g[i].predicate() != other[j].predicate()) continue;
          auto res = resolve(g, i, other, j);
          if (!res) continue;
          process(std::move(*res), Rule::resolve, {given, pid});
          if (stopped_) return;
        }
      }
    }
  }

  static bool complementary(const Clause& a, const Clause& b) {
    for (const auto& x : a.literals()) {
      for (const auto& y : b.literals()) {
        if (x.positive != y.positive && x.predicate() == y.predicate()) return true;
      }
    }
    return false;
  }

  void process(Clause raw, Rule rule, std::vector<ClauseId> parents) {
    ++result_.counters.generated;
    Clause c = canonical_clause(raw);
    InferenceRecord r;
    r.rule = rule;
    r.parents = std::move(parents);
    if (c.empty()) {
      r.clause = std::move(c);
      record_empty(std::move(r));
      return;
    }
    if (is_tautology(c)) {
      ++result_.counters.discarded_tautology;
      return;
    }
    if (config_.max_weight && c.weight() > *config_.max_weight) {
      ++result_.counters.discarded_weight;
      fire("max_weight");
      return;
    }
    if (subsumer_of(c)) {
      ++result_.counters.discarded_subsumed;
      return;
    }
    const std::size_t weight = c.weight();
    r.clause = std::move(c);
    const ClauseId id = keep(std::move(r));
    passive_.emplace(weight, id);
  }

  std::optional<ClauseId> subsumer_of(const Clause& c) const {
    const std::uint64_t mask = literal_mask(c);
    for (ClauseId id : alive_) {
      const KeptClause& k = kept_.at(id);
      if (!k.alive || k.clause.size() > c.size() || k.clause.weight() > c.weight() || (k.mask & ~mask) != 0) {
        continue;
      }
      if (subsumes(k.clause, c)) return id;
    }
    return std::nullopt;
  }

  void back_subsume(ClauseId by) {
    const KeptClause& s = kept_.at(by);
    std::size_t live = 0;
    for (ClauseId id : alive_) {
      KeptClause& k = kept_.at(id);
      if (!k.alive) continue;
      if (id != by && k.clause.size() >= s.clause.size() && k.clause.weight() >= s.clause.weight() &&
          (s.mask & ~k.mask) == 0 &&
          subsumes(s.clause, k.clause)) {
        k.alive = false;
        passive_.erase({k.clause.weight(), id});
        ++result_.counters.back_subsumed;
        continue;
      }
      alive_[live++] = id;
    }
    alive_.resize(live);
    std::erase_if(active_, [&](ClauseId id) { return !kept_.at(id).alive; });
  }

  ClauseId keep(InferenceRecord r) {
    const std::string key = to_string(r.clause);
    KeptClause k{r.clause, literal_mask(r.clause), true};
    const ClauseId id = result_.log.append(std::move(r), key);
    if (kept_.size() <= id) kept_.resize(id + 1);
    kept_[id] = std::move(k);
    ++result_.counters.kept;
    back_subsume(id);
    alive_.push_back(id);
    if (config_.max_kept_clauses && result_.counters.kept >= *config_.max_kept_clauses) {
      fire("max_kept_clauses");
      stopped_ = true;
    }
    return id;
  }

  void record_empty(InferenceRecord r) {
    ++result_.counters.empty_clauses;
    const ClauseId id = result_.log.append(std::move(r), "$false");
    ProofDag p = extract_proof(id, result_.log);
    if (config_.dedup_proofs) {
      proofs_.insert(std::move(p));
    } else {
      raw_.push_back(std::move(p));
    }
    const std::size_t found = config_.dedup_proofs ? proofs_.size() : raw_.size();
    if (config_.max_proofs && found >= *config_.max_proofs) {
      max_proofs_hit_ = true;
      stopped_ = true;
    }
  }

  const SearchConfig& config_;
  SaturationResult result_;
  std::vector<KeptClause> kept_;  // indexed by id; empty-clause slots stay dead
  std::vector<ClauseId> alive_;   // kept and not back-subsumed, in id order
  std::vector<ClauseId> active_;  // usable inputs, then given clauses in selection order
  std::set<std::pair<std::size_t, ClauseId>> passive_;  // lightest first, then oldest
  ProofSet proofs_;
  std::vector<ProofDag> raw_;
  bool limited_ = false;
  bool stopped_ = false;
  bool max_proofs_hit_ = false;
};

}  // namespace

SaturationResult saturate(const std::vector<InputClause>& clauses, const SearchConfig& config) {
  if (clauses.empty()) throw std::invalid_argument("saturate: empty clause list");
  config.validate();
  Engine engine(config);
  return engine.run(clauses);
}

}  // namespace proofscope
