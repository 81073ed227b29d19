#include "ael/prover.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ael/semantics.h"

namespace ael {

namespace {

class CnfBuilder {
 public:
  explicit CnfBuilder(std::size_t original) {
    cs_.original_vars = original;
    cs_.num_vars = original;
  }

  void add_root(const Formula& root) {
    Formula f = simplify(root);
    if (f.op() == Op::kTrue) return;
    if (f.op() == Op::kFalse) {
      cs_.clauses.emplace_back();
      return;
    }
    if (f.op() == Op::kAnd) {
      add_root(f.lhs());
      add_root(f.rhs());
      return;
    }
    std::vector<Lit> clause;
    if (flat_clause(f, clause)) {
      add_clause(std::move(clause));
      return;
    }
    add_clause({encode(f)});
  }

  ClauseSet take() { return std::move(cs_); }

 private:
  static Lit atom_var(AtomId a) { return static_cast<Lit>(a) + 1; }

  // Disjunction of literals, emitted without definition variables.
  static bool flat_clause(const Formula& f, std::vector<Lit>& out) {
    switch (f.op()) {
      case Op::kAtom:
        out.push_back(atom_var(f.atom_id()));
        return true;
      case Op::kNot:
        if (f.lhs().op() != Op::kAtom) return false;
        out.push_back(-atom_var(f.lhs().atom_id()));
        return true;
      case Op::kOr:
        return flat_clause(f.lhs(), out) && flat_clause(f.rhs(), out);
      default:
        return false;
    }
  }

  void add_clause(std::vector<Lit> c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (Lit l : c)
      if (l > 0 && std::binary_search(c.begin(), c.end(), -l)) return;
    cs_.clauses.push_back(std::move(c));
  }

  Lit fresh() { return static_cast<Lit>(++cs_.num_vars); }

  // Literal equivalent to f. f is constant-free.
  Lit encode(const Formula& f) {
    switch (f.op()) {
      case Op::kAtom:
        return atom_var(f.atom_id());
      case Op::kNot:
        return -encode(f.lhs());
      case Op::kAnd:
      case Op::kOr:
      case Op::kImplies:
        break;
      case Op::kKnow:
        throw std::invalid_argument("to_clauses: formula contains K");
      case Op::kUnknown:
        throw std::invalid_argument("to_clauses: formula contains $u");
      case Op::kTrue:
      case Op::kFalse:
        throw std::logic_error("to_clauses: constant survived simplification");
    }
    if (auto it = defs_.find(f); it != defs_.end()) return it->second;
    Lit a = encode(f.lhs());
    Lit b = encode(f.rhs());
    const Lit x = fresh();
    if (f.op() == Op::kAnd) {
      add_clause({-x, a});
      add_clause({-x, b});
      add_clause({x, -a, -b});
    } else {
      if (f.op() == Op::kImplies) a = -a;
      add_clause({x, -a});
      add_clause({x, -b});
      add_clause({-x, a, b});
    }
    defs_.emplace(f, x);
    return x;
  }

  ClauseSet cs_;
  std::unordered_map<Formula, Lit, FormulaHash> defs_;
};

void check_two_valued(const Formula& f) {
  if (!f.objective()) throw std::invalid_argument("to_clauses: formula contains K");
  if (f.has_unknown()) throw std::invalid_argument("to_clauses: formula contains $u");
}

}  // namespace

ClauseSet to_clauses(const Formula& f) { return to_clauses(Theory{f}); }

ClauseSet to_clauses(const Theory& conjuncts) {
  for (const auto& f : conjuncts) check_two_valued(f);
  CnfBuilder builder(atom_bound(conjuncts));
  for (const auto& f : conjuncts) builder.add_root(f);
  return builder.take();
}

std::string to_dimacs(const ClauseSet& cs) {
  std::ostringstream os;
  os << "c original variables: " << cs.original_vars << "\n";
  os << "p cnf " << cs.num_vars << " " << cs.clauses.size() << "\n";
  for (const auto& c : cs.clauses) {
    for (Lit l : c) os << l << " ";
    os << "0\n";
  }
  return os.str();
}

namespace {

class DpllSearch {
 public:
  explicit DpllSearch(const ClauseSet& cs)
      : clauses_(cs.clauses), value_(cs.num_vars + 1, 0), watches_(2 * (cs.num_vars + 1)) {}

  std::optional<std::vector<bool>> run() {
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      auto& c = clauses_[ci];
      if (c.empty()) return std::nullopt;
      if (c.size() == 1) {
        if (!assign(c[0])) return std::nullopt;
        continue;
      }
      watches_[code(c[0])].push_back(ci);
      watches_[code(c[1])].push_back(ci);
    }
    if (!propagate()) return std::nullopt;

    while (true) {
      const Lit decision = pick();
      if (decision == 0) {
        std::vector<bool> model(value_.size(), false);
        for (std::size_t v = 1; v < value_.size(); ++v) model[v] = value_[v] > 0;
        return model;
      }
      levels_.push_back({trail_.size(), decision, false});
      assign(decision);
      while (!propagate()) {
        if (!backtrack()) return std::nullopt;
      }
    }
  }

 private:
  struct Level {
    std::size_t trail_start;
    Lit decision;
    bool flipped;
  };

  static std::size_t code(Lit l) { return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0); }

  // 1 true, -1 false, 0 unassigned
  int lit_value(Lit l) const {
    const int v = value_[static_cast<std::size_t>(std::abs(l))];
    return l > 0 ? v : -v;
  }

  bool assign(Lit l) {
    const int v = lit_value(l);
    if (v != 0) return v > 0;
    value_[static_cast<std::size_t>(std::abs(l))] = l > 0 ? 1 : -1;
    trail_.push_back(l);
    return true;
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      const Lit false_lit = -trail_[head_++];
      auto& ws = watches_[code(false_lit)];
      std::size_t keep = 0;
      bool ok = true;
      for (std::size_t k = 0; k < ws.size(); ++k) {
        const std::size_t ci = ws[k];
        if (!ok) {
          ws[keep++] = ci;
          continue;
        }
        auto& c = clauses_[ci];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (lit_value(c[0]) > 0) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t j = 2; j < c.size(); ++j) {
          if (lit_value(c[j]) >= 0) {
            std::swap(c[1], c[j]);
            watches_[code(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (!assign(c[0])) ok = false;
      }
      ws.resize(keep);
      if (!ok) return false;
    }
    return true;
  }

  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      value_[static_cast<std::size_t>(std::abs(trail_.back()))] = 0;
      trail_.pop_back();
    }
    head_ = std::min(head_, size);
  }

  bool backtrack() {
    while (!levels_.empty()) {
      Level& level = levels_.back();
      undo_to(level.trail_start);
      if (!level.flipped) {
        level.flipped = true;
        level.decision = -level.decision;
        assign(level.decision);
        return true;
      }
      levels_.pop_back();
    }
    return false;
  }

  Lit pick() const {
    for (std::size_t v = 1; v < value_.size(); ++v)
      if (value_[v] == 0) return -static_cast<Lit>(v);
    return 0;
  }

  std::vector<std::vector<Lit>> clauses_;
  std::vector<int> value_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<Lit> trail_;
  std::size_t head_ = 0;
  std::vector<Level> levels_;
};

}  // namespace

std::optional<std::vector<bool>> DpllSolver::solve(const ClauseSet& cs) const {
  return DpllSearch(cs).run();
}

Prover::Prover() : backend_(std::make_shared<DpllSolver>()) {}

Prover::Prover(std::shared_ptr<const SatBackend> backend) : backend_(std::move(backend)) {}

bool Prover::satisfiable(const ClauseSet& cs) const { return backend_->solve(cs).has_value(); }

bool Prover::entails(const Theory& premises, const Formula& conclusion) {
  calls_.fetch_add(1, std::memory_order_relaxed);
  Theory query = premises;
  query.push_back(Formula::negation(conclusion));
  return !satisfiable(to_clauses(query));
}

Prover& default_prover() {
  static Prover prover;
  return prover;
}

WorldSet models(const Theory& premises, std::size_t atoms) {
  check_atom_cap(atoms);
  if (atom_bound(premises) > atoms)
    throw std::out_of_range("theory mentions atoms outside the alphabet");
  WorldSet out(atoms);
  const auto universe = static_cast<Interpretation>(out.universe_size());
  for (Interpretation i = 0; i < universe; ++i) {
    if (std::all_of(premises.begin(), premises.end(), [i](const Formula& f) { return holds(f, i); }))
      out.insert(i);
  }
  return out;
}

}  // namespace ael
