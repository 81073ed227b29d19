#include "ael/lp.h"

#include <algorithm>

#include "ael/semantics.h"

namespace ael {

namespace {

Theory embed(const LogicProgram& program, bool know_positive) {
  Theory out;
  out.reserve(program.clauses.size());
  for (const auto& c : program.clauses) {
    std::vector<Formula> body;
    for (AtomId b : c.positive) {
      Formula atom = Formula::atom(b);
      body.push_back(know_positive ? Formula::know(atom) : atom);
    }
    for (AtomId n : c.negative) body.push_back(Formula::negation(Formula::know(Formula::atom(n))));
    out.push_back(Formula::implication(Formula::conjunction(body), Formula::atom(c.head)));
  }
  return out;
}

void check_program(const LogicProgram& program, std::size_t atoms) {
  auto bad = [atoms](AtomId a) { return a >= atoms; };
  for (const auto& c : program.clauses) {
    if (bad(c.head) || std::any_of(c.positive.begin(), c.positive.end(), bad) ||
        std::any_of(c.negative.begin(), c.negative.end(), bad))
      throw std::out_of_range("program mentions atoms outside the alphabet");
  }
}

bool contains(const std::vector<bool>& set, AtomId a) { return set[a]; }

// Least model of the definite program obtained by keeping the clauses whose
// negative literals are all false in `assumed` and dropping those literals.
std::vector<bool> reduct_least_model(const LogicProgram& program, const std::vector<bool>& assumed) {
  std::size_t n = assumed.size();
  std::vector<bool> model(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : program.clauses) {
      if (model[c.head]) continue;
      if (std::any_of(c.negative.begin(), c.negative.end(),
                      [&](AtomId x) { return contains(assumed, x); }))
        continue;
      if (std::all_of(c.positive.begin(), c.positive.end(),
                      [&](AtomId x) { return contains(model, x); })) {
        model[c.head] = true;
        changed = true;
      }
    }
  }
  return model;
}

std::vector<bool> to_bits(Interpretation i, std::size_t atoms) {
  std::vector<bool> bits(atoms);
  for (AtomId a = 0; a < atoms; ++a) bits[a] = value_of(i, a);
  return bits;
}

}  // namespace

Theory ael1(const LogicProgram& program) { return embed(program, false); }

Theory ael2(const LogicProgram& program) { return embed(program, true); }

ThreeValuedInterpretation projection(const BeliefPair& pair) {
  BeliefEvaluator ev(pair);
  ThreeValuedInterpretation out;
  out.reserve(pair.atoms());
  for (AtomId a = 0; a < pair.atoms(); ++a) out.push_back(ev.modal_atom(Formula::atom(a)));
  return out;
}

ThreeValuedInterpretation well_founded(const LogicProgram& program, std::size_t atoms) {
  check_program(program, atoms);
  // true_set grows, possible shrinks: true_set = Γ(possible), possible = Γ(true_set).
  std::vector<bool> true_set(atoms, false);
  std::vector<bool> possible = reduct_least_model(program, true_set);
  while (true) {
    std::vector<bool> next_true = reduct_least_model(program, possible);
    std::vector<bool> next_possible = reduct_least_model(program, next_true);
    if (next_true == true_set && next_possible == possible) break;
    true_set = std::move(next_true);
    possible = std::move(next_possible);
  }
  ThreeValuedInterpretation out(atoms);
  for (AtomId a = 0; a < atoms; ++a) {
    out[a] = true_set[a] ? TruthValue::kTrue
             : possible[a] ? TruthValue::kUnknown
                           : TruthValue::kFalse;
  }
  return out;
}

ThreeValuedInterpretation fitting_kunen(const LogicProgram& program, std::size_t atoms) {
  check_program(program, atoms);
  ThreeValuedInterpretation current(atoms, TruthValue::kUnknown);
  while (true) {
    ThreeValuedInterpretation next(atoms, TruthValue::kFalse);
    for (const auto& c : program.clauses) {
      TruthValue body = TruthValue::kTrue;
      for (AtomId b : c.positive) body = truth_min(body, current[b]);
      for (AtomId n : c.negative) body = truth_min(body, inverse(current[n]));
      next[c.head] = truth_max(next[c.head], body);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

std::vector<Interpretation> stable_models(const LogicProgram& program, std::size_t atoms) {
  check_atom_cap(atoms);
  check_program(program, atoms);
  std::vector<Interpretation> out;
  const auto universe = static_cast<Interpretation>(std::size_t{1} << atoms);
  for (Interpretation m = 0; m < universe; ++m) {
    const std::vector<bool> bits = to_bits(m, atoms);
    if (reduct_least_model(program, bits) == bits) out.push_back(m);
  }
  return out;
}

std::vector<Interpretation> supported_models(const LogicProgram& program, std::size_t atoms) {
  check_atom_cap(atoms);
  check_program(program, atoms);
  std::vector<Interpretation> out;
  const auto universe = static_cast<Interpretation>(std::size_t{1} << atoms);
  for (Interpretation m = 0; m < universe; ++m) {
    Interpretation derived = 0;
    for (const auto& c : program.clauses) {
      const bool body =
          std::all_of(c.positive.begin(), c.positive.end(), [m](AtomId b) { return value_of(m, b); }) &&
          std::none_of(c.negative.begin(), c.negative.end(), [m](AtomId n) { return value_of(m, n); });
      if (body) derived |= Interpretation{1} << c.head;
    }
    if (derived == m) out.push_back(m);
  }
  return out;
}

ThreeValuedInterpretation as_three_valued(Interpretation i, std::size_t atoms) {
  ThreeValuedInterpretation out(atoms);
  for (AtomId a = 0; a < atoms; ++a) out[a] = from_bool(value_of(i, a));
  return out;
}

bool leq_knowledge(const ThreeValuedInterpretation& a, const ThreeValuedInterpretation& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!leq_knowledge(a[k], b[k])) return false;
  return true;
}

std::string to_string(const ThreeValuedInterpretation& v, const Signature& sig) {
  std::string out;
  for (AtomId a = 0; a < v.size(); ++a) {
    out += sig.name(a);
    out += '=';
    out += to_char(v[a]);
    out += '\n';
  }
  return out;
}

}  // namespace ael
