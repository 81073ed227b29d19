#include "ael/operator.h"

#include <algorithm>
#include <string>

#include "ael/semantics.h"

namespace ael {

namespace {

void check_theory(const Theory& theory, std::size_t atoms) {
  if (atom_bound(theory) > atoms)
    throw std::out_of_range("theory mentions atoms outside a " + std::to_string(atoms) +
                            "-atom alphabet");
}

std::vector<TruthValue> literal_values(BeliefEvaluator& ev, const std::vector<Formula>& literals) {
  std::vector<TruthValue> out;
  out.reserve(literals.size());
  for (const auto& k : literals) out.push_back(ev.modal_atom(k.lhs()));
  return out;
}

}  // namespace

BeliefPair der(const Theory& theory, const BeliefPair& pair) {
  check_theory(theory, pair.atoms());
  const std::size_t n = pair.atoms();
  BeliefEvaluator ev(pair);
  WorldSet weak(n);
  WorldSet strong(n);
  const auto universe = static_cast<Interpretation>(std::size_t{1} << n);
  for (Interpretation i = 0; i < universe; ++i) {
    TruthValue v = TruthValue::kTrue;
    for (const auto& f : theory) {
      v = truth_min(v, ev.eval(i, f));
      if (v == TruthValue::kFalse) break;
    }
    if (v != TruthValue::kFalse) weak.insert(i);
    if (v == TruthValue::kTrue) strong.insert(i);
  }
  return BeliefPair(std::move(weak), std::move(strong));
}

FixpointTrace lfp_der(const Theory& theory, std::size_t atoms) {
  check_atom_cap(atoms);
  check_theory(theory, atoms);
  FixpointTrace trace;
  trace.literals = top_level_modal_literals(theory);
  trace.pairs.push_back(BeliefPair::bottom(atoms));
  while (true) {
    const BeliefPair& current = trace.pairs.back();
    {
      BeliefEvaluator ev(current);
      trace.values.push_back(literal_values(ev, trace.literals));
    }
    BeliefPair next = der(theory, current);
    if (next == current) break;
    if (!leq_p(current, next)) throw InternalError("der iteration is not increasing");
    trace.pairs.push_back(std::move(next));
  }
  return trace;
}

bool is_autoepistemic_model(const Theory& theory, const WorldSet& w) {
  check_atom_cap(w.atoms());
  check_theory(theory, w.atoms());
  WorldEvaluator ev(w);
  const auto universe = static_cast<Interpretation>(w.universe_size());
  for (Interpretation i = 0; i < universe; ++i) {
    bool sat = true;
    for (const auto& f : theory) {
      if (!ev.eval(i, f)) {
        sat = false;
        break;
      }
    }
    if (sat != w.contains(i)) return false;
  }
  return true;
}

std::vector<AutoepistemicModel> enumerate_autoepistemic_models(const Theory& theory,
                                                               std::size_t atoms) {
  check_atom_cap(atoms, std::min(atom_cap(), kEnumerationAtomCap));
  check_theory(theory, atoms);
  std::vector<AutoepistemicModel> out;
  const std::uint64_t candidates = std::uint64_t{1} << (std::size_t{1} << atoms);
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    WorldSet w = WorldSet::from_mask(atoms, mask);
    const bool model = is_autoepistemic_model(theory, w);
    const bool fixpoint = der(theory, BeliefPair::complete(w)) == BeliefPair::complete(w);
    if (model != fixpoint)
      throw InternalError("autoepistemic models and complete fixpoints of der differ at W=" +
                          to_string(w, Signature()));
    if (model) out.push_back({std::move(w), fixpoint});
  }
  return out;
}

std::vector<WorldSet> complete_fixpoints_brute_force(const Theory& theory, std::size_t atoms) {
  check_atom_cap(atoms, std::min(atom_cap(), kEnumerationAtomCap));
  check_theory(theory, atoms);
  std::vector<WorldSet> out;
  const std::uint64_t candidates = std::uint64_t{1} << (std::size_t{1} << atoms);
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    WorldSet w = WorldSet::from_mask(atoms, mask);
    if (der(theory, BeliefPair::complete(w)) == BeliefPair::complete(w)) out.push_back(std::move(w));
  }
  return out;
}

std::vector<WorldSet> complete_fixpoints(const Theory& theory, std::size_t atoms) {
  check_atom_cap(atoms);
  check_theory(theory, atoms);
  const std::vector<Formula> literals = top_level_modal_literals(theory);
  if (literals.size() >= 31) throw CapExceeded(literals.size(), 30);

  std::vector<WorldSet> out;
  const auto universe = static_cast<Interpretation>(std::size_t{1} << atoms);
  for (std::uint32_t guess = 0; guess < (std::uint32_t{1} << literals.size()); ++guess) {
    auto replace = [&](const Formula& k) {
      const auto pos = std::find(literals.begin(), literals.end(), k) - literals.begin();
      return (guess >> pos) & 1U ? Formula::truth() : Formula::falsity();
    };
    Theory instance;
    for (const auto& f : theory) instance.push_back(substitute_top_level(f, replace));

    WorldSet w(atoms);
    for (Interpretation i = 0; i < universe; ++i) {
      if (std::all_of(instance.begin(), instance.end(),
                      [i](const Formula& g) { return eval_objective(g, i) == TruthValue::kTrue; }))
        w.insert(i);
    }
    if (der(theory, BeliefPair::complete(w)) != BeliefPair::complete(w)) continue;
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TruthValue skeptical_value(const Theory& theory, const Formula& f, std::size_t atoms) {
  const FixpointTrace trace = lfp_der(theory, atoms);
  return eval_modal_atom(trace.fixpoint(), f);
}

}  // namespace ael
