#include <random>

#include "ael/effective.h"
#include "ael/formula.h"
#include "ael/operator.h"
#include "ael/parser.h"
#include "ael/semantics.h"
#include "doctest.h"
#include "support/generators.h"

namespace ael {
namespace {

using enum TruthValue;

Formula p() { return Formula::atom(0); }
Formula q() { return Formula::atom(1); }
const Formula u = Formula::unknown();
const Formula kp = Formula::know(Formula::atom(0));

TEST_CASE("3-FOL modal atoms") {
  Prover prover;
  CHECK(eval_modal_atom_3fol(ThreeFolTheory{u}, p(), prover) == kUnknown);
  // Cross-check against Bel({u}) = ⊥.
  CHECK(eval_modal_atom(bel(ThreeFolTheory{u}, 1), p()) == kUnknown);
  CHECK(eval_modal_atom_3fol(ThreeFolTheory{q()}, Formula::disjunction(p(), Formula::negation(p())), prover) ==
        kTrue);
  const ThreeFolTheory y{Formula::disjunction(p(), u)};
  CHECK(eval_modal_atom_3fol(y, p(), prover) == kUnknown);
  CHECK(eval_modal_atom(bel(y, 1), p()) == kUnknown);
}

TEST_CASE("instances") {
  const Theory t{Formula::implication(kp, q())};
  const ThreeFolTheory y1{Formula::implication(u, q())};
  const ThreeFolTheory y2{Formula::implication(Formula::falsity(), q())};
  CHECK(instance_3fol(t, ThreeFolTheory{u}) == y1);
  CHECK(instance_3fol(t, y1) == y2);
  const Theory obj{Formula::disjunction(p(), q())};
  CHECK(instance_3fol(obj, y1) == obj);

  const WorldSet a = WorldSet::all(2);
  WorldSet s(2);
  s.insert(2);
  s.insert(3);
  CHECK(instance_bp(t, BeliefPair::bottom(2)) == y1);
  CHECK(instance_bp(t, BeliefPair(a, s)) == y2);
  CHECK(instance_bp(Theory{p()}, BeliefPair::bottom(2)) == Theory{p()});

  CHECK(sder(t, ThreeFolTheory{u}) == y1);
  CHECK(sder(t, y1) == y2);
  CHECK(sder(Theory{}, y1).empty());
}

TEST_CASE("bel") {
  CHECK(bel(ThreeFolTheory{u}, 2) == BeliefPair::bottom(2));
  WorldSet qs(2);
  qs.insert(2);
  qs.insert(3);
  CHECK(bel(ThreeFolTheory{Formula::implication(u, q())}, 2) == BeliefPair(WorldSet::all(2), qs));
  const BeliefPair bp = bel(ThreeFolTheory{p()}, 2);
  CHECK(bp.is_complete());
  CHECK(bp.possible() == models(Theory{p()}, 2));
}

TEST_CASE("lfp_sder examples") {
  Prover prover;
  const Theory t{Formula::implication(kp, q())};
  const SderTrace tr = lfp_sder(t, prover);
  REQUIRE(tr.theories.size() == 3);
  CHECK(tr.theories[0] == ThreeFolTheory{u});
  CHECK(tr.theories[1] == ThreeFolTheory{Formula::implication(u, q())});
  CHECK(tr.fixpoint() == ThreeFolTheory{Formula::implication(Formula::falsity(), q())});
  CHECK(tr.values == std::vector<std::vector<TruthValue>>{{kUnknown}, {kFalse}, {kFalse}});
  CHECK(bel(tr.fixpoint(), 2) == BeliefPair::complete(WorldSet::all(2)));
  CHECK(tr.entailment_calls <= entailment_call_bound(t));
  CHECK(entailment_call_bound(t) == 4);

  const Theory t2{p(), Formula::implication(kp, q())};
  const SderTrace tr2 = lfp_sder(t2, prover);
  CHECK(tr2.fixpoint() == ThreeFolTheory{p(), Formula::implication(Formula::truth(), q())});
  WorldSet pq(2);
  pq.insert(3);
  CHECK(bel(tr2.fixpoint(), 2) == BeliefPair::complete(pq));

  const SderTrace empty = lfp_sder(Theory{}, prover);
  CHECK(empty.iterations() == 1);
  CHECK(empty.fixpoint().empty());
  CHECK(entailment_call_bound(Theory{}) == 0);
}

testing::FormulaShape modal_shape(std::size_t atoms) {
  testing::FormulaShape s;
  s.atoms = atoms;
  s.depth = 3;
  s.modal_depth = 2;
  return s;
}

ThreeFolTheory random_3fol(testing::Rng& rng, std::size_t atoms) {
  testing::FormulaShape s;
  s.atoms = atoms;
  s.depth = 3;
  s.modal_depth = 0;
  s.unknown = true;
  s.constants = true;
  return testing::random_theory(rng, s, 3);
}

TEST_CASE("property: H_Y(K F) = H_Bel(Y)(K F)") {
  testing::Rng rng(61);
  Prover prover;
  for (int n = 0; n < 400; ++n) {
    const ThreeFolTheory y = random_3fol(rng, 3);
    const Formula f = testing::random_formula(rng, modal_shape(3));
    CHECK(eval_modal_atom_3fol(y, f, prover) == eval_modal_atom(bel(y, 3), f));
  }
}

TEST_CASE("property: Bel(T_B) = D_T(B) and Bel(SDER(Y)) = D_T(Bel(Y))") {
  testing::Rng rng(62);
  Prover prover;
  for (int n = 0; n < 300; ++n) {
    const Theory t = testing::random_theory(rng, modal_shape(3), 4);
    const auto [b, unused] = testing::random_comparable_pairs(rng, 3);
    CHECK(bel(instance_bp(t, b), 3) == der(t, b));
    const ThreeFolTheory y = random_3fol(rng, 3);
    CHECK(bel(sder(t, y, prover), 3) == der(t, bel(y, 3)));
  }
}

TEST_CASE("property: lfp_sder tracks lfp_der within the bounds") {
  testing::Rng rng(63);
  Prover prover;
  for (int n = 0; n < 200; ++n) {
    const Theory t = testing::random_theory(rng, modal_shape(3), 5);
    const FixpointTrace explicit_trace = lfp_der(t, 3);
    for (bool verify : {false, true}) {
      const SderTrace tr = lfp_sder(t, prover, SderOptions{verify});
      CHECK(bel(tr.fixpoint(), 3) == explicit_trace.fixpoint());
      const std::size_t steps = std::max(tr.theories.size(), explicit_trace.pairs.size());
      for (std::size_t k = 0; k < steps; ++k) {
        const auto& y = tr.theories[std::min(k, tr.theories.size() - 1)];
        const auto& b = explicit_trace.pairs[std::min(k, explicit_trace.pairs.size() - 1)];
        CHECK(bel(y, 3) == b);
      }
      const std::size_t m = top_level_modal_literals(t).size();
      CHECK(tr.iterations() <= m + 1);
      CHECK(tr.entailment_calls <= entailment_call_bound(t));
    }
  }
}

}  // namespace
}  // namespace ael

namespace ael {
namespace {

TEST_CASE("oracle answers consistency queries from earlier failures") {
  Prover prover;
  EntailmentOracle oracle(prover);
  const Theory premises{Formula::atom(0)};
  CHECK_FALSE(oracle.entails(premises, Formula::atom(1)));
  CHECK(prover.entailment_calls() == 1);
  CHECK_FALSE(oracle.entails(premises, Formula::falsity()));
  CHECK(prover.entailment_calls() == 1);
  // Constant shortcuts.
  CHECK(oracle.entails(premises, Formula::truth()));
  CHECK(oracle.entails(Theory{Formula::falsity()}, Formula::atom(1)));
  CHECK_FALSE(oracle.entails(Theory{}, Formula::falsity()));
  CHECK(prover.entailment_calls() == 1);
  // Repeated queries are cached.
  CHECK_FALSE(oracle.entails(premises, Formula::atom(1)));
  CHECK(prover.entailment_calls() == 1);
}

}  // namespace
}  // namespace ael
