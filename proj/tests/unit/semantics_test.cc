#include <random>

#include "ael/formula.h"
#include "ael/semantics.h"
#include "ael/truth.h"
#include "ael/worlds.h"
#include "doctest.h"
#include "support/generators.h"
#include "support/reference.h"

namespace ael {
namespace {

using enum TruthValue;

// Σ = {p, q}; bit 0 is p, bit 1 is q.
constexpr Interpretation kNone = 0, kP = 1, kQ = 2, kPQ = 3;
Formula p() { return Formula::atom(0); }
Formula q() { return Formula::atom(1); }
WorldSet set_of(std::initializer_list<Interpretation> is) {
  WorldSet w(2);
  for (auto i : is) w.insert(i);
  return w;
}

TEST_CASE("world sets and belief pairs") {
  const WorldSet a = WorldSet::all(2);
  CHECK(a.size() == 4);
  CHECK(WorldSet::none(2).empty());
  CHECK(set_of({kP}).is_subset_of(a));
  CHECK((set_of({kP, kQ}) & set_of({kQ, kPQ})) == set_of({kQ}));
  CHECK((set_of({kP}) | set_of({kQ})).members() == std::vector<Interpretation>{kP, kQ});
  CHECK_THROWS_AS(BeliefPair(set_of({kP}), set_of({kQ})), std::invalid_argument);
  CHECK(BeliefPair::bottom(2) == BeliefPair(a, WorldSet::none(2)));
  CHECK(BeliefPair::complete(a).is_complete());

  Signature sig({"p", "q"});
  CHECK(to_string(kP, sig, 2) == "p¬q");
  CHECK(to_string(BeliefPair(a, set_of({kQ, kPQ})), sig) == "P={¬p¬q, p¬q, ¬pq, pq} S={¬pq, pq}");
}

TEST_CASE("belief pair evaluation examples") {
  const BeliefPair bottom = BeliefPair::bottom(2);
  for (Interpretation i = 0; i < 4; ++i) CHECK(eval(bottom, i, Formula::know(p())) == kUnknown);
  const BeliefPair d1(WorldSet::all(2), set_of({kPQ, kQ}));
  for (Interpretation i = 0; i < 4; ++i)
    CHECK(eval(d1, i, Formula::implication(Formula::know(p()), q())) == kTrue);
  const BeliefPair full = BeliefPair::complete(WorldSet::all(2));
  const Formula taut = Formula::disjunction(p(), Formula::negation(p()));
  for (Interpretation i = 0; i < 4; ++i) CHECK(eval(full, i, taut) == kTrue);
}

TEST_CASE("modal atom examples") {
  CHECK(eval_modal_atom(BeliefPair::bottom(2), p()) == kUnknown);
  CHECK(eval_modal_atom(BeliefPair::complete(WorldSet::all(2)), p()) == kFalse);
  // Oracle: K(p) over the single world pq, by the reference evaluator.
  const reference::Worlds single{kPQ};
  CHECK(reference::h(single, single, kPQ, Formula::know(p())) == 2);
  CHECK(eval_modal_atom(BeliefPair::complete(set_of({kPQ})), p()) == kTrue);
  CHECK_THROWS_AS(eval_modal_atom(BeliefPair::bottom(1), q()), std::out_of_range);
}

TEST_CASE("possible-world evaluation examples") {
  const WorldSet a = WorldSet::all(2);
  for (Interpretation i = 0; i < 4; ++i) {
    CHECK(reference::moore(reference::all_worlds(2), i, Formula::know(p())) == false);
    CHECK_FALSE(eval_pws(a, i, Formula::know(p())));
    CHECK(eval_pws(WorldSet::none(2), i, Formula::know(Formula::falsity())));
  }
  CHECK(eval_pws(set_of({kPQ}), kPQ, Formula::know(Formula::conjunction(p(), q()))));
  CHECK_THROWS(eval_pws(a, kNone, Formula::unknown()));
}

TEST_CASE("theory_contains examples") {
  const WorldSet a = WorldSet::all(2);
  CHECK(theory_contains(a, Formula::negation(Formula::know(p()))));
  CHECK(theory_contains(set_of({kPQ}), Formula::conjunction(p(), q())));
  CHECK_FALSE(theory_contains(a, p()));
}

TEST_CASE("precision ordering") {
  testing::Rng rng(31);
  const BeliefPair bottom = BeliefPair::bottom(2);
  for (int n = 0; n < 100; ++n) {
    const auto [b1, b2] = testing::random_comparable_pairs(rng, 2);
    CHECK(leq_p(bottom, b1));
    CHECK(leq_p(b1, b1));
    CHECK(leq_p(b1, b2));
  }
  CHECK_FALSE(leq_p(BeliefPair::complete(WorldSet::all(2)), bottom));
}

TEST_CASE("property: maximal (complete) pairs are pairwise incomparable") {
  for (std::uint64_t m1 = 0; m1 < 16; ++m1)
    for (std::uint64_t m2 = 0; m2 < 16; ++m2) {
      if (m1 == m2) continue;
      const auto w1 = BeliefPair::complete(WorldSet::from_mask(2, m1));
      const auto w2 = BeliefPair::complete(WorldSet::from_mask(2, m2));
      CHECK_FALSE(leq_p(w1, w2));
    }
}

TEST_CASE("property: evaluator agrees with the reference definition") {
  testing::Rng rng(32);
  testing::FormulaShape shape;
  shape.atoms = 3;
  shape.depth = 4;
  shape.modal_depth = 3;
  shape.constants = true;
  shape.unknown = true;
  for (int n = 0; n < 400; ++n) {
    const auto [b, unused] = testing::random_comparable_pairs(rng, 3);
    const Formula f = testing::random_formula(rng, shape);
    const auto rp = reference::to_set(b.possible());
    const auto rs = reference::to_set(b.certain());
    for (Interpretation i = 0; i < 8; ++i)
      CHECK(static_cast<int>(eval(b, i, f)) == reference::h(rp, rs, i, f));
  }
}

TEST_CASE("property: monotonicity in the precision order") {
  testing::Rng rng(33);
  testing::FormulaShape shape;
  shape.atoms = 3;
  shape.depth = 4;
  shape.modal_depth = 2;
  shape.unknown = true;
  for (int n = 0; n < 1000; ++n) {
    const auto [b1, b2] = testing::random_comparable_pairs(rng, 3);
    const Formula f = testing::random_formula(rng, shape);
    const Interpretation i = static_cast<Interpretation>(testing::uniform(rng, 0, 7));
    CHECK(leq_knowledge(eval(b1, i, f), eval(b2, i, f)));
  }
}

TEST_CASE("property: complete pairs evaluate like possible-world structures") {
  testing::Rng rng(34);
  testing::FormulaShape shape;
  shape.atoms = 3;
  shape.depth = 4;
  shape.modal_depth = 2;
  shape.constants = true;
  for (int n = 0; n < 500; ++n) {
    const WorldSet w = testing::random_worlds(rng, 3);
    const Formula f = testing::random_formula(rng, shape);
    for (Interpretation i = 0; i < 8; ++i) {
      const TruthValue v = eval(BeliefPair::complete(w), i, f);
      CHECK(is_two_valued(v));
      CHECK(v == from_bool(eval_pws(w, i, f)));
    }
  }
}

TEST_CASE("property: modal atoms do not depend on the interpretation") {
  testing::Rng rng(35);
  testing::FormulaShape shape;
  shape.atoms = 3;
  shape.depth = 3;
  shape.modal_depth = 2;
  for (int n = 0; n < 300; ++n) {
    const auto [b, unused] = testing::random_comparable_pairs(rng, 3);
    const Formula k = Formula::know(testing::random_formula(rng, shape));
    const TruthValue v = eval_modal_atom(b, k.operand());
    for (Interpretation i = 0; i < 8; ++i) CHECK(eval(b, i, k) == v);
  }
}

}  // namespace
}  // namespace ael
