#include <random>

#include "ael/formula.h"
#include "ael/semantics.h"
#include "ael/truth.h"
#include "doctest.h"
#include "support/generators.h"

namespace ael {
namespace {

Formula p() { return Formula::atom(0); }
Formula q() { return Formula::atom(1); }
const Formula u = Formula::unknown();

TEST_CASE("signature interns in insertion order") {
  Signature sig;
  CHECK(sig.intern("q") == 0);
  CHECK(sig.intern("p") == 1);
  CHECK(sig.intern("q") == 0);
  CHECK(sig.size() == 2);
  CHECK(sig.name(1) == "p");
  CHECK(sig.find("r") == std::nullopt);
  sig.close();
  CHECK(sig.intern("p") == 1);
  CHECK_THROWS_AS(sig.intern("r"), std::out_of_range);
}

TEST_CASE("structural equality and hashing") {
  const Formula a = Formula::implication(Formula::know(p()), q());
  const Formula b = Formula::implication(Formula::know(p()), q());
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a != Formula::implication(Formula::know(q()), p()));
  CHECK(a.modal_depth() == 1);
  CHECK(Formula::know(Formula::know(p())).modal_depth() == 2);
  CHECK(Formula::conjunction(std::vector<Formula>{}) == Formula::truth());
}

TEST_CASE("top-level modal literals") {
  CHECK(top_level_modal_literals(Theory{Formula::implication(Formula::know(p()), q())}) ==
        std::vector<Formula>{Formula::know(p())});
  CHECK(top_level_modal_literals(Theory{Formula::disjunction(p(), Formula::negation(q()))}).empty());
  const Formula inner = Formula::implication(Formula::know(p()), p());
  const Theory t{Formula::implication(Formula::know(inner), q())};
  CHECK(top_level_modal_literals(t) == std::vector<Formula>{Formula::know(inner)});
  // Repeated literals are reported once.
  const Theory dup{Formula::know(p()), Formula::negation(Formula::know(p()))};
  CHECK(top_level_modal_literals(dup).size() == 1);
}

TEST_CASE("oath and uath on the documented cases") {
  CHECK(oath(Formula::implication(u, p())) == Formula::implication(Formula::falsity(), p()));
  CHECK(uath(Formula::implication(u, p())) == Formula::implication(Formula::truth(), p()));
  CHECK(oath(u) == Formula::truth());
  CHECK(uath(u) == Formula::falsity());
  const Formula f = Formula::disjunction(Formula::negation(u), u);
  CHECK(oath(f) == Formula::disjunction(Formula::negation(Formula::falsity()), Formula::truth()));
  CHECK(uath(f) == Formula::disjunction(Formula::negation(Formula::truth()), Formula::falsity()));
  CHECK_THROWS_AS(oath(Formula::know(p())), std::invalid_argument);
}

TEST_CASE("property: uath F <=tr F <=tr oath F, identity on u-free formulas") {
  testing::Rng rng(11);
  testing::FormulaShape shape;
  shape.atoms = 10;
  shape.depth = 5;
  shape.modal_depth = 0;
  shape.constants = true;
  shape.unknown = true;
  for (int n = 0; n < 300; ++n) {
    const Formula f = testing::random_formula(rng, shape);
    const Formula up = oath(f);
    const Formula down = uath(f);
    CHECK_FALSE(up.has_unknown());
    CHECK_FALSE(down.has_unknown());
    if (!f.has_unknown()) {
      CHECK(up == f);
      CHECK(down == f);
    }
    for (Interpretation i = 0; i < (1U << 10); i += 7) {
      const TruthValue v = eval_objective(f, i);
      CHECK(leq_truth(eval_objective(down, i), v));
      CHECK(leq_truth(v, eval_objective(up, i)));
    }
  }
}

TEST_CASE("simplify folds Kleene constants") {
  CHECK(simplify(Formula::conjunction(p(), Formula::truth())) == p());
  CHECK(simplify(Formula::conjunction(p(), Formula::falsity())) == Formula::falsity());
  CHECK(simplify(Formula::disjunction(p(), Formula::truth())) == Formula::truth());
  CHECK(simplify(Formula::implication(Formula::falsity(), q())) == Formula::truth());
  CHECK(simplify(Formula::implication(Formula::truth(), q())) == q());
  CHECK(simplify(Formula::implication(q(), Formula::falsity())) == Formula::negation(q()));
  CHECK(simplify(Formula::negation(Formula::negation(p()))) == p());
  CHECK(simplify(Formula::negation(u)) == u);
  CHECK(simplify(Formula::disjunction(Formula::negation(u), Formula::falsity())) == u);
  const Theory t = simplify(Theory{Formula::truth(), p(), p()});
  CHECK(t == Theory{p()});
}

TEST_CASE("property: simplify preserves Kleene value") {
  testing::Rng rng(12);
  testing::FormulaShape shape;
  shape.atoms = 4;
  shape.depth = 5;
  shape.modal_depth = 0;
  shape.constants = true;
  shape.unknown = true;
  for (int n = 0; n < 500; ++n) {
    const Formula f = testing::random_formula(rng, shape);
    const Formula s = simplify(f);
    for (Interpretation i = 0; i < 16; ++i) CHECK(eval_objective(f, i) == eval_objective(s, i));
  }
}

TEST_CASE("printing") {
  Signature sig({"p", "q"});
  CHECK(to_string(Formula::implication(Formula::know(p()), q()), sig) == "K(p) -> q");
  CHECK(to_string(Formula::implication(Formula::implication(p(), q()), p()), sig) == "(p -> q) -> p");
  CHECK(to_string(Formula::implication(p(), Formula::implication(q(), p())), sig) == "p -> q -> p");
  CHECK(to_string(Formula::negation(Formula::conjunction(p(), q())), sig) == "~(p & q)");
  CHECK(to_string(Formula::disjunction(Formula::conjunction(p(), q()), u), sig) == "p & q | $u");
  CHECK(to_string(Theory{p(), q()}, sig) == "{p, q}");
  CHECK(to_string(Theory{}, sig) == "{}");
}

TEST_CASE("truth value orderings") {
  using enum TruthValue;
  CHECK(leq_truth(kFalse, kUnknown));
  CHECK(leq_truth(kUnknown, kTrue));
  CHECK_FALSE(leq_truth(kTrue, kUnknown));
  CHECK(leq_knowledge(kUnknown, kTrue));
  CHECK(leq_knowledge(kUnknown, kFalse));
  CHECK_FALSE(leq_knowledge(kTrue, kFalse));
  CHECK(inverse(kUnknown) == kUnknown);
  CHECK(implies(kUnknown, kUnknown) == kUnknown);
  CHECK(implies(kFalse, kUnknown) == kTrue);
}

}  // namespace
}  // namespace ael
