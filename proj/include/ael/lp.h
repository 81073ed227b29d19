// Modal embeddings of normal logic programs and independent reference
// semantics used to check them.

#ifndef AEL_LP_H_
#define AEL_LP_H_

#include <string>
#include <vector>

#include "ael/formula.h"
#include "ael/program.h"
#include "ael/truth.h"
#include "ael/worlds.h"

namespace ael {

// Indexed by atom id.
using ThreeValuedInterpretation = std::vector<TruthValue>;

// a <- b1..bk, not c1..cm  ↦  b1 & ... & bk & ~K(c1) & ... & ~K(cm) -> a
Theory ael1(const LogicProgram& program);
// a <- b1..bk, not c1..cm  ↦  K(b1) & ... & K(bk) & ~K(c1) & ... & ~K(cm) -> a
Theory ael2(const LogicProgram& program);

// I(p) = H_B(K(p)) for every atom of the pair's alphabet.
ThreeValuedInterpretation projection(const BeliefPair& pair);

// Alternating fixpoint of the Gelfond-Lifschitz operator.
ThreeValuedInterpretation well_founded(const LogicProgram& program, std::size_t atoms);

// Least fixpoint of the 3-valued immediate-consequence operator from all-u.
ThreeValuedInterpretation fitting_kunen(const LogicProgram& program, std::size_t atoms);

// M is stable iff M is the least model of the reduct P^M. Enumerates all
// candidates; throws CapExceeded above the explicit-set cap.
std::vector<Interpretation> stable_models(const LogicProgram& program, std::size_t atoms);

// M is supported iff M = T_P(M).
std::vector<Interpretation> supported_models(const LogicProgram& program, std::size_t atoms);

// 2-valued interpretation as a 3-valued one.
ThreeValuedInterpretation as_three_valued(Interpretation i, std::size_t atoms);

// a ↦ v <=kn b ↦ v on every atom.
bool leq_knowledge(const ThreeValuedInterpretation& a, const ThreeValuedInterpretation& b);

// "a=t", one atom per line.
std::string to_string(const ThreeValuedInterpretation& v, const Signature& sig);

}  // namespace ael

#endif  // AEL_LP_H_
