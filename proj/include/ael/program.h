// Normal logic programs: a <- b1, ..., bk, not c1, ..., not cm.

#ifndef AEL_PROGRAM_H_
#define AEL_PROGRAM_H_

#include <string>
#include <vector>

#include "ael/formula.h"

namespace ael {

struct Clause {
  AtomId head = 0;
  std::vector<AtomId> positive;
  std::vector<AtomId> negative;

  bool is_fact() const { return positive.empty() && negative.empty(); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct LogicProgram {
  std::vector<Clause> clauses;
  friend bool operator==(const LogicProgram&, const LogicProgram&) = default;
};

std::string to_string(const Clause& clause, const Signature& sig);
std::string to_string(const LogicProgram& program, const Signature& sig);

}  // namespace ael

#endif  // AEL_PROGRAM_H_
