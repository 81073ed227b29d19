// Text front-end for modal theories and logic programs.
//
// Modal grammar, one formula per line, '#' starts a comment:
//
//   impl   := disj ( "->" impl )?
//   disj   := conj ( "|" conj )*
//   conj   := unary ( "&" unary )*
//   unary  := "~" unary | "K" "(" impl ")" | "(" impl ")"
//           | atom | "$t" | "$f" | "$u"
//   atom   := [a-z][a-zA-Z0-9_]*
//
// A theory file may declare its alphabet with a line "%atoms p, q, r";
// any other atom is then rejected.
//
// Program grammar: clauses "a :- b, not c." and facts "a.", separated by
// whitespace; '#' and '%' start comments.

#ifndef AEL_PARSER_H_
#define AEL_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "ael/formula.h"
#include "ael/program.h"

namespace ael {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Parses a single formula. New atoms are added to `sig` unless it is closed.
Formula parse_modal(std::string_view text, Signature& sig);

// Parses a theory file: one formula per non-blank line.
Theory parse_theory(std::string_view text, Signature& sig);

LogicProgram parse_program(std::string_view text, Signature& sig);

}  // namespace ael

#endif  // AEL_PARSER_H_
