#include "ael/parser.h"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace ael {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kEnd, kIdent, kConst, kNot, kAnd, kOr, kArrow, kLParen, kRParen, kKnow,
                 kComma, kDot, kIf };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Shared tokenizer for both grammars. Comments run to end of line.
class Lexer {
 public:
  Lexer(std::string_view text, int line, std::string_view comment_chars)
      : text_(text), line_(line), comment_chars_(comment_chars) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (ident_start(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      t.kind = Tok::kIdent;
      t.text = std::string(text_.substr(pos_, end - pos_));
      advance(end - pos_);
      return t;
    }
    if (c == 'K') {
      t.kind = Tok::kKnow;
      t.text = "K";
      advance(1);
      return t;
    }
    if (c == '$') {
      if (pos_ + 1 < text_.size() && std::string_view("tfu").find(text_[pos_ + 1]) != std::string_view::npos &&
          (pos_ + 2 >= text_.size() || !ident_char(text_[pos_ + 2]))) {
        t.kind = Tok::kConst;
        t.text = std::string(text_.substr(pos_, 2));
        advance(2);
        return t;
      }
      throw ParseError(line_, column_, "expected one of $t $f $u");
    }
    if (text_.substr(pos_, 2) == "->") {
      t.kind = Tok::kArrow;
      t.text = "->";
      advance(2);
      return t;
    }
    if (text_.substr(pos_, 2) == ":-") {
      t.kind = Tok::kIf;
      t.text = ":-";
      advance(2);
      return t;
    }
    switch (c) {
      case '~': t.kind = Tok::kNot; break;
      case '&': t.kind = Tok::kAnd; break;
      case '|': t.kind = Tok::kOr; break;
      case '(': t.kind = Tok::kLParen; break;
      case ')': t.kind = Tok::kRParen; break;
      case ',': t.kind = Tok::kComma; break;
      case '.': t.kind = Tok::kDot; break;
      default:
        throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(1, c);
    advance(1);
    return t;
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (comment_chars_.find(c) != std::string_view::npos) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_ = 1;
  std::string_view comment_chars_;
};

class ModalParser {
 public:
  ModalParser(std::string_view text, int line, Signature& sig)
      : lexer_(text, line, "#"), sig_(sig) {
    tok_ = lexer_.next();
  }

  Formula parse() {
    Formula f = implication();
    if (tok_.kind != Tok::kEnd) fail("unexpected '" + tok_.text + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_.line, tok_.column, msg);
  }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind) {
      fail(std::string("expected ") + what +
           (tok_.kind == Tok::kEnd ? " at end of input" : ", found '" + tok_.text + "'"));
    }
    tok_ = lexer_.next();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (tok_.kind == Tok::kArrow) {
      tok_ = lexer_.next();
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (tok_.kind == Tok::kOr) {
      tok_ = lexer_.next();
      acc = Formula::disjunction(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (tok_.kind == Tok::kAnd) {
      tok_ = lexer_.next();
      acc = Formula::conjunction(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    switch (tok_.kind) {
      case Tok::kNot:
        tok_ = lexer_.next();
        return Formula::negation(unary());
      case Tok::kKnow: {
        tok_ = lexer_.next();
        expect(Tok::kLParen, "'(' after K");
        Formula inner = implication();
        expect(Tok::kRParen, "')'");
        return Formula::know(inner);
      }
      case Tok::kLParen: {
        tok_ = lexer_.next();
        Formula inner = implication();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kConst: {
        const char c = tok_.text[1];
        tok_ = lexer_.next();
        return c == 't' ? Formula::truth() : c == 'f' ? Formula::falsity() : Formula::unknown();
      }
      case Tok::kIdent: {
        AtomId id;
        try {
          id = sig_.intern(tok_.text);
        } catch (const std::out_of_range&) {
          fail("undeclared atom '" + tok_.text + "'");
        }
        tok_ = lexer_.next();
        return Formula::atom(id);
      }
      case Tok::kEnd:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + tok_.text + "'");
    }
  }

  Lexer lexer_;
  Signature& sig_;
  Token tok_;
};

void declare_atoms(std::string_view list, int line, Signature& sig) {
  std::size_t i = 0;
  while (i < list.size()) {
    while (i < list.size() && (std::isspace(static_cast<unsigned char>(list[i])) || list[i] == ','))
      ++i;
    if (i >= list.size()) break;
    if (!ident_start(list[i]))
      throw ParseError(line, static_cast<int>(i) + 8, "malformed atom in %atoms");
    std::size_t end = i;
    while (end < list.size() && ident_char(list[end])) ++end;
    sig.intern(list.substr(i, end - i));
    i = end;
  }
  sig.close();
}

}  // namespace

Formula parse_modal(std::string_view text, Signature& sig) {
  return ModalParser(text, 1, sig).parse();
}

Theory parse_theory(std::string_view text, Signature& sig) {
  Theory theory;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    start = end + 1;

    const auto first = row.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || row[first] == '#') continue;
    if (row.substr(first).starts_with("%atoms")) {
      declare_atoms(row.substr(first + 6), line, sig);
      continue;
    }
    theory.push_back(ModalParser(row, line, sig).parse());
  }
  return theory;
}

LogicProgram parse_program(std::string_view text, Signature& sig) {
  Lexer lexer(text, 1, "#%");
  LogicProgram program;
  Token tok = lexer.next();

  auto atom = [&](const char* where) -> AtomId {
    if (tok.kind != Tok::kIdent || tok.text == "not")
      throw ParseError(tok.line, tok.column, std::string("expected atom ") + where);
    AtomId id;
    try {
      id = sig.intern(tok.text);
    } catch (const std::out_of_range&) {
      throw ParseError(tok.line, tok.column, "undeclared atom '" + tok.text + "'");
    }
    tok = lexer.next();
    return id;
  };

  while (tok.kind != Tok::kEnd) {
    if (tok.kind == Tok::kIdent && tok.text == "not")
      throw ParseError(tok.line, tok.column, "'not' is not allowed in a clause head");
    Clause clause;
    clause.head = atom("as clause head");
    if (tok.kind == Tok::kIf) {
      tok = lexer.next();
      while (true) {
        if (tok.kind == Tok::kIdent && tok.text == "not") {
          tok = lexer.next();
          clause.negative.push_back(atom("after 'not'"));
        } else {
          clause.positive.push_back(atom("in clause body"));
        }
        if (tok.kind != Tok::kComma) break;
        tok = lexer.next();
      }
    }
    if (tok.kind != Tok::kDot) throw ParseError(tok.line, tok.column, "expected '.' at end of clause");
    tok = lexer.next();
    program.clauses.push_back(std::move(clause));
  }
  return program;
}

std::string to_string(const Clause& clause, const Signature& sig) {
  std::ostringstream os;
  os << sig.name(clause.head);
  if (!clause.is_fact()) {
    os << " :- ";
    bool first = true;
    for (AtomId b : clause.positive) {
      os << (first ? "" : ", ") << sig.name(b);
      first = false;
    }
    for (AtomId c : clause.negative) {
      os << (first ? "" : ", ") << "not " << sig.name(c);
      first = false;
    }
  }
  os << '.';
  return os.str();
}

std::string to_string(const LogicProgram& program, const Signature& sig) {
  std::string out;
  for (const auto& c : program.clauses) out += to_string(c, sig) + "\n";
  return out;
}

}  // namespace ael
