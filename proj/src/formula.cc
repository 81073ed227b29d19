#include "ael/formula.h"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace ael {

Signature::Signature(const std::vector<std::string>& names) {
  for (const auto& n : names) intern(n);
}

AtomId Signature::intern(std::string_view name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  if (closed_) throw std::out_of_range("undeclared atom '" + std::string(name) + "'");
  const auto id = static_cast<AtomId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(std::string(name), id);
  return id;
}

std::optional<AtomId> Signature::find(std::string_view name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Op op, AtomId atom, std::optional<Formula> lhs,
                      std::optional<Formula> rhs) {
  auto node = std::make_shared<FormulaNode>();
  node->op = op;
  node->atom = atom;
  std::size_t h = mix(0x51ed270b27f3ce31ULL, static_cast<std::size_t>(op));
  if (op == Op::kAtom) {
    h = mix(h, atom);
    node->atom_bound = atom + 1;
  }
  if (op == Op::kUnknown) node->has_unknown = true;
  for (const auto* child : {&lhs, &rhs}) {
    if (!child->has_value()) continue;
    const Formula& c = **child;
    h = mix(h, c.hash());
    node->size += c.size();
    node->modal_depth = std::max(node->modal_depth, c.modal_depth());
    node->has_unknown = node->has_unknown || c.has_unknown();
    node->atom_bound = std::max(node->atom_bound, c.atom_bound());
  }
  if (op == Op::kKnow) node->modal_depth += 1;
  node->hash = h;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::move(node));
}

Formula Formula::atom(AtomId id) { return make(Op::kAtom, id, std::nullopt, std::nullopt); }

Formula Formula::truth() {
  static const Formula t = make(Op::kTrue, 0, std::nullopt, std::nullopt);
  return t;
}

Formula Formula::falsity() {
  static const Formula f = make(Op::kFalse, 0, std::nullopt, std::nullopt);
  return f;
}

Formula Formula::unknown() {
  static const Formula u = make(Op::kUnknown, 0, std::nullopt, std::nullopt);
  return u;
}

Formula Formula::negation(Formula f) { return make(Op::kNot, 0, std::move(f), std::nullopt); }

Formula Formula::conjunction(Formula a, Formula b) {
  return make(Op::kAnd, 0, std::move(a), std::move(b));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return make(Op::kOr, 0, std::move(a), std::move(b));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return make(Op::kImplies, 0, std::move(antecedent), std::move(consequent));
}

Formula Formula::know(Formula f) { return make(Op::kKnow, 0, std::move(f), std::nullopt); }

Formula Formula::conjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return truth();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
  return acc;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.size() != b.size()) return false;
  switch (a.op()) {
    case Op::kAtom:
      return a.atom_id() == b.atom_id();
    case Op::kTrue:
    case Op::kFalse:
    case Op::kUnknown:
      return true;
    case Op::kNot:
    case Op::kKnow:
      return a.lhs() == b.lhs();
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  switch (a.op()) {
    case Op::kAtom:
      return a.atom_id() <=> b.atom_id();
    case Op::kTrue:
    case Op::kFalse:
    case Op::kUnknown:
      return std::strong_ordering::equal;
    case Op::kNot:
    case Op::kKnow:
      return a.lhs() <=> b.lhs();
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
  return std::strong_ordering::equal;
}

int modal_depth(const Theory& theory) {
  int d = 0;
  for (const auto& f : theory) d = std::max(d, f.modal_depth());
  return d;
}

bool is_objective(const Theory& theory) { return modal_depth(theory) == 0; }

AtomId atom_bound(const Theory& theory) {
  AtomId n = 0;
  for (const auto& f : theory) n = std::max(n, f.atom_bound());
  return n;
}

namespace {

void collect_top_level(const Formula& f, std::vector<Formula>& out,
                       std::unordered_set<Formula, FormulaHash>& seen) {
  if (f.objective()) return;
  if (f.op() == Op::kKnow) {
    if (seen.insert(f).second) out.push_back(f);
    return;
  }
  collect_top_level(f.lhs(), out, seen);
  if (f.is_binary()) collect_top_level(f.rhs(), out, seen);
}

Formula rebuild(const Formula& f, Formula lhs, std::optional<Formula> rhs) {
  switch (f.op()) {
    case Op::kNot:
      return Formula::negation(std::move(lhs));
    case Op::kKnow:
      return Formula::know(std::move(lhs));
    case Op::kAnd:
      return Formula::conjunction(std::move(lhs), std::move(*rhs));
    case Op::kOr:
      return Formula::disjunction(std::move(lhs), std::move(*rhs));
    case Op::kImplies:
      return Formula::implication(std::move(lhs), std::move(*rhs));
    default:
      return f;
  }
}

// positive == true replaces $u by `pos`, else by `neg`.
Formula polarize(const Formula& f, bool positive, const Formula& pos, const Formula& neg) {
  if (!f.has_unknown()) {
    if (!f.objective()) throw std::invalid_argument("polarity transform applied to a modal formula");
    return f;
  }
  switch (f.op()) {
    case Op::kUnknown:
      return positive ? pos : neg;
    case Op::kKnow:
      throw std::invalid_argument("polarity transform applied to a modal formula");
    case Op::kNot:
      return Formula::negation(polarize(f.lhs(), !positive, pos, neg));
    case Op::kImplies:
      return Formula::implication(polarize(f.lhs(), !positive, pos, neg),
                                  polarize(f.rhs(), positive, pos, neg));
    case Op::kAnd:
    case Op::kOr:
      return rebuild(f, polarize(f.lhs(), positive, pos, neg),
                     polarize(f.rhs(), positive, pos, neg));
    default:
      return f;
  }
}

}  // namespace

std::vector<Formula> top_level_modal_literals(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  collect_top_level(f, out, seen);
  return out;
}

std::vector<Formula> top_level_modal_literals(const Theory& theory) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  for (const auto& f : theory) collect_top_level(f, out, seen);
  return out;
}

Formula substitute_top_level(const Formula& f,
                             const std::function<Formula(const Formula&)>& replace) {
  if (f.objective()) return f;
  if (f.op() == Op::kKnow) return replace(f);
  if (f.op() == Op::kNot) return Formula::negation(substitute_top_level(f.lhs(), replace));
  return rebuild(f, substitute_top_level(f.lhs(), replace),
                 substitute_top_level(f.rhs(), replace));
}

Formula oath(const Formula& f) {
  return polarize(f, true, Formula::truth(), Formula::falsity());
}

Formula uath(const Formula& f) {
  return polarize(f, true, Formula::falsity(), Formula::truth());
}

Theory oath(const Theory& theory) {
  Theory out;
  out.reserve(theory.size());
  for (const auto& f : theory) out.push_back(oath(f));
  return out;
}

Theory uath(const Theory& theory) {
  Theory out;
  out.reserve(theory.size());
  for (const auto& f : theory) out.push_back(uath(f));
  return out;
}

Formula simplify(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom:
    case Op::kTrue:
    case Op::kFalse:
    case Op::kUnknown:
      return f;
    case Op::kKnow:
      return Formula::know(simplify(f.lhs()));
    case Op::kNot: {
      Formula a = simplify(f.lhs());
      switch (a.op()) {
        case Op::kTrue:
          return Formula::falsity();
        case Op::kFalse:
          return Formula::truth();
        case Op::kUnknown:
          return a;
        case Op::kNot:
          return a.lhs();
        default:
          return Formula::negation(a);
      }
    }
    case Op::kAnd: {
      Formula a = simplify(f.lhs());
      Formula b = simplify(f.rhs());
      if (a.op() == Op::kFalse || b.op() == Op::kFalse) return Formula::falsity();
      if (a.op() == Op::kTrue) return b;
      if (b.op() == Op::kTrue) return a;
      return Formula::conjunction(a, b);
    }
    case Op::kOr: {
      Formula a = simplify(f.lhs());
      Formula b = simplify(f.rhs());
      if (a.op() == Op::kTrue || b.op() == Op::kTrue) return Formula::truth();
      if (a.op() == Op::kFalse) return b;
      if (b.op() == Op::kFalse) return a;
      return Formula::disjunction(a, b);
    }
    case Op::kImplies: {
      Formula a = simplify(f.lhs());
      Formula b = simplify(f.rhs());
      if (a.op() == Op::kFalse || b.op() == Op::kTrue) return Formula::truth();
      if (a.op() == Op::kTrue) return b;
      if (b.op() == Op::kFalse) return simplify(Formula::negation(a));
      return Formula::implication(a, b);
    }
  }
  return f;
}

Theory simplify(const Theory& theory) {
  Theory out;
  for (const auto& f : theory) {
    Formula s = simplify(f);
    if (s.op() == Op::kTrue) continue;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Binding strength; higher binds tighter.
int precedence(Op op) {
  switch (op) {
    case Op::kImplies:
      return 1;
    case Op::kOr:
      return 2;
    case Op::kAnd:
      return 3;
    default:
      return 4;
  }
}

void print(std::ostream& os, const Formula& f, const Signature& sig) {
  auto child = [&](const Formula& c, bool parens) {
    if (parens) os << '(';
    print(os, c, sig);
    if (parens) os << ')';
  };
  switch (f.op()) {
    case Op::kAtom:
      os << sig.name(f.atom_id());
      return;
    case Op::kTrue:
      os << "$t";
      return;
    case Op::kFalse:
      os << "$f";
      return;
    case Op::kUnknown:
      os << "$u";
      return;
    case Op::kKnow:
      os << "K(";
      print(os, f.lhs(), sig);
      os << ')';
      return;
    case Op::kNot:
      os << '~';
      child(f.lhs(), precedence(f.lhs().op()) < 4);
      return;
    case Op::kAnd:
    case Op::kOr: {
      const int p = precedence(f.op());
      child(f.lhs(), precedence(f.lhs().op()) < p);
      os << (f.op() == Op::kAnd ? " & " : " | ");
      child(f.rhs(), precedence(f.rhs().op()) <= p);
      return;
    }
    case Op::kImplies:
      child(f.lhs(), precedence(f.lhs().op()) <= 1);
      os << " -> ";
      child(f.rhs(), precedence(f.rhs().op()) < 1);
      return;
  }
}

}  // namespace

std::string to_string(const Formula& f, const Signature& sig) {
  std::ostringstream os;
  print(os, f, sig);
  return os.str();
}

std::string to_string(const Theory& theory, const Signature& sig) {
  std::string out = "{";
  for (std::size_t i = 0; i < theory.size(); ++i) {
    if (i) out += ", ";
    out += to_string(theory[i], sig);
  }
  return out + "}";
}

}  // namespace ael
