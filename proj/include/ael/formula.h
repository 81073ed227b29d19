// Formulas of the modal language L_K and its K-free 3-FOL fragment.
//
// A Formula is an immutable, reference-counted tree. Atoms are stored as
// indices into a Signature; the Signature owns the names and the atom order
// that interpretations are indexed by.

#ifndef AEL_FORMULA_H_
#define AEL_FORMULA_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ael {

using AtomId = std::uint32_t;

// Finite alphabet Σ. Atom order is insertion order.
class Signature {
 public:
  Signature() = default;
  explicit Signature(const std::vector<std::string>& names);

  // Returns the id of `name`, adding it when the signature is open.
  // Throws std::out_of_range for an unknown name in a closed signature.
  AtomId intern(std::string_view name);
  std::optional<AtomId> find(std::string_view name) const;

  const std::string& name(AtomId id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  // A closed signature rejects new atoms (declared alphabet).
  void close() { closed_ = true; }
  bool closed() const { return closed_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, AtomId, std::less<>> index_;
  bool closed_ = false;
};

enum class Op : std::uint8_t {
  kAtom,
  kTrue,
  kFalse,
  kUnknown,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kKnow,
};

struct FormulaNode;

class Formula {
 public:
  static Formula atom(AtomId id);
  static Formula truth();
  static Formula falsity();
  static Formula unknown();
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  // antecedent -> consequent
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula know(Formula f);

  // Left-folded conjunction; $t for an empty list.
  static Formula conjunction(const std::vector<Formula>& fs);

  Op op() const;
  AtomId atom_id() const;
  // Operand of ~ and K, left operand of binary connectives.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& operand() const { return lhs(); }

  bool is_atom() const { return op() == Op::kAtom; }
  bool is_constant() const {
    return op() == Op::kTrue || op() == Op::kFalse || op() == Op::kUnknown;
  }
  bool is_binary() const {
    return op() == Op::kAnd || op() == Op::kOr || op() == Op::kImplies;
  }

  std::size_t hash() const;
  int modal_depth() const;
  bool objective() const { return modal_depth() == 0; }
  bool has_unknown() const;
  std::size_t size() const;

  // Largest atom id + 1, or 0 when the formula mentions no atoms.
  AtomId atom_bound() const;

  friend bool operator==(const Formula& a, const Formula& b);
  // Structural total order, consistent with ==.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  static Formula make(Op op, AtomId atom, std::optional<Formula> lhs,
                      std::optional<Formula> rhs);

  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Op op;
  AtomId atom = 0;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t hash = 0;
  std::size_t size = 1;
  int modal_depth = 0;
  bool has_unknown = false;
  AtomId atom_bound = 0;
};

inline Op Formula::op() const { return node_->op; }
inline AtomId Formula::atom_id() const { return node_->atom; }
inline const Formula& Formula::lhs() const { return *node_->lhs; }
inline const Formula& Formula::rhs() const { return *node_->rhs; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline int Formula::modal_depth() const { return node_->modal_depth; }
inline bool Formula::has_unknown() const { return node_->has_unknown; }
inline std::size_t Formula::size() const { return node_->size; }
inline AtomId Formula::atom_bound() const { return node_->atom_bound; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

using Theory = std::vector<Formula>;

int modal_depth(const Theory& theory);
bool is_objective(const Theory& theory);
// Largest atom id + 1 over the theory.
AtomId atom_bound(const Theory& theory);

// Subformulas K(G) not under the scope of another K, deduplicated
// structurally, in order of first occurrence.
std::vector<Formula> top_level_modal_literals(const Formula& f);
std::vector<Formula> top_level_modal_literals(const Theory& theory);

// Replaces every top-level K(G) by replace(K(G)).
Formula substitute_top_level(const Formula& f,
                             const std::function<Formula(const Formula&)>& replace);

// Polarity substitutions on K-free formulas. oath replaces positive
// occurrences of $u by $t and negative ones by $f; uath the other way round.
// Negation and the antecedent of -> flip polarity. Throws
// std::invalid_argument when the formula contains K.
Formula oath(const Formula& f);
Formula uath(const Formula& f);
Theory oath(const Theory& theory);
Theory uath(const Theory& theory);

// Constant folding under Kleene semantics: removes $t/$f/$u operands where
// the connective allows it. The result is equivalent in every 3-valued
// interpretation and is either a constant or constant-free where possible.
Formula simplify(const Formula& f);
Theory simplify(const Theory& theory);

// Printing in the input grammar: ~ & | -> K(...) $t $f $u. The output parses
// back to the same tree.
std::string to_string(const Formula& f, const Signature& sig);
std::string to_string(const Theory& theory, const Signature& sig);

}  // namespace ael

#endif  // AEL_FORMULA_H_
