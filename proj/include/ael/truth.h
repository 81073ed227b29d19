// Three-valued truth values with the truth and knowledge orderings.

#ifndef AEL_TRUTH_H_
#define AEL_TRUTH_H_

#include <cstdint>
#include <string_view>

namespace ael {

// Enumerators are numbered along the truth ordering f < u < t.
enum class TruthValue : std::uint8_t { kFalse = 0, kUnknown = 1, kTrue = 2 };

constexpr TruthValue from_bool(bool b) {
  return b ? TruthValue::kTrue : TruthValue::kFalse;
}

constexpr bool is_two_valued(TruthValue v) { return v != TruthValue::kUnknown; }

// f <=tr u <=tr t
constexpr bool leq_truth(TruthValue a, TruthValue b) {
  return static_cast<int>(a) <= static_cast<int>(b);
}

// u <=kn f, u <=kn t; f and t are incomparable.
constexpr bool leq_knowledge(TruthValue a, TruthValue b) {
  return a == TruthValue::kUnknown || a == b;
}

constexpr TruthValue inverse(TruthValue v) {
  return static_cast<TruthValue>(2 - static_cast<int>(v));
}

constexpr TruthValue truth_min(TruthValue a, TruthValue b) {
  return leq_truth(a, b) ? a : b;
}

constexpr TruthValue truth_max(TruthValue a, TruthValue b) {
  return leq_truth(a, b) ? b : a;
}

// Kleene implication: max(consequent, antecedent^-1).
constexpr TruthValue implies(TruthValue antecedent, TruthValue consequent) {
  return truth_max(consequent, inverse(antecedent));
}

constexpr char to_char(TruthValue v) {
  switch (v) {
    case TruthValue::kTrue:
      return 't';
    case TruthValue::kFalse:
      return 'f';
    case TruthValue::kUnknown:
      break;
  }
  return 'u';
}

constexpr std::string_view to_string(TruthValue v) {
  switch (v) {
    case TruthValue::kTrue:
      return "t";
    case TruthValue::kFalse:
      return "f";
    case TruthValue::kUnknown:
      break;
  }
  return "u";
}

}  // namespace ael

#endif  // AEL_TRUTH_H_
