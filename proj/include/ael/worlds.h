// Interpretations, explicit sets of interpretations, and belief pairs.
//
// An interpretation of an n-atom alphabet is the integer whose bit i holds
// the value of atom i. A WorldSet is a membership bitmap over all 2^n
// interpretations.

#ifndef AEL_WORLDS_H_
#define AEL_WORLDS_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ael/formula.h"

namespace ael {

using Interpretation = std::uint32_t;

inline bool value_of(Interpretation i, AtomId atom) { return (i >> atom) & 1U; }

constexpr std::size_t kHardAtomLimit = 24;
constexpr std::size_t kDefaultAtomCap = 16;

// Raised when an explicit-set operation is asked for more atoms than the
// configured cap allows.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t atoms, std::size_t cap);
  std::size_t atoms() const { return atoms_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t atoms_;
  std::size_t cap_;
};

// Alphabet cap for explicit sets. Reads AEL_MAX_ATOMS on first use; clamped
// to kHardAtomLimit.
std::size_t atom_cap();
void set_atom_cap(std::size_t cap);
void check_atom_cap(std::size_t atoms, std::size_t cap = atom_cap());

class WorldSet {
 public:
  // Empty set over `atoms` atoms.
  explicit WorldSet(std::size_t atoms = 0);

  static WorldSet all(std::size_t atoms);
  static WorldSet none(std::size_t atoms) { return WorldSet(atoms); }

  std::size_t atoms() const { return atoms_; }
  // 2^atoms
  std::size_t universe_size() const { return std::size_t{1} << atoms_; }

  bool contains(Interpretation i) const { return (bits_[i >> 6] >> (i & 63)) & 1U; }
  void insert(Interpretation i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(Interpretation i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const;
  bool empty() const;
  bool is_subset_of(const WorldSet& other) const;

  WorldSet operator&(const WorldSet& other) const;
  WorldSet operator|(const WorldSet& other) const;

  std::vector<Interpretation> members() const;

  // Calls fn(i) for each member in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        const int b = __builtin_ctzll(word);
        fn(static_cast<Interpretation>(w * 64 + b));
        word &= word - 1;
      }
    }
  }

  // Bit k of `mask` decides membership of interpretation k. Requires
  // universe_size() <= 64.
  static WorldSet from_mask(std::size_t atoms, std::uint64_t mask);

  friend bool operator==(const WorldSet&, const WorldSet&) = default;
  friend auto operator<=>(const WorldSet&, const WorldSet&) = default;

 private:
  std::size_t atoms_;
  std::vector<std::uint64_t> bits_;
};

// (P, S) with S ⊆ P. P are the worlds not known to be impossible, S the
// worlds known to be possible.
class BeliefPair {
 public:
  // Throws std::invalid_argument unless certain ⊆ possible over the same
  // alphabet.
  BeliefPair(WorldSet possible, WorldSet certain);

  // ⊥ = (A, ∅)
  static BeliefPair bottom(std::size_t atoms);
  // (W) = (W, W)
  static BeliefPair complete(const WorldSet& w) { return BeliefPair(w, w); }

  const WorldSet& possible() const { return possible_; }
  const WorldSet& certain() const { return certain_; }
  std::size_t atoms() const { return possible_.atoms(); }
  bool is_complete() const { return possible_ == certain_; }

  friend bool operator==(const BeliefPair&, const BeliefPair&) = default;

 private:
  WorldSet possible_;
  WorldSet certain_;
};

// Precision ordering: P shrinks and S grows.
bool leq_p(const BeliefPair& a, const BeliefPair& b);

// "p¬q" in atom order; "()" for the empty alphabet.
std::string to_string(Interpretation i, const Signature& sig, std::size_t atoms);
// "{pq, ¬pq}"
std::string to_string(const WorldSet& w, const Signature& sig);
// "P={...} S={...}"
std::string to_string(const BeliefPair& b, const Signature& sig);

}  // namespace ael

#endif  // AEL_WORLDS_H_
