#include "ael/worlds.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>

namespace ael {

CapExceeded::CapExceeded(std::size_t atoms, std::size_t cap)
    : std::runtime_error("alphabet has " + std::to_string(atoms) + " atoms; explicit-set cap is " +
                         std::to_string(cap)),
      atoms_(atoms),
      cap_(cap) {}

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("AEL_MAX_ATOMS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return std::min<std::size_t>(v, kHardAtomLimit);
  }
  return kDefaultAtomCap;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::size_t atom_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_atom_cap(std::size_t cap) {
  cap_storage().store(std::min(cap, kHardAtomLimit), std::memory_order_relaxed);
}

void check_atom_cap(std::size_t atoms, std::size_t cap) {
  if (atoms > cap || atoms > kHardAtomLimit) throw CapExceeded(atoms, std::min(cap, kHardAtomLimit));
}

WorldSet::WorldSet(std::size_t atoms) : atoms_(atoms) {
  check_atom_cap(atoms, kHardAtomLimit);
  bits_.assign(((std::size_t{1} << atoms) + 63) / 64, 0);
}

WorldSet WorldSet::all(std::size_t atoms) {
  WorldSet w(atoms);
  const std::size_t n = w.universe_size();
  for (std::size_t k = 0; k < w.bits_.size(); ++k) {
    const std::size_t remaining = n - k * 64;
    w.bits_[k] = remaining >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << remaining) - 1;
  }
  return w;
}

WorldSet WorldSet::from_mask(std::size_t atoms, std::uint64_t mask) {
  WorldSet w(atoms);
  if (w.universe_size() > 64) throw std::invalid_argument("from_mask needs at most 6 atoms");
  if (w.universe_size() < 64) mask &= (std::uint64_t{1} << w.universe_size()) - 1;
  w.bits_[0] = mask;
  return w;
}

std::size_t WorldSet::size() const {
  std::size_t n = 0;
  for (auto word : bits_) n += static_cast<std::size_t>(std::popcount(word));
  return n;
}

bool WorldSet::empty() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

bool WorldSet::is_subset_of(const WorldSet& other) const {
  if (atoms_ != other.atoms_) return false;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

WorldSet WorldSet::operator&(const WorldSet& other) const {
  if (atoms_ != other.atoms_) throw std::invalid_argument("world sets over different alphabets");
  WorldSet out(*this);
  for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] &= other.bits_[k];
  return out;
}

WorldSet WorldSet::operator|(const WorldSet& other) const {
  if (atoms_ != other.atoms_) throw std::invalid_argument("world sets over different alphabets");
  WorldSet out(*this);
  for (std::size_t k = 0; k < bits_.size(); ++k) out.bits_[k] |= other.bits_[k];
  return out;
}

std::vector<Interpretation> WorldSet::members() const {
  std::vector<Interpretation> out;
  for_each([&](Interpretation i) { out.push_back(i); });
  return out;
}

BeliefPair::BeliefPair(WorldSet possible, WorldSet certain)
    : possible_(std::move(possible)), certain_(std::move(certain)) {
  if (!certain_.is_subset_of(possible_))
    throw std::invalid_argument("belief pair requires S to be a subset of P");
}

BeliefPair BeliefPair::bottom(std::size_t atoms) {
  return BeliefPair(WorldSet::all(atoms), WorldSet::none(atoms));
}

bool leq_p(const BeliefPair& a, const BeliefPair& b) {
  return b.possible().is_subset_of(a.possible()) && a.certain().is_subset_of(b.certain());
}

std::string to_string(Interpretation i, const Signature& sig, std::size_t atoms) {
  if (atoms == 0) return "()";
  std::string out;
  for (AtomId a = 0; a < atoms; ++a) {
    if (!value_of(i, a)) out += "¬";
    out += a < sig.size() ? sig.name(a) : "x" + std::to_string(a);
  }
  return out;
}

std::string to_string(const WorldSet& w, const Signature& sig) {
  std::string out = "{";
  bool first = true;
  w.for_each([&](Interpretation i) {
    if (!first) out += ", ";
    first = false;
    out += to_string(i, sig, w.atoms());
  });
  return out + "}";
}

std::string to_string(const BeliefPair& b, const Signature& sig) {
  return "P=" + to_string(b.possible(), sig) + " S=" + to_string(b.certain(), sig);
}

}  // namespace ael
