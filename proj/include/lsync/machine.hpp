#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lsync/alphabet.hpp"

namespace lsync {

/// Opaque, hashable state of a right-reading language machine.
struct MachineState {
  std::vector<std::int32_t> v;
  friend bool operator==(const MachineState&, const MachineState&) = default;
};

/// Canonical value that determines the predecessor sets of a word up to a
/// fixed length. Two words with equal signatures at level l have equal
/// Γ_k^- for every k ≤ l.
struct Signature {
  std::vector<std::int32_t> v;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct IntVectorHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
    for (auto x : v) h = (h ^ static_cast<std::size_t>(static_cast<std::uint32_t>(x))) * 0x100000001b3ull;
    return h;
  }
};
struct MachineStateHash {
  std::size_t operator()(const MachineState& s) const noexcept { return IntVectorHash{}(s.v); }
};
struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept { return IntVectorHash{}(s.v); }
};

struct ClosureMove {
  Word chunk;
  MachineState next;
};

/// Deterministic machine reading a word left to right; a word is admissible
/// iff the machine stays alive from `initial()`. Every subshift class of the
/// catalog is backed by one of these.
class LanguageMachine {
 public:
  virtual ~LanguageMachine() = default;

  virtual std::size_t alphabet_size() const noexcept = 0;
  virtual MachineState initial() const = 0;
  virtual std::optional<MachineState> step(const MachineState& s, Symbol a) const = 0;

  virtual Signature left_signature(const MachineState& s, std::size_t level) const = 0;

  /// Right extensions that are enough to visit every left signature reachable
  /// from `s` (breadth-first over these moves, closed under composition).
  /// Returning no moves marks `s` as absorbing: its signature never changes.
  virtual std::vector<ClosureMove> closure_moves(const MachineState& s, std::size_t level) const = 0;

  std::optional<MachineState> run(const MachineState& from, std::span<const Symbol> w) const {
    std::optional<MachineState> s = from;
    for (Symbol a : w) {
      s = step(*s, a);
      if (!s) return std::nullopt;
    }
    return s;
  }
  std::optional<MachineState> run(std::span<const Symbol> w) const { return run(initial(), w); }
};

}  // namespace lsync
