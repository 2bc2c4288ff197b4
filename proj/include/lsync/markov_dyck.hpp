#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lsync {

/// Square 0/1 matrix, row-major.
using BinaryMatrix = std::vector<std::vector<int>>;

BinaryMatrix all_ones(std::size_t n);

/// A bracket symbol of a Markov–Dyck alphabet: opening α_i or closing β_i,
/// with 0-based index i.
struct BracketSymbol {
  bool closing = false;
  int index = 0;
};

/// Reduced form of a product of Cuntz–Krieger partial isometries, written
/// t_μ P_Y t_ν* with P_Y = Σ_{k∈Y} t_k t_k*. Indices are 0-based. `nu` is
/// stored with the most recently pushed index first, so t_ν* ends in t_{ν₁}*.
struct MdState {
  enum class Kind { Zero, Unit, Triple };
  Kind kind = Kind::Unit;
  std::vector<int> mu;
  std::vector<int> y;  // sorted, nonempty in a Triple
  std::vector<int> nu;

  static MdState unit() { return {}; }
  static MdState zero() { return MdState{Kind::Zero, {}, {}, {}}; }
  friend bool operator==(const MdState&, const MdState&) = default;
};

/// Right-multiplies `state` by the partial isometry of `symbol`.
/// Zero is absorbing.
MdState md_step(const MdState& state, BracketSymbol symbol, const BinaryMatrix& a);

/// "(μ=12, Y={1,2}, ν=ε)" with 1-based indices; "0" and "1" for Zero/Unit.
std::string to_string(const MdState& s);

void validate_markov_matrix(const BinaryMatrix& a);

}  // namespace lsync
