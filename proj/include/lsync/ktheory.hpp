#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsync/intmat.hpp"
#include "lsync/lgs.hpp"

namespace lsync {

/// A_l (edge counts) and I_l (ι as a 0/1 matrix), both m(l)×m(l+1), for l < L.
struct MatrixSystem {
  std::vector<std::size_t> sizes;  // m(0..L)
  std::vector<IntMatrix> A, I;

  std::size_t levels() const noexcept { return A.size(); }
};

MatrixSystem extract_matrix_system(const LambdaGraphSystem& lgs);

/// ᵗI_l − ᵗA_l : Z^{m(l)} → Z^{m(l+1)}.
IntMatrix k_relation(const MatrixSystem& ms, std::size_t l);

struct Stabilization {
  enum class Kind { Stabilized, TorsionStabilized, Undetermined };
  Kind kind = Kind::Undetermined;
  std::size_t window = 3;
  std::size_t from_level = 0;         // Stabilized
  FgAbelianGroup limit;               // Stabilized
  std::vector<BigInt> torsion;        // TorsionStabilized
  std::vector<std::size_t> ranks;     // rank at every computed level
};

const char* to_string(Stabilization::Kind k) noexcept;

struct GroupTower {
  std::vector<FgAbelianGroup> groups;
  std::vector<IntMatrix> maps;  // maps[l] : groups[l] → groups[l+1] in canonical generators
  std::vector<bool> map_is_iso;
  Stabilization stabilization;
};

/// Group at level l is coker(ᵗI_l − ᵗA_l); connecting maps induced by ᵗI_{l+1}.
GroupTower k0_tower(const MatrixSystem& ms, std::size_t window = 3);
/// Group at level l is ker(ᵗI_l − ᵗA_l); connecting maps induced by ᵗI_l.
GroupTower k1_tower(const MatrixSystem& ms, std::size_t window = 3);

/// A finitely generated group, or torsion plus a free part of unbounded rank.
struct GroupDescriptor {
  FgAbelianGroup group;  // rank is 0 when unbounded_rank
  bool unbounded_rank = false;

  std::string to_string() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Limit of a classified tower; throws undetermined-tower otherwise.
GroupDescriptor limit_of(const GroupTower& tower);

struct BowenFranks {
  GroupDescriptor bf0, bf1;
};

/// BF⁰ = torsion(K₀) ⊕ Z^{rank K₁}, BF¹ = Z^{rank K₀}.
BowenFranks bowen_franks(const GroupDescriptor& k0, const GroupDescriptor& k1);
BowenFranks bowen_franks(const GroupTower& k0, const GroupTower& k1);

struct StationaryBf {
  FgAbelianGroup cokernel;           // Z^N / (I − A)Z^N
  std::vector<BigVector> kernel;     // basis of ker(I − A)
};

StationaryBf stationary_bf(const IntMatrix& a);

}  // namespace lsync
