#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace lsync {

using BigInt = boost::multiprecision::cpp_int;
using BigVector = std::vector<BigInt>;

/// Dense integer matrix with arbitrary-precision entries. Empty dimensions
/// are legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols_if_empty = 0);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  BigVector column(std::size_t j) const;
  BigVector apply(const BigVector& x) const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

/// U·M·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ⋯, d_i ≥ 0.
/// The inverses of U and V are kept alongside.
struct SmithDecomposition {
  IntMatrix U, D, V, Uinv, Vinv;
  std::size_t rank = 0;

  /// d_i for i < min(rows, cols); zero beyond the rank.
  BigInt diagonal(std::size_t i) const { return i < D.rows() && i < D.cols() ? D(i, i) : BigInt(0); }
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Z^rank ⊕ Z/d_1 ⊕ ⋯ with d_i ≥ 2 and d_1 | d_2 | ⋯.
struct FgAbelianGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const noexcept { return rank == 0 && torsion.empty(); }
  /// "Z^2 (+) Z/2 (+) Z/6"; "0" for the trivial group.
  std::string to_string() const;
  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

/// Z^rows / M·Z^cols.
FgAbelianGroup cokernel(const IntMatrix& m);
/// Lattice basis of {x : Mx = 0}.
std::vector<BigVector> kernel_basis(const IntMatrix& m);

/// Cokernel together with the canonical generators read off the Smith form:
/// torsion generators in divisibility order, then free generators.
class CokernelPresentation {
 public:
  explicit CokernelPresentation(IntMatrix m);

  const IntMatrix& matrix() const noexcept { return m_; }
  const SmithDecomposition& smith() const noexcept { return snf_; }
  const FgAbelianGroup& group() const noexcept { return group_; }
  std::size_t generator_count() const noexcept { return gens_.size(); }
  /// Order of generator k (0 for a free generator).
  const BigInt& modulus(std::size_t k) const { return moduli_[k]; }

  /// Canonical coordinates of y ∈ Z^rows, torsion parts reduced.
  BigVector coordinates(const BigVector& y) const;
  /// A preimage in Z^rows of generator k.
  BigVector lift(std::size_t k) const;
  /// True when y lies in M·Z^cols.
  bool in_image(const BigVector& y) const;

 private:
  IntMatrix m_;
  SmithDecomposition snf_;
  FgAbelianGroup group_;
  std::vector<std::size_t> gens_;
  std::vector<BigInt> moduli_;
};

/// Matrix of the map coker(M_from) → coker(M_to) induced by J, in canonical
/// generators. Throws not-well-defined when J·image(M_from) ⊄ image(M_to).
IntMatrix induced_map_on_cokernels(const CokernelPresentation& from, const CokernelPresentation& to,
                                   const IntMatrix& j);

/// Whether the induced map k: from → to is an isomorphism.
bool is_isomorphism(const CokernelPresentation& from, const CokernelPresentation& to, const IntMatrix& k);

/// Kernel lattice with coordinates in its basis.
class KernelPresentation {
 public:
  explicit KernelPresentation(IntMatrix m);

  const std::vector<BigVector>& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  /// Coordinates of x in the basis; throws not-well-defined if x ∉ ker.
  BigVector coordinates(const BigVector& x) const;

 private:
  IntMatrix m_;
  SmithDecomposition snf_;
  std::vector<BigVector> basis_;
};

/// Matrix of x ↦ Jx from ker(M_from) to ker(M_to) in the two bases.
IntMatrix induced_map_on_kernels(const KernelPresentation& from, const KernelPresentation& to, const IntMatrix& j);

}  // namespace lsync
