#include "lsync/intmat.hpp"

#include <algorithm>
#include <sstream>

#include "lsync/errors.hpp"

namespace lsync {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols_if_empty) {
  const std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::Validation, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

BigVector IntMatrix::column(std::size_t j) const {
  BigVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

BigVector IntMatrix::apply(const BigVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::Validation, "dimension mismatch in matrix-vector product");
  BigVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols_ != y.rows_) throw Error(ErrorKind::Validation, "dimension mismatch in matrix product");
  IntMatrix z(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const BigInt& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += a * y(k, j);
    }
  return z;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error(ErrorKind::Validation, "dimension mismatch in difference");
  IntMatrix z = x;
  for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] -= y.a_[k];
  return z;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ',';
      out << (*this)(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Reducer {
  SmithDecomposition& s;
  std::size_t r, c;

  void row_addmul(std::size_t i, std::size_t t, const BigInt& q) {  // row_i += q row_t
    for (std::size_t j = 0; j < c; ++j)
      if (!s.D(t, j).is_zero()) s.D(i, j) += q * s.D(t, j);
    for (std::size_t j = 0; j < r; ++j)
      if (!s.U(t, j).is_zero()) s.U(i, j) += q * s.U(t, j);
    for (std::size_t k = 0; k < r; ++k)
      if (!s.Uinv(k, i).is_zero()) s.Uinv(k, t) -= q * s.Uinv(k, i);
  }
  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c; ++j) std::swap(s.D(a, j), s.D(b, j));
    for (std::size_t j = 0; j < r; ++j) std::swap(s.U(a, j), s.U(b, j));
    for (std::size_t k = 0; k < r; ++k) std::swap(s.Uinv(k, a), s.Uinv(k, b));
  }
  void row_negate(std::size_t i) {
    for (std::size_t j = 0; j < c; ++j) s.D(i, j) = -s.D(i, j);
    for (std::size_t j = 0; j < r; ++j) s.U(i, j) = -s.U(i, j);
    for (std::size_t k = 0; k < r; ++k) s.Uinv(k, i) = -s.Uinv(k, i);
  }
  void col_addmul(std::size_t j, std::size_t t, const BigInt& q) {  // col_j += q col_t
    for (std::size_t i = 0; i < r; ++i)
      if (!s.D(i, t).is_zero()) s.D(i, j) += q * s.D(i, t);
    for (std::size_t i = 0; i < c; ++i)
      if (!s.V(i, t).is_zero()) s.V(i, j) += q * s.V(i, t);
    for (std::size_t k = 0; k < c; ++k)
      if (!s.Vinv(j, k).is_zero()) s.Vinv(t, k) -= q * s.Vinv(j, k);
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(s.D(i, a), s.D(i, b));
    for (std::size_t i = 0; i < c; ++i) std::swap(s.V(i, a), s.V(i, b));
    for (std::size_t k = 0; k < c; ++k) std::swap(s.Vinv(a, k), s.Vinv(b, k));
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  SmithDecomposition s{IntMatrix::identity(r), m, IntMatrix::identity(c), IntMatrix::identity(r),
                       IntMatrix::identity(c), 0};
  Reducer red{s, r, c};
  const std::size_t n = std::min(r, c);
  std::size_t t = 0;
  bool exhausted = false;
  for (; t < n && !exhausted; ++t) {
    for (;;) {
      std::size_t pi = r, pj = c;
      BigInt best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const BigInt& x = s.D(i, j);
          if (x.is_zero()) continue;
          BigInt ax = abs(x);
          if (pi == r || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi == r) {
        exhausted = true;
        break;
      }
      red.row_swap(t, pi);
      red.col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (s.D(i, t).is_zero()) continue;
        BigInt q = s.D(i, t) / s.D(t, t);
        if (!q.is_zero()) red.row_addmul(i, t, -q);
        if (!s.D(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (s.D(t, j).is_zero()) continue;
        BigInt q = s.D(t, j) / s.D(t, t);
        if (!q.is_zero()) red.col_addmul(j, t, -q);
        if (!s.D(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (BigInt(s.D(i, j) % s.D(t, t)) != 0) {
            red.row_addmul(t, i, BigInt(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (exhausted) break;
    if (s.D(t, t) < 0) red.row_negate(t);
  }
  s.rank = t;
  return s;
}

// ---------------------------------------------------------------------------
// Groups

std::string FgAbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  if (rank > 0) out = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " (+) ";
    out += "Z/" + d.str();
  }
  return out;
}

FgAbelianGroup cokernel(const IntMatrix& m) { return CokernelPresentation(m).group(); }

std::vector<BigVector> kernel_basis(const IntMatrix& m) { return KernelPresentation(m).basis(); }

CokernelPresentation::CokernelPresentation(IntMatrix m) : m_(std::move(m)), snf_(smith_normal_form(m_)) {
  for (std::size_t i = 0; i < snf_.rank; ++i) {
    const BigInt& d = snf_.D(i, i);
    if (d == 1) continue;
    gens_.push_back(i);
    moduli_.push_back(d);
    group_.torsion.push_back(d);
  }
  for (std::size_t i = snf_.rank; i < m_.rows(); ++i) {
    gens_.push_back(i);
    moduli_.push_back(0);
  }
  group_.rank = m_.rows() - snf_.rank;
}

BigVector CokernelPresentation::coordinates(const BigVector& y) const {
  BigVector z = snf_.U.apply(y);
  BigVector out(gens_.size());
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    out[k] = z[gens_[k]];
    if (!moduli_[k].is_zero()) {
      out[k] %= moduli_[k];
      if (out[k] < 0) out[k] += moduli_[k];
    }
  }
  return out;
}

BigVector CokernelPresentation::lift(std::size_t k) const { return snf_.Uinv.column(gens_.at(k)); }

bool CokernelPresentation::in_image(const BigVector& y) const {
  BigVector z = snf_.U.apply(y);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i < snf_.rank) {
      if (BigInt(z[i] % snf_.D(i, i)) != 0) return false;
    } else if (!z[i].is_zero()) {
      return false;
    }
  }
  return true;
}

IntMatrix induced_map_on_cokernels(const CokernelPresentation& from, const CokernelPresentation& to,
                                   const IntMatrix& j) {
  if (j.cols() != from.matrix().rows() || j.rows() != to.matrix().rows())
    throw Error(ErrorKind::Validation, "connecting matrix has the wrong shape");
  for (std::size_t col = 0; col < from.matrix().cols(); ++col)
    if (!to.in_image(j.apply(from.matrix().column(col))))
      throw Error(ErrorKind::NotWellDefined,
                  "J maps column " + std::to_string(col) + " of the source relations outside the target image");
  IntMatrix k(to.generator_count(), from.generator_count());
  for (std::size_t g = 0; g < from.generator_count(); ++g) {
    BigVector img = to.coordinates(j.apply(from.lift(g)));
    for (std::size_t i = 0; i < img.size(); ++i) k(i, g) = img[i];
  }
  return k;
}

bool is_isomorphism(const CokernelPresentation& from, const CokernelPresentation& to, const IntMatrix& k) {
  if (!(from.group() == to.group())) return false;
  // Surjective between isomorphic finitely generated groups implies bijective.
  const std::size_t n = to.generator_count();
  IntMatrix rel(n, k.cols() + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < k.cols(); ++g) rel(i, g) = k(i, g);
    rel(i, k.cols() + i) = to.modulus(i);
  }
  return cokernel(rel).trivial();
}

KernelPresentation::KernelPresentation(IntMatrix m) : m_(std::move(m)), snf_(smith_normal_form(m_)) {
  for (std::size_t j = snf_.rank; j < m_.cols(); ++j) basis_.push_back(snf_.V.column(j));
}

BigVector KernelPresentation::coordinates(const BigVector& x) const {
  BigVector w = snf_.Vinv.apply(x);
  for (std::size_t i = 0; i < snf_.rank; ++i)
    if (!w[i].is_zero()) throw Error(ErrorKind::NotWellDefined, "vector is not in the kernel");
  return BigVector(w.begin() + static_cast<std::ptrdiff_t>(snf_.rank), w.end());
}

IntMatrix induced_map_on_kernels(const KernelPresentation& from, const KernelPresentation& to, const IntMatrix& j) {
  IntMatrix k(to.rank(), from.rank());
  for (std::size_t g = 0; g < from.rank(); ++g) {
    BigVector img = to.coordinates(j.apply(from.basis()[g]));
    for (std::size_t i = 0; i < img.size(); ++i) k(i, g) = img[i];
  }
  return k;
}

}  // namespace lsync
