#include "lsync/markov_dyck.hpp"

#include <algorithm>

#include "lsync/errors.hpp"

namespace lsync {

BinaryMatrix all_ones(std::size_t n) { return BinaryMatrix(n, std::vector<int>(n, 1)); }

void validate_markov_matrix(const BinaryMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorKind::Validation, "matrix must be nonempty");
  if (n > 30) throw Error(ErrorKind::Validation, "matrix larger than 30x30 is not supported");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorKind::Validation, "matrix must be square");
    for (int x : row)
      if (x != 0 && x != 1) throw Error(ErrorKind::Validation, "matrix entries must be 0 or 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool row_ok = false, col_ok = false;
    for (std::size_t j = 0; j < n; ++j) {
      row_ok = row_ok || a[i][j] == 1;
      col_ok = col_ok || a[j][i] == 1;
    }
    if (!row_ok) throw Error(ErrorKind::Validation, "zero row " + std::to_string(i + 1));
    if (!col_ok) throw Error(ErrorKind::Validation, "zero column " + std::to_string(i + 1));
  }
}

namespace {

std::vector<int> intersect_row(const std::vector<int>& y, const BinaryMatrix& a, int row) {
  std::vector<int> out;
  for (int k : y)
    if (a[row][k] == 1) out.push_back(k);
  return out;
}

std::vector<int> row_support(const BinaryMatrix& a, int row) {
  std::vector<int> out;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[row][k] == 1) out.push_back(static_cast<int>(k));
  return out;
}

}  // namespace

MdState md_step(const MdState& state, BracketSymbol symbol, const BinaryMatrix& a) {
  if (state.kind == MdState::Kind::Zero) return state;
  const int n = static_cast<int>(a.size());
  if (symbol.index < 0 || symbol.index >= n) throw Error(ErrorKind::SymbolNotInAlphabet, "bracket index");

  MdState s = state;
  if (s.kind == MdState::Kind::Unit) {
    s.kind = MdState::Kind::Triple;
    s.y.resize(n);
    for (int k = 0; k < n; ++k) s.y[k] = k;
  }
  const int i = symbol.index;

  if (symbol.closing) {
    if (!s.nu.empty()) {
      if (s.nu.front() != i) return MdState::zero();
      s.nu.erase(s.nu.begin());
      if (s.nu.empty()) {
        s.y = intersect_row(s.y, a, i);
        if (s.y.empty()) return MdState::zero();
      }
      return s;
    }
    if (!std::binary_search(s.y.begin(), s.y.end(), i)) return MdState::zero();
    s.mu.push_back(i);
    s.y = row_support(a, i);
    return s;
  }

  if (!s.nu.empty()) {
    if (a[i][s.nu.front()] != 1) return MdState::zero();
    s.nu.insert(s.nu.begin(), i);
    return s;
  }
  s.y = intersect_row(s.y, a, i);
  if (s.y.empty()) return MdState::zero();
  s.nu.push_back(i);
  return s;
}

std::string to_string(const MdState& s) {
  if (s.kind == MdState::Kind::Zero) return "0";
  if (s.kind == MdState::Kind::Unit) return "1";
  auto word = [](const std::vector<int>& w) {
    if (w.empty()) return std::string("ε");
    std::string out;
    for (int k : w) out += std::to_string(k + 1);
    return out;
  };
  std::string ys;
  for (std::size_t k = 0; k < s.y.size(); ++k) {
    if (k) ys += ',';
    ys += std::to_string(s.y[k] + 1);
  }
  return "(μ=" + word(s.mu) + ", Y={" + ys + "}, ν=" + word(s.nu) + ")";
}

}  // namespace lsync
