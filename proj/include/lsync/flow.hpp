#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsync/ktheory.hpp"
#include "lsync/subshift.hpp"
#include "lsync/sync.hpp"

namespace lsync {

/// Σ, the expanded symbol a ∈ Σ and the fresh symbol z. Expanded words are
/// over Σ̃ = {z} ∪ Σ with z at index 0 and Σ shifted by one.
class ExpansionContext {
 public:
  ExpansionContext(const Alphabet& inner, const std::string& a, const std::string& z);

  const Alphabet& inner() const noexcept { return inner_; }
  const Alphabet& expanded() const noexcept { return expanded_; }
  Symbol a() const noexcept { return a_; }                 // in Σ
  Symbol a_expanded() const noexcept { return a_ + 1; }  // in Σ̃
  static constexpr Symbol z = 0;                          // in Σ̃

  Symbol lift(Symbol s) const noexcept { return s + 1; }

 private:
  Alphabet inner_, expanded_;
  Symbol a_ = 0;
};

/// Λ̃: every occurrence of a replaced by z a.
SubshiftSpec expand(const SubshiftSpec& spec, const std::string& a, const std::string& z);

Word xi_b(const ExpansionContext& ctx, const Word& w);
/// Throws domain when w starts with a, ends with z, or has z not followed by a.
Word eta_b(const ExpansionContext& ctx, const Word& w);
/// a·ξ(tail); w must start with a.
Word phi_b(const ExpansionContext& ctx, const Word& w);
/// a·η(tail); w must start with a and not end with z.
Word psi_b(const ExpansionContext& ctx, const Word& w);

enum class RowVerdict { Pass, Fail, Unknown };
const char* to_string(RowVerdict v) noexcept;

struct SyncTransferRow {
  std::size_t level = 0;
  std::string check;  // "sync" or "class"
  Word word;          // μ, or the class representative
  Word image;         // ξ(μ) in Σ̃
  RowVerdict verdict = RowVerdict::Unknown;
  std::string detail;
};

struct SyncTransferReport {
  std::vector<SyncTransferRow> rows;
  std::size_t passed = 0, failed = 0, unknown = 0;
};

/// For every non-empty μ ∈ S_l(Λ) with |μ| ≤ word_cap and l ≤ max_level:
/// ξ(μ) ∈ S_l(Λ̃) and ξ(μ) does not start with a and end with z; and
/// μ ~_l ν implies ξ(μ) ~_l ξ(ν).
SyncTransferReport sync_transfer_check(const SubshiftSpec& spec, const std::string& a, const std::string& z,
                                       std::size_t max_level, std::size_t word_cap, std::size_t horizon);

enum class Comparison { Match, Mismatch, Inconclusive };
const char* to_string(Comparison c) noexcept;

struct InvarianceRow {
  std::string alignment;  // "L" or "2L"
  std::string invariant;
  std::string lhs, rhs;
  Comparison verdict = Comparison::Inconclusive;
};

struct InvarianceParams {
  std::string a, z = "0";  // a defaults to the first symbol
  std::size_t word_cap = 0;  // 0: L; the expanded side uses 2·cap + 2
  std::size_t window = 3;
  bool double_alignment = true;
};

struct InvarianceReport {
  std::string lhs_name, rhs_name;
  std::size_t levels = 0;
  std::vector<InvarianceRow> rows;
  bool any_mismatch() const;
};

/// Builds both systems, their K towers and BF descriptors, and compares
/// lhs at level L against rhs at L and at 2L. The a and z parameters are
/// ignored.
InvarianceReport compare_invariants(const SubshiftSpec& lhs, const SubshiftSpec& rhs, std::size_t levels,
                                    const InvarianceParams& params = {});

/// compare_invariants of Λ against its expansion Λ̃.
InvarianceReport invariance_report(const SubshiftSpec& spec, std::size_t levels, const InvarianceParams& params = {});

}  // namespace lsync
