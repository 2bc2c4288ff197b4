#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "lsync/oracle.hpp"
#include "lsync/subshift.hpp"

namespace lsync {

/// Three-valued answer to a synchronization query.
///
/// For l-synchronization a No carries an extension ω and a predecessor ν with
/// ν ∈ Γ_l^-(μ) but ν ∉ Γ_l^-(μω). For intrinsic synchronization of ω it
/// carries μ in `predecessor` and ν in `extension` with μω, ων admissible and
/// μων not.
struct SyncVerdict {
  enum class Value { Yes, No, UnknownAtHorizon };
  Value value = Value::UnknownAtHorizon;
  Word extension;
  Word predecessor;
  std::size_t horizon = 0;

  bool yes() const noexcept { return value == Value::Yes; }
  bool no() const noexcept { return value == Value::No; }
  bool unknown() const noexcept { return value == Value::UnknownAtHorizon; }
};

const char* to_string(SyncVerdict::Value v) noexcept;

struct SyncOptions {
  /// Exact mode decides by closing over left signatures and never answers
  /// Unknown. Bounded mode scans every extension up to `horizon` with
  /// brute-force predecessor sets and answers No or Unknown.
  bool exact = true;
  std::size_t horizon = 4;
  Budget budget;
};

using GammaId = std::uint32_t;

struct PastClass {
  Word rep;                  // shortlex-least member
  std::vector<Word> members;  // shortlex order
  GammaId gamma = 0;
};

struct PastPartition {
  std::size_t level = 0;
  std::size_t word_cap = 0;
  std::vector<PastClass> classes;  // ordered by representative
  std::size_t unknown_words = 0;
};

struct SyncWords {
  std::vector<Word> words;  // shortlex order
  std::size_t unknown_words = 0;
};

struct LambdaSyncRow {
  std::size_t l = 0;
  std::size_t k = 0;
  Word eta;
  enum class Verdict { Pass, Fail, Unknown } verdict = Verdict::Unknown;
  Word witness;  // ν with ην ∈ S_{k−l}, when Pass
};

const char* to_string(LambdaSyncRow::Verdict v) noexcept;

/// Caching front end for all synchronization queries on one subshift.
/// Not safe for concurrent use; create one per thread.
class SyncAnalyzer {
 public:
  explicit SyncAnalyzer(SubshiftSpec spec, SyncOptions options = {});

  const SubshiftSpec& spec() const noexcept { return spec_; }
  const SyncOptions& options() const noexcept { return opt_; }

  /// B_l, lexicographic.
  const std::vector<Word>& words(std::size_t l);

  /// Interned Γ_l^-(w); w must be admissible.
  GammaId gamma(const Word& w, std::size_t l);
  /// Brute-force Γ_l^-(w) that ignores signatures (for cross-checks).
  GammaId gamma_brute(const Word& w, std::size_t l);
  /// Γ_l^- of the interned id as sorted words.
  std::vector<Word> gamma_words(GammaId id, std::size_t l);
  const std::vector<std::uint32_t>& gamma_indices(GammaId id, std::size_t l);

  SyncVerdict is_l_synchronizing(const Word& mu, std::size_t l);

  SyncWords enumerate_sync_words(std::size_t l, std::size_t word_cap);
  PastPartition past_equiv_classes(std::size_t l, std::size_t word_cap);

  std::vector<LambdaSyncRow> check_lambda_synchronizing(std::size_t l_max, std::size_t k_max, std::size_t word_cap);

  SyncVerdict is_intrinsically_synchronizing(const Word& omega, std::size_t horizon);

 private:
  struct LevelData {
    std::vector<Word> words;
    std::vector<MachineState> states;
    std::map<std::vector<std::uint32_t>, GammaId> intern;
    std::vector<std::vector<std::uint32_t>> sets;
    std::unordered_map<Signature, GammaId, SignatureHash> by_sig;
    std::unordered_map<MachineState, SyncVerdict, MachineStateHash> verdicts;
    std::map<std::size_t, SyncWords> sync_words;
  };

  LevelData& level(std::size_t l);
  GammaId gamma_of_state(const MachineState& s, const Word& witness, std::size_t l);
  GammaId intern(LevelData& d, std::vector<std::uint32_t> set);
  SyncVerdict exact_verdict(const MachineState& s, const Word& mu, std::size_t l);
  SyncVerdict bounded_verdict(const Word& mu, std::size_t l);
  const SyncWords& sync_words_cached(std::size_t l, std::size_t word_cap);
  SyncVerdict intrinsic_exact(const LabeledGraph& g, const Word& omega);

  SubshiftSpec spec_;
  SyncOptions opt_;
  std::map<std::size_t, LevelData> levels_;
};

}  // namespace lsync
