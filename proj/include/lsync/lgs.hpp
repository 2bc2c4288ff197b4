#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsync/subshift.hpp"
#include "lsync/sync.hpp"

namespace lsync {

struct LgsVertex {
  std::vector<Word> gamma;  // Γ_l^-(v), sorted
  std::optional<Word> rep;
};

struct LgsEdge {
  std::size_t src = 0;  // in V_l
  std::size_t dst = 0;  // in V_{l+1}
  Symbol label = 0;
  friend bool operator==(const LgsEdge&, const LgsEdge&) = default;
};

/// One level of a truncated λ-graph system. `edges` is E_{l,l+1} and
/// `iota[j]` is the image in V_l of vertex j of V_{l+1}; both are empty on
/// the top level.
struct LgsLevel {
  std::vector<LgsVertex> vertices;
  std::vector<LgsEdge> edges;
  std::vector<std::size_t> iota;
};

/// λ-graph system truncated at level L = levels.size() - 1.
struct LambdaGraphSystem {
  Alphabet alphabet;
  std::vector<LgsLevel> levels;

  std::size_t top() const noexcept { return levels.empty() ? 0 : levels.size() - 1; }
  std::size_t vertex_count(std::size_t l) const { return levels.at(l).vertices.size(); }
  std::vector<std::size_t> vertex_counts() const;
};

// --- construction -----------------------------------------------------------

/// Canonical λ-synchronizing system of `spec` truncated at level L, using
/// synchronizing words of length ≤ word_cap.
LambdaGraphSystem build_lambda_sync_lgs(const SubshiftSpec& spec, std::size_t levels, std::size_t word_cap,
                                        const SyncOptions& options = {});
LambdaGraphSystem build_lambda_sync_lgs(SyncAnalyzer& analyzer, std::size_t levels, std::size_t word_cap);

/// Level-constant system of a left-resolving graph.
LambdaGraphSystem stationary_lgs(const LabeledGraph& graph, std::size_t levels);

/// Γ_l^-(v) read off the system itself: paths from level 0 ending at v.
std::vector<std::vector<std::vector<Word>>> intrinsic_gammas(const LambdaGraphSystem& lgs);

// --- validation -------------------------------------------------------------

struct CheckResult {
  bool pass = true;
  std::string witness;
};

struct LgsReport {
  CheckResult left_resolving;
  CheckResult predecessor_separated;
  CheckResult local_property;
  CheckResult essential;
  CheckResult iota_surjective;
  CheckResult iota_compatible;
  CheckResult gamma_consistent;

  bool all_pass() const noexcept {
    return left_resolving.pass && predecessor_separated.pass && local_property.pass && essential.pass &&
           iota_surjective.pass && iota_compatible.pass && gamma_consistent.pass;
  }
};

/// Exhaustive structural checks on the truncation. Predecessor separation is
/// checked on levels ≥ separated_from.
LgsReport validate_lgs(const LambdaGraphSystem& lgs, std::size_t separated_from = 0);

// --- launching vertices and irreducibility ------------------------------------

struct LaunchLevel {
  enum class Status { Complete, Missing, Truncated };
  std::size_t level = 0;
  std::size_t room = 0;  // longest word length searched
  std::vector<std::optional<Word>> witness;
  Status status = Status::Complete;
};

const char* to_string(LaunchLevel::Status s) noexcept;

/// For each vertex, the shortlex-least word of length ≤ min(H, L − l)
/// readable from it and from no other vertex of its level.
std::vector<LaunchLevel> launching_vertices(const LambdaGraphSystem& lgs, std::size_t horizon);

enum class Tri { Pass, Fail, Unknown };
const char* to_string(Tri t) noexcept;

struct IotaIrreducibility {
  Tri verdict = Tri::Unknown;
  std::vector<std::size_t> levels_checked;
  std::string witness;
};

/// Checks levels l with l + 2·depth ≤ L, connecting paths of length ≤ depth.
IotaIrreducibility check_iota_irreducible(const LambdaGraphSystem& lgs, std::size_t depth);

// --- reduction and isomorphism ------------------------------------------------

/// Identifies vertices with equal Γ_l^- level by level.
LambdaGraphSystem reduce_lgs(const LambdaGraphSystem& lgs);

struct IsoResult {
  bool isomorphic = false;
  std::size_t from_level = 0;
  std::vector<std::vector<std::size_t>> bijection;  // [l - from_level][v in lhs] = v in rhs
  std::string mismatch;
};

/// Level-wise isomorphism keyed by predecessor sets on [from_level, L].
IsoResult are_isomorphic(const LambdaGraphSystem& lhs, const LambdaGraphSystem& rhs, std::size_t from_level);

// --- minimality -----------------------------------------------------------------

struct DeletionProbe {
  std::size_t level = 0;
  bool is_vertex = true;
  std::size_t index = 0;
  Word witness;
  bool changed = false;
};

/// Deletes up to `per_level` randomly chosen vertices or edges per fully
/// launched level and rechecks whether the words readable from that level
/// change at the launching witness.
std::vector<DeletionProbe> minimality_probes(const LambdaGraphSystem& lgs, const std::vector<LaunchLevel>& launch,
                                             std::uint32_t seed, std::size_t per_level = 3);

/// Whether `w` labels a path starting at level l (optionally skipping one
/// vertex or one edge of that level).
bool readable_from_level(const LambdaGraphSystem& lgs, std::size_t level, const Word& w,
                         std::optional<std::size_t> skip_vertex = std::nullopt,
                         std::optional<std::size_t> skip_edge = std::nullopt);

}  // namespace lsync
