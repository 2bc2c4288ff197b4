#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lsync/alphabet.hpp"
#include "lsync/machine.hpp"
#include "lsync/markov_dyck.hpp"

namespace lsync {

struct LabeledEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Symbol label = 0;
  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Finite directed graph with labeled edges; parallel edges allowed.
struct LabeledGraph {
  Alphabet alphabet;
  std::vector<std::string> states;
  std::vector<LabeledEdge> edges;

  std::size_t state_count() const noexcept { return states.size(); }
  bool is_essential() const;
  bool is_left_resolving() const;
  bool is_strongly_connected() const;
  /// Square matrix of edge counts.
  std::vector<std::vector<long long>> adjacency() const;
};

class SubshiftSpec;

namespace spec_data {
struct FullShift {
  int n = 2;
};
struct SftForbidden {
  std::vector<Word> forbidden;
};
struct SoficGraph {
  LabeledGraph graph;
};
struct Dyck {
  int n = 2;
};
struct MarkovDyck {
  BinaryMatrix matrix;
};
struct Expanded {
  std::shared_ptr<const SubshiftSpec> inner;
  Symbol expanded_symbol = 0;  // index in the inner alphabet
  std::string fresh_symbol;
};
}  // namespace spec_data

enum class SpecKind { FullShift, SftForbidden, SoficGraph, Dyck, MarkovDyck, Expanded };

const char* to_string(SpecKind kind) noexcept;

/// Immutable description of a subshift together with its language machine.
/// Cheap to copy; safe to share across threads.
class SubshiftSpec {
 public:
  using Data = std::variant<spec_data::FullShift, spec_data::SftForbidden, spec_data::SoficGraph,
                            spec_data::Dyck, spec_data::MarkovDyck, spec_data::Expanded>;

  static SubshiftSpec full_shift(int n);
  static SubshiftSpec sft(Alphabet alphabet, std::vector<Word> forbidden);
  static SubshiftSpec sofic(LabeledGraph graph);
  static SubshiftSpec dyck(int n);
  static SubshiftSpec markov_dyck(BinaryMatrix a);
  static SubshiftSpec expanded(const SubshiftSpec& inner, const std::string& symbol,
                               const std::string& fresh);

  SpecKind kind() const noexcept { return static_cast<SpecKind>(impl_->data.index()); }
  const Alphabet& alphabet() const noexcept { return impl_->alphabet; }
  const Data& data() const noexcept { return impl_->data; }
  const LanguageMachine& machine() const noexcept { return *impl_->machine; }

  /// Graph whose finite path labels are exactly the language, for the
  /// classes that have one (full shift, SFT, sofic); null otherwise.
  const LabeledGraph* presentation() const noexcept { return impl_->presentation.get(); }

  /// Short human-readable name, e.g. "dyck:2".
  std::string describe() const;

 private:
  struct Impl {
    Alphabet alphabet;
    Data data;
    std::unique_ptr<LanguageMachine> machine;
    std::unique_ptr<LabeledGraph> presentation;
  };
  explicit SubshiftSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Dyck alphabet helpers: "a1".."aN" open, "b1".."bN" close.
Alphabet dyck_alphabet(int n);
BracketSymbol bracket_of(Symbol s, int n);

}  // namespace lsync
