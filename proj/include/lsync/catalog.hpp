#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsync/lgs.hpp"
#include "lsync/subshift.hpp"

namespace lsync::catalog {

/// SFT over {a, b} forbidding "b b".
SubshiftSpec golden_mean();
SubshiftSpec full_shift(int n);
SubshiftSpec dyck(int n);
SubshiftSpec markov_dyck(const BinaryMatrix& a);
SubshiftSpec sofic_from_graph(const LabeledGraph& g);

/// Minimal left-resolving presentation of an irreducible sofic shift.
/// Throws not-irreducible when the input is not irreducible.
LabeledGraph fischer_cover(const SubshiftSpec& spec);

/// The explicit Cantor horizon system: vertices at level l are the
/// admissible closing-bracket words of length l.
LambdaGraphSystem cantor_horizon_dyck(int n, std::size_t levels);
LambdaGraphSystem cantor_horizon_markov_dyck(const BinaryMatrix& a, std::size_t levels);

struct Entry {
  std::string name;
  std::string description;
};

/// Built-in names understood by the CLI.
std::vector<Entry> entries();

}  // namespace lsync::catalog
