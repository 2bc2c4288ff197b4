#include "lsync/alphabet.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lsync/errors.hpp"

namespace lsync {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SymbolNotInAlphabet: return "symbol-not-in-alphabet";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::ClassResolutionFailure: return "class-resolution-failure";
    case ErrorKind::GraphNotLeftResolving: return "graph-not-left-resolving";
    case ErrorKind::QuotientBreaksLeftResolving: return "quotient-breaks-left-resolving";
    case ErrorKind::LevelRangeMismatch: return "level-range-mismatch";
    case ErrorKind::NotWellDefined: return "not-well-defined";
    case ErrorKind::NotIrreducible: return "not-irreducible";
    case ErrorKind::UndeterminedTower: return "undetermined-tower";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::SymbolCollision: return "symbol-collision";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::Validation, "alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::Validation, "empty symbol name");
    if (n.find_first_of(" \t\n") != std::string::npos)
      throw Error(ErrorKind::Validation, "symbol name contains whitespace: '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorKind::Validation, "duplicate symbol '" + n + "'");
  }
  if (names_.size() > 0xFFFF) throw Error(ErrorKind::Validation, "alphabet too large");
}

bool Alphabet::contains(std::string_view name) const noexcept {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Symbol Alphabet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw Error(ErrorKind::SymbolNotInAlphabet, "'" + std::string(name) + "'");
  return static_cast<Symbol>(it - names_.begin());
}

Word Alphabet::parse(std::string_view text) const {
  std::istringstream in{std::string(text)};
  Word w;
  std::string tok;
  while (in >> tok) w.push_back(index_of(tok));
  return w;
}

Word Alphabet::parse(std::span<const std::string> names) const {
  Word w;
  w.reserve(names.size());
  for (const auto& n : names) w.push_back(index_of(n));
  return w;
}

std::string Alphabet::format(std::span<const Symbol> w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

bool shortlex_less(const Word& a, const Word& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace lsync
