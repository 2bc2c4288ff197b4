#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lsync {

/// Index of a symbol inside its Alphabet.
using Symbol = std::uint16_t;

/// A finite word; symbols are indices into some Alphabet.
using Word = std::vector<Symbol>;

/// Ordered, duplicate-free list of symbol names. The order drives every
/// deterministic enumeration in the library.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool contains(std::string_view name) const noexcept;
  Symbol index_of(std::string_view name) const;  // throws SymbolNotInAlphabet

  /// Parses whitespace-separated symbol names.
  Word parse(std::string_view text) const;
  Word parse(std::span<const std::string> names) const;
  /// Space-separated names; the empty word formats as "".
  std::string format(std::span<const Symbol> w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Length first, then lexicographic by symbol index.
bool shortlex_less(const Word& a, const Word& b) noexcept;

Word concat(const Word& a, const Word& b);

}  // namespace lsync
