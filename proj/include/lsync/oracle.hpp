#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "lsync/subshift.hpp"

namespace lsync {

/// Cap on candidate words examined by one enumeration call.
struct Budget {
  std::size_t max_candidates = 2'000'000;
};

bool is_admissible(const SubshiftSpec& spec, const Word& w);
bool is_admissible(const SubshiftSpec& spec, std::string_view text);

/// B_l in lexicographic order of the alphabet. Throws budget-exceeded.
std::vector<Word> enumerate_words(const SubshiftSpec& spec, std::size_t l, const Budget& budget = {});

/// Depth-first walk over admissible words of length ≤ max_len in preorder
/// (every prefix before its extensions, siblings in alphabet order). The
/// callback returns false to prune the subtree below the current word.
void visit_words(const SubshiftSpec& spec, std::size_t max_len, const Budget& budget,
                 const std::function<bool(const Word&, const MachineState&)>& fn);

/// Γ_l^-(μ) and Γ_l^+(μ), sorted; empty when μ is not admissible.
std::vector<Word> left_extensions(const SubshiftSpec& spec, const Word& mu, std::size_t l,
                                  const Budget& budget = {});
std::vector<Word> right_extensions(const SubshiftSpec& spec, const Word& mu, std::size_t l,
                                   const Budget& budget = {});
/// All ω with |ω| ≤ horizon and μω admissible, shortlex order.
std::vector<Word> right_extensions_upto(const SubshiftSpec& spec, const Word& mu, std::size_t horizon,
                                        const Budget& budget = {});

}  // namespace lsync
