#include "lsync/oracle.hpp"

#include <algorithm>

#include "lsync/errors.hpp"

namespace lsync {

namespace {

void walk(const LanguageMachine& m, const MachineState& from, Word& cur, std::size_t max_len, std::size_t& used,
          const Budget& budget, const std::function<bool(const Word&, const MachineState&)>& fn) {
  if (!fn(cur, from) || cur.size() == max_len) return;
  const std::size_t k = m.alphabet_size();
  for (std::size_t a = 0; a < k; ++a) {
    if (++used > budget.max_candidates)
      throw Error(ErrorKind::BudgetExceeded,
                  "more than " + std::to_string(budget.max_candidates) + " candidate words");
    auto next = m.step(from, static_cast<Symbol>(a));
    if (!next) continue;
    cur.push_back(static_cast<Symbol>(a));
    walk(m, *next, cur, max_len, used, budget, fn);
    cur.pop_back();
  }
}

void check_symbols(const SubshiftSpec& spec, const Word& w) {
  for (Symbol s : w)
    if (s >= spec.alphabet().size())
      throw Error(ErrorKind::SymbolNotInAlphabet, "symbol index " + std::to_string(s));
}

}  // namespace

bool is_admissible(const SubshiftSpec& spec, const Word& w) {
  check_symbols(spec, w);
  return spec.machine().run(w).has_value();
}

bool is_admissible(const SubshiftSpec& spec, std::string_view text) {
  return is_admissible(spec, spec.alphabet().parse(text));
}

void visit_words(const SubshiftSpec& spec, std::size_t max_len, const Budget& budget,
                 const std::function<bool(const Word&, const MachineState&)>& fn) {
  Word cur;
  std::size_t used = 0;
  walk(spec.machine(), spec.machine().initial(), cur, max_len, used, budget, fn);
}

std::vector<Word> enumerate_words(const SubshiftSpec& spec, std::size_t l, const Budget& budget) {
  std::vector<Word> out;
  visit_words(spec, l, budget, [&](const Word& w, const MachineState&) {
    if (w.size() == l) out.push_back(w);
    return true;
  });
  return out;
}

std::vector<Word> left_extensions(const SubshiftSpec& spec, const Word& mu, std::size_t l, const Budget& budget) {
  check_symbols(spec, mu);
  std::vector<Word> out;
  if (!spec.machine().run(mu)) return out;
  const LanguageMachine& m = spec.machine();
  visit_words(spec, l, budget, [&](const Word& w, const MachineState& s) {
    if (w.size() == l && m.run(s, mu)) out.push_back(w);
    return true;
  });
  return out;
}

std::vector<Word> right_extensions(const SubshiftSpec& spec, const Word& mu, std::size_t l, const Budget& budget) {
  std::vector<Word> out;
  for (auto& w : right_extensions_upto(spec, mu, l, budget))
    if (w.size() == l) out.push_back(std::move(w));
  return out;
}

std::vector<Word> right_extensions_upto(const SubshiftSpec& spec, const Word& mu, std::size_t horizon,
                                        const Budget& budget) {
  check_symbols(spec, mu);
  std::vector<Word> out;
  const LanguageMachine& m = spec.machine();
  auto start = m.run(mu);
  if (!start) return out;
  Word cur;
  std::size_t used = 0;
  walk(m, *start, cur, horizon, used, budget, [&](const Word& w, const MachineState&) {
    out.push_back(w);
    return true;
  });
  std::stable_sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace lsync
