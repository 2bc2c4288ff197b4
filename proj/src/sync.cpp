#include "lsync/sync.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "lsync/errors.hpp"

namespace lsync {

const char* to_string(SyncVerdict::Value v) noexcept {
  switch (v) {
    case SyncVerdict::Value::Yes: return "yes";
    case SyncVerdict::Value::No: return "no";
    case SyncVerdict::Value::UnknownAtHorizon: return "unknown";
  }
  return "unknown";
}

const char* to_string(LambdaSyncRow::Verdict v) noexcept {
  switch (v) {
    case LambdaSyncRow::Verdict::Pass: return "pass";
    case LambdaSyncRow::Verdict::Fail: return "fail";
    case LambdaSyncRow::Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

SyncAnalyzer::SyncAnalyzer(SubshiftSpec spec, SyncOptions options) : spec_(std::move(spec)), opt_(options) {}

SyncAnalyzer::LevelData& SyncAnalyzer::level(std::size_t l) {
  auto it = levels_.find(l);
  if (it != levels_.end()) return it->second;
  LevelData& d = levels_[l];
  visit_words(spec_, l, opt_.budget, [&](const Word& w, const MachineState& s) {
    if (w.size() == l) {
      d.words.push_back(w);
      d.states.push_back(s);
    }
    return true;
  });
  return d;
}

const std::vector<Word>& SyncAnalyzer::words(std::size_t l) { return level(l).words; }

GammaId SyncAnalyzer::intern(LevelData& d, std::vector<std::uint32_t> set) {
  auto [it, inserted] = d.intern.emplace(std::move(set), static_cast<GammaId>(d.sets.size()));
  if (inserted) d.sets.push_back(it->first);
  return it->second;
}

GammaId SyncAnalyzer::gamma_brute(const Word& w, std::size_t l) {
  LevelData& d = level(l);
  const LanguageMachine& m = spec_.machine();
  std::vector<std::uint32_t> set;
  for (std::size_t i = 0; i < d.words.size(); ++i)
    if (m.run(d.states[i], w)) set.push_back(static_cast<std::uint32_t>(i));
  return intern(d, std::move(set));
}

GammaId SyncAnalyzer::gamma_of_state(const MachineState& s, const Word& witness, std::size_t l) {
  Signature sig = spec_.machine().left_signature(s, l);
  LevelData& d = level(l);
  auto it = d.by_sig.find(sig);
  if (it != d.by_sig.end()) return it->second;
  GammaId id = gamma_brute(witness, l);
  d.by_sig.emplace(std::move(sig), id);
  return id;
}

GammaId SyncAnalyzer::gamma(const Word& w, std::size_t l) {
  if (!opt_.exact) return gamma_brute(w, l);
  auto s = spec_.machine().run(w);
  if (!s) throw Error(ErrorKind::Validation, "word '" + spec_.alphabet().format(w) + "' is not admissible");
  return gamma_of_state(*s, w, l);
}

const std::vector<std::uint32_t>& SyncAnalyzer::gamma_indices(GammaId id, std::size_t l) {
  return level(l).sets.at(id);
}

std::vector<Word> SyncAnalyzer::gamma_words(GammaId id, std::size_t l) {
  LevelData& d = level(l);
  std::vector<Word> out;
  for (auto i : d.sets.at(id)) out.push_back(d.words[i]);
  return out;
}

namespace {

Word first_missing(const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small,
                   const std::vector<Word>& words) {
  for (auto i : big)
    if (!std::binary_search(small.begin(), small.end(), i)) return words[i];
  throw std::logic_error("predecessor set grew under right extension");
}

}  // namespace

SyncVerdict SyncAnalyzer::exact_verdict(const MachineState& s0, const Word& mu, std::size_t l) {
  {
    LevelData& d = level(l);
    auto it = d.verdicts.find(s0);
    if (it != d.verdicts.end()) return it->second;
  }
  const LanguageMachine& m = spec_.machine();
  const GammaId g0 = gamma_of_state(s0, mu, l);

  SyncVerdict verdict;
  verdict.value = SyncVerdict::Value::Yes;
  std::unordered_set<MachineState, MachineStateHash> seen{s0};
  std::deque<std::pair<MachineState, Word>> queue;
  queue.emplace_back(s0, Word{});
  while (!queue.empty() && verdict.yes()) {
    auto [s, omega] = std::move(queue.front());
    queue.pop_front();
    for (auto& mv : m.closure_moves(s, l)) {
      if (!seen.insert(mv.next).second) continue;
      if (seen.size() > opt_.budget.max_candidates)
        throw Error(ErrorKind::BudgetExceeded, "signature closure exceeded the budget");
      Word w = concat(omega, mv.chunk);
      const GammaId g = gamma_of_state(mv.next, concat(mu, w), l);
      if (g != g0) {
        LevelData& d = level(l);
        verdict.value = SyncVerdict::Value::No;
        verdict.predecessor = first_missing(d.sets[g0], d.sets[g], d.words);
        verdict.extension = std::move(w);
        break;
      }
      queue.emplace_back(std::move(mv.next), std::move(w));
    }
  }
  level(l).verdicts.emplace(s0, verdict);
  return verdict;
}

SyncVerdict SyncAnalyzer::bounded_verdict(const Word& mu, std::size_t l) {
  SyncVerdict verdict;
  verdict.horizon = opt_.horizon;
  const GammaId g0 = gamma_brute(mu, l);
  for (auto& omega : right_extensions_upto(spec_, mu, opt_.horizon, opt_.budget)) {
    const GammaId g = gamma_brute(concat(mu, omega), l);
    if (g != g0) {
      LevelData& d = level(l);
      verdict.value = SyncVerdict::Value::No;
      verdict.predecessor = first_missing(d.sets[g0], d.sets[g], d.words);
      verdict.extension = std::move(omega);
      return verdict;
    }
  }
  return verdict;
}

SyncVerdict SyncAnalyzer::is_l_synchronizing(const Word& mu, std::size_t l) {
  auto s = spec_.machine().run(mu);
  if (!s) throw Error(ErrorKind::Validation, "word '" + spec_.alphabet().format(mu) + "' is not admissible");
  if (!opt_.exact) return bounded_verdict(mu, l);
  return exact_verdict(*s, mu, l);
}

const SyncWords& SyncAnalyzer::sync_words_cached(std::size_t l, std::size_t word_cap) {
  {
    LevelData& d = level(l);
    auto it = d.sync_words.find(word_cap);
    if (it != d.sync_words.end()) return it->second;
  }
  SyncWords out;
  std::vector<std::pair<Word, MachineState>> all;
  visit_words(spec_, word_cap, opt_.budget, [&](const Word& w, const MachineState& s) {
    all.emplace_back(w, s);
    return true;
  });
  for (auto& [w, s] : all) {
    SyncVerdict v = opt_.exact ? exact_verdict(s, w, l) : bounded_verdict(w, l);
    if (v.yes())
      out.words.push_back(w);
    else if (v.unknown())
      ++out.unknown_words;
  }
  std::stable_sort(out.words.begin(), out.words.end(), shortlex_less);
  return level(l).sync_words.emplace(word_cap, std::move(out)).first->second;
}

SyncWords SyncAnalyzer::enumerate_sync_words(std::size_t l, std::size_t word_cap) {
  if (word_cap < l) throw Error(ErrorKind::Validation, "word cap must be at least the level");
  return sync_words_cached(l, word_cap);
}

PastPartition SyncAnalyzer::past_equiv_classes(std::size_t l, std::size_t word_cap) {
  const SyncWords sw = enumerate_sync_words(l, word_cap);
  PastPartition part;
  part.level = l;
  part.word_cap = word_cap;
  part.unknown_words = sw.unknown_words;
  std::map<GammaId, std::size_t> index;
  for (const auto& w : sw.words) {
    const GammaId g = gamma(w, l);
    auto [it, inserted] = index.emplace(g, part.classes.size());
    if (inserted) part.classes.push_back(PastClass{w, {}, g});
    part.classes[it->second].members.push_back(w);
  }
  // Words arrive in shortlex order, so classes are already ordered by rep.
  return part;
}

std::vector<LambdaSyncRow> SyncAnalyzer::check_lambda_synchronizing(std::size_t l_max, std::size_t k_max,
                                                                    std::size_t word_cap) {
  if (l_max > k_max) throw Error(ErrorKind::Validation, "l_max must not exceed k_max");
  std::vector<LambdaSyncRow> rows;
  const LanguageMachine& m = spec_.machine();
  for (std::size_t l = 0; l <= l_max; ++l) {
    const std::vector<Word> etas = words(l);
    for (std::size_t k = l; k <= k_max; ++k) {
      const SyncWords& sk = sync_words_cached(k, std::max(word_cap, k));
      const bool sk_complete = sk.unknown_words == 0;
      for (const auto& eta : etas) {
        LambdaSyncRow row{l, k, eta, LambdaSyncRow::Verdict::Fail, {}};
        bool undecided = !sk_complete;
        for (const auto& nu : sk.words) {
          Word w = concat(eta, nu);
          auto s = m.run(w);
          if (!s) continue;
          SyncVerdict v = opt_.exact ? exact_verdict(*s, w, k - l) : bounded_verdict(w, k - l);
          if (v.yes()) {
            row.verdict = LambdaSyncRow::Verdict::Pass;
            row.witness = nu;
            break;
          }
          if (v.unknown()) undecided = true;
        }
        if (row.verdict != LambdaSyncRow::Verdict::Pass && undecided) row.verdict = LambdaSyncRow::Verdict::Unknown;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

namespace {

using PairSet = std::vector<std::pair<std::size_t, std::size_t>>;

PairSet relation_of(const LabeledGraph& g, const Word& w) {
  std::set<std::pair<std::size_t, std::size_t>> cur;
  for (std::size_t p = 0; p < g.state_count(); ++p) cur.insert({p, p});
  for (Symbol a : w) {
    std::set<std::pair<std::size_t, std::size_t>> next;
    for (auto [p, q] : cur)
      for (const auto& e : g.edges)
        if (e.from == q && e.label == a) next.insert({p, e.to});
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

// All realizable sets of path endpoints (forward) or path starts (backward),
// each with a shortest witness word, in discovery order.
std::vector<std::pair<std::vector<char>, Word>> realizable_sets(const LabeledGraph& g, bool forward) {
  const std::size_t n = g.state_count();
  std::vector<std::pair<std::vector<char>, Word>> out;
  std::set<std::vector<char>> seen;
  std::vector<char> all(n, 1);
  seen.insert(all);
  out.emplace_back(all, Word{});
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t a = 0; a < g.alphabet.size(); ++a) {
      std::vector<char> next(n, 0);
      bool any = false;
      for (const auto& e : g.edges) {
        if (e.label != a) continue;
        const std::size_t from = forward ? e.from : e.to, to = forward ? e.to : e.from;
        if (out[i].first[from]) {
          next[to] = 1;
          any = true;
        }
      }
      if (!any || !seen.insert(next).second) continue;
      Word w = out[i].second;
      if (forward)
        w.push_back(static_cast<Symbol>(a));
      else
        w.insert(w.begin(), static_cast<Symbol>(a));
      out.emplace_back(std::move(next), std::move(w));
    }
  }
  return out;
}

}  // namespace

SyncVerdict SyncAnalyzer::intrinsic_exact(const LabeledGraph& g, const Word& omega) {
  const PairSet r = relation_of(g, omega);
  const auto ends = realizable_sets(g, true);
  const auto starts = realizable_sets(g, false);
  SyncVerdict v;
  v.value = SyncVerdict::Value::Yes;
  for (const auto& [tset, mu] : ends) {
    bool left_ok = std::any_of(r.begin(), r.end(), [&](auto pq) { return tset[pq.first] != 0; });
    if (!left_ok) continue;
    for (const auto& [sset, nu] : starts) {
      bool right_ok = std::any_of(r.begin(), r.end(), [&](auto pq) { return sset[pq.second] != 0; });
      if (!right_ok) continue;
      bool joint = std::any_of(r.begin(), r.end(), [&](auto pq) { return tset[pq.first] && sset[pq.second]; });
      if (!joint) {
        v.value = SyncVerdict::Value::No;
        v.predecessor = mu;
        v.extension = nu;
        return v;
      }
    }
  }
  return v;
}

SyncVerdict SyncAnalyzer::is_intrinsically_synchronizing(const Word& omega, std::size_t horizon) {
  const LanguageMachine& m = spec_.machine();
  if (!m.run(omega))
    throw Error(ErrorKind::Validation, "word '" + spec_.alphabet().format(omega) + "' is not admissible");
  if (const LabeledGraph* g = spec_.presentation()) return intrinsic_exact(*g, omega);

  std::vector<Word> all;
  visit_words(spec_, horizon, opt_.budget, [&](const Word& w, const MachineState&) {
    all.push_back(w);
    return true;
  });
  std::stable_sort(all.begin(), all.end(), shortlex_less);
  SyncVerdict v;
  v.horizon = horizon;
  for (const auto& mu : all) {
    auto left = m.run(concat(mu, omega));
    if (!left) continue;
    for (const auto& nu : all) {
      if (!m.run(concat(omega, nu))) continue;
      if (!m.run(*left, nu)) {
        v.value = SyncVerdict::Value::No;
        v.predecessor = mu;
        v.extension = nu;
        return v;
      }
    }
  }
  return v;
}

}  // namespace lsync
