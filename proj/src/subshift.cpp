#include "lsync/subshift.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "lsync/errors.hpp"

namespace lsync {

// ---------------------------------------------------------------------------
// LabeledGraph

bool LabeledGraph::is_essential() const {
  std::vector<int> in(states.size(), 0), out(states.size(), 0);
  for (const auto& e : edges) {
    ++out[e.from];
    ++in[e.to];
  }
  for (std::size_t i = 0; i < states.size(); ++i)
    if (in[i] == 0 || out[i] == 0) return false;
  return !states.empty();
}

bool LabeledGraph::is_left_resolving() const {
  std::set<std::pair<std::size_t, Symbol>> seen;
  for (const auto& e : edges)
    if (!seen.insert({e.to, e.label}).second) return false;
  return true;
}

bool LabeledGraph::is_strongly_connected() const {
  const std::size_t n = states.size();
  if (n == 0) return false;
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        std::size_t a = forward ? e.from : e.to, b = forward ? e.to : e.from;
        if (a == v && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return reach(true) && reach(false);
}

std::vector<std::vector<long long>> LabeledGraph::adjacency() const {
  std::vector<std::vector<long long>> a(states.size(), std::vector<long long>(states.size(), 0));
  for (const auto& e : edges) ++a[e.from][e.to];
  return a;
}

const char* to_string(SpecKind kind) noexcept {
  switch (kind) {
    case SpecKind::FullShift: return "full";
    case SpecKind::SftForbidden: return "sft";
    case SpecKind::SoficGraph: return "sofic";
    case SpecKind::Dyck: return "dyck";
    case SpecKind::MarkovDyck: return "markov_dyck";
    case SpecKind::Expanded: return "expanded";
  }
  return "unknown";
}

Alphabet dyck_alphabet(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
  return Alphabet(std::move(names));
}

BracketSymbol bracket_of(Symbol s, int n) {
  if (s < n) return {false, static_cast<int>(s)};
  return {true, static_cast<int>(s) - n};
}

namespace {

// ---------------------------------------------------------------------------
// Relation machine: state is the set of (start, end) pairs of paths reading
// the word so far. The set of starts fixes every predecessor set.

class RelationMachine final : public LanguageMachine {
 public:
  explicit RelationMachine(const LabeledGraph& g) : n_(g.state_count()), k_(g.alphabet.size()) {
    succ_.assign(n_ * k_, {});
    for (const auto& e : g.edges) succ_[e.from * k_ + e.label].push_back(static_cast<std::int32_t>(e.to));
    for (auto& v : succ_) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
  }

  std::size_t alphabet_size() const noexcept override { return k_; }

  MachineState initial() const override {
    MachineState s;
    for (std::size_t p = 0; p < n_; ++p) s.v.push_back(static_cast<std::int32_t>(p * n_ + p));
    return s;
  }

  std::optional<MachineState> step(const MachineState& s, Symbol a) const override {
    if (a >= k_) throw Error(ErrorKind::SymbolNotInAlphabet, "symbol index " + std::to_string(a));
    MachineState out;
    for (auto pq : s.v) {
      const std::size_t p = static_cast<std::size_t>(pq) / n_, q = static_cast<std::size_t>(pq) % n_;
      for (auto q2 : succ_[q * k_ + a]) out.v.push_back(static_cast<std::int32_t>(p * n_ + q2));
    }
    if (out.v.empty()) return std::nullopt;
    std::sort(out.v.begin(), out.v.end());
    out.v.erase(std::unique(out.v.begin(), out.v.end()), out.v.end());
    return out;
  }

  Signature left_signature(const MachineState& s, std::size_t) const override {
    Signature sig;
    for (auto pq : s.v) {
      auto p = static_cast<std::int32_t>(static_cast<std::size_t>(pq) / n_);
      if (sig.v.empty() || sig.v.back() != p) sig.v.push_back(p);
    }
    return sig;
  }

  std::vector<ClosureMove> closure_moves(const MachineState& s, std::size_t) const override {
    std::vector<ClosureMove> moves;
    for (std::size_t a = 0; a < k_; ++a)
      if (auto t = step(s, static_cast<Symbol>(a))) moves.push_back({Word{static_cast<Symbol>(a)}, std::move(*t)});
    return moves;
  }

 private:
  std::size_t n_, k_;
  std::vector<std::vector<std::int32_t>> succ_;
};

// ---------------------------------------------------------------------------
// Markov–Dyck machine. Encoding: [Y mask, |μ|, μ..., ν...] with ν most recent
// first. The empty word is (ε, all, ε).

class MarkovDyckMachine final : public LanguageMachine {
 public:
  explicit MarkovDyckMachine(const BinaryMatrix& a) : a_(a), n_(static_cast<int>(a.size())) {
    for (int i = 0; i < n_; ++i) {
      std::int32_t m = 0;
      for (int j = 0; j < n_; ++j)
        if (a[i][j]) m |= (1 << j);
      rows_.push_back(m);
    }
    all_ = (n_ >= 31) ? -1 : ((1 << n_) - 1);
  }

  std::size_t alphabet_size() const noexcept override { return static_cast<std::size_t>(2 * n_); }

  MachineState initial() const override { return MachineState{{all_, 0}}; }

  std::optional<MachineState> step(const MachineState& s, Symbol sym) const override {
    if (sym >= 2 * n_) throw Error(ErrorKind::SymbolNotInAlphabet, "symbol index " + std::to_string(sym));
    const BracketSymbol b = bracket_of(sym, n_);
    const std::size_t nu_at = 2 + static_cast<std::size_t>(s.v[1]);
    const bool nu_empty = s.v.size() == nu_at;
    MachineState t = s;
    if (b.closing) {
      const int j = b.index;
      if (!nu_empty) {
        if (t.v[nu_at] != j) return std::nullopt;
        t.v.erase(t.v.begin() + static_cast<std::ptrdiff_t>(nu_at));
        if (t.v.size() == nu_at) {
          t.v[0] &= rows_[j];
          if (t.v[0] == 0) return std::nullopt;
        }
        return t;
      }
      if (!((t.v[0] >> j) & 1)) return std::nullopt;
      t.v.push_back(j);
      ++t.v[1];
      t.v[0] = rows_[j];
      return t;
    }
    const int i = b.index;
    if (!nu_empty) {
      if (!a_[i][t.v[nu_at]]) return std::nullopt;
      t.v.insert(t.v.begin() + static_cast<std::ptrdiff_t>(nu_at), i);
      return t;
    }
    t.v[0] &= rows_[i];
    if (t.v[0] == 0) return std::nullopt;
    t.v.push_back(i);
    return t;
  }

  Signature left_signature(const MachineState& s, std::size_t level) const override {
    const auto mlen = static_cast<std::size_t>(s.v[1]);
    Signature sig;
    if (mlen >= level) {
      sig.v.push_back(0);
      sig.v.insert(sig.v.end(), s.v.begin() + 2, s.v.begin() + 2 + static_cast<std::ptrdiff_t>(level));
    } else {
      sig.v.push_back(1);
      sig.v.push_back(s.v[0]);
      sig.v.insert(sig.v.end(), s.v.begin() + 2, s.v.begin() + 2 + static_cast<std::ptrdiff_t>(mlen));
    }
    return sig;
  }

  std::vector<ClosureMove> closure_moves(const MachineState& s, std::size_t level) const override {
    std::vector<ClosureMove> moves;
    const auto mlen = static_cast<std::size_t>(s.v[1]);
    if (mlen >= level) return moves;
    const std::size_t nu_at = 2 + mlen;
    auto push = [&](Word chunk) {
      if (auto t = run(s, chunk)) moves.push_back({std::move(chunk), std::move(*t)});
    };
    if (s.v.size() > nu_at) {
      Word pop;
      for (std::size_t k = nu_at; k < s.v.size(); ++k) pop.push_back(static_cast<Symbol>(n_ + s.v[k]));
      push(std::move(pop));
      return moves;
    }
    for (int i = 0; i < n_; ++i) push(Word{static_cast<Symbol>(i), static_cast<Symbol>(n_ + i)});
    for (int j = 0; j < n_; ++j)
      if ((s.v[0] >> j) & 1) push(Word{static_cast<Symbol>(n_ + j)});
    return moves;
  }

 private:
  BinaryMatrix a_;
  int n_;
  std::vector<std::int32_t> rows_;
  std::int32_t all_;
};

// ---------------------------------------------------------------------------
// Expansion machine. Symbol 0 is the fresh symbol z; symbol k ≥ 1 is inner
// symbol k − 1. Encoding: [flags, inner...].

constexpr std::int32_t kNonempty = 1;
constexpr std::int32_t kStartsWithA = 2;
constexpr std::int32_t kPending = 4;

class ExpandedMachine final : public LanguageMachine {
 public:
  ExpandedMachine(std::shared_ptr<const SubshiftSpec> inner, Symbol a) : inner_(std::move(inner)), a_(a) {}

  std::size_t alphabet_size() const noexcept override { return inner_->machine().alphabet_size() + 1; }

  MachineState initial() const override { return wrap(0, inner_->machine().initial()); }

  std::optional<MachineState> step(const MachineState& s, Symbol x) const override {
    if (x >= alphabet_size()) throw Error(ErrorKind::SymbolNotInAlphabet, "symbol index " + std::to_string(x));
    const std::int32_t flags = s.v[0];
    const Symbol a_outer = static_cast<Symbol>(a_ + 1);
    if (flags & kPending) {
      if (x != a_outer) return std::nullopt;
      MachineState t = s;
      t.v[0] = flags & ~kPending;
      return t;
    }
    MachineState in = unwrap(s);
    std::int32_t nf = flags | kNonempty;
    Symbol inner_sym;
    if (x == 0) {
      inner_sym = a_;
      nf |= kPending;
    } else if (x == a_outer) {
      if (flags & kNonempty) return std::nullopt;
      inner_sym = a_;
      nf |= kStartsWithA;
    } else {
      inner_sym = static_cast<Symbol>(x - 1);
    }
    auto next = inner_->machine().step(in, inner_sym);
    if (!next) return std::nullopt;
    return wrap(nf, *next);
  }

  Signature left_signature(const MachineState& s, std::size_t level) const override {
    Signature inner = inner_->machine().left_signature(unwrap(s), level);
    Signature sig;
    sig.v.reserve(inner.v.size() + 1);
    sig.v.push_back(s.v[0] & (kNonempty | kStartsWithA));
    sig.v.insert(sig.v.end(), inner.v.begin(), inner.v.end());
    return sig;
  }

  std::vector<ClosureMove> closure_moves(const MachineState& s, std::size_t level) const override {
    std::vector<ClosureMove> moves;
    const std::int32_t flags = s.v[0];
    auto push = [&](Word chunk) {
      if (auto t = run(s, chunk)) moves.push_back({std::move(chunk), std::move(*t)});
    };
    if (flags == 0) {
      for (std::size_t x = 0; x < alphabet_size(); ++x) push(Word{static_cast<Symbol>(x)});
      return moves;
    }
    if (flags & kPending) {
      push(Word{static_cast<Symbol>(a_ + 1)});
      return moves;
    }
    for (const auto& m : inner_->machine().closure_moves(unwrap(s), level)) {
      Word chunk;
      for (Symbol c : m.chunk) {
        if (c == a_) chunk.push_back(0);
        chunk.push_back(static_cast<Symbol>(c + 1));
      }
      push(std::move(chunk));
    }
    return moves;
  }

 private:
  static MachineState wrap(std::int32_t flags, const MachineState& inner) {
    MachineState s;
    s.v.reserve(inner.v.size() + 1);
    s.v.push_back(flags);
    s.v.insert(s.v.end(), inner.v.begin(), inner.v.end());
    return s;
  }
  static MachineState unwrap(const MachineState& s) { return MachineState{{s.v.begin() + 1, s.v.end()}}; }

  std::shared_ptr<const SubshiftSpec> inner_;
  Symbol a_;
};

// ---------------------------------------------------------------------------

void validate_graph(const LabeledGraph& g) {
  if (g.states.empty()) throw Error(ErrorKind::Validation, "graph has no states");
  for (const auto& e : g.edges) {
    if (e.from >= g.states.size() || e.to >= g.states.size())
      throw Error(ErrorKind::Validation, "edge endpoint out of range");
    if (e.label >= g.alphabet.size()) throw Error(ErrorKind::SymbolNotInAlphabet, "edge label out of range");
  }
  if (!g.is_essential()) throw Error(ErrorKind::Validation, "graph is not essential (a state lacks an in- or out-edge)");
}

bool has_factor(const Word& w, const std::vector<Word>& forbidden) {
  for (const auto& f : forbidden) {
    if (f.size() > w.size()) continue;
    if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) return true;
  }
  return false;
}

// Essential core of the (m−1)-block graph.
LabeledGraph block_core(const Alphabet& alphabet, const std::vector<Word>& forbidden, std::size_t m) {
  const std::size_t k = alphabet.size();
  const std::size_t blen = m - 1;
  std::vector<Word> blocks;
  Word cur;
  std::function<void()> gen = [&]() {
    if (has_factor(cur, forbidden)) return;
    if (cur.size() == blen) {
      blocks.push_back(cur);
      return;
    }
    for (std::size_t a = 0; a < k; ++a) {
      cur.push_back(static_cast<Symbol>(a));
      gen();
      cur.pop_back();
    }
  };
  gen();

  std::vector<LabeledEdge> edges;
  auto index_of = [&](const Word& w) -> std::optional<std::size_t> {
    auto it = std::lower_bound(blocks.begin(), blocks.end(), w);
    if (it == blocks.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - blocks.begin());
  };
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      Word w = blocks[i];
      w.push_back(static_cast<Symbol>(a));
      if (has_factor(w, forbidden)) continue;
      Word tail(w.begin() + 1, w.end());
      if (auto j = index_of(tail)) edges.push_back({i, *j, static_cast<Symbol>(a)});
    }
  }

  std::vector<char> alive(blocks.size(), 1);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> in(blocks.size(), 0), out(blocks.size(), 0);
    for (const auto& e : edges)
      if (alive[e.from] && alive[e.to]) {
        ++out[e.from];
        ++in[e.to];
      }
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (alive[i] && (in[i] == 0 || out[i] == 0)) {
        alive[i] = 0;
        changed = true;
      }
  }

  LabeledGraph g{alphabet, {}, {}};
  std::vector<std::size_t> remap(blocks.size(), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (alive[i]) {
      remap[i] = g.states.size();
      g.states.push_back(blocks[i].empty() ? std::string("*") : alphabet.format(blocks[i]));
    }
  for (const auto& e : edges)
    if (alive[e.from] && alive[e.to]) g.edges.push_back({remap[e.from], remap[e.to], e.label});
  return g;
}

LabeledGraph expanded_presentation(const LabeledGraph& inner, const Alphabet& outer, Symbol a) {
  LabeledGraph g{outer, inner.states, {}};
  for (const auto& e : inner.edges) {
    if (e.label != a) {
      g.edges.push_back({e.from, e.to, static_cast<Symbol>(e.label + 1)});
      continue;
    }
    const std::size_t mid = g.states.size();
    g.states.push_back(inner.states[e.from] + "~" + inner.states[e.to] + "#" + std::to_string(mid));
    g.edges.push_back({e.from, mid, 0});
    g.edges.push_back({mid, e.to, static_cast<Symbol>(a + 1)});
  }
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Factories

SubshiftSpec SubshiftSpec::full_shift(int n) {
  if (n < 2) throw Error(ErrorKind::Validation, "full shift needs at least 2 symbols");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  auto impl = std::make_shared<Impl>();
  impl->alphabet = Alphabet(std::move(names));
  impl->data = spec_data::FullShift{n};
  auto g = std::make_unique<LabeledGraph>(LabeledGraph{impl->alphabet, {"*"}, {}});
  for (int i = 0; i < n; ++i) g->edges.push_back({0, 0, static_cast<Symbol>(i)});
  impl->machine = std::make_unique<RelationMachine>(*g);
  impl->presentation = std::move(g);
  return SubshiftSpec(std::move(impl));
}

SubshiftSpec SubshiftSpec::sft(Alphabet alphabet, std::vector<Word> forbidden) {
  if (alphabet.size() == 0) throw Error(ErrorKind::Validation, "alphabet must be nonempty");
  std::size_t m = 1;
  for (const auto& f : forbidden) {
    if (f.empty()) throw Error(ErrorKind::Validation, "forbidden word must be nonempty");
    for (Symbol s : f)
      if (s >= alphabet.size()) throw Error(ErrorKind::SymbolNotInAlphabet, "forbidden word symbol");
    m = std::max(m, f.size());
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());

  auto g = std::make_unique<LabeledGraph>(block_core(alphabet, forbidden, m));
  if (g->states.empty()) throw Error(ErrorKind::Validation, "SFT is empty");
  auto machine = std::make_unique<RelationMachine>(*g);

  // Every factor-free word of length ≤ m must extend to a point.
  Word cur;
  std::function<void()> check = [&]() {
    if (has_factor(cur, forbidden)) return;
    if (!machine->run(cur))
      throw Error(ErrorKind::Validation,
                  "SFT is not essential: '" + alphabet.format(cur) + "' is factor-free but not extendable");
    if (cur.size() == m) return;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      cur.push_back(static_cast<Symbol>(a));
      check();
      cur.pop_back();
    }
  };
  check();

  auto impl = std::make_shared<Impl>();
  impl->alphabet = std::move(alphabet);
  impl->data = spec_data::SftForbidden{std::move(forbidden)};
  impl->machine = std::move(machine);
  impl->presentation = std::move(g);
  return SubshiftSpec(std::move(impl));
}

SubshiftSpec SubshiftSpec::sofic(LabeledGraph graph) {
  validate_graph(graph);
  auto impl = std::make_shared<Impl>();
  impl->alphabet = graph.alphabet;
  impl->machine = std::make_unique<RelationMachine>(graph);
  impl->presentation = std::make_unique<LabeledGraph>(graph);
  impl->data = spec_data::SoficGraph{std::move(graph)};
  return SubshiftSpec(std::move(impl));
}

SubshiftSpec SubshiftSpec::dyck(int n) {
  if (n < 2) throw Error(ErrorKind::Validation, "Dyck shift needs n >= 2");
  if (n > 30) throw Error(ErrorKind::Validation, "Dyck shift with more than 30 bracket pairs is not supported");
  auto impl = std::make_shared<Impl>();
  impl->alphabet = dyck_alphabet(n);
  impl->data = spec_data::Dyck{n};
  impl->machine = std::make_unique<MarkovDyckMachine>(all_ones(static_cast<std::size_t>(n)));
  return SubshiftSpec(std::move(impl));
}

SubshiftSpec SubshiftSpec::markov_dyck(BinaryMatrix a) {
  validate_markov_matrix(a);
  auto impl = std::make_shared<Impl>();
  impl->alphabet = dyck_alphabet(static_cast<int>(a.size()));
  impl->machine = std::make_unique<MarkovDyckMachine>(a);
  impl->data = spec_data::MarkovDyck{std::move(a)};
  return SubshiftSpec(std::move(impl));
}

SubshiftSpec SubshiftSpec::expanded(const SubshiftSpec& inner, const std::string& symbol, const std::string& fresh) {
  const Symbol a = inner.alphabet().index_of(symbol);
  if (inner.alphabet().contains(fresh))
    throw Error(ErrorKind::SymbolCollision, "fresh symbol '" + fresh + "' already in the alphabet");
  std::vector<std::string> names{fresh};
  for (const auto& n : inner.alphabet().names()) names.push_back(n);

  auto inner_ptr = std::make_shared<const SubshiftSpec>(inner);
  auto impl = std::make_shared<Impl>();
  impl->alphabet = Alphabet(std::move(names));
  impl->machine = std::make_unique<ExpandedMachine>(inner_ptr, a);
  if (const LabeledGraph* g = inner.presentation())
    impl->presentation = std::make_unique<LabeledGraph>(expanded_presentation(*g, impl->alphabet, a));
  impl->data = spec_data::Expanded{std::move(inner_ptr), a, fresh};
  return SubshiftSpec(std::move(impl));
}

std::string SubshiftSpec::describe() const {
  struct Visitor {
    const SubshiftSpec& self;
    std::string operator()(const spec_data::FullShift& d) const { return "full:" + std::to_string(d.n); }
    std::string operator()(const spec_data::SftForbidden& d) const {
      std::string s = "sft{";
      for (std::size_t i = 0; i < d.forbidden.size(); ++i) {
        if (i) s += ", ";
        s += self.alphabet().format(d.forbidden[i]);
      }
      return s + "}";
    }
    std::string operator()(const spec_data::SoficGraph& d) const {
      return "sofic[" + std::to_string(d.graph.state_count()) + " states]";
    }
    std::string operator()(const spec_data::Dyck& d) const { return "dyck:" + std::to_string(d.n); }
    std::string operator()(const spec_data::MarkovDyck& d) const {
      return "markov-dyck[" + std::to_string(d.matrix.size()) + "]";
    }
    std::string operator()(const spec_data::Expanded& d) const {
      const std::string& a = d.inner->alphabet().name(d.expanded_symbol);
      return "expanded(" + d.inner->describe() + "; " + a + " -> " + d.fresh_symbol + " " + a + ")";
    }
  };
  return std::visit(Visitor{*this}, impl_->data);
}

}  // namespace lsync
