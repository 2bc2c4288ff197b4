#include "lsync/catalog.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "lsync/errors.hpp"
#include "lsync/oracle.hpp"

namespace lsync::catalog {

SubshiftSpec golden_mean() {
  Alphabet ab({"a", "b"});
  return SubshiftSpec::sft(ab, {ab.parse("b b")});
}

SubshiftSpec full_shift(int n) { return SubshiftSpec::full_shift(n); }
SubshiftSpec dyck(int n) { return SubshiftSpec::dyck(n); }
SubshiftSpec markov_dyck(const BinaryMatrix& a) { return SubshiftSpec::markov_dyck(a); }
SubshiftSpec sofic_from_graph(const LabeledGraph& g) { return SubshiftSpec::sofic(g); }

// ---------------------------------------------------------------------------
// Fischer cover

namespace {

using Subset = std::vector<std::size_t>;

struct Dfa {
  std::vector<Subset> states;
  std::vector<std::vector<int>> delta;  // -1: no transition
};

// Subset construction on the reversed graph, starting from all states.
Dfa predecessor_automaton(const LabeledGraph& g) {
  const std::size_t A = g.alphabet.size();
  Dfa d;
  std::map<Subset, int> index;
  Subset all(g.state_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  index[all] = 0;
  d.states.push_back(all);
  for (std::size_t k = 0; k < d.states.size(); ++k) {
    d.delta.emplace_back(A, -1);
    const Subset cur = d.states[k];
    for (std::size_t a = 0; a < A; ++a) {
      std::set<std::size_t> pre;
      for (const auto& e : g.edges)
        if (e.label == a && std::binary_search(cur.begin(), cur.end(), e.to)) pre.insert(e.from);
      if (pre.empty()) continue;
      Subset s(pre.begin(), pre.end());
      auto [it, inserted] = index.emplace(s, static_cast<int>(d.states.size()));
      if (inserted) d.states.push_back(s);
      d.delta[k][a] = it->second;
    }
  }
  return d;
}

// Moore refinement; every state accepts.
std::vector<int> minimize(const Dfa& d) {
  const std::size_t n = d.states.size();
  std::vector<int> block(n, 0);
  std::size_t count = 1;
  for (;;) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<int> key{block[s]};
      for (int t : d.delta[s]) key.push_back(t < 0 ? -1 : block[t]);
      next[s] = sig.emplace(key, static_cast<int>(sig.size())).first->second;
    }
    if (sig.size() == count) return block;
    count = sig.size();
    block = std::move(next);
  }
}

// Tarjan-free SCCs by mutual reachability; the automata here are small.
std::vector<std::vector<char>> reachability(const std::vector<std::vector<int>>& delta) {
  const std::size_t n = delta.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    r[s][s] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (int t : delta[u])
        if (t >= 0 && !r[s][t]) {
          r[s][t] = 1;
          stack.push_back(static_cast<std::size_t>(t));
        }
    }
  }
  return r;
}

}  // namespace

LabeledGraph fischer_cover(const SubshiftSpec& spec) {
  const LabeledGraph* g = spec.presentation();
  if (!g) throw Error(ErrorKind::Validation, spec.describe() + " has no finite presentation");
  const std::size_t A = spec.alphabet().size();

  const Dfa d = predecessor_automaton(*g);
  const std::vector<int> block = minimize(d);
  const std::size_t nb = *std::max_element(block.begin(), block.end()) + 1;
  std::vector<std::vector<int>> q(nb, std::vector<int>(A, -1));
  for (std::size_t s = 0; s < d.states.size(); ++s)
    for (std::size_t a = 0; a < A; ++a)
      if (d.delta[s][a] >= 0) q[block[s]][a] = block[d.delta[s][a]];

  const auto reach = reachability(q);
  std::vector<std::size_t> terminal;  // representatives of terminal components
  std::vector<char> in_terminal(nb, 0);
  for (std::size_t s = 0; s < nb; ++s) {
    bool term = true;
    for (std::size_t t = 0; t < nb && term; ++t)
      if (reach[s][t] && !reach[t][s]) term = false;
    if (!term) continue;
    in_terminal[s] = 1;
    bool fresh = true;
    for (auto r : terminal)
      if (reach[s][r]) fresh = false;
    if (fresh) terminal.push_back(s);
  }
  if (terminal.size() != 1)
    throw Error(ErrorKind::NotIrreducible,
                spec.describe() + ": predecessor automaton has " + std::to_string(terminal.size()) +
                    " terminal components");

  // BFS order from the start block (0 is the block of the full state set)
  std::size_t start = static_cast<std::size_t>(block[0]);
  {
    std::vector<char> seen(nb, 0);
    std::queue<std::size_t> bfs;
    bfs.push(start);
    seen[start] = 1;
    while (!in_terminal[bfs.front()]) {
      auto u = bfs.front();
      bfs.pop();
      for (int t : q[u])
        if (t >= 0 && !seen[t]) {
          seen[t] = 1;
          bfs.push(static_cast<std::size_t>(t));
        }
    }
    start = bfs.front();
  }
  std::vector<int> order(nb, -1);
  std::vector<std::size_t> states{start};
  order[start] = 0;
  for (std::size_t k = 0; k < states.size(); ++k)
    for (int t : q[states[k]])
      if (t >= 0 && order[t] < 0) {
        order[t] = static_cast<int>(states.size());
        states.push_back(static_cast<std::size_t>(t));
      }

  LabeledGraph cover;
  cover.alphabet = spec.alphabet();
  for (std::size_t i = 0; i < states.size(); ++i) cover.states.push_back("F" + std::to_string(i));
  // reversed transition S -a-> S' (S' = a-predecessors of S) is the edge S' -a-> S
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t a = 0; a < A; ++a) {
      const int t = q[states[i]][a];
      if (t >= 0) cover.edges.push_back({static_cast<std::size_t>(order[t]), i, static_cast<Symbol>(a)});
    }
  std::sort(cover.edges.begin(), cover.edges.end(), [](const LabeledEdge& x, const LabeledEdge& y) {
    return std::tie(x.from, x.to, x.label) < std::tie(y.from, y.to, y.label);
  });

  const SubshiftSpec check = SubshiftSpec::sofic(cover);
  for (std::size_t n = 1; n <= 8; ++n)
    if (enumerate_words(check, n) != enumerate_words(spec, n))
      throw Error(ErrorKind::NotIrreducible,
                  spec.describe() + ": cover language differs at length " + std::to_string(n));
  return cover;
}

// ---------------------------------------------------------------------------
// Cantor horizon systems

LambdaGraphSystem cantor_horizon_markov_dyck(const BinaryMatrix& a, std::size_t levels) {
  validate_markov_matrix(a);
  const int n = static_cast<int>(a.size());
  const Alphabet ab = dyck_alphabet(n);
  LambdaGraphSystem lgs{ab, {}};

  // V_l: admissible index words, lexicographic
  std::vector<std::vector<std::vector<int>>> words{{{}}};
  std::vector<std::map<std::vector<int>, std::size_t>> index(levels + 1);
  index[0][{}] = 0;
  for (std::size_t l = 1; l <= levels; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words.back())
      for (int j = 0; j < n; ++j)
        if (w.empty() || a[w.back()][j]) {
          auto x = w;
          x.push_back(j);
          next.push_back(std::move(x));
        }
    std::sort(next.begin(), next.end());
    for (std::size_t k = 0; k < next.size(); ++k) index[l][next[k]] = k;
    words.push_back(std::move(next));
  }

  auto closing = [&](int j) { return static_cast<Symbol>(n + j); };
  for (std::size_t l = 0; l <= levels; ++l) {
    LgsLevel lv;
    for (const auto& w : words[l]) {
      Word rep;
      for (int j : w) rep.push_back(closing(j));
      lv.vertices.push_back(LgsVertex{{}, rep});
    }
    lgs.levels.push_back(std::move(lv));
  }
  for (std::size_t l = 0; l < levels; ++l) {
    LgsLevel& lv = lgs.levels[l];
    for (std::size_t v = 0; v < words[l + 1].size(); ++v) {
      const auto& mu = words[l + 1][v];  // μ_0 μ_1 … μ_l for α-edges, μ_1 … μ_{l+1} for β-edges
      // α_{μ_0}: from μ_1 … μ_l
      lv.edges.push_back({index[l].at(std::vector<int>(mu.begin() + 1, mu.end())), v, static_cast<Symbol>(mu[0])});
      // β_j: from j μ_1 … μ_{l-1}
      for (int j = 0; j < n; ++j) {
        if (!a[j][mu[0]]) continue;
        std::vector<int> src{j};
        src.insert(src.end(), mu.begin(), mu.end());
        src.resize(l);
        auto it = index[l].find(src);
        if (it != index[l].end()) lv.edges.push_back({it->second, v, closing(j)});
      }
      lv.iota.push_back(index[l].at(std::vector<int>(mu.begin(), mu.end() - 1)));
    }
    std::sort(lv.edges.begin(), lv.edges.end(), [](const LgsEdge& x, const LgsEdge& y) {
      return std::tie(x.src, x.label, x.dst) < std::tie(y.src, y.label, y.dst);
    });
  }
  auto gammas = intrinsic_gammas(lgs);
  for (std::size_t l = 0; l <= levels; ++l)
    for (std::size_t v = 0; v < gammas[l].size(); ++v) lgs.levels[l].vertices[v].gamma = std::move(gammas[l][v]);
  return lgs;
}

LambdaGraphSystem cantor_horizon_dyck(int n, std::size_t levels) {
  if (n < 2) throw Error(ErrorKind::Validation, "Dyck shift needs n >= 2");
  return cantor_horizon_markov_dyck(all_ones(static_cast<std::size_t>(n)), levels);
}

std::vector<Entry> entries() {
  return {
      {"golden-mean", "shift of finite type over {a, b} forbidding b b"},
      {"full:N", "full shift on the symbols 1..N (N >= 2)"},
      {"dyck:N", "Dyck shift with brackets a1..aN and b1..bN (N >= 2)"},
      {"markov-dyck:<file>", "Markov-Dyck shift of a 0/1 matrix given as a spec file"},
      {"sofic:<file>", "sofic shift presented by a labeled graph given as a spec file"},
  };
}

}  // namespace lsync::catalog
