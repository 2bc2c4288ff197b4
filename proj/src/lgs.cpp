#include "lsync/lgs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lsync/errors.hpp"

namespace lsync {

std::vector<std::size_t> LambdaGraphSystem::vertex_counts() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels) out.push_back(lv.vertices.size());
  return out;
}

LambdaGraphSystem build_lambda_sync_lgs(const SubshiftSpec& spec, std::size_t levels, std::size_t word_cap,
                                        const SyncOptions& options) {
  SyncAnalyzer an(spec, options);
  return build_lambda_sync_lgs(an, levels, word_cap);
}

LambdaGraphSystem build_lambda_sync_lgs(SyncAnalyzer& an, std::size_t levels, std::size_t word_cap) {
  const SubshiftSpec& spec = an.spec();
  LambdaGraphSystem lgs{spec.alphabet(), {}};
  std::vector<PastPartition> parts;
  std::vector<std::map<GammaId, std::size_t>> index(levels + 1);
  for (std::size_t l = 0; l <= levels; ++l) {
    parts.push_back(an.past_equiv_classes(l, std::max(word_cap, l)));
    const PastPartition& p = parts.back();
    if (p.classes.empty())
      throw Error(ErrorKind::ClassResolutionFailure,
                  "no synchronizing words of length <= " + std::to_string(word_cap) + " at level " +
                      std::to_string(l));
    LgsLevel lv;
    for (const auto& c : p.classes) {
      index[l].emplace(c.gamma, lv.vertices.size());
      lv.vertices.push_back(LgsVertex{an.gamma_words(c.gamma, l), c.rep});
    }
    lgs.levels.push_back(std::move(lv));
  }

  const LanguageMachine& m = spec.machine();
  auto resolve = [&](const Word& w, std::size_t l) {
    const GammaId g = an.gamma(w, l);
    auto it = index[l].find(g);
    if (it == index[l].end())
      throw Error(ErrorKind::ClassResolutionFailure,
                  "class of '" + spec.alphabet().format(w) + "' at level " + std::to_string(l) +
                      " is not among the enumerated classes (raise the word cap)");
    return it->second;
  };

  for (std::size_t l = 0; l < levels; ++l) {
    LgsLevel& lv = lgs.levels[l];
    const auto& upper = parts[l + 1].classes;
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const Word& nu = upper[j].rep;
      for (std::size_t a = 0; a < spec.alphabet().size(); ++a) {
        Word w{static_cast<Symbol>(a)};
        w.insert(w.end(), nu.begin(), nu.end());
        if (!m.run(w)) continue;
        lv.edges.push_back(LgsEdge{resolve(w, l), j, static_cast<Symbol>(a)});
      }
      lv.iota.push_back(resolve(nu, l));
    }
    std::sort(lv.edges.begin(), lv.edges.end(), [](const LgsEdge& x, const LgsEdge& y) {
      return std::tie(x.src, x.label, x.dst) < std::tie(y.src, y.label, y.dst);
    });
  }
  return lgs;
}

LambdaGraphSystem stationary_lgs(const LabeledGraph& graph, std::size_t levels) {
  if (!graph.is_left_resolving())
    throw Error(ErrorKind::GraphNotLeftResolving, "two edges with the same label enter one state");
  LambdaGraphSystem lgs{graph.alphabet, {}};
  std::vector<LgsEdge> edges;
  for (const auto& e : graph.edges) edges.push_back({e.from, e.to, e.label});
  std::sort(edges.begin(), edges.end(), [](const LgsEdge& x, const LgsEdge& y) {
    return std::tie(x.src, x.label, x.dst) < std::tie(y.src, y.label, y.dst);
  });
  for (std::size_t l = 0; l <= levels; ++l) {
    LgsLevel lv;
    lv.vertices.resize(graph.state_count());
    if (l < levels) {
      lv.edges = edges;
      for (std::size_t i = 0; i < graph.state_count(); ++i) lv.iota.push_back(i);
    }
    lgs.levels.push_back(std::move(lv));
  }
  auto gammas = intrinsic_gammas(lgs);
  for (std::size_t l = 0; l <= levels; ++l)
    for (std::size_t v = 0; v < graph.state_count(); ++v) lgs.levels[l].vertices[v].gamma = std::move(gammas[l][v]);
  return lgs;
}

std::vector<std::vector<std::vector<Word>>> intrinsic_gammas(const LambdaGraphSystem& lgs) {
  std::vector<std::vector<std::vector<Word>>> out;
  if (lgs.levels.empty()) return out;
  out.emplace_back(lgs.levels[0].vertices.size(), std::vector<Word>{Word{}});
  for (std::size_t l = 0; l < lgs.top(); ++l) {
    std::vector<std::set<Word>> next(lgs.levels[l + 1].vertices.size());
    for (const auto& e : lgs.levels[l].edges)
      for (const auto& w : out[l][e.src]) {
        Word x = w;
        x.push_back(e.label);
        next[e.dst].insert(std::move(x));
      }
    std::vector<std::vector<Word>> lv;
    for (auto& s : next) lv.emplace_back(s.begin(), s.end());
    out.push_back(std::move(lv));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::string at(std::size_t l) { return "level " + std::to_string(l) + ": "; }

}  // namespace

LgsReport validate_lgs(const LambdaGraphSystem& lgs, std::size_t separated_from) {
  LgsReport r;
  const std::size_t top = lgs.top();
  const auto& alpha = lgs.alphabet;
  auto fail = [](CheckResult& c, std::string w) {
    if (c.pass) {
      c.pass = false;
      c.witness = std::move(w);
    }
  };

  for (std::size_t l = 0; l <= top; ++l) {
    const LgsLevel& lv = lgs.levels[l];
    if (l < top) {
      const std::size_t n_up = lgs.levels[l + 1].vertices.size();
      for (const auto& e : lv.edges)
        if (e.src >= lv.vertices.size() || e.dst >= n_up || e.label >= alpha.size())
          throw Error(ErrorKind::Validation, at(l) + "edge index out of range");
      if (lv.iota.size() != n_up) throw Error(ErrorKind::Validation, at(l) + "iota is not defined on every vertex");
      for (auto p : lv.iota)
        if (p >= lv.vertices.size()) throw Error(ErrorKind::Validation, at(l) + "iota index out of range");
    } else if (!lv.edges.empty() || !lv.iota.empty()) {
      throw Error(ErrorKind::Validation, "top level must not carry edges or iota");
    }
  }

  for (std::size_t l = 0; l < top; ++l) {
    const LgsLevel& lv = lgs.levels[l];
    // left-resolving
    std::map<std::pair<std::size_t, Symbol>, std::size_t> into;
    for (std::size_t k = 0; k < lv.edges.size(); ++k) {
      const auto& e = lv.edges[k];
      auto [it, inserted] = into.emplace(std::make_pair(e.dst, e.label), k);
      if (!inserted)
        fail(r.left_resolving, at(l) + "edges " + std::to_string(it->second) + " and " + std::to_string(k) +
                                   " both enter vertex " + std::to_string(e.dst) + " with label " +
                                   alpha.name(e.label));
    }
    // essential
    std::vector<int> out(lv.vertices.size(), 0), in(lgs.levels[l + 1].vertices.size(), 0);
    for (const auto& e : lv.edges) {
      ++out[e.src];
      ++in[e.dst];
    }
    for (std::size_t v = 0; v < out.size(); ++v)
      if (!out[v]) fail(r.essential, at(l) + "vertex " + std::to_string(v) + " has no outgoing edge");
    for (std::size_t v = 0; v < in.size(); ++v)
      if (!in[v]) fail(r.essential, at(l + 1) + "vertex " + std::to_string(v) + " has no incoming edge");
    // iota surjective
    std::vector<char> hit(lv.vertices.size(), 0);
    for (auto p : lv.iota) hit[p] = 1;
    for (std::size_t v = 0; v < hit.size(); ++v)
      if (!hit[v]) fail(r.iota_surjective, at(l) + "vertex " + std::to_string(v) + " is not an iota image");
  }

  // local property and iota-compatibility
  for (std::size_t l = 1; l < top; ++l) {
    const LgsLevel& lower = lgs.levels[l - 1];
    const LgsLevel& mid = lgs.levels[l];
    for (std::size_t v = 0; v < lgs.levels[l + 1].vertices.size(); ++v) {
      const std::size_t w = mid.iota[v];
      std::map<std::size_t, std::multiset<Symbol>> upper_side, lower_side;
      for (const auto& e : mid.edges)
        if (e.dst == v) upper_side[lower.iota[e.src]].insert(e.label);
      for (const auto& e : lower.edges)
        if (e.dst == w) lower_side[e.src].insert(e.label);
      if (upper_side != lower_side) {
        std::set<std::size_t> keys;
        for (auto& [u, _] : upper_side) keys.insert(u);
        for (auto& [u, _] : lower_side) keys.insert(u);
        for (auto u : keys)
          if (upper_side[u] != lower_side[u]) {
            fail(r.local_property, at(l) + "pair (u=" + std::to_string(u) + " in V_" + std::to_string(l - 1) +
                                       ", v=" + std::to_string(v) + " in V_" + std::to_string(l + 1) +
                                       ") has different label multisets");
            break;
          }
      }
      std::set<Symbol> into_parent;
      for (const auto& e : lower.edges)
        if (e.dst == w) into_parent.insert(e.label);
      for (const auto& e : mid.edges)
        if (e.dst == v && !into_parent.count(e.label))
          fail(r.iota_compatible, at(l) + "label " + alpha.name(e.label) + " enters vertex " + std::to_string(v) +
                                      " but not its iota image " + std::to_string(w));
    }
  }

  const auto gammas = intrinsic_gammas(lgs);
  for (std::size_t l = 0; l <= top; ++l) {
    const auto& lv = lgs.levels[l];
    for (std::size_t v = 0; v < lv.vertices.size(); ++v)
      if (!lv.vertices[v].gamma.empty() && lv.vertices[v].gamma != gammas[l][v])
        fail(r.gamma_consistent, at(l) + "stored predecessor set of vertex " + std::to_string(v) +
                                     " differs from the one read off the edges");
    if (l < separated_from) continue;
    std::map<std::vector<Word>, std::size_t> seen;
    for (std::size_t v = 0; v < lv.vertices.size(); ++v) {
      auto [it, inserted] = seen.emplace(gammas[l][v], v);
      if (!inserted)
        fail(r.predecessor_separated, at(l) + "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                                          " have the same predecessor set");
    }
  }
  return r;
}

}  // namespace lsync
