#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "lsync/errors.hpp"
#include "lsync/lgs.hpp"

namespace lsync {

namespace {

using VertexSet = std::vector<std::size_t>;  // sorted

// Vertices of level l + 1 reached from `from` (level l) along edges labeled a.
VertexSet step(const LgsLevel& lv, const VertexSet& from, Symbol a, std::optional<std::size_t> skip_edge = {}) {
  VertexSet out;
  for (std::size_t k = 0; k < lv.edges.size(); ++k) {
    const auto& e = lv.edges[k];
    if (e.label != a || (skip_edge && *skip_edge == k)) continue;
    if (std::binary_search(from.begin(), from.end(), e.src)) out.push_back(e.dst);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet iota_pow(const LambdaGraphSystem& lgs, std::size_t level, std::size_t n, VertexSet vs) {
  for (std::size_t k = 0; k < n; ++k) {
    const auto& io = lgs.levels[level + n - k - 1].iota;
    for (auto& v : vs) v = io[v];
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
  return vs;
}

std::size_t iota_pow(const LambdaGraphSystem& lgs, std::size_t level, std::size_t n, std::size_t v) {
  for (std::size_t k = 0; k < n; ++k) v = lgs.levels[level + n - k - 1].iota[v];
  return v;
}

}  // namespace

const char* to_string(LaunchLevel::Status s) noexcept {
  switch (s) {
    case LaunchLevel::Status::Complete: return "complete";
    case LaunchLevel::Status::Missing: return "missing";
    case LaunchLevel::Status::Truncated: return "truncated";
  }
  return "?";
}

const char* to_string(Tri t) noexcept {
  switch (t) {
    case Tri::Pass: return "pass";
    case Tri::Fail: return "fail";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

bool readable_from_level(const LambdaGraphSystem& lgs, std::size_t level, const Word& w,
                         std::optional<std::size_t> skip_vertex, std::optional<std::size_t> skip_edge) {
  if (level > lgs.top() || level + w.size() > lgs.top()) return false;
  VertexSet cur;
  for (std::size_t v = 0; v < lgs.levels[level].vertices.size(); ++v)
    if (!skip_vertex || *skip_vertex != v) cur.push_back(v);
  for (std::size_t k = 0; k < w.size() && !cur.empty(); ++k)
    cur = step(lgs.levels[level + k], cur, w[k], k == 0 ? skip_edge : std::nullopt);
  return !cur.empty();
}

std::vector<LaunchLevel> launching_vertices(const LambdaGraphSystem& lgs, std::size_t horizon) {
  std::vector<LaunchLevel> out;
  const std::size_t A = lgs.alphabet.size();
  for (std::size_t l = 0; l <= lgs.top(); ++l) {
    LaunchLevel ll;
    ll.level = l;
    ll.room = std::min(horizon, lgs.top() - l);
    const std::size_t n = lgs.levels[l].vertices.size();
    ll.witness.assign(n, std::nullopt);
    std::size_t found = 0;

    // frontier[start] = vertices reached from `start` by the current word
    struct Node {
      Word word;
      std::vector<VertexSet> reach;
    };
    std::vector<Node> layer(1);
    layer[0].reach.resize(n);
    for (std::size_t v = 0; v < n; ++v) layer[0].reach[v] = {v};

    for (std::size_t len = 0; found < n; ++len) {
      std::vector<Node> next;
      for (auto& node : layer) {
        std::size_t alive = 0, last = 0;
        for (std::size_t v = 0; v < n; ++v)
          if (!node.reach[v].empty()) {
            ++alive;
            last = v;
          }
        if (alive == 1) {
          if (!ll.witness[last]) {
            ll.witness[last] = node.word;
            ++found;
          }
          continue;
        }
        if (len == ll.room) continue;
        for (std::size_t a = 0; a < A; ++a) {
          Node child{node.word, std::vector<VertexSet>(n)};
          child.word.push_back(static_cast<Symbol>(a));
          bool any = false;
          for (std::size_t v = 0; v < n; ++v) {
            if (node.reach[v].empty()) continue;
            child.reach[v] = step(lgs.levels[l + len], node.reach[v], static_cast<Symbol>(a));
            any |= !child.reach[v].empty();
          }
          if (any) next.push_back(std::move(child));
        }
      }
      if (next.empty()) break;
      layer = std::move(next);
    }
    if (found < n) ll.status = ll.room == horizon ? LaunchLevel::Status::Missing : LaunchLevel::Status::Truncated;
    out.push_back(std::move(ll));
  }
  return out;
}

IotaIrreducibility check_iota_irreducible(const LambdaGraphSystem& lgs, std::size_t depth) {
  IotaIrreducibility r;
  const std::size_t L = lgs.top();
  for (std::size_t l = 0; l + 2 * depth <= L; ++l) {
    r.levels_checked.push_back(l);
    const std::size_t nv = lgs.levels[l].vertices.size();

    // reach[v][n]: vertices of level l + n reachable from v by a path of length n
    std::vector<std::vector<VertexSet>> reach(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      reach[v].push_back({v});
      for (std::size_t n = 1; n <= depth; ++n) {
        VertexSet nx;
        for (const auto& e : lgs.levels[l + n - 1].edges)
          if (std::binary_search(reach[v][n - 1].begin(), reach[v][n - 1].end(), e.src)) nx.push_back(e.dst);
        std::sort(nx.begin(), nx.end());
        nx.erase(std::unique(nx.begin(), nx.end()), nx.end());
        reach[v].push_back(std::move(nx));
      }
    }

    for (std::size_t u = 0; u < nv; ++u) {
      // paths γ from u: (label, end)
      std::vector<std::pair<Word, std::size_t>> paths{{Word{}, u}};
      for (std::size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].first.size() == depth) continue;
        const std::size_t lev = l + paths[i].first.size();
        for (const auto& e : lgs.levels[lev].edges)
          if (e.src == paths[i].second) {
            Word w = paths[i].first;
            w.push_back(e.label);
            paths.emplace_back(std::move(w), e.dst);
          }
      }
      for (std::size_t v = 0; v < nv; ++v)
        for (const auto& [label, end] : paths) {
          bool ok = false;
          for (std::size_t n = 0; n <= depth && !ok; ++n)
            for (auto up : reach[v][n]) {
              if (iota_pow(lgs, l, n, up) != u) continue;
              VertexSet cur{up};
              for (std::size_t k = 0; k < label.size() && !cur.empty(); ++k)
                cur = step(lgs.levels[l + n + k], cur, label[k]);
              for (auto t : iota_pow(lgs, l + label.size(), n, cur))
                if (t == end) ok = true;
              if (ok) break;
            }
          if (!ok) {
            r.verdict = Tri::Fail;
            r.witness = "level " + std::to_string(l) + ": u=" + std::to_string(u) + " v=" + std::to_string(v) +
                        " path '" + lgs.alphabet.format(label) + "' ending at " + std::to_string(end) +
                        " has no lift within depth " + std::to_string(depth);
            return r;
          }
        }
    }
  }
  r.verdict = r.levels_checked.empty() ? Tri::Unknown : Tri::Pass;
  return r;
}

LambdaGraphSystem reduce_lgs(const LambdaGraphSystem& lgs) {
  const auto gammas = intrinsic_gammas(lgs);
  LambdaGraphSystem out{lgs.alphabet, {}};
  std::vector<std::vector<std::size_t>> cls(lgs.levels.size());
  for (std::size_t l = 0; l <= lgs.top(); ++l) {
    std::map<std::vector<Word>, std::size_t> index;
    LgsLevel lv;
    for (std::size_t v = 0; v < lgs.levels[l].vertices.size(); ++v) {
      auto [it, inserted] = index.emplace(gammas[l][v], lv.vertices.size());
      if (inserted) lv.vertices.push_back(LgsVertex{gammas[l][v], lgs.levels[l].vertices[v].rep});
      cls[l].push_back(it->second);
    }
    out.levels.push_back(std::move(lv));
  }
  for (std::size_t l = 0; l < lgs.top(); ++l) {
    const LgsLevel& src = lgs.levels[l];
    LgsLevel& dst = out.levels[l];
    std::set<std::tuple<std::size_t, Symbol, std::size_t>> edges;
    std::map<std::pair<std::size_t, Symbol>, std::size_t> into;
    for (const auto& e : src.edges) {
      const std::size_t s = cls[l][e.src], t = cls[l + 1][e.dst];
      auto [it, inserted] = into.emplace(std::make_pair(t, e.label), s);
      if (!inserted && it->second != s)
        throw Error(ErrorKind::QuotientBreaksLeftResolving,
                    "level " + std::to_string(l) + ": label " + lgs.alphabet.name(e.label) + " enters class " +
                        std::to_string(t) + " from two classes");
      edges.emplace(s, e.label, t);
    }
    for (const auto& [s, a, t] : edges) dst.edges.push_back(LgsEdge{s, t, a});
    dst.iota.assign(out.levels[l + 1].vertices.size(), SIZE_MAX);
    for (std::size_t v = 0; v < src.iota.size(); ++v) {
      auto& slot = dst.iota[cls[l + 1][v]];
      const std::size_t img = cls[l][src.iota[v]];
      if (slot != SIZE_MAX && slot != img)
        throw Error(ErrorKind::NotWellDefined,
                    "level " + std::to_string(l + 1) + ": iota is not constant on class " +
                        std::to_string(cls[l + 1][v]));
      slot = img;
    }
  }
  return out;
}

IsoResult are_isomorphic(const LambdaGraphSystem& lhs, const LambdaGraphSystem& rhs, std::size_t from_level) {
  if (lhs.levels.size() != rhs.levels.size())
    throw Error(ErrorKind::LevelRangeMismatch, "systems are truncated at levels " + std::to_string(lhs.top()) +
                                                   " and " + std::to_string(rhs.top()));
  if (from_level > lhs.top())
    throw Error(ErrorKind::LevelRangeMismatch, "start level " + std::to_string(from_level) + " exceeds truncation");
  IsoResult r;
  r.from_level = from_level;
  if (lhs.alphabet != rhs.alphabet) {
    r.mismatch = "alphabets differ";
    return r;
  }
  const auto gl = intrinsic_gammas(lhs);
  const auto gr = intrinsic_gammas(rhs);
  const std::size_t L = lhs.top();
  for (std::size_t l = from_level; l <= L; ++l) {
    const std::string where = "level " + std::to_string(l) + ": ";
    std::map<std::vector<Word>, std::size_t> right;
    for (std::size_t v = 0; v < gr[l].size(); ++v)
      if (!right.emplace(gr[l][v], v).second) {
        r.mismatch = where + "right system has two vertices with equal predecessor sets";
        return r;
      }
    if (gl[l].size() != gr[l].size()) {
      r.mismatch = where + std::to_string(gl[l].size()) + " vs " + std::to_string(gr[l].size()) + " vertices";
      return r;
    }
    std::vector<std::size_t> f(gl[l].size());
    std::set<std::size_t> used;
    for (std::size_t v = 0; v < gl[l].size(); ++v) {
      auto it = right.find(gl[l][v]);
      if (it == right.end() || !used.insert(it->second).second) {
        r.mismatch = where + "left vertex " + std::to_string(v) + " has no counterpart";
        return r;
      }
      f[v] = it->second;
    }
    r.bijection.push_back(std::move(f));
  }
  for (std::size_t l = from_level; l < L; ++l) {
    const auto& f = r.bijection[l - from_level];
    const auto& g = r.bijection[l + 1 - from_level];
    std::multiset<std::tuple<std::size_t, std::size_t, Symbol>> a, b;
    for (const auto& e : lhs.levels[l].edges) a.emplace(f[e.src], g[e.dst], e.label);
    for (const auto& e : rhs.levels[l].edges) b.emplace(e.src, e.dst, e.label);
    if (a != b) {
      r.mismatch = "level " + std::to_string(l) + ": edge multisets differ";
      r.bijection.clear();
      return r;
    }
    for (std::size_t v = 0; v < lhs.levels[l].iota.size(); ++v)
      if (f[lhs.levels[l].iota[v]] != rhs.levels[l].iota[g[v]]) {
        r.mismatch = "level " + std::to_string(l + 1) + ": iota differs at vertex " + std::to_string(v);
        r.bijection.clear();
        return r;
      }
  }
  r.isomorphic = true;
  return r;
}

std::vector<DeletionProbe> minimality_probes(const LambdaGraphSystem& lgs, const std::vector<LaunchLevel>& launch,
                                             std::uint32_t seed, std::size_t per_level) {
  std::mt19937 rng(seed);
  std::vector<DeletionProbe> out;
  auto complete = [&](std::size_t l) {
    return l < launch.size() && launch[l].status == LaunchLevel::Status::Complete &&
           std::all_of(launch[l].witness.begin(), launch[l].witness.end(), [](const auto& w) { return w.has_value(); });
  };
  for (std::size_t l = 0; l < lgs.levels.size(); ++l) {
    if (!complete(l)) continue;
    const bool edges_ok = l < lgs.top() && complete(l + 1) && !lgs.levels[l].edges.empty();
    const std::size_t nv = lgs.levels[l].vertices.size();
    for (std::size_t k = 0; k < per_level; ++k) {
      DeletionProbe p;
      p.level = l;
      p.is_vertex = !edges_ok || (rng() & 1u);
      if (p.is_vertex) {
        p.index = std::uniform_int_distribution<std::size_t>(0, nv - 1)(rng);
        p.witness = *launch[l].witness[p.index];
        p.changed = readable_from_level(lgs, l, p.witness) &&
                    !readable_from_level(lgs, l, p.witness, p.index, std::nullopt);
      } else {
        const auto& edges = lgs.levels[l].edges;
        p.index = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
        const auto& e = edges[p.index];
        p.witness = Word{e.label};
        const Word& tail = *launch[l + 1].witness[e.dst];
        p.witness.insert(p.witness.end(), tail.begin(), tail.end());
        p.changed = readable_from_level(lgs, l, p.witness) &&
                    !readable_from_level(lgs, l, p.witness, std::nullopt, p.index);
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace lsync
