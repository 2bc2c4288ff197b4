#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "../support/oracles.hpp"
#include "lsync/errors.hpp"
#include "lsync/lgs.hpp"
#include "lsync/oracle.hpp"

using namespace lsync;

namespace {

SubshiftSpec golden() {
  Alphabet ab({"a", "b"});
  return SubshiftSpec::sft(ab, {ab.parse("b b")});
}

// Left-resolving golden mean presentation: state 0 emits a, state 1 emits b.
LabeledGraph golden_graph() {
  return LabeledGraph{Alphabet({"a", "b"}), {"A", "B"}, {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}}};
}

// Vertices of level l from which w labels a path.
std::set<std::size_t> readers(const LambdaGraphSystem& g, std::size_t l, const Word& w) {
  std::set<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(l); ++v) {
    std::set<std::size_t> cur{v};
    for (std::size_t k = 0; k < w.size() && !cur.empty(); ++k) {
      std::set<std::size_t> nx;
      for (const auto& e : g.levels[l + k].edges)
        if (e.label == w[k] && cur.count(e.src)) nx.insert(e.dst);
      cur = nx;
    }
    if (!cur.empty()) out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("Dyck(2) system shape") {
  auto g = build_lambda_sync_lgs(SubshiftSpec::dyck(2), 3, 3);
  CHECK(g.vertex_counts() == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(g.levels[0].edges.size() == 6);
  CHECK(g.levels[1].edges.size() == 12);
  CHECK(g.levels[2].edges.size() == 24);
  CHECK(validate_lgs(g).all_pass());

  // Γ of each vertex against the bracket oracle
  for (std::size_t l = 0; l <= 3; ++l)
    for (const auto& v : g.levels[l].vertices) {
      REQUIRE(v.rep);
      std::vector<Word> expect;
      for (const auto& mu : testoracle::all_words(4, l)) {
        Word w = mu;
        w.insert(w.end(), v.rep->begin(), v.rep->end());
        if (testoracle::dyck_bracket_ok(w, 2)) expect.push_back(mu);
      }
      CHECK(v.gamma == expect);
    }
}

TEST_CASE("full shift and golden mean systems") {
  auto f = build_lambda_sync_lgs(SubshiftSpec::full_shift(2), 4, 4);
  for (std::size_t l = 0; l <= 4; ++l) CHECK(f.vertex_count(l) == 1);
  for (std::size_t l = 0; l < 4; ++l) CHECK(f.levels[l].edges.size() == 2);
  CHECK(validate_lgs(f).all_pass());

  auto g = build_lambda_sync_lgs(golden(), 4, 4);
  CHECK(g.vertex_count(0) == 1);
  for (std::size_t l = 1; l <= 4; ++l) CHECK(g.vertex_count(l) == 2);
  CHECK(validate_lgs(g).all_pass());
}

TEST_CASE("stationary systems") {
  auto s = stationary_lgs(golden_graph(), 3);
  auto rep = validate_lgs(s);
  CHECK_FALSE(rep.predecessor_separated.pass);
  CHECK(rep.predecessor_separated.witness.find("level 0") != std::string::npos);
  CHECK(validate_lgs(s, 1).all_pass());

  LabeledGraph bad{Alphabet({"a"}), {"p", "q"}, {{0, 1, 0}, {1, 1, 0}, {1, 0, 0}}};
  CHECK_THROWS_AS(stationary_lgs(bad, 2), Error);
}

TEST_CASE("left-resolving violation is reported") {
  LambdaGraphSystem g{Alphabet({"a", "b"}), {}};
  g.levels.resize(2);
  g.levels[0].vertices.resize(2);
  g.levels[1].vertices.resize(1);
  g.levels[0].edges = {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}};
  g.levels[0].iota = {0};
  auto r = validate_lgs(g);
  CHECK_FALSE(r.left_resolving.pass);
  CHECK(r.left_resolving.witness.find("label a") != std::string::npos);
  CHECK_FALSE(r.iota_surjective.pass);
}

TEST_CASE("local property failure is detected") {
  auto g = build_lambda_sync_lgs(SubshiftSpec::dyck(2), 3, 3);
  g.levels[1].edges.pop_back();
  CHECK_FALSE(validate_lgs(g).local_property.pass);
}

TEST_CASE("launching vertices") {
  auto g = build_lambda_sync_lgs(SubshiftSpec::dyck(2), 6, 6);
  auto launch = launching_vertices(g, 10);
  for (std::size_t l = 0; l <= 3; ++l) {
    CHECK(launch[l].status == LaunchLevel::Status::Complete);
    for (std::size_t v = 0; v < g.vertex_count(l); ++v) {
      REQUIRE(launch[l].witness[v]);
      const Word& w = *launch[l].witness[v];
      CHECK(readers(g, l, w) == std::set<std::size_t>{v});
      // no shortlex-smaller word launches v
      for (std::size_t len = 0; len <= w.size(); ++len)
        for (const auto& x : testoracle::all_words(4, len)) {
          if (!shortlex_less(x, w)) break;
          CHECK(readers(g, l, x) != std::set<std::size_t>{v});
        }
    }
  }
  CHECK(launch[6].room == 0);
  CHECK(launch[6].status == LaunchLevel::Status::Truncated);

  auto full = launching_vertices(build_lambda_sync_lgs(SubshiftSpec::full_shift(2), 3, 3), 2);
  for (const auto& ll : full) {
    CHECK(ll.status == LaunchLevel::Status::Complete);
    CHECK(ll.witness[0]->empty());
  }
}

TEST_CASE("iota irreducibility") {
  auto f = build_lambda_sync_lgs(SubshiftSpec::full_shift(2), 4, 4);
  CHECK(check_iota_irreducible(f, 2).verdict == Tri::Pass);
  auto d = build_lambda_sync_lgs(SubshiftSpec::dyck(2), 5, 5);
  auto r = check_iota_irreducible(d, 2);
  CHECK(r.verdict == Tri::Pass);
  CHECK(r.levels_checked == std::vector<std::size_t>{0, 1});
  CHECK(check_iota_irreducible(d, 3).verdict == Tri::Unknown);

  LabeledGraph two{Alphabet({"a", "b"}), {"p", "q"}, {{0, 0, 0}, {1, 1, 1}}};
  auto s = stationary_lgs(two, 3);
  auto bad = check_iota_irreducible(s, 1);
  CHECK(bad.verdict == Tri::Fail);
  CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("reduction") {
  LabeledGraph twin{Alphabet({"a"}), {"p", "q"}, {{0, 0, 0}, {1, 1, 0}}};
  auto s = stationary_lgs(twin, 3);
  auto red = reduce_lgs(s);
  CHECK(red.vertex_counts() == std::vector<std::size_t>{1, 1, 1, 1});
  for (std::size_t l = 0; l < 3; ++l) CHECK(red.levels[l].edges.size() == 1);
  CHECK(validate_lgs(red).all_pass());

  auto one = stationary_lgs(LabeledGraph{Alphabet({"a"}), {"p"}, {{0, 0, 0}}}, 3);
  CHECK(are_isomorphic(red, one, 0).isomorphic);

  for (auto g : {build_lambda_sync_lgs(SubshiftSpec::dyck(2), 3, 3), build_lambda_sync_lgs(golden(), 4, 4)}) {
    auto r1 = reduce_lgs(g);
    CHECK(r1.vertex_counts() == g.vertex_counts());
    auto r2 = reduce_lgs(r1);
    CHECK(are_isomorphic(r1, r2, 0).isomorphic);
    for (std::size_t l = 0; l < r1.levels.size(); ++l) {
      CHECK(r1.levels[l].edges == r2.levels[l].edges);
      CHECK(r1.levels[l].iota == r2.levels[l].iota);
    }
  }
}

TEST_CASE("isomorphism") {
  auto d2 = build_lambda_sync_lgs(SubshiftSpec::dyck(2), 3, 3);
  auto self = are_isomorphic(d2, d2, 0);
  CHECK(self.isomorphic);
  REQUIRE(self.bijection.size() == 4);
  for (std::size_t l = 0; l <= 3; ++l)
    for (std::size_t v = 0; v < d2.vertex_count(l); ++v) CHECK(self.bijection[l][v] == v);

  auto d3 = build_lambda_sync_lgs(SubshiftSpec::dyck(3), 3, 3);
  auto r = are_isomorphic(d2, d3, 0);
  CHECK_FALSE(r.isomorphic);
  CHECK_FALSE(r.mismatch.empty());

  auto d2b = build_lambda_sync_lgs(SubshiftSpec::dyck(2), 2, 2);
  CHECK_THROWS_AS(are_isomorphic(d2, d2b, 0), Error);

  // stationary golden vs the synchronizing system: equal from level 1
  auto st = stationary_lgs(golden_graph(), 4);
  auto sy = build_lambda_sync_lgs(golden(), 4, 4);
  CHECK_FALSE(are_isomorphic(st, sy, 0).isomorphic);
  CHECK(are_isomorphic(st, sy, 1).isomorphic);

  // a permuted copy is still isomorphic
  auto perm = d2;
  auto& lv = perm.levels[3];
  std::reverse(lv.vertices.begin(), lv.vertices.end());
  const std::size_t n = lv.vertices.size();
  for (auto& e : perm.levels[2].edges) e.dst = n - 1 - e.dst;
  std::reverse(perm.levels[2].iota.begin(), perm.levels[2].iota.end());
  auto pr = are_isomorphic(d2, perm, 0);
  CHECK(pr.isomorphic);
  CHECK(pr.bijection[3][0] == n - 1);
}

TEST_CASE("edges do not depend on the class representative") {
  SyncAnalyzer an(SubshiftSpec::dyck(2));
  auto g = build_lambda_sync_lgs(an, 3, 5);
  const std::size_t A = an.spec().alphabet().size();
  for (std::size_t l = 0; l < 3; ++l) {
    auto part = an.past_equiv_classes(l + 1, 5);
    for (std::size_t j = 0; j < part.classes.size(); ++j)
      for (const auto& nu : part.classes[j].members) {
        std::set<std::pair<Symbol, GammaId>> targets;
        for (std::size_t a = 0; a < A; ++a) {
          Word w{static_cast<Symbol>(a)};
          w.insert(w.end(), nu.begin(), nu.end());
          if (is_admissible(an.spec(), w)) targets.emplace(static_cast<Symbol>(a), an.gamma(w, l));
        }
        std::set<std::pair<Symbol, GammaId>> from_rep;
        for (const auto& e : g.levels[l].edges)
          if (e.dst == j) {
            Word rep = *g.levels[l].vertices[e.src].rep;
            from_rep.emplace(e.label, an.gamma(rep, l));
          }
        CHECK(targets == from_rep);
      }
  }
}

TEST_CASE("minimality probes") {
  auto g = build_lambda_sync_lgs(SubshiftSpec::dyck(2), 6, 6);
  auto launch = launching_vertices(g, 10);
  for (std::uint32_t seed : {1u, 7u, 42u}) {
    auto probes = minimality_probes(g, launch, seed);
    CHECK(probes.size() >= 12);
    bool saw_edge = false;
    for (const auto& p : probes) {
      CHECK(p.changed);
      saw_edge |= !p.is_vertex;
    }
    CHECK(saw_edge);
  }
}

TEST_CASE("stored and intrinsic predecessor sets agree") {
  for (auto spec : {golden(), SubshiftSpec::dyck(2), SubshiftSpec::markov_dyck({{1, 1}, {1, 0}}),
                    SubshiftSpec::expanded(golden(), "b", "z")}) {
    auto g = build_lambda_sync_lgs(spec, 3, 6);
    auto intr = intrinsic_gammas(g);
    for (std::size_t l = 0; l <= 3; ++l)
      for (std::size_t v = 0; v < g.vertex_count(l); ++v) CHECK(g.levels[l].vertices[v].gamma == intr[l][v]);
    CHECK(validate_lgs(g).all_pass());
  }
}
