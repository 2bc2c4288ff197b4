#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <regex>

#include "lsync/catalog.hpp"
#include "lsync/errors.hpp"
#include "lsync/io.hpp"
#include "lsync/oracle.hpp"

using namespace lsync;

namespace {

std::vector<SubshiftSpec> all_kinds() {
  Alphabet ab({"a", "b", "c"});
  LabeledGraph even{Alphabet({"a", "b"}), {"p", "q"}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}};
  return {SubshiftSpec::full_shift(3),
          SubshiftSpec::sft(ab, {ab.parse("a c"), ab.parse("b b b")}),
          SubshiftSpec::sofic(even),
          SubshiftSpec::dyck(2),
          SubshiftSpec::markov_dyck({{1, 1}, {1, 0}}),
          SubshiftSpec::expanded(SubshiftSpec::expanded(catalog::golden_mean(), "b", "z"), "a", "y")};
}

std::size_t count(const std::string& s, const std::string& pattern) {
  std::regex re(pattern);
  return std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator());
}

}  // namespace

TEST_CASE("spec round trip") {
  for (const auto& spec : all_kinds()) {
    CAPTURE(spec.describe());
    const auto j = io::spec_to_json(spec);
    const auto back = io::spec_from_json(io::Json::parse(j.dump()));
    CHECK(back.kind() == spec.kind());
    CHECK(back.alphabet() == spec.alphabet());
    CHECK(io::spec_to_json(back) == j);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(enumerate_words(back, n) == enumerate_words(spec, n));
  }
  auto j = io::Json::parse(R"({"kind":"sft","alphabet":["a","b"],"forbidden":[["b","b"]]})");
  CHECK(enumerate_words(io::spec_from_json(j), 3) == enumerate_words(catalog::golden_mean(), 3));
  auto g = io::Json::parse(
      R"({"kind":"sofic","alphabet":["a","b"],"graph":{"states":["p","q"],"edges":[{"from":0,"to":0,"label":"a"},{"from":"p","to":"q","label":"b"},{"from":"q","to":"p","label":"b"}]}})");
  CHECK(io::spec_from_json(g).presentation()->edges.size() == 3);
}

TEST_CASE("malformed specs") {
  for (const char* text : {R"({"n":2})", R"({"kind":"nope"})", R"({"kind":"full","n":"x"})",
                           R"({"kind":"sft","alphabet":["a"],"forbidden":[["q"]]})",
                           R"({"kind":"sofic","alphabet":["a"],"graph":{"states":["p"],"edges":[{"from":"r","to":"p","label":"a"}]}})",
                           R"({"kind":"expanded","inner":{"kind":"full","n":2},"symbol":"1","fresh":"2"})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(io::spec_from_json(io::Json::parse(text)), Error);
  }
}

TEST_CASE("lgs round trip") {
  for (const auto& lgs : {build_lambda_sync_lgs(catalog::dyck(2), 3, 3), build_lambda_sync_lgs(catalog::golden_mean(), 4, 4),
                          stationary_lgs(catalog::fischer_cover(catalog::golden_mean()), 2)}) {
    const std::string text = io::dump(io::lgs_to_json(lgs));
    const auto back = io::lgs_from_json(io::Json::parse(text));
    CHECK(back.alphabet == lgs.alphabet);
    REQUIRE(back.levels.size() == lgs.levels.size());
    for (std::size_t l = 0; l < lgs.levels.size(); ++l) {
      CHECK(back.levels[l].edges == lgs.levels[l].edges);
      CHECK(back.levels[l].iota == lgs.levels[l].iota);
      for (std::size_t v = 0; v < lgs.vertex_count(l); ++v) {
        CHECK(back.levels[l].vertices[v].gamma == lgs.levels[l].vertices[v].gamma);
        CHECK(back.levels[l].vertices[v].rep == lgs.levels[l].vertices[v].rep);
      }
    }
    CHECK(io::dump(io::lgs_to_json(back)) == text);
    CHECK(validate_lgs(back, 1).all_pass());
  }
  CHECK_THROWS_AS(io::lgs_from_json(io::Json::parse(R"({"alphabet":["a"],"levels":[]})")), Error);
}

TEST_CASE("dot export") {
  auto g = build_lambda_sync_lgs(catalog::dyck(2), 3, 3);
  const std::string dot = io::lgs_to_dot(g, 1);
  CHECK(count(dot, R"(\n    v1_\d+ \[label)") == 2);
  CHECK(count(dot, R"(v0_\d+ -> v1_\d+ \[label=)") == 6);
  CHECK(count(dot, R"(style=dashed)") == 2);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK_THROWS_AS(io::lgs_to_dot(g, 0), Error);
  CHECK_THROWS_AS(io::lgs_to_dot(g, 4), Error);
  CHECK(count(io::lgs_to_dot(g), "digraph") == 3);
}

TEST_CASE("catalog names") {
  CHECK(io::resolve_spec("golden-mean").describe() == catalog::golden_mean().describe());
  CHECK(io::resolve_spec("full:4").alphabet().size() == 4);
  CHECK(io::resolve_spec("dyck:3").alphabet().size() == 6);
  CHECK_THROWS_AS(io::resolve_spec("dyck:x"), Error);
  CHECK_THROWS_AS(io::resolve_spec("no/such/file.json"), Error);

  const auto dir = std::filesystem::temp_directory_path() / "lsync_io_test";
  std::filesystem::create_directories(dir);
  io::write_text(dir / "m.json", "[[1,1],[1,0]]");
  CHECK(io::resolve_spec("markov-dyck:" + (dir / "m.json").string()).kind() == SpecKind::MarkovDyck);
  io::write_text(dir / "g.json",
                 R"({"alphabet":["a","b"],"states":["p"],"edges":[{"from":"p","to":"p","label":"a"},{"from":"p","to":"p","label":"b"}]})");
  CHECK(io::resolve_spec("sofic:" + (dir / "g.json").string()).kind() == SpecKind::SoficGraph);
  io::write_text(dir / "s.json", io::dump(io::spec_to_json(catalog::dyck(2))));
  CHECK(io::resolve_spec((dir / "s.json").string()).describe() == "dyck:2");
  std::filesystem::remove_all(dir);
}

TEST_CASE("report serialization") {
  auto t = k0_tower(extract_matrix_system(build_lambda_sync_lgs(catalog::dyck(2), 4, 4)));
  auto j = io::tower_to_json(t);
  CHECK(j["stabilization"]["kind"] == "torsion-stabilized");
  CHECK(j["stabilization"]["limit"]["torsion"][0] == 2);
  CHECK(j["stabilization"]["limit"]["rank"] == "unbounded");
  CHECK(j["levels"][1]["text"] == "Z^2 (+) Z/2");
  CHECK(io::group_to_json(FgAbelianGroup{1, {BigInt(2), BigInt(6)}})["text"] == "Z (+) Z/2 (+) Z/6");
}
