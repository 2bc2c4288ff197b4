#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support/oracles.hpp"
#include "lsync/errors.hpp"
#include "lsync/flow.hpp"
#include "lsync/oracle.hpp"

using namespace lsync;

namespace {

SubshiftSpec golden() {
  Alphabet ab({"a", "b"});
  return SubshiftSpec::sft(ab, {ab.parse("b b")});
}

ExpansionContext ctx123() { return ExpansionContext(SubshiftSpec::full_shift(3).alphabet(), "1", "0"); }

std::string run(const ExpansionContext& c, Word (*f)(const ExpansionContext&, const Word&), const Alphabet& in,
                const Alphabet& out, const std::string& w) {
  return out.format(f(c, in.parse(w)));
}

}  // namespace

TEST_CASE("string maps on the worked examples") {
  const auto c = ctx123();
  const Alphabet& s = c.inner();
  const Alphabet& t = c.expanded();
  CHECK(run(c, xi_b, s, t, "1 1 2 1 2 1 3 2 1") == "0 1 0 1 2 0 1 2 0 1 3 2 0 1");
  CHECK(run(c, eta_b, t, s, "0 1 0 1 2 0 1 2 0 1 3 2 0 1") == "1 1 2 1 2 1 3 2 1");
  CHECK(run(c, phi_b, s, t, "1 1 2 1 3 2 1 3 1") == "1 0 1 2 0 1 3 2 0 1 3 0 1");
  CHECK(run(c, psi_b, t, s, "1 0 1 2 0 1 3 2 0 1 3 0 1") == "1 1 2 1 3 2 1 3 1");
  CHECK(xi_b(c, Word{}).empty());
  CHECK(eta_b(c, Word{}).empty());
  CHECK(run(c, phi_b, s, t, "1") == "1");
}

TEST_CASE("domain errors") {
  const auto c = ctx123();
  const Alphabet& t = c.expanded();
  for (const char* w : {"1 2", "2 0", "0 2", "2 1 2", "0"}) {
    CAPTURE(w);
    CHECK_THROWS_AS(eta_b(c, t.parse(w)), Error);
  }
  CHECK_THROWS_AS(phi_b(c, c.inner().parse("2 1")), Error);
  CHECK_THROWS_AS(phi_b(c, Word{}), Error);
  CHECK_THROWS_AS(psi_b(c, t.parse("0 1")), Error);
  CHECK_THROWS_AS(psi_b(c, t.parse("1 2 0")), Error);
  try {
    eta_b(c, t.parse("1 2"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
  CHECK_THROWS_AS(ExpansionContext(c.inner(), "1", "2"), Error);
  CHECK_THROWS_AS(ExpansionContext(c.inner(), "9", "0"), Error);
}

TEST_CASE("round trips") {
  const auto c = ctx123();
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& w : testoracle::all_words(3, n)) {
      const Word x = xi_b(c, w);
      CHECK(x == testoracle::expand_word(w, c.a()));
      CHECK(eta_b(c, x) == w);
      CHECK_FALSE((!x.empty() && x.front() == c.a_expanded() && x.back() == ExpansionContext::z));
      if (!w.empty() && w.front() == c.a()) CHECK(psi_b(c, phi_b(c, w)) == w);
    }
  // ξ∘η on the domain of η: expanded words of the full shift not starting with a, not ending with z
  const auto tilde = expand(SubshiftSpec::full_shift(3), "1", "0");
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& w : enumerate_words(tilde, n)) {
      if (!w.empty() && (w.front() == c.a_expanded() || w.back() == ExpansionContext::z)) continue;
      CHECK(xi_b(c, eta_b(c, w)) == w);
    }
}

TEST_CASE("expansion examples") {
  auto f = expand(SubshiftSpec::full_shift(2), "1", "0");
  CHECK_FALSE(is_admissible(f, "0 2"));
  CHECK(is_admissible(f, "0 1 2"));
  auto g = expand(golden(), "b", "z");
  CHECK_FALSE(is_admissible(g, "z b z b"));
  CHECK(is_admissible(g, "z b a z b"));
  CHECK_THROWS_AS(expand(golden(), "b", "a"), Error);

  // words avoiding a are unaffected
  const auto& in = golden().alphabet();
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& w : testoracle::all_words(2, n)) {
      if (std::count(w.begin(), w.end(), in.index_of("b"))) continue;
      CHECK(is_admissible(g, testoracle::expand_word(w, in.index_of("b"))) == is_admissible(golden(), w));
    }
}

TEST_CASE("expanded language against rewriting oracle") {
  const auto inner = golden();
  const Symbol b = inner.alphabet().index_of("b");
  const auto tilde = expand(inner, "b", "z");
  const auto long_words = enumerate_words(inner, 10);
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto oracle = testoracle::factors_of_expansions(long_words, b, n);
    for (const auto& w : testoracle::all_words(3, n)) CHECK(is_admissible(tilde, w) == (oracle.count(w) > 0));
  }
  for (const auto& w : enumerate_words(tilde, 8)) CHECK(right_extensions(tilde, w, 1, {}).size() > 0);
}

TEST_CASE("synchronization transfer") {
  auto full = sync_transfer_check(SubshiftSpec::full_shift(2), "1", "0", 2, 4, 6);
  CHECK(full.failed == 0);
  CHECK(full.unknown == 0);
  CHECK(full.passed > 0);

  auto g = sync_transfer_check(golden(), "b", "z", 2, 5, 7);
  CHECK(g.failed == 0);
  CHECK(g.unknown == 0);

  auto d = sync_transfer_check(SubshiftSpec::dyck(2), "a1", "0", 2, 4, 6);
  CHECK(d.failed == 0);
  std::size_t sync_rows = 0, class_rows = 0;
  for (const auto& r : d.rows) (r.check == "sync" ? sync_rows : class_rows)++;
  CHECK(sync_rows > 0);
  CHECK(class_rows > 0);
}

TEST_CASE("invariance reports") {
  for (const auto& [spec, L] : std::vector<std::pair<SubshiftSpec, std::size_t>>{
           {golden(), 5}, {SubshiftSpec::full_shift(3), 4}, {SubshiftSpec::dyck(2), 3}}) {
    auto r = invariance_report(spec, L);
    CAPTURE(r.lhs_name);
    CHECK_FALSE(r.any_mismatch());
    std::size_t matched = 0;
    for (const auto& row : r.rows)
      if (row.alignment == "2L" && row.verdict == Comparison::Match) ++matched;
    CHECK(matched == 8);
  }
  auto full = invariance_report(SubshiftSpec::full_shift(3), 4);
  for (const auto& row : full.rows)
    if (row.invariant == "K0 torsion") CHECK(row.lhs == "Z/2");
}
