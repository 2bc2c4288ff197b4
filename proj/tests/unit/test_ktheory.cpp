#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support/matrix_convert.hpp"
#include "../support/naive_algebra.hpp"
#include "lsync/errors.hpp"
#include "lsync/ktheory.hpp"

using namespace lsync;

namespace {

SubshiftSpec golden() {
  Alphabet ab({"a", "b"});
  return SubshiftSpec::sft(ab, {ab.parse("b b")});
}

LabeledGraph golden_graph() {
  return LabeledGraph{Alphabet({"a", "b"}), {"A", "B"}, {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}}};
}

LabeledGraph full_graph(int n) {
  std::vector<std::string> names;
  LabeledGraph g{{}, {"s"}, {}};
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i + 1));
    g.edges.push_back({0, 0, static_cast<Symbol>(i)});
  }
  g.alphabet = Alphabet(names);
  return g;
}

FgAbelianGroup naive_cokernel(const IntMatrix& m) {
  auto f = naive::invariant_factors(to_naive(m));
  FgAbelianGroup g;
  g.rank = m.rows() - f.size();
  for (const auto& d : f)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

std::size_t naive_kernel_rank(const IntMatrix& m) { return m.cols() - naive::bareiss(to_naive(m)); }

std::vector<LambdaGraphSystem> samples() {
  return {build_lambda_sync_lgs(SubshiftSpec::dyck(2), 5, 5), build_lambda_sync_lgs(golden(), 5, 5),
          build_lambda_sync_lgs(SubshiftSpec::full_shift(3), 4, 4),
          build_lambda_sync_lgs(SubshiftSpec::markov_dyck({{1, 1}, {1, 0}}), 5, 5),
          build_lambda_sync_lgs(SubshiftSpec::expanded(golden(), "b", "z"), 4, 6)};
}

}  // namespace

TEST_CASE("matrix system extraction") {
  auto full = extract_matrix_system(stationary_lgs(full_graph(2), 3));
  for (std::size_t l = 0; l < 3; ++l) {
    CHECK(full.A[l] == IntMatrix::from_rows({{2}}));
    CHECK(full.I[l] == IntMatrix::from_rows({{1}}));
  }
  auto d = extract_matrix_system(build_lambda_sync_lgs(SubshiftSpec::dyck(2), 3, 3));
  REQUIRE(d.A[1].rows() == 2);
  REQUIRE(d.A[1].cols() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < 2; ++i) s += d.A[1](i, j);
    CHECK(s == 3);
  }
  auto g = extract_matrix_system(stationary_lgs(golden_graph(), 2));
  CHECK(g.A[0] == IntMatrix::from_rows({{1, 1}, {1, 0}}));
  CHECK(g.I[0] == IntMatrix::identity(2));

  for (const auto& lgs : samples()) {
    auto ms = extract_matrix_system(lgs);
    for (std::size_t l = 0; l < ms.levels(); ++l) {
      for (std::size_t j = 0; j < ms.I[l].cols(); ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < ms.I[l].rows(); ++i) ones += ms.I[l](i, j) == 1;
        CHECK(ones == 1);
      }
      for (std::size_t i = 0; i < ms.A[l].rows(); ++i) {
        BigInt s = 0, t = 0;
        for (std::size_t j = 0; j < ms.A[l].cols(); ++j) {
          s += ms.A[l](i, j);
          t += ms.I[l](i, j);
        }
        CHECK(s >= 1);
        CHECK(t >= 1);
      }
      if (l + 1 < ms.levels()) CHECK(ms.A[l] * ms.I[l + 1] == ms.I[l] * ms.A[l + 1]);
    }
  }
}

TEST_CASE("level groups agree with the naive oracle") {
  for (const auto& lgs : samples()) {
    auto ms = extract_matrix_system(lgs);
    auto k0 = k0_tower(ms), k1 = k1_tower(ms);
    REQUIRE(k0.groups.size() == ms.levels());
    for (std::size_t l = 0; l < ms.levels(); ++l) {
      CHECK(k0.groups[l] == naive_cokernel(k_relation(ms, l)));
      CHECK(k1.groups[l].rank == naive_kernel_rank(k_relation(ms, l)));
    }
  }
}

TEST_CASE("stationary towers") {
  for (int n = 2; n <= 5; ++n) {
    auto ms = extract_matrix_system(stationary_lgs(full_graph(n), 4));
    auto k0 = k0_tower(ms), k1 = k1_tower(ms);
    CHECK(k0.stabilization.kind == Stabilization::Kind::Stabilized);
    CHECK(k0.stabilization.from_level == 0);
    CHECK(k0.stabilization.limit == (n == 2 ? FgAbelianGroup{} : FgAbelianGroup{0, {BigInt(n - 1)}}));
    CHECK(k1.stabilization.kind == Stabilization::Kind::Stabilized);
    CHECK(k1.stabilization.limit.trivial());
    auto sb = stationary_bf(ms.A[0].transpose());
    CHECK(sb.cokernel == k0.stabilization.limit);
  }
  auto g = extract_matrix_system(stationary_lgs(golden_graph(), 4));
  CHECK(k0_tower(g).stabilization.limit.trivial());
  CHECK(k1_tower(g).stabilization.limit.trivial());
  auto bf = bowen_franks(k0_tower(g), k1_tower(g));
  CHECK(bf.bf0.to_string() == "0");
  CHECK(bf.bf1.to_string() == "0");
}

TEST_CASE("Dyck towers") {
  auto ms = extract_matrix_system(build_lambda_sync_lgs(SubshiftSpec::dyck(2), 5, 5));
  auto k0 = k0_tower(ms), k1 = k1_tower(ms);
  CHECK(k0.stabilization.kind == Stabilization::Kind::TorsionStabilized);
  CHECK(k0.stabilization.torsion == std::vector<BigInt>{2});
  for (std::size_t l = 0; l < k0.groups.size(); ++l) CHECK(k0.groups[l].torsion == std::vector<BigInt>{2});
  for (std::size_t l = 1; l < k0.groups.size(); ++l) CHECK(k0.groups[l].rank > k0.groups[l - 1].rank);
  for (const auto& g : k1.groups) CHECK(g.trivial());
  auto bf = bowen_franks(k0, k1);
  CHECK(bf.bf0.to_string() == "Z/2");
  CHECK(bf.bf1.unbounded_rank);
  CHECK(limit_of(k0).to_string() == "free of unbounded rank (+) Z/2");

  auto k03 = k0_tower(extract_matrix_system(build_lambda_sync_lgs(SubshiftSpec::dyck(3), 4, 4)));
  CHECK(k03.stabilization.torsion == std::vector<BigInt>{3});
  CHECK(limit_of(k03) != limit_of(k0));
}

TEST_CASE("connecting maps compose") {
  for (const auto& lgs : samples()) {
    auto ms = extract_matrix_system(lgs);
    auto k0 = k0_tower(ms);
    for (std::size_t l = 0; l + 2 < ms.levels(); ++l) {
      CokernelPresentation p0(k_relation(ms, l)), p2(k_relation(ms, l + 2));
      IntMatrix direct = induced_map_on_cokernels(p0, p2, ms.I[l + 2].transpose() * ms.I[l + 1].transpose());
      IntMatrix comp = k0.maps[l + 1] * k0.maps[l];
      for (std::size_t i = 0; i < comp.rows(); ++i)
        for (std::size_t j = 0; j < comp.cols(); ++j) {
          BigInt a = comp(i, j), b = direct(i, j);
          if (p2.modulus(i) != 0) {
            a = ((a % p2.modulus(i)) + p2.modulus(i)) % p2.modulus(i);
            b = ((b % p2.modulus(i)) + p2.modulus(i)) % p2.modulus(i);
          }
          CHECK(a == b);
        }
    }
    auto k1 = k1_tower(ms);
    for (std::size_t l = 0; l + 2 < ms.levels(); ++l) {
      KernelPresentation q0(k_relation(ms, l)), q2(k_relation(ms, l + 2));
      CHECK(k1.maps[l + 1] * k1.maps[l] ==
            induced_map_on_kernels(q0, q2, ms.I[l + 1].transpose() * ms.I[l].transpose()));
    }
  }
}

TEST_CASE("stabilized invariants survive an extra level") {
  for (std::size_t L : {4u, 5u}) {
    auto a = k0_tower(extract_matrix_system(build_lambda_sync_lgs(golden(), L, L)));
    auto b = k0_tower(extract_matrix_system(build_lambda_sync_lgs(golden(), L + 1, L + 1)));
    REQUIRE(a.stabilization.kind == Stabilization::Kind::Stabilized);
    CHECK(b.stabilization.kind == Stabilization::Kind::Stabilized);
    CHECK(a.stabilization.limit == b.stabilization.limit);
  }
}

TEST_CASE("window rules") {
  auto ms = extract_matrix_system(build_lambda_sync_lgs(golden(), 2, 2));
  CHECK(k0_tower(ms).stabilization.kind == Stabilization::Kind::Undetermined);
  CHECK_THROWS_AS(limit_of(k0_tower(ms)), Error);
  CHECK_THROWS_AS(k0_tower(ms, 1), Error);
  auto ms4 = extract_matrix_system(build_lambda_sync_lgs(golden(), 4, 4));
  auto t = k0_tower(ms4, 3);
  CHECK(t.stabilization.kind == Stabilization::Kind::Stabilized);
  CHECK(t.stabilization.from_level == 1);
  CHECK(k0_tower(ms4, 5).stabilization.kind == Stabilization::Kind::Undetermined);
}

TEST_CASE("Bowen-Franks descriptors") {
  auto z2 = GroupDescriptor{FgAbelianGroup{0, {BigInt(2)}}, false};
  auto trivial = GroupDescriptor{};
  auto bf = bowen_franks(z2, trivial);
  CHECK(bf.bf0.to_string() == "Z/2");
  CHECK(bf.bf1.to_string() == "0");
  auto zn = GroupDescriptor{FgAbelianGroup{3, {}}, false};
  bf = bowen_franks(zn, trivial);
  CHECK(bf.bf0.to_string() == "0");
  CHECK(bf.bf1.to_string() == "Z^3");
}

TEST_CASE("stationary_bf examples") {
  auto g = stationary_bf(IntMatrix::from_rows({{1, 1}, {1, 0}}));
  CHECK(g.cokernel.trivial());
  CHECK(g.kernel.empty());
  for (int n = 2; n <= 6; ++n) {
    auto f = stationary_bf(IntMatrix::from_rows({{n}}));
    CHECK(f.cokernel == (n == 2 ? FgAbelianGroup{} : FgAbelianGroup{0, {BigInt(n - 1)}}));
    CHECK(f.kernel.empty());
  }
  auto id = stationary_bf(IntMatrix::identity(2));
  CHECK(id.cokernel == FgAbelianGroup{2, {}});
  CHECK(id.kernel.size() == 2);
  CHECK_THROWS_AS(stationary_bf(IntMatrix(2, 3)), Error);
}
