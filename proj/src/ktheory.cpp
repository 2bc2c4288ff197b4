#include "lsync/ktheory.hpp"

#include "lsync/errors.hpp"

namespace lsync {

MatrixSystem extract_matrix_system(const LambdaGraphSystem& lgs) {
  MatrixSystem ms;
  for (const auto& lv : lgs.levels) ms.sizes.push_back(lv.vertices.size());
  for (std::size_t l = 0; l < lgs.top(); ++l) {
    const auto& lv = lgs.levels[l];
    IntMatrix a(ms.sizes[l], ms.sizes[l + 1]), i(ms.sizes[l], ms.sizes[l + 1]);
    for (const auto& e : lv.edges) a(e.src, e.dst) += 1;
    for (std::size_t j = 0; j < lv.iota.size(); ++j) i(lv.iota[j], j) = 1;
    ms.A.push_back(std::move(a));
    ms.I.push_back(std::move(i));
  }
  return ms;
}

IntMatrix k_relation(const MatrixSystem& ms, std::size_t l) { return ms.I.at(l).transpose() - ms.A.at(l).transpose(); }

const char* to_string(Stabilization::Kind k) noexcept {
  switch (k) {
    case Stabilization::Kind::Stabilized: return "stabilized";
    case Stabilization::Kind::TorsionStabilized: return "torsion-stabilized";
    case Stabilization::Kind::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

bool unimodular(const IntMatrix& k) {
  if (k.rows() != k.cols()) return false;
  const auto snf = smith_normal_form(k);
  if (snf.rank != k.rows()) return false;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.diagonal(i) != 1) return false;
  return true;
}

void classify(GroupTower& t, std::size_t window) {
  if (window < 2) throw Error(ErrorKind::Validation, "stabilization window must be at least 2");
  Stabilization& s = t.stabilization;
  s.window = window;
  for (const auto& g : t.groups) s.ranks.push_back(g.rank);
  const std::size_t n = t.groups.size();
  if (n < window) return;

  std::size_t from = n - 1;
  while (from > 0 && t.map_is_iso[from - 1]) --from;
  if (n - from >= window) {
    s.kind = Stabilization::Kind::Stabilized;
    s.from_level = from;
    s.limit = t.groups[from];
    return;
  }
  bool torsion_const = true, rank_up = true;
  for (std::size_t l = n - window + 1; l < n; ++l) {
    torsion_const &= t.groups[l].torsion == t.groups[l - 1].torsion;
    rank_up &= t.groups[l].rank > t.groups[l - 1].rank;
  }
  if (torsion_const && rank_up) {
    s.kind = Stabilization::Kind::TorsionStabilized;
    s.torsion = t.groups[n - 1].torsion;
  }
}

}  // namespace

GroupTower k0_tower(const MatrixSystem& ms, std::size_t window) {
  GroupTower t;
  std::vector<CokernelPresentation> pres;
  for (std::size_t l = 0; l < ms.levels(); ++l) {
    pres.emplace_back(k_relation(ms, l));
    t.groups.push_back(pres.back().group());
  }
  for (std::size_t l = 0; l + 1 < ms.levels(); ++l) {
    t.maps.push_back(induced_map_on_cokernels(pres[l], pres[l + 1], ms.I[l + 1].transpose()));
    t.map_is_iso.push_back(is_isomorphism(pres[l], pres[l + 1], t.maps.back()));
  }
  classify(t, window);
  return t;
}

GroupTower k1_tower(const MatrixSystem& ms, std::size_t window) {
  GroupTower t;
  std::vector<KernelPresentation> pres;
  for (std::size_t l = 0; l < ms.levels(); ++l) {
    pres.emplace_back(k_relation(ms, l));
    t.groups.push_back(FgAbelianGroup{pres.back().rank(), {}});
  }
  for (std::size_t l = 0; l + 1 < ms.levels(); ++l) {
    t.maps.push_back(induced_map_on_kernels(pres[l], pres[l + 1], ms.I[l].transpose()));
    t.map_is_iso.push_back(unimodular(t.maps.back()));
  }
  classify(t, window);
  return t;
}

std::string GroupDescriptor::to_string() const {
  if (!unbounded_rank) return group.to_string();
  std::string s = "free of unbounded rank";
  for (const auto& d : group.torsion) s += " (+) Z/" + d.str();
  return s;
}

GroupDescriptor limit_of(const GroupTower& tower) {
  const auto& s = tower.stabilization;
  switch (s.kind) {
    case Stabilization::Kind::Stabilized: return {s.limit, false};
    case Stabilization::Kind::TorsionStabilized: return {FgAbelianGroup{0, s.torsion}, true};
    case Stabilization::Kind::Undetermined: break;
  }
  throw Error(ErrorKind::UndeterminedTower,
              "tower over " + std::to_string(tower.groups.size()) + " levels did not stabilize in a window of " +
                  std::to_string(s.window));
}

BowenFranks bowen_franks(const GroupDescriptor& k0, const GroupDescriptor& k1) {
  BowenFranks bf;
  bf.bf0.group.torsion = k0.group.torsion;
  bf.bf0.group.rank = k1.unbounded_rank ? 0 : k1.group.rank;
  bf.bf0.unbounded_rank = k1.unbounded_rank;
  bf.bf1.group.rank = k0.unbounded_rank ? 0 : k0.group.rank;
  bf.bf1.unbounded_rank = k0.unbounded_rank;
  return bf;
}

BowenFranks bowen_franks(const GroupTower& k0, const GroupTower& k1) { return bowen_franks(limit_of(k0), limit_of(k1)); }

StationaryBf stationary_bf(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::Validation, "matrix is not square");
  const IntMatrix m = IntMatrix::identity(a.rows()) - a;
  return {cokernel(m), kernel_basis(m)};
}

}  // namespace lsync
