#include "lsync/flow.hpp"

#include <map>

#include "lsync/errors.hpp"
#include "lsync/lgs.hpp"

namespace lsync {

ExpansionContext::ExpansionContext(const Alphabet& inner, const std::string& a, const std::string& z)
    : inner_(inner), a_(inner.index_of(a)) {
  if (inner.contains(z)) throw Error(ErrorKind::SymbolCollision, "'" + z + "' is already a symbol");
  std::vector<std::string> names{z};
  names.insert(names.end(), inner.names().begin(), inner.names().end());
  expanded_ = Alphabet(std::move(names));
}

SubshiftSpec expand(const SubshiftSpec& spec, const std::string& a, const std::string& z) {
  return SubshiftSpec::expanded(spec, a, z);
}

Word xi_b(const ExpansionContext& ctx, const Word& w) {
  Word out;
  out.reserve(w.size() * 2);
  for (Symbol s : w) {
    if (s >= ctx.inner().size()) throw Error(ErrorKind::Domain, "symbol outside the inner alphabet");
    if (s == ctx.a()) out.push_back(ExpansionContext::z);
    out.push_back(ctx.lift(s));
  }
  return out;
}

Word eta_b(const ExpansionContext& ctx, const Word& w) {
  const Symbol a = ctx.a_expanded();
  if (!w.empty() && w.front() == a)
    throw Error(ErrorKind::Domain, "'" + ctx.expanded().format(w) + "' starts with " + ctx.expanded().name(a));
  if (!w.empty() && w.back() == ExpansionContext::z)
    throw Error(ErrorKind::Domain,
                "'" + ctx.expanded().format(w) + "' ends with " + ctx.expanded().name(ExpansionContext::z));
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Symbol s = w[i];
    if (s >= ctx.expanded().size()) throw Error(ErrorKind::Domain, "symbol outside the expanded alphabet");
    if (s == ExpansionContext::z) {
      if (w[i + 1] != a)
        throw Error(ErrorKind::Domain, "'" + ctx.expanded().format(w) + "' has " +
                                           ctx.expanded().name(ExpansionContext::z) + " not followed by " +
                                           ctx.expanded().name(a));
      continue;
    }
    if (s == a && (i == 0 || w[i - 1] != ExpansionContext::z))
      throw Error(ErrorKind::Domain, "'" + ctx.expanded().format(w) + "' has " + ctx.expanded().name(a) +
                                         " not preceded by " + ctx.expanded().name(ExpansionContext::z));
    out.push_back(s - 1);
  }
  return out;
}

Word phi_b(const ExpansionContext& ctx, const Word& w) {
  if (w.empty() || w.front() != ctx.a())
    throw Error(ErrorKind::Domain, "'" + ctx.inner().format(w) + "' does not start with " + ctx.inner().name(ctx.a()));
  Word out{ctx.a_expanded()};
  const Word tail = xi_b(ctx, Word(w.begin() + 1, w.end()));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Word psi_b(const ExpansionContext& ctx, const Word& w) {
  if (w.empty() || w.front() != ctx.a_expanded())
    throw Error(ErrorKind::Domain,
                "'" + ctx.expanded().format(w) + "' does not start with " + ctx.expanded().name(ctx.a_expanded()));
  Word out{ctx.a()};
  const Word tail = eta_b(ctx, Word(w.begin() + 1, w.end()));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

const char* to_string(RowVerdict v) noexcept {
  switch (v) {
    case RowVerdict::Pass: return "pass";
    case RowVerdict::Fail: return "fail";
    case RowVerdict::Unknown: return "unknown";
  }
  return "?";
}

SyncTransferReport sync_transfer_check(const SubshiftSpec& spec, const std::string& a, const std::string& z,
                                       std::size_t max_level, std::size_t word_cap, std::size_t horizon) {
  const ExpansionContext ctx(spec.alphabet(), a, z);
  SyncOptions opt;
  opt.horizon = horizon;
  SyncAnalyzer lhs(spec, opt);
  SyncAnalyzer rhs(expand(spec, a, z), opt);
  SyncTransferReport rep;
  auto add = [&](SyncTransferRow row) {
    switch (row.verdict) {
      case RowVerdict::Pass: ++rep.passed; break;
      case RowVerdict::Fail: ++rep.failed; break;
      case RowVerdict::Unknown: ++rep.unknown; break;
    }
    rep.rows.push_back(std::move(row));
  };

  for (std::size_t l = 0; l <= max_level; ++l) {
    for (const auto& mu : lhs.enumerate_sync_words(l, word_cap).words) {
      if (mu.empty()) continue;
      SyncTransferRow row{l, "sync", mu, xi_b(ctx, mu), RowVerdict::Pass, {}};
      const SyncVerdict v = rhs.is_l_synchronizing(row.image, l);
      if (v.no()) {
        row.verdict = RowVerdict::Fail;
        row.detail = "image is not synchronizing: '" + ctx.expanded().format(v.predecessor) + "' and '" +
                     ctx.expanded().format(v.extension) + "'";
      } else if (v.unknown()) {
        row.verdict = RowVerdict::Unknown;
        row.detail = "undecided at horizon " + std::to_string(v.horizon);
      }
      if (row.image.front() == ctx.a_expanded() && row.image.back() == ExpansionContext::z) {
        row.verdict = RowVerdict::Fail;
        row.detail = "image starts with the expanded symbol and ends with the fresh one";
      }
      add(std::move(row));
    }
    for (const auto& cls : lhs.past_equiv_classes(l, word_cap).classes) {
      if (cls.rep.empty() && cls.members.size() == 1) continue;
      std::map<GammaId, Word> images;
      for (const auto& m : cls.members)
        if (!m.empty()) images.emplace(rhs.gamma(xi_b(ctx, m), l), m);
      SyncTransferRow row{l, "class", cls.rep, xi_b(ctx, cls.rep), RowVerdict::Pass, {}};
      if (images.size() > 1) {
        row.verdict = RowVerdict::Fail;
        auto it = images.begin();
        row.detail = "'" + spec.alphabet().format(it->second) + "' and '" +
                     spec.alphabet().format(std::next(it)->second) + "' have images in different classes";
      }
      add(std::move(row));
    }
  }
  return rep;
}

const char* to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::Match: return "match";
    case Comparison::Mismatch: return "mismatch";
    case Comparison::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool InvarianceReport::any_mismatch() const {
  for (const auto& r : rows)
    if (r.verdict == Comparison::Mismatch) return true;
  return false;
}

namespace {

struct Invariants {
  GroupTower k0, k1;
};

Invariants compute(const SubshiftSpec& spec, std::size_t levels, std::size_t word_cap, std::size_t window) {
  const auto lgs = build_lambda_sync_lgs(spec, levels, word_cap);
  const auto rep = validate_lgs(lgs, 1);
  if (!rep.all_pass())
    throw Error(ErrorKind::ClassResolutionFailure,
                spec.describe() + " at word cap " + std::to_string(word_cap) + " fails validation; raise the cap");
  const auto ms = extract_matrix_system(lgs);
  return {k0_tower(ms, window), k1_tower(ms, window)};
}

bool determined(const GroupTower& t) { return t.stabilization.kind != Stabilization::Kind::Undetermined; }

std::string torsion_string(const GroupDescriptor& d) { return FgAbelianGroup{0, d.group.torsion}.to_string(); }

std::string rank_string(const GroupDescriptor& d) {
  return d.unbounded_rank ? "unbounded" : std::to_string(d.group.rank);
}

void compare(std::vector<InvarianceRow>& rows, const std::string& alignment, const Invariants& x,
             const Invariants& y) {
  auto row = [&](std::string name, bool ok, std::string l, std::string r) {
    Comparison c = !ok ? Comparison::Inconclusive : l == r ? Comparison::Match : Comparison::Mismatch;
    rows.push_back({alignment, std::move(name), std::move(l), std::move(r), c});
  };
  const std::pair<const char*, const GroupTower*> towers[] = {{"K0", &x.k0}, {"K1", &x.k1}};
  const GroupTower* others[] = {&y.k0, &y.k1};
  for (int i = 0; i < 2; ++i) {
    const GroupTower& p = *towers[i].second;
    const GroupTower& q = *others[i];
    const std::string name = towers[i].first;
    row(name + " stabilization", true, to_string(p.stabilization.kind), to_string(q.stabilization.kind));
    const bool ok = determined(p) && determined(q);
    const GroupDescriptor dp = ok ? limit_of(p) : GroupDescriptor{};
    const GroupDescriptor dq = ok ? limit_of(q) : GroupDescriptor{};
    row(name + " torsion", ok, ok ? torsion_string(dp) : "?", ok ? torsion_string(dq) : "?");
    row(name + " rank", ok, ok ? rank_string(dp) : "?", ok ? rank_string(dq) : "?");
  }
  const bool ok = determined(x.k0) && determined(x.k1) && determined(y.k0) && determined(y.k1);
  if (ok) {
    const auto bx = bowen_franks(x.k0, x.k1), by = bowen_franks(y.k0, y.k1);
    row("BF0", true, bx.bf0.to_string(), by.bf0.to_string());
    row("BF1", true, bx.bf1.to_string(), by.bf1.to_string());
  } else {
    row("BF0", false, "?", "?");
    row("BF1", false, "?", "?");
  }
  // a stabilization kind that differs only because one side is undetermined is not a mismatch
  for (auto& r : rows)
    if (r.alignment == alignment && r.verdict == Comparison::Mismatch &&
        (r.lhs == to_string(Stabilization::Kind::Undetermined) || r.rhs == to_string(Stabilization::Kind::Undetermined)))
      r.verdict = Comparison::Inconclusive;
}

}  // namespace

InvarianceReport compare_invariants(const SubshiftSpec& lhs, const SubshiftSpec& rhs, std::size_t levels,
                                    const InvarianceParams& params) {
  const std::size_t cap = params.word_cap ? params.word_cap : levels;
  InvarianceReport rep{lhs.describe(), rhs.describe(), levels, {}};
  const Invariants x = compute(lhs, levels, cap, params.window);
  compare(rep.rows, "L", x, compute(rhs, levels, 2 * cap + 2, params.window));
  if (params.double_alignment) compare(rep.rows, "2L", x, compute(rhs, 2 * levels, 2 * cap + 2, params.window));
  return rep;
}

InvarianceReport invariance_report(const SubshiftSpec& spec, std::size_t levels, const InvarianceParams& params) {
  const std::string a = params.a.empty() ? spec.alphabet().name(0) : params.a;
  return compare_invariants(spec, expand(spec, a, params.z), levels, params);
}

}  // namespace lsync
