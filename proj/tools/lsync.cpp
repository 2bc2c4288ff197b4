// Command-line front end: build, inspect and compare λ-graph systems.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lsync/catalog.hpp"
#include "lsync/errors.hpp"
#include "lsync/flow.hpp"
#include "lsync/io.hpp"
#include "lsync/ktheory.hpp"
#include "lsync/lgs.hpp"
#include "lsync/sync.hpp"

using namespace lsync;

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFailure = 1;
constexpr int kError = 2;

void emit(const io::Json& j) { std::cout << io::dump(j); }

void emit_or_write(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    io::write_text(out, text);
}

SyncOptions sync_options(std::size_t horizon, std::size_t budget) {
  SyncOptions o;
  o.horizon = horizon;
  o.budget.max_candidates = budget;
  return o;
}

struct BuildArgs {
  std::string spec, out;
  std::size_t levels = 3;
  std::optional<std::size_t> word_cap, horizon;
  std::size_t budget = Budget{}.max_candidates;
};

int cmd_build(const BuildArgs& a) {
  const SubshiftSpec spec = io::resolve_spec(a.spec);
  const std::size_t W = a.word_cap.value_or(2 * a.levels + 4);
  const std::size_t H = a.horizon.value_or(a.levels + 4);
  SyncAnalyzer an(spec, sync_options(H, a.budget));
  const LambdaGraphSystem lgs = build_lambda_sync_lgs(an, a.levels, W);
  const LgsReport rep = validate_lgs(lgs);
  if (!a.out.empty()) io::write_text(a.out, io::dump(io::lgs_to_json(lgs)));

  io::Json j;
  j["spec"] = spec.describe();
  j["levels"] = a.levels;
  j["word_cap"] = W;
  j["horizon"] = H;
  j["vertex_counts"] = lgs.vertex_counts();
  j["validation"] = io::report_to_json(rep);
  if (a.out.empty()) j["system"] = io::lgs_to_json(lgs);
  emit(j);
  return rep.all_pass() ? kOk : kVerdictFailure;
}

int cmd_validate(const std::string& file, std::size_t separated_from, std::optional<std::size_t> horizon) {
  const LambdaGraphSystem lgs = io::lgs_from_json(io::read_json(file));
  const LgsReport rep = validate_lgs(lgs, separated_from);
  io::Json j;
  j["vertex_counts"] = lgs.vertex_counts();
  j["validation"] = io::report_to_json(rep);
  bool ok = rep.all_pass();
  if (horizon) {
    io::Json launch = io::Json::array();
    for (const auto& ll : launching_vertices(lgs, *horizon)) {
      io::Json w = io::Json::array();
      for (const auto& x : ll.witness) w.push_back(x ? io::Json(lgs.alphabet.format(*x)) : io::Json(nullptr));
      launch.push_back({{"level", ll.level}, {"room", ll.room}, {"status", to_string(ll.status)}, {"witness", std::move(w)}});
      ok &= ll.status != LaunchLevel::Status::Missing;
    }
    j["launching"] = std::move(launch);
  }
  emit(j);
  return ok ? kOk : kVerdictFailure;
}

int cmd_groups(const std::string& file, std::size_t window) {
  const LambdaGraphSystem lgs = io::lgs_from_json(io::read_json(file));
  const MatrixSystem ms = extract_matrix_system(lgs);
  const GroupTower k0 = k0_tower(ms, window), k1 = k1_tower(ms, window);
  io::Json j;
  j["sizes"] = ms.sizes;
  j["K0"] = io::tower_to_json(k0);
  j["K1"] = io::tower_to_json(k1);
  try {
    const BowenFranks bf = bowen_franks(k0, k1);
    j["BF0"] = io::descriptor_to_json(bf.bf0);
    j["BF1"] = io::descriptor_to_json(bf.bf1);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UndeterminedTower) throw;
    j["BF0"] = nullptr;
    j["BF1"] = nullptr;
    j["note"] = e.what();
  }
  emit(j);
  return kOk;
}

int cmd_sync(const std::string& file, std::size_t lmax, std::size_t kmax, std::optional<std::size_t> word_cap,
             std::optional<std::size_t> horizon, std::size_t budget) {
  const SubshiftSpec spec = io::resolve_spec(file);
  SyncAnalyzer an(spec, sync_options(horizon.value_or(kmax + 4), budget));
  const auto rows = an.check_lambda_synchronizing(lmax, kmax, word_cap.value_or(2 * kmax + 4));
  emit({{"spec", spec.describe()}, {"rows", io::lambda_rows_to_json(rows, spec.alphabet())}});
  for (const auto& r : rows)
    if (r.verdict == LambdaSyncRow::Verdict::Fail) return kVerdictFailure;
  return kOk;
}

int cmd_expand(const std::string& file, const std::string& symbol, const std::string& fresh, const std::string& out) {
  const SubshiftSpec spec = io::resolve_spec(file);
  const SubshiftSpec tilde = expand(spec, symbol.empty() ? spec.alphabet().name(0) : symbol, fresh);
  emit_or_write(io::dump(io::spec_to_json(tilde)), out);
  return kOk;
}

int cmd_compare(const std::string& left, const std::string& right, std::size_t levels,
                std::optional<std::size_t> word_cap, std::size_t window) {
  InvarianceParams p;
  p.word_cap = word_cap.value_or(0);
  p.window = window;
  const auto rep = compare_invariants(io::resolve_spec(left), io::resolve_spec(right), levels, p);
  emit(io::invariance_to_json(rep));
  return rep.any_mismatch() ? kVerdictFailure : kOk;
}

int cmd_dot(const std::string& file, std::optional<std::size_t> level, const std::string& out) {
  const LambdaGraphSystem lgs = io::lgs_from_json(io::read_json(file));
  emit_or_write(level ? io::lgs_to_dot(lgs, *level) : io::lgs_to_dot(lgs), out);
  return kOk;
}

int cmd_catalog() {
  io::Json j = io::Json::array();
  for (const auto& e : catalog::entries()) j.push_back({{"name", e.name}, {"description", e.description}});
  emit(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lsync: λ-synchronizing subshifts, their λ-graph systems and K-groups"};
  app.require_subcommand(1);
  int rc = kOk;

  BuildArgs b;
  auto* build = app.add_subcommand("build", "build, validate and serialize the λ-synchronizing system");
  build->add_option("--spec", b.spec, "spec file or catalog name")->required();
  build->add_option("--levels", b.levels, "top level L")->required();
  build->add_option("--word-cap", b.word_cap, "longest synchronizing word enumerated (default 2L+4)");
  build->add_option("--horizon", b.horizon, "search horizon for bounded checks (default L+4)");
  build->add_option("--budget", b.budget, "candidate word budget");
  build->add_option("--out", b.out, "output file for the system");
  build->callback([&] { rc = cmd_build(b); });

  std::string file, out, left, right, symbol, fresh = "0";
  std::size_t separated_from = 0, window = 3, lmax = 2, kmax = 4, levels = 3;
  std::size_t budget = Budget{}.max_candidates;
  std::optional<std::size_t> horizon, word_cap, level;

  auto* validate = app.add_subcommand("validate", "run the structural checks on a system file");
  validate->add_option("system", file, "system file")->required();
  validate->add_option("--separated-from", separated_from, "first level checked for predecessor separation");
  validate->add_option("--launch-horizon", horizon, "also search launching words up to this length");
  validate->callback([&] { rc = cmd_validate(file, separated_from, horizon); });

  auto* groups = app.add_subcommand("groups", "matrix system, K-group towers and Bowen-Franks groups");
  groups->add_option("system", file, "system file")->required();
  groups->add_option("--window", window, "stabilization window");
  groups->callback([&] { rc = cmd_groups(file, window); });

  auto* sync = app.add_subcommand("sync", "λ-synchronization table");
  sync->add_option("--spec", file, "spec file or catalog name")->required();
  sync->add_option("--lmax", lmax, "largest l");
  sync->add_option("--kmax", kmax, "largest k");
  sync->add_option("--word-cap", word_cap, "longest word searched (default 2·kmax+4)");
  sync->add_option("--horizon", horizon, "bounded search horizon (default kmax+4)");
  sync->add_option("--budget", budget, "candidate word budget");
  sync->callback([&] { rc = cmd_sync(file, lmax, kmax, word_cap, horizon, budget); });

  auto* exp = app.add_subcommand("expand", "replace a symbol a by the word z a");
  exp->add_option("--spec", file, "spec file or catalog name")->required();
  exp->add_option("--symbol", symbol, "expanded symbol (default: first symbol)");
  exp->add_option("--fresh", fresh, "fresh symbol");
  exp->add_option("--out", out, "output spec file");
  exp->callback([&] { rc = cmd_expand(file, symbol, fresh, out); });

  auto* cmp = app.add_subcommand("compare", "compare K-groups and Bowen-Franks groups of two specs");
  cmp->add_option("--left", left, "spec file or catalog name")->required();
  cmp->add_option("--right", right, "spec file or catalog name")->required();
  cmp->add_option("--levels", levels, "top level L for the left spec");
  cmp->add_option("--word-cap", word_cap, "word cap for the left spec (default L)");
  cmp->add_option("--window", window, "stabilization window");
  cmp->callback([&] { rc = cmd_compare(left, right, levels, word_cap, window); });

  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("system", file, "system file")->required();
  dot->add_option("--level", level, "show the level pair (l-1, l) only");
  dot->add_option("--out", out, "output file");
  dot->callback([&] { rc = cmd_dot(file, level, out); });

  auto* cat = app.add_subcommand("catalog", "built-in subshifts");
  auto* list = cat->add_subcommand("list", "list catalog names");
  cat->require_subcommand(1);
  list->callback([&] { rc = cmd_catalog(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  } catch (const Error& e) {
    std::cerr << "lsync: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "lsync: " << e.what() << "\n";
    return kError;
  }
  return rc;
}
