#include "lsync/io.hpp"

#include <fstream>
#include <sstream>

#include "lsync/catalog.hpp"
#include "lsync/errors.hpp"

namespace lsync::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Validation, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("field \"") + key + "\" has the wrong type");
  }
}

Alphabet alphabet_from(const Json& j) {
  auto names = get<std::vector<std::string>>(j, "alphabet");
  if (names.empty()) bad("empty alphabet");
  return Alphabet(std::move(names));
}

Json word_json(const Alphabet& ab, const Word& w) { return ab.format(w); }

// A word is either a space-separated string or an array of symbol names.
Word word_from(const Alphabet& ab, const Json& j) {
  if (j.is_string()) return ab.parse(j.get<std::string>());
  if (j.is_array()) return ab.parse(j.get<std::vector<std::string>>());
  bad("word must be a string or an array of symbol names");
}

std::size_t state_ref(const Json& j, const std::vector<std::string>& states) {
  if (j.is_number_unsigned()) {
    auto v = j.get<std::size_t>();
    if (v >= states.size()) bad("state index out of range");
    return v;
  }
  if (j.is_string()) {
    auto s = j.get<std::string>();
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == s) return i;
    bad("unknown state \"" + s + "\"");
  }
  bad("state reference must be a name or an index");
}

LabeledGraph graph_from(const Alphabet& ab, const Json& g) {
  LabeledGraph out;
  out.alphabet = ab;
  out.states = get<std::vector<std::string>>(g, "states");
  for (const auto& e : field(g, "edges")) {
    out.edges.push_back({state_ref(field(e, "from"), out.states), state_ref(field(e, "to"), out.states),
                         ab.index_of(get<std::string>(e, "label"))});
  }
  return out;
}

Json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// specs

Json spec_to_json(const SubshiftSpec& spec) {
  Json j;
  j["kind"] = to_string(spec.kind());
  const Alphabet& ab = spec.alphabet();
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, spec_data::FullShift> || std::is_same_v<T, spec_data::Dyck>) {
          j["n"] = d.n;
        } else if constexpr (std::is_same_v<T, spec_data::SftForbidden>) {
          j["alphabet"] = ab.names();
          j["forbidden"] = Json::array();
          for (const auto& w : d.forbidden) j["forbidden"].push_back(word_json(ab, w));
        } else if constexpr (std::is_same_v<T, spec_data::SoficGraph>) {
          j["alphabet"] = ab.names();
          Json g;
          g["states"] = d.graph.states;
          g["edges"] = Json::array();
          for (const auto& e : d.graph.edges)
            g["edges"].push_back({{"from", d.graph.states[e.from]}, {"to", d.graph.states[e.to]}, {"label", ab.name(e.label)}});
          j["graph"] = std::move(g);
        } else if constexpr (std::is_same_v<T, spec_data::MarkovDyck>) {
          j["matrix"] = d.matrix;
        } else {
          j["inner"] = spec_to_json(*d.inner);
          j["symbol"] = d.inner->alphabet().name(d.expanded_symbol);
          j["fresh"] = d.fresh_symbol;
        }
      },
      spec.data());
  return j;
}

SubshiftSpec spec_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "full") return SubshiftSpec::full_shift(get<int>(j, "n"));
  if (kind == "dyck") return SubshiftSpec::dyck(get<int>(j, "n"));
  if (kind == "markov_dyck") return SubshiftSpec::markov_dyck(get<BinaryMatrix>(j, "matrix"));
  if (kind == "sft") {
    Alphabet ab = alphabet_from(j);
    std::vector<Word> forbidden;
    for (const auto& w : field(j, "forbidden")) forbidden.push_back(word_from(ab, w));
    return SubshiftSpec::sft(ab, std::move(forbidden));
  }
  if (kind == "sofic") return SubshiftSpec::sofic(graph_from(alphabet_from(j), field(j, "graph")));
  if (kind == "expanded")
    return SubshiftSpec::expanded(spec_from_json(field(j, "inner")), get<std::string>(j, "symbol"),
                                  get<std::string>(j, "fresh"));
  bad("unknown spec kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// λ-graph systems

Json lgs_to_json(const LambdaGraphSystem& lgs) {
  const Alphabet& ab = lgs.alphabet;
  Json j;
  j["alphabet"] = ab.names();
  j["levels"] = Json::array();
  for (const auto& lv : lgs.levels) {
    Json level;
    level["vertices"] = Json::array();
    for (std::size_t v = 0; v < lv.vertices.size(); ++v) {
      Json g = Json::array();
      for (const auto& w : lv.vertices[v].gamma) g.push_back(word_json(ab, w));
      Json x;
      x["id"] = v;
      x["gamma"] = std::move(g);
      x["rep"] = lv.vertices[v].rep ? Json(word_json(ab, *lv.vertices[v].rep)) : Json(nullptr);
      level["vertices"].push_back(std::move(x));
    }
    level["edges"] = Json::array();
    for (const auto& e : lv.edges) level["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"label", ab.name(e.label)}});
    level["iota"] = Json::array();
    for (std::size_t c = 0; c < lv.iota.size(); ++c) level["iota"].push_back({{"child", c}, {"parent", lv.iota[c]}});
    j["levels"].push_back(std::move(level));
  }
  return j;
}

LambdaGraphSystem lgs_from_json(const Json& j) {
  LambdaGraphSystem lgs{alphabet_from(j), {}};
  const Alphabet& ab = lgs.alphabet;
  for (const auto& level : field(j, "levels")) {
    LgsLevel lv;
    for (const auto& x : field(level, "vertices")) {
      if (get<std::size_t>(x, "id") != lv.vertices.size()) bad("vertex ids must be 0, 1, ... in order");
      LgsVertex v;
      for (const auto& w : field(x, "gamma")) v.gamma.push_back(word_from(ab, w));
      if (x.contains("rep") && !x.at("rep").is_null()) v.rep = word_from(ab, x.at("rep"));
      lv.vertices.push_back(std::move(v));
    }
    for (const auto& e : field(level, "edges"))
      lv.edges.push_back({get<std::size_t>(e, "src"), get<std::size_t>(e, "dst"), ab.index_of(get<std::string>(e, "label"))});
    for (const auto& i : field(level, "iota")) {
      const auto c = get<std::size_t>(i, "child");
      if (c != lv.iota.size()) bad("iota entries must list children 0, 1, ... in order");
      lv.iota.push_back(get<std::size_t>(i, "parent"));
    }
    lgs.levels.push_back(std::move(lv));
  }
  if (lgs.levels.empty()) bad("system has no levels");
  return lgs;
}

// ---------------------------------------------------------------------------
// reports

Json group_to_json(const FgAbelianGroup& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(bigint_json(d));
  return {{"rank", g.rank}, {"torsion", std::move(t)}, {"text", g.to_string()}};
}

Json descriptor_to_json(const GroupDescriptor& d) {
  Json j = group_to_json(d.group);
  if (d.unbounded_rank) j["rank"] = "unbounded";
  j["text"] = d.to_string();
  return j;
}

Json tower_to_json(const GroupTower& t) {
  Json j;
  j["levels"] = Json::array();
  for (std::size_t l = 0; l < t.groups.size(); ++l) {
    Json g = group_to_json(t.groups[l]);
    g["level"] = l;
    if (l < t.map_is_iso.size()) g["map_to_next_is_iso"] = static_cast<bool>(t.map_is_iso[l]);
    j["levels"].push_back(std::move(g));
  }
  const auto& s = t.stabilization;
  Json st;
  st["kind"] = to_string(s.kind);
  st["window"] = s.window;
  st["method"] = "finite window heuristic";
  if (s.kind == Stabilization::Kind::Stabilized) {
    st["from_level"] = s.from_level;
    st["limit"] = group_to_json(s.limit);
  } else if (s.kind == Stabilization::Kind::TorsionStabilized) {
    st["limit"] = descriptor_to_json(GroupDescriptor{FgAbelianGroup{0, s.torsion}, true});
  }
  st["rank_profile"] = s.ranks;
  j["stabilization"] = std::move(st);
  return j;
}

Json report_to_json(const LgsReport& r) {
  Json j;
  auto put = [&](const char* name, const CheckResult& c) {
    j[name] = {{"pass", c.pass}, {"witness", c.witness}};
  };
  put("left_resolving", r.left_resolving);
  put("predecessor_separated", r.predecessor_separated);
  put("local_property", r.local_property);
  put("essential", r.essential);
  put("iota_surjective", r.iota_surjective);
  put("iota_compatible", r.iota_compatible);
  put("gamma_consistent", r.gamma_consistent);
  return j;
}

Json lambda_rows_to_json(const std::vector<LambdaSyncRow>& rows, const Alphabet& ab) {
  Json j = Json::array();
  for (const auto& r : rows)
    j.push_back({{"l", r.l},
                 {"k", r.k},
                 {"eta", ab.format(r.eta)},
                 {"verdict", to_string(r.verdict)},
                 {"witness", r.verdict == LambdaSyncRow::Verdict::Pass ? Json(ab.format(r.witness)) : Json(nullptr)}});
  return j;
}

Json invariance_to_json(const InvarianceReport& r) {
  Json rows = Json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"alignment", x.alignment},
                    {"invariant", x.invariant},
                    {"lhs", x.lhs},
                    {"rhs", x.rhs},
                    {"verdict", to_string(x.verdict)}});
  return {{"lhs", r.lhs_name}, {"rhs", r.rhs_name}, {"levels", r.levels}, {"rows", std::move(rows)}};
}

Json transfer_to_json(const SyncTransferReport& r, const Alphabet& inner, const Alphabet& expanded) {
  Json rows = Json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"l", x.level},
                    {"check", x.check},
                    {"word", inner.format(x.word)},
                    {"image", expanded.format(x.image)},
                    {"verdict", to_string(x.verdict)},
                    {"detail", x.detail}});
  return {{"passed", r.passed}, {"failed", r.failed}, {"unknown", r.unknown}, {"rows", std::move(rows)}};
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node(std::size_t l, std::size_t v) { return "v" + std::to_string(l) + "_" + std::to_string(v); }

}  // namespace

std::string lgs_to_dot(const LambdaGraphSystem& lgs, std::size_t level) {
  if (level == 0 || level > lgs.top())
    throw Error(ErrorKind::Validation, "dot level must be in 1.." + std::to_string(lgs.top()));
  const std::size_t lo = level - 1;
  const LgsLevel& lv = lgs.levels[lo];
  std::ostringstream os;
  os << "digraph level_" << lo << "_" << level << " {\n  rankdir=LR;\n";
  for (std::size_t l : {lo, level}) {
    os << "  subgraph cluster_" << l << " {\n    label=" << quote("V_" + std::to_string(l)) << ";\n";
    for (std::size_t v = 0; v < lgs.levels[l].vertices.size(); ++v) {
      const auto& rep = lgs.levels[l].vertices[v].rep;
      std::string text = std::to_string(v);
      if (rep) text += rep->empty() ? ": ()" : ": " + lgs.alphabet.format(*rep);
      os << "    " << node(l, v) << " [label=" << quote(text) << "];\n";
    }
    os << "  }\n";
  }
  for (const auto& e : lv.edges)
    os << "  " << node(lo, e.src) << " -> " << node(level, e.dst) << " [label=" << quote(lgs.alphabet.name(e.label))
       << "];\n";
  for (std::size_t c = 0; c < lv.iota.size(); ++c)
    os << "  " << node(level, c) << " -> " << node(lo, lv.iota[c]) << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

std::string lgs_to_dot(const LambdaGraphSystem& lgs) {
  std::string out;
  for (std::size_t l = 1; l <= lgs.top(); ++l) out += lgs_to_dot(lgs, l);
  return out;
}

// ---------------------------------------------------------------------------
// files

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Validation, path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SubshiftSpec resolve_spec(const std::string& name) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      int n = std::stoi(s, &pos);
      if (pos == s.size()) return n;
    } catch (const std::exception&) {
    }
    bad("expected a number in \"" + name + "\"");
  };
  if (name == "golden-mean") return catalog::golden_mean();
  if (name.rfind("full:", 0) == 0) return catalog::full_shift(number(name.substr(5)));
  if (name.rfind("dyck:", 0) == 0) return catalog::dyck(number(name.substr(5)));
  if (name.rfind("markov-dyck:", 0) == 0) {
    const Json j = read_json(name.substr(12));
    if (j.is_array()) return catalog::markov_dyck(j.get<BinaryMatrix>());
    return catalog::markov_dyck(get<BinaryMatrix>(j, "matrix"));
  }
  if (name.rfind("sofic:", 0) == 0) {
    const Json j = read_json(name.substr(6));
    if (j.contains("kind")) return spec_from_json(j);
    return catalog::sofic_from_graph(graph_from(alphabet_from(j), j));
  }
  return spec_from_json(read_json(name));
}

}  // namespace lsync::io
