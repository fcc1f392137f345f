#include "typea/serialize.hpp"

#include "typea/error.hpp"

namespace typea {

namespace {

PairSign sign_from_label(const std::string& s) {
  if (s == "+") return PairSign::Plus;
  if (s == "-") return PairSign::Minus;
  throw Error("unknown pair label '" + s + "'");
}

CharacterTag tag_from_string(const std::string& s) {
  if (s == "trivial") return CharacterTag::Trivial;
  if (s == "sign") return CharacterTag::Sign;
  throw Error("unknown character tag '" + s + "'");
}

CountMethod method_from_string(const std::string& s) {
  if (s == "enumeration") return CountMethod::Enumeration;
  if (s == "multiplicity") return CountMethod::Multiplicity;
  throw Error("unknown count method '" + s + "'");
}

Json orbit_fields(Json j, const OrbitSpec& orbit) {
  j["orbit"] = to_json(orbit.first);
  if (orbit.second) j["orbit2"] = to_json(*orbit.second);
  return j;
}

OrbitSpec orbit_from_fields(const Json& j) {
  OrbitSpec orbit{diagram_from_json(j.at("orbit")), std::nullopt};
  if (j.contains("orbit2")) orbit.second = diagram_from_json(j.at("orbit2"));
  return orbit;
}

}  // namespace

Json to_json(const Diagram& d) { return d.parts(); }

Diagram diagram_from_json(const Json& j) { return Diagram(j.get<std::vector<int>>()); }

Json to_json(const ModuleDecomp& m) {
  Json mults = Json::array();
  for (const auto& [key, count] : m.entries()) {
    Json k = Json::array();
    for (const auto& d : key) k.push_back(to_json(d));
    mults.push_back({{"key", k}, {"m", count}});
  }
  return {{"shape", m.shape().degrees}, {"mults", mults}};
}

ModuleDecomp module_from_json(const Json& j) {
  ModuleDecomp m(ProductShape{j.at("shape").get<std::vector<int>>()});
  for (const auto& entry : j.at("mults")) {
    ModuleKey key;
    for (const auto& d : entry.at("key")) key.push_back(diagram_from_json(d));
    m.add(key, entry.at("m").get<std::int64_t>());
  }
  return m;
}

Json to_json(const GroupSpec& g) {
  Json j{{"kind", std::string(to_string(g.kind()))}};
  if (is_unitary(g.kind())) {
    j["p"] = g.p();
    j["q"] = g.q();
  } else {
    j["n"] = g.n();
  }
  return j;
}

GroupSpec group_from_json(const Json& j) {
  const auto text = j.at("kind").get<std::string>();
  const auto kind = parse_group_kind(text);
  if (!kind) throw Error("unknown group kind '" + text + "'");
  if (is_unitary(*kind)) return GroupSpec::unitary(*kind, j.at("p").get<int>(), j.at("q").get<int>());
  return GroupSpec::linear(*kind, j.at("n").get<int>());
}

Json to_json(const CountResult& r) {
  Json j{{"group", to_json(r.group)},
         {"n_h", r.sig.n_h},
         {"n_0", r.sig.n_0},
         {"count", r.count},
         {"method", std::string(to_string(r.method))}};
  return orbit_fields(std::move(j), r.orbit);
}

CountResult count_result_from_json(const Json& j) {
  return CountResult{group_from_json(j.at("group")), orbit_from_fields(j),
                     CosetSignature{j.at("n_h").get<int>(), j.at("n_0").get<int>()},
                     j.at("count").get<std::int64_t>(),
                     method_from_string(j.at("method").get<std::string>())};
}

Json to_json(const InducedRepDescriptor& d) {
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    blocks.push_back({{"size", b.size}, {"character", std::string(to_string(b.tag))}});
  }
  return {{"a", d.a}, {"blocks", blocks}};
}

InducedRepDescriptor descriptor_from_json(const Json& j) {
  InducedRepDescriptor d{{}, j.at("a").get<std::vector<int>>()};
  for (const auto& b : j.at("blocks")) {
    d.blocks.push_back({b.at("size").get<int>(), tag_from_string(b.at("character").get<std::string>())});
  }
  return d;
}

Json to_json(const Enumeration& e) {
  Json params = Json::array();
  for (std::size_t i = 0; i < e.entries.size(); ++i) {
    const auto& entry = e.entries[i];
    Json p = to_json(entry.descriptor);
    p["index"] = i;
    p["label"] = !entry.sign ? "" : (*entry.sign == PairSign::Plus ? "+" : "-");
    params.push_back(std::move(p));
  }
  return {{"group", to_json(e.group)}, {"orbit", to_json(e.orbit)}, {"parameters", params}};
}

Enumeration enumeration_from_json(const Json& j) {
  Enumeration e{group_from_json(j.at("group")), diagram_from_json(j.at("orbit")), {}};
  for (const auto& p : j.at("parameters")) {
    const auto label = p.at("label").get<std::string>();
    e.entries.push_back({descriptor_from_json(p),
                         label.empty() ? std::nullopt : std::optional(sign_from_label(label))});
  }
  return e;
}

Json to_json(const CellRep& c) {
  Json labels = Json::array();
  for (const auto& d : c.labels) labels.push_back(to_json(d));
  return {{"labels", labels}};
}

CellRep cell_from_json(const Json& j) {
  CellRep c;
  for (const auto& d : j.at("labels")) c.labels.push_back(diagram_from_json(d));
  return c;
}

Json to_json(const CoherentResult& r) {
  Json j{{"group", to_json(r.group)},
         {"n_h", r.sig.n_h},
         {"n_0", r.sig.n_0},
         {"module", to_json(r.module)},
         {"cell", to_json(r.cell)},
         {"cell_multiplicity", r.cell_multiplicity}};
  if (r.non_genuine) j["non_genuine"] = to_json(*r.non_genuine);
  if (r.genuine) j["genuine"] = to_json(*r.genuine);
  return orbit_fields(std::move(j), r.orbit);
}

CoherentResult coherent_from_json(const Json& j) {
  CoherentResult r{group_from_json(j.at("group")),
                   orbit_from_fields(j),
                   CosetSignature{j.at("n_h").get<int>(), j.at("n_0").get<int>()},
                   module_from_json(j.at("module")),
                   std::nullopt,
                   std::nullopt,
                   cell_from_json(j.at("cell")),
                   j.at("cell_multiplicity").get<std::int64_t>()};
  if (j.contains("non_genuine")) r.non_genuine = module_from_json(j.at("non_genuine"));
  if (j.contains("genuine")) r.genuine = module_from_json(j.at("genuine"));
  return r;
}

Json to_json(const CharacterTable& t) {
  Json rows = Json::array();
  Json classes = Json::array();
  for (std::size_t i = 0; i < t.partitions().size(); ++i) {
    rows.push_back({{"label", to_json(t.partitions()[i])}, {"values", t.rows()[i]}});
    classes.push_back(to_json(t.partitions()[i]));
  }
  return {{"degree", t.degree()}, {"classes", classes}, {"rows", rows}};
}

CharacterTable table_from_json(const Json& j) {
  const int n = j.at("degree").get<int>();
  const auto parts = partitions_of(n);
  const auto& rows = j.at("rows");
  if (rows.size() != parts.size()) throw DegreeMismatch("character table row count mismatch");
  std::vector<std::vector<std::int64_t>> values;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (diagram_from_json(rows[i].at("label")) != parts[i]) {
      throw Error("character table rows are not in canonical order");
    }
    values.push_back(rows[i].at("values").get<std::vector<std::int64_t>>());
  }
  return CharacterTable(n, std::move(values));
}

Json to_json(const oracle::VerificationReport& r) {
  Json records = Json::array();
  for (const auto& c : r.records) {
    records.push_back({{"check", c.check},
                       {"instance", c.instance},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"pass", c.pass}});
  }
  return {{"all_passed", r.all_passed()}, {"records", records}};
}

oracle::VerificationReport report_from_json(const Json& j) {
  oracle::VerificationReport r;
  for (const auto& c : j.at("records")) {
    r.records.push_back({c.at("check").get<std::string>(), c.at("instance").get<std::string>(),
                         c.at("expected").get<std::string>(), c.at("actual").get<std::string>(),
                         c.at("pass").get<bool>()});
  }
  return r;
}

}  // namespace typea
