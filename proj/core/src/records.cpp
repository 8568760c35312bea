#include "arcsys/records.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <system_error>

#include "arcsys/error.hpp"

namespace arcsys {

using nlohmann::ordered_json;

namespace {

ordered_json vec_json(Vec2 w) { return ordered_json::array({w.u, w.v}); }

ordered_json degrees_json(const DegreeVector& d) {
  return ordered_json::array({d.sorted[0], d.sorted[1], d.sorted[2], d.sorted[3]});
}

ordered_json arc_json(const ArcClass& x) {
  ordered_json j;
  if (x.is_loop()) {
    j["kind"] = "loop";
    j["base"] = std::string(1, label_of(x.base()));
    j["enclosed"] = std::string(1, label_of(x.enclosed()));
  } else {
    j["kind"] = "segment";
    j["endpoints"] = ordered_json::array({std::string(1, label_of(x.first)), std::string(1, label_of(x.second))});
  }
  j["vector"] = vec_json(x.vec);
  return j;
}

ordered_json fingerprint_json(const Fingerprint& f) {
  ordered_json j;
  j["j_size"] = f.j_size;
  j["system_degrees"] = degrees_json(f.system_degrees);
  j["j_degrees"] = degrees_json(f.j_degrees);
  j["loop_count"] = f.loop_count;
  j["nonloop_degrees"] = degrees_json(f.nonloop_degrees);
  j["j_components"] = f.j_components;
  return j;
}

ordered_json system_json(const ArcSystem& s) {
  ordered_json arcs = ordered_json::array();
  for (const auto& x : s.arcs()) arcs.push_back(arc_json(x));
  return arcs;
}

ordered_json record_json(const SystemRecord& r) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  if (!r.name.empty()) j["name"] = r.name;
  j["surface"] = kSurfaceTag;
  j["k"] = r.system.k();
  j["arcs"] = system_json(r.system);
  Fingerprint f = fingerprint(r.system);
  ordered_json derived;
  derived["degree_vector"] = degrees_json(f.system_degrees);
  derived["j_size"] = f.j_size;
  derived["fingerprint"] = fingerprint_json(f);
  if (!r.label.empty()) derived["label"] = r.label;
  j["derived"] = derived;
  if (!r.tags.empty()) {
    ordered_json t;
    for (const auto& [k, v] : r.tags) t[k] = v;
    j["tags"] = t;
  }
  return j;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

Puncture puncture_field(const ordered_json& v, const std::string& where) {
  if (!v.is_string() || v.get<std::string>().size() != 1) fail(where, "puncture must be one of a,b,c,d");
  auto p = parse_puncture(v.get<std::string>()[0]);
  if (!p) fail(where, "puncture must be one of a,b,c,d");
  return *p;
}

Vec2 vector_field(const ordered_json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    fail(where, "vector must be a pair of integers");
  return {v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
}

ArcClass arc_from(const ordered_json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("vector")) fail(where, "arc needs kind and vector");
  Vec2 w = vector_field(j["vector"], where);
  try {
    if (j["kind"] == "segment") {
      if (!j.contains("endpoints") || !j["endpoints"].is_array() || j["endpoints"].size() != 2)
        fail(where, "segment needs two endpoints");
      return segment(puncture_field(j["endpoints"][0], where), puncture_field(j["endpoints"][1], where), w);
    }
    if (j["kind"] == "loop") {
      if (!j.contains("base") || !j.contains("enclosed")) fail(where, "loop needs base and enclosed");
      return loop(puncture_field(j["base"], where), puncture_field(j["enclosed"], where), w);
    }
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  fail(where, "unknown arc kind");
}

DegreeVector degrees_from(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) fail(where, "degree vector must have four entries");
  DegreeVector d;
  for (int i = 0; i < 4; ++i) d.sorted[i] = j[i].get<int>();
  return d;
}

SystemRecord record_from(const ordered_json& j, std::size_t index) {
  std::string where = "record " + std::to_string(index);
  if (!j.is_object()) fail(where, "expected an object");
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    fail(where, "unsupported schema_version");
  if (!j.contains("surface") || j["surface"] != kSurfaceTag) fail(where, "unexpected surface tag");
  if (!j.contains("k") || !j["k"].is_number_integer()) fail(where, "missing k");
  if (!j.contains("arcs") || !j["arcs"].is_array()) fail(where, "missing arcs");
  std::vector<ArcClass> arcs;
  for (std::size_t i = 0; i < j["arcs"].size(); ++i) arcs.push_back(arc_from(j["arcs"][i], where + " arc " + std::to_string(i)));
  SystemRecord r;
  try {
    r.system = ArcSystem(std::move(arcs), j["k"].get<int>());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  if (j.contains("name")) r.name = j["name"].get<std::string>();
  if (j.contains("tags")) {
    for (auto it = j["tags"].begin(); it != j["tags"].end(); ++it) r.tags[it.key()] = it.value().get<std::string>();
  }
  if (j.contains("derived")) {
    const auto& d = j["derived"];
    Fingerprint f = fingerprint(r.system);
    if (d.contains("degree_vector") && degrees_from(d["degree_vector"], where) != f.system_degrees)
      fail(where, "stored degree_vector does not match the arcs");
    if (d.contains("j_size") && d["j_size"].get<int>() != f.j_size) fail(where, "stored j_size does not match the arcs");
    if (d.contains("fingerprint") && d["fingerprint"] != fingerprint_json(f))
      fail(where, "stored fingerprint does not match the arcs");
    if (d.contains("label")) r.label = d["label"].get<std::string>();
  }
  return r;
}

}  // namespace

std::string systems_to_json(const std::vector<SystemRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return arr.dump(1) + "\n";
}

std::vector<SystemRecord> systems_from_json(const std::string& text) {
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) return {};
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw SchemaError("expected a JSON array of system records");
  std::vector<SystemRecord> out;
  try {
    for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(record_from(doc[i], i));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed record: ") + e.what());
  }
  return out;
}

std::string orbit_report_to_json(int k, std::size_t input_count, const std::vector<OrbitClass>& classes) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "orbit_report";
  j["k"] = k;
  j["input_systems"] = input_count;
  j["class_count"] = classes.size();
  ordered_json arr = ordered_json::array();
  for (const auto& c : classes) {
    ordered_json e;
    e["label"] = c.label.empty() ? ordered_json(nullptr) : ordered_json(c.label);
    e["members"] = c.members;
    e["fingerprint"] = fingerprint_json(c.fingerprint);
    e["representative"] = record_json({"", c.representative, c.label, {}});
    arr.push_back(e);
  }
  j["classes"] = arr;
  return j.dump(1) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::system_error(errno, std::generic_category(), "write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace arcsys
