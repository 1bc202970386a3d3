#include "sheafcalc_cli/documents.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sheafcalc/error.hpp"

namespace sheafcalc::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& msg) {
  throw InputError("at " + (pointer.empty() ? std::string("/") : pointer) + ": " + msg);
}

const json& field(const json& j, const std::string& pointer, const char* key) {
  if (!j.is_object()) fail(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(pointer, std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const json& j, const std::string& pointer) {
  if (!j.is_string()) fail(pointer, "expected a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& pointer) {
  if (!j.is_array()) fail(pointer, "expected an array");
  return j;
}

std::vector<std::string> strings(const json& j, const std::string& pointer) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& e : array(j, pointer)) out.push_back(text(e, pointer + "/" + std::to_string(i++)));
  return out;
}

void require_known(const std::vector<std::string>& names, const std::string& name, const std::string& pointer,
                   const char* what) {
  if (std::find(names.begin(), names.end(), name) == names.end()) fail(pointer, std::string("unknown ") + what + " '" + name + "'");
}

std::string optional_name(const json& j) {
  auto it = j.find("name");
  return it != j.end() && it->is_string() ? it->get<std::string>() : std::string{};
}

SiteDocument parse_site(const json& j) {
  SiteDocument d;
  d.name = optional_name(j);
  d.category.objects = strings(field(j, "", "objects"), "/objects");
  std::size_t i = 0;
  for (const auto& a : array(field(j, "", "arrows"), "/arrows")) {
    const std::string p = "/arrows/" + std::to_string(i++);
    d.category.arrows.push_back({text(field(a, p, "id"), p + "/id"), text(field(a, p, "dom"), p + "/dom"),
                                 text(field(a, p, "cod"), p + "/cod")});
    require_known(d.category.objects, d.category.arrows.back().dom, p + "/dom", "object");
    require_known(d.category.objects, d.category.arrows.back().cod, p + "/cod", "object");
  }
  std::vector<std::string> arrow_names;
  for (const auto& a : d.category.arrows) arrow_names.push_back(a.id);
  const json& ids = field(j, "", "identities");
  if (ids.is_object()) {
    for (const auto& [obj, arrow] : ids.items()) {
      const std::string p = "/identities/" + obj;
      require_known(d.category.objects, obj, p, "object");
      d.category.identities.emplace_back(obj, text(arrow, p));
      require_known(arrow_names, d.category.identities.back().second, p, "arrow");
    }
  } else {
    i = 0;
    for (const auto& e : array(ids, "/identities")) {
      const std::string p = "/identities/" + std::to_string(i++);
      const auto pair = strings(e, p);
      if (pair.size() != 2) fail(p, "expected [object, arrow]");
      require_known(d.category.objects, pair[0], p + "/0", "object");
      require_known(arrow_names, pair[1], p + "/1", "arrow");
      d.category.identities.emplace_back(pair[0], pair[1]);
    }
  }
  if (auto it = j.find("composition"); it != j.end()) {
    i = 0;
    for (const auto& e : array(*it, "/composition")) {
      const std::string p = "/composition/" + std::to_string(i++);
      const auto t = strings(e, p);
      if (t.size() != 3) fail(p, "expected [g, f, g∘f]");
      for (std::size_t k = 0; k < 3; ++k) require_known(arrow_names, t[k], p + "/" + std::to_string(k), "arrow");
      d.category.composition.push_back({t[0], t[1], t[2]});
    }
  }
  if (auto it = j.find("coverage"); it != j.end()) {
    d.coverage_kind = text(field(*it, "/coverage", "kind"), "/coverage/kind");
    if (d.coverage_kind == "explicit") {
      const json& sieves = field(*it, "/coverage", "sieves");
      if (!sieves.is_object()) fail("/coverage/sieves", "expected an object keyed by object name");
      for (const auto& [obj, list] : sieves.items()) {
        const std::string p = "/coverage/sieves/" + obj;
        require_known(d.category.objects, obj, p, "object");
        std::vector<std::vector<std::string>> gens;
        std::size_t k = 0;
        for (const auto& s : array(list, p)) {
          const std::string q = p + "/" + std::to_string(k++);
          gens.push_back(strings(s, q));
          for (std::size_t m = 0; m < gens.back().size(); ++m) {
            require_known(arrow_names, gens.back()[m], q + "/" + std::to_string(m), "arrow");
          }
        }
        d.coverage.emplace_back(obj, std::move(gens));
      }
    } else if (d.coverage_kind != "trivial" && d.coverage_kind != "canonical-frame") {
      fail("/coverage/kind", "unknown coverage kind '" + d.coverage_kind + "'");
    }
  }
  return d;
}

FrameDocument parse_frame(const json& j) {
  FrameDocument d;
  d.name = optional_name(j);
  d.elements = strings(field(j, "", "elements"), "/elements");
  std::size_t i = 0;
  for (const auto& e : array(field(j, "", "order"), "/order")) {
    const std::string p = "/order/" + std::to_string(i++);
    const auto pair = strings(e, p);
    if (pair.size() != 2) fail(p, "expected [lower, upper]");
    require_known(d.elements, pair[0], p + "/0", "element");
    require_known(d.elements, pair[1], p + "/1", "element");
    d.order.emplace_back(pair[0], pair[1]);
  }
  return d;
}

SuiteDocument parse_suite(const json& j) {
  SuiteDocument d;
  d.name = optional_name(j);
  std::size_t i = 0;
  for (const auto& e : array(field(j, "", "entries"), "/entries")) {
    const std::string p = "/entries/" + std::to_string(i++);
    SuiteEntry entry;
    entry.path = text(field(e, p, "path"), p + "/path");
    entry.logic = text(field(e, p, "logic"), p + "/logic");
    entry.name = optional_name(e);
    if (entry.name.empty()) entry.name = entry.path + " " + entry.logic;
    if (auto it = e.find("expect"); it != e.end()) {
      const auto v = text(*it, p + "/expect");
      if (v != "holds" && v != "fails") fail(p + "/expect", "expected \"holds\" or \"fails\"");
      entry.expect_holds = v == "holds";
    }
    d.entries.push_back(std::move(entry));
  }
  return d;
}

}  // namespace

Document parse_document(const json& j) {
  const std::string format = text(field(j, "", "format"), "/format");
  if (format == kSiteFormat) return parse_site(j);
  if (format == kFrameFormat) return parse_frame(j);
  if (format == kSuiteFormat) return parse_suite(j);
  fail("/format", "unknown document format '" + format + "'");
}

Document parse_document_text(const std::string& content) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& e) {
    throw InputError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_document(j);
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    Document d = parse_document_text(ss.str());
    if (auto* suite = std::get_if<SuiteDocument>(&d)) {
      for (auto& e : suite->entries) {
        if (std::filesystem::path(e.path).is_relative()) e.path = (path.parent_path() / e.path).string();
      }
    }
    return d;
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json to_json(const SiteDocument& d) {
  json j;
  j["format"] = kSiteFormat;
  if (!d.name.empty()) j["name"] = d.name;
  j["objects"] = d.category.objects;
  j["arrows"] = json::array();
  for (const auto& a : d.category.arrows) j["arrows"].push_back({{"id", a.id}, {"dom", a.dom}, {"cod", a.cod}});
  j["identities"] = json::object();
  for (const auto& [o, f] : d.category.identities) j["identities"][o] = f;
  j["composition"] = json::array();
  for (const auto& c : d.category.composition) j["composition"].push_back({c.g, c.f, c.gf});
  j["coverage"] = {{"kind", d.coverage_kind}};
  if (d.coverage_kind == "explicit") {
    j["coverage"]["sieves"] = json::object();
    for (const auto& [obj, gens] : d.coverage) j["coverage"]["sieves"][obj] = gens;
  }
  return j;
}

json to_json(const FrameDocument& d) {
  json j;
  j["format"] = kFrameFormat;
  if (!d.name.empty()) j["name"] = d.name;
  j["elements"] = d.elements;
  j["order"] = json::array();
  for (const auto& [x, y] : d.order) j["order"].push_back({x, y});
  return j;
}

json to_json(const SuiteDocument& d) {
  json j;
  j["format"] = kSuiteFormat;
  if (!d.name.empty()) j["name"] = d.name;
  j["entries"] = json::array();
  for (const auto& e : d.entries) {
    json entry{{"name", e.name}, {"path", e.path}, {"logic", e.logic}};
    if (e.expect_holds) entry["expect"] = *e.expect_holds ? "holds" : "fails";
    j["entries"].push_back(entry);
  }
  return j;
}

namespace {

GrothendieckTopology canonical_frame_topology(const std::shared_ptr<const SieveLattice>& lattice) {
  const auto& C = lattice->category();
  std::vector<std::pair<Elem, Elem>> order;
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    for (std::size_t b = 0; b < C.object_count(); ++b) {
      const auto hom = C.hom(object_at(a), object_at(b));
      if (hom.size() > 1) {
        throw InputError("canonical-frame coverage needs a poset; there are " + std::to_string(hom.size()) +
                         " arrows " + C.name(object_at(a)) + " -> " + C.name(object_at(b)));
      }
      if (!hom.empty()) order.emplace_back(a, b);
    }
  }
  std::vector<std::string> names;
  for (std::size_t a = 0; a < C.object_count(); ++a) names.push_back(C.name(object_at(a)));
  const FiniteFrame A = FiniteFrame::from_order(names, order);
  std::vector<Sieve> covering;
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    for (const auto& S : lattice->sieves(object_at(a))) {
      Elem j = A.bottom();
      for (ArrowId f : members(C, S)) j = A.join(j, index(C.dom(f)));
      if (j == a) covering.push_back(S);
    }
  }
  return make_topology(lattice, covering);
}

}  // namespace

Site build_site(const SiteDocument& d, const Caps& caps) {
  auto lattice = make_lattice(FinCategory::from_raw(d.category), caps);
  if (d.coverage_kind == "trivial") return Site(trivial_topology(lattice));
  if (d.coverage_kind == "canonical-frame") return Site(canonical_frame_topology(lattice));
  const auto& C = lattice->category();
  std::vector<Sieve> gens;
  for (const auto& [obj, sieves] : d.coverage) {
    const ObjectId c = C.object(obj);
    for (const auto& arrows : sieves) {
      std::vector<ArrowId> ids;
      for (const auto& f : arrows) {
        const ArrowId id = C.arrow(f);
        if (C.cod(id) != c) throw InputError("coverage on '" + obj + "' lists arrow '" + f + "' with another codomain");
        ids.push_back(id);
      }
      gens.push_back(generate_sieve(C, c, ids));
    }
  }
  return Site(generate_topology(lattice, gens));
}

FiniteFrame build_frame(const FrameDocument& d, const Caps& caps) {
  if (d.elements.size() > caps.max_frame) {
    throw CapExceeded("frame has " + std::to_string(d.elements.size()) + " elements; the cap is " +
                      std::to_string(caps.max_frame));
  }
  return FiniteFrame::from_order(d.elements, d.order);
}

SiteDocument site_document(const std::string& name, const RawCategory& raw) {
  SiteDocument d;
  d.name = name;
  d.category = raw;
  return d;
}

SiteDocument topology_listing(const Site& site, std::string name) {
  SiteDocument d = site_document(std::move(name), site.category().to_raw());
  d.coverage_kind = "explicit";
  const auto& C = site.category();
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    std::vector<std::vector<std::string>> listed;
    for (const auto& S : site.topology().covering_sieves(object_at(c))) {
      std::vector<std::string> names;
      for (ArrowId f : members(C, S)) names.push_back(C.name(f));
      listed.push_back(std::move(names));
    }
    d.coverage.emplace_back(C.name(object_at(c)), std::move(listed));
  }
  return d;
}

FrameDocument frame_document(const std::string& name, const FiniteFrame& A) {
  FrameDocument d;
  d.name = name;
  d.elements = A.names();
  for (const auto& [x, y] : A.covering_pairs()) d.order.emplace_back(A.name(x), A.name(y));
  return d;
}

Caps load_caps(const std::filesystem::path& path, Caps base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("config '" + path.string() + "': parse error at byte " + std::to_string(e.byte));
  }
  auto read = [&](const char* key, std::size_t& slot) {
    if (auto it = j.find(key); it != j.end()) {
      if (!it->is_number_unsigned()) throw InputError(std::string("config field '") + key + "' must be a non-negative integer");
      slot = it->get<std::size_t>();
    }
  };
  read("max_fanin", base.max_fanin);
  read("max_enum", base.max_enum_arrows);
  read("max_frame", base.max_frame);
  read("max_nucleus_frame", base.max_nucleus_frame);
  read("max_assignments", base.max_assignments);
  return base;
}

}  // namespace sheafcalc::cli
