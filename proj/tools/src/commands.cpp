#include "sheafcalc_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <thread>

#include <CLI11.hpp>

#include "sheafcalc/catalog.hpp"
#include "sheafcalc/criteria.hpp"
#include "sheafcalc/error.hpp"
#include "sheafcalc/locale.hpp"
#include "sheafcalc/ltop.hpp"
#include "sheafcalc_cli/documents.hpp"

namespace sheafcalc::cli {

using nlohmann::json;

namespace {

void emit(std::ostream& out, const Options& opt, const json& report, const std::string& text) {
  if (opt.json) {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

LogicSpec resolve_logic(const Property& prop) {
  if (prop.sequent) throw InputError("this command takes --logic or --term, not --sequent");
  if (prop.logic) return lookup_logic(*prop.logic);
  if (prop.term) return custom_logic("term", parse_term(*prop.term));
  throw InputError("one of --logic or --term is required");
}

HornSequent resolve_sequent(const Property& prop) {
  if (prop.sequent) return parse_sequent(*prop.sequent);
  return axiom_sequent(resolve_logic(prop).axiom);
}

json sieve_json(const FinCategory& C, const Sieve& S) {
  json out = json::array();
  for (ArrowId f : members(C, S)) out.push_back(C.name(f));
  return out;
}

json topology_json(const GrothendieckTopology& K) {
  const auto& C = K.category();
  json j = json::object();
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    json list = json::array();
    for (const auto& S : K.covering_sieves(object_at(c))) list.push_back(sieve_json(C, S));
    j[C.name(object_at(c))] = list;
  }
  return j;
}

std::string topology_text(const GrothendieckTopology& K) {
  const auto& C = K.category();
  std::string s;
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    s += "  " + C.name(object_at(c)) + ":";
    for (const auto& S : K.covering_sieves(object_at(c))) s += " " + to_string(C, S);
    s += "\n";
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct CheckOutcome {
  bool holds;
  json witness;
  std::string witness_text;
};

CheckOutcome check_site(const Site& site, const HornSequent& s) {
  const auto v = holds_internally(site, s);
  CheckOutcome out{v.holds, nullptr, {}};
  if (v.witness) {
    const auto& C = site.category();
    out.witness = {{"object", C.name(v.witness->object)}, {"assignment", json::object()}};
    for (const auto& [var, S] : v.witness->assignment) out.witness["assignment"][var] = sieve_json(C, S);
    out.witness_text = to_string(site, *v.witness);
  }
  return out;
}

CheckOutcome check_frame(const FiniteFrame& A, const HornSequent& s, const Caps& caps) {
  const auto v = holds_in_frame(s, A, caps.max_assignments);
  CheckOutcome out{v.holds, nullptr, {}};
  if (!v.holds) {
    out.witness = {{"assignment", json::object()}};
    for (const auto& [var, a] : v.witness) {
      out.witness["assignment"][var] = A.name(a);
      if (!out.witness_text.empty()) out.witness_text += ", ";
      out.witness_text += var + " = " + A.name(a);
    }
  }
  return out;
}

template <class T>
const T& expect_kind(const Document& d, const char* what) {
  if (const T* p = std::get_if<T>(&d)) return *p;
  throw InputError(std::string("expected a ") + what + " document");
}

unsigned worker_count(const Options& opt) {
  if (opt.jobs > 0) return opt.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs task(i) for i < n on up to `jobs` workers; results in index order.
template <class R, class F>
std::vector<R> run_parallel(std::size_t n, unsigned jobs, F task) {
  std::vector<R> results(n);
  for (std::size_t start = 0; start < n; start += jobs) {
    std::vector<std::future<R>> batch;
    for (std::size_t i = start; i < std::min(n, start + jobs); ++i) batch.push_back(std::async(std::launch::async, task, i));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  return results;
}

}  // namespace

int cmd_validate(const std::filesystem::path& path, const Options& opt, std::ostream& out) {
  const Document doc = load_document(path);
  json report{{"file", path.string()}, {"valid", true}};
  std::string text;
  if (const auto* s = std::get_if<SiteDocument>(&doc)) {
    const Site site = build_site(*s, opt.caps);
    const auto& C = site.category();
    report["kind"] = "site";
    report["objects"] = C.object_count();
    report["arrows"] = C.arrow_count();
    report["coverage"] = s->coverage_kind;
    report["covering_sieves"] = site.topology().covering_count();
    report["dense"] = is_dense_topology(site.topology());
    text = "valid site: " + std::to_string(C.object_count()) + " objects, " + std::to_string(C.arrow_count()) +
           " arrows, " + s->coverage_kind + " coverage with " + std::to_string(site.topology().covering_count()) +
           " covering sieves\n";
  } else if (const auto* f = std::get_if<FrameDocument>(&doc)) {
    const FiniteFrame A = build_frame(*f, opt.caps);
    report["kind"] = "frame";
    report["elements"] = A.size();
    report["boolean"] = A.is_boolean();
    text = "valid frame: " + std::to_string(A.size()) + " elements" + (A.is_boolean() ? ", Boolean" : "") + "\n";
  } else {
    const auto& suite = std::get<SuiteDocument>(doc);
    for (const auto& e : suite.entries) {
      lookup_logic(e.logic);
      load_document(e.path);
    }
    report["kind"] = "suite";
    report["entries"] = suite.entries.size();
    text = "valid suite: " + std::to_string(suite.entries.size()) + " entries\n";
  }
  emit(out, opt, report, text);
  return kHolds;
}

int cmd_check(const std::filesystem::path& path, const Property& prop, const Options& opt, std::ostream& out) {
  const Document doc = load_document(path);
  const HornSequent sequent = resolve_sequent(prop);
  CheckOutcome outcome;
  if (const auto* s = std::get_if<SiteDocument>(&doc)) {
    outcome = check_site(build_site(*s, opt.caps), sequent);
  } else {
    outcome = check_frame(build_frame(expect_kind<FrameDocument>(doc, "site or frame"), opt.caps), sequent, opt.caps);
  }
  json report{{"file", path.string()}, {"sequent", to_string(sequent)}, {"holds", outcome.holds}};
  if (!outcome.holds) report["witness"] = outcome.witness;
  emit(out, opt, report,
       outcome.holds ? "holds: " + to_string(sequent) + "\n"
                     : "fails: " + to_string(sequent) + "\n  witness: " + outcome.witness_text + "\n");
  return outcome.holds ? kHolds : kFails;
}

int cmd_ltop(const std::filesystem::path& path, const Property& prop, const std::optional<std::filesystem::path>& output,
             const Options& opt, std::ostream& out) {
  const auto& doc = load_document(path);
  const Site site = build_site(expect_kind<SiteDocument>(doc, "site"), opt.caps);
  const LogicSpec logic = resolve_logic(prop);
  const GrothendieckTopology K = l_topology(site, logic.axiom);
  const Site sk(K);
  const bool dense = is_dense_over(K, site.topology());
  const bool satisfies = validates_logic(sk, logic).holds;
  const bool idempotent = l_topology(sk, logic.axiom) == K;
  const bool guaranteed = is_admissible(logic.axiom);

  json report{{"file", path.string()},     {"logic", logic.name},       {"axiom", to_string(logic.axiom)},
              {"admissible", guaranteed},  {"dense_over_input", dense}, {"satisfies_logic", satisfies},
              {"idempotent", idempotent},  {"covering", topology_json(K)}};
  std::string text = "L-topology for " + logic.name + " (" + to_string(logic.axiom) + ")\n" + topology_text(K);
  text += "properties" + std::string(guaranteed ? "" : " (not guaranteed: axiom is not admissible)") + ":\n";
  text += "  dense over input topology: " + yes_no(dense) + "\n";
  text += "  satisfies " + logic.name + ": " + yes_no(satisfies) + "\n";
  text += "  idempotent: " + yes_no(idempotent) + "\n";
  if (output) {
    std::ofstream f(*output);
    if (!f) throw InputError("cannot write '" + output->string() + "'");
    f << to_json(topology_listing(sk, logic.name + " topology")).dump(2) << "\n";
    report["output"] = output->string();
    text += "listing written to " + output->string() + "\n";
  }
  emit(out, opt, report, text);
  return !guaranteed || (dense && satisfies && idempotent) ? kHolds : kFails;
}

int cmd_frame_quotient(const std::filesystem::path& path, const std::vector<std::string>& seeds, const Options& opt,
                       std::ostream& out) {
  const FiniteFrame A = build_frame(expect_kind<FrameDocument>(load_document(path), "frame"), opt.caps);
  std::vector<Elem> ids;
  for (const auto& s : seeds) {
    auto e = A.find(s);
    if (!e) throw InputError("unknown element '" + s + "'");
    ids.push_back(*e);
  }
  const Filter F = filter_generated(A, ids);
  const Quotient Q = quotient_by_filter(A, F);
  json report{{"file", path.string()}, {"filter", json::array()}, {"projection", json::object()},
              {"quotient", to_json(frame_document("quotient", Q.frame))}, {"warnings", Q.warnings}};
  std::string text = "filter:";
  for (Elem a = 0; a < A.size(); ++a) {
    if (F.contains(a)) {
      report["filter"].push_back(A.name(a));
      text += " " + A.name(a);
    }
  }
  text += "\nprojection:\n";
  for (Elem a = 0; a < A.size(); ++a) {
    report["projection"][A.name(a)] = Q.frame.name(Q.projection[a]);
    text += "  " + A.name(a) + " -> " + Q.frame.name(Q.projection[a]) + "\n";
  }
  text += "quotient: " + std::to_string(Q.frame.size()) + " elements, covering pairs:";
  for (const auto& [x, y] : Q.frame.covering_pairs()) text += " " + Q.frame.name(x) + "<" + Q.frame.name(y);
  text += "\n";
  for (const auto& w : Q.warnings) text += "warning: " + w + "\n";
  emit(out, opt, report, text);
  return kHolds;
}

int cmd_lsub(const std::filesystem::path& path, const Property& prop, const Options& opt, std::ostream& out) {
  const FiniteFrame A = build_frame(expect_kind<FrameDocument>(load_document(path), "frame"), opt.caps);
  const LogicSpec logic = resolve_logic(prop);
  const Quotient Q = l_sublocale(A, logic.axiom, opt.caps.max_assignments);
  const NucleusChecks checks = nucleus_checks(A, Q.nucleus);
  const bool satisfies = holds_in_frame(logic, Q.frame, opt.caps.max_assignments).holds;

  json report{{"file", path.string()}, {"logic", logic.name},         {"nucleus", json::object()},
              {"fixset", json::array()}, {"dense", checks.dense},   {"weakly_open", checks.weakly_open},
              {"implicationally_open", checks.implicationally_open}, {"satisfies_logic", satisfies},
              {"warnings", Q.warnings}};
  std::string text = "nucleus for " + logic.name + ":\n";
  for (Elem a = 0; a < A.size(); ++a) {
    report["nucleus"][A.name(a)] = A.name(Q.nucleus(a));
    text += "  " + A.name(a) + " -> " + A.name(Q.nucleus(a)) + "\n";
  }
  text += "fixset:";
  for (Elem a : Q.nucleus.fixset()) {
    report["fixset"].push_back(A.name(a));
    text += " " + A.name(a);
  }
  text += "\ndense: " + yes_no(checks.dense) + ", weakly open: " + yes_no(checks.weakly_open) +
          ", implicationally open: " + yes_no(checks.implicationally_open) + "\n";
  text += "fixset satisfies " + logic.name + ": " + yes_no(satisfies) + "\n";

  bool agree = true;
  if (prop.logic && (*prop.logic == "demorgan" || *prop.logic == "goedel_dummett")) {
    const DirectSublocale direct = *prop.logic == "demorgan" ? demorganization_direct(A) : gd_sublocale_direct(A);
    json mismatches = json::array();
    for (Elem a = 0; a < A.size(); ++a) {
      if (direct.xi[a] != Q.nucleus(a)) {
        mismatches.push_back({{"element", A.name(a)}, {"direct", A.name(direct.xi[a])}, {"quotient", A.name(Q.nucleus(a))}});
      }
    }
    agree = mismatches.empty() && direct.meet_closed;
    report["direct_description"] = {{"meet_closed", direct.meet_closed}, {"mismatches", mismatches}};
    text += "direct description agrees with the quotient: " + yes_no(agree) + "\n";
    for (const auto& m : mismatches) {
      text += "  discrepancy at " + m["element"].get<std::string>() + ": direct " + m["direct"].get<std::string>() +
              ", quotient " + m["quotient"].get<std::string>() + "\n";
    }
  }
  for (const auto& w : Q.warnings) text += "warning: " + w + "\n";
  emit(out, opt, report, text);
  return agree ? kHolds : kFails;
}

int cmd_corpus(const std::optional<std::filesystem::path>& suite_path, const Options& opt, std::ostream& out) {
  const unsigned jobs = worker_count(opt);
  json rows = json::array();
  std::string text;
  bool ok = true;
  if (!suite_path) {
    const auto corpus = category_corpus();
    struct Row {
      json j;
      std::string text;
      bool ok = true;
    };
    const auto results = run_parallel<Row>(corpus.size(), jobs, [&](std::size_t i) {
      Row row;
      auto lattice = make_lattice(FinCategory::from_raw(corpus[i].raw), opt.caps);
      const Site site = presheaf_site(lattice);
      const auto& C = lattice->category();
      const std::pair<const char*, bool> oracles[] = {{"classical", is_groupoid(C)},
                                                      {"demorgan", right_ore(C)},
                                                      {"goedel_dummett", gd_factorization(C)},
                                                      {"kreisel_putnam", kp_presheaf_criterion(*lattice)}};
      row.j = {{"name", corpus[i].name}};
      row.text = corpus[i].name;
      for (const auto& [name, oracle] : oracles) {
        const bool holds = validates_logic(site, lookup_logic(name)).holds;
        row.j[name] = {{"holds", holds}, {"oracle", oracle}};
        row.text += std::string("  ") + name + "=" + (holds ? "holds" : "fails") + (holds == oracle ? "" : "(MISMATCH)");
        row.ok = row.ok && holds == oracle;
      }
      row.text += "\n";
      return row;
    });
    for (const auto& r : results) {
      rows.push_back(r.j);
      text += r.text;
      ok = ok && r.ok;
    }
  } else {
    const auto suite = expect_kind<SuiteDocument>(load_document(*suite_path), "suite");
    struct Row {
      json j;
      std::string text;
      bool ok = true;
    };
    const auto results = run_parallel<Row>(suite.entries.size(), jobs, [&](std::size_t i) {
      const auto& e = suite.entries[i];
      const Document doc = load_document(e.path);
      const HornSequent s = axiom_sequent(lookup_logic(e.logic).axiom);
      const CheckOutcome o = std::holds_alternative<SiteDocument>(doc)
                                 ? check_site(build_site(std::get<SiteDocument>(doc), opt.caps), s)
                                 : check_frame(build_frame(expect_kind<FrameDocument>(doc, "site or frame"), opt.caps), s,
                                               opt.caps);
      Row row;
      row.ok = !e.expect_holds || *e.expect_holds == o.holds;
      row.j = {{"name", e.name}, {"logic", e.logic}, {"holds", o.holds}, {"pass", row.ok}};
      row.text = std::string(row.ok ? "pass  " : "FAIL  ") + e.name + ": " + (o.holds ? "holds" : "fails") +
                 (o.holds ? "" : " (" + o.witness_text + ")") + "\n";
      return row;
    });
    for (const auto& r : results) {
      rows.push_back(r.j);
      text += r.text;
      ok = ok && r.ok;
    }
  }
  emit(out, opt, json{{"rows", rows}, {"ok", ok}}, text + (ok ? "all entries pass\n" : "some entries fail\n"));
  return ok ? kHolds : kFails;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intermediate logics in finite sheaf toposes and finite frames"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::optional<std::size_t> max_fanin, max_enum, max_frame;
  app.add_option("--max-fanin", max_fanin, "Largest fan-in of any object (default 16)");
  app.add_option("--max-enum", max_enum, "Largest arrow count for topology enumeration (default 5)");
  app.add_option("--max-frame", max_frame, "Largest frame size (default 12)");
  app.add_flag("--json", opt.json, "Print a JSON report instead of text");
  app.add_option("--jobs", opt.jobs, "Worker threads for corpus runs");

  std::string path;
  Property prop;
  auto add_property = [&prop](CLI::App* cmd, bool with_sequent) {
    auto* l = cmd->add_option("--logic", prop.logic, "Registry logic: classical, demorgan, goedel_dummett, kreisel_putnam");
    auto* t = cmd->add_option("--term", prop.term, "Axiom term, e.g. \"p | ~p\"");
    l->excludes(t);
    if (with_sequent) {
      auto* s = cmd->add_option("--sequent", prop.sequent, "Horn sequent, e.g. \"x & y = 0 |- y = y & ~x\"");
      s->excludes(l)->excludes(t);
    }
  };

  auto* validate = app.add_subcommand("validate", "Check that a document loads");
  validate->add_option("file", path)->required();

  auto* check = app.add_subcommand("check", "Check a logic or sequent on a site or frame");
  check->add_option("file", path)->required();
  add_property(check, true);

  std::optional<std::string> output;
  auto* ltop = app.add_subcommand("ltop", "Compute the L-topology of a site");
  ltop->add_option("file", path)->required();
  ltop->add_option("-o,--output", output, "Write the topology as a reloadable site document");
  add_property(ltop, false);

  std::vector<std::string> seeds;
  auto* fq = app.add_subcommand("frame-quotient", "Quotient a frame by the filter generated by seeds");
  fq->add_option("file", path)->required();
  fq->add_option("--seed", seeds, "Filter generator (repeatable)");

  auto* lsub = app.add_subcommand("lsub", "Compute the L-sublocale of a frame");
  lsub->add_option("file", path)->required();
  add_property(lsub, false);

  std::optional<std::string> suite;
  auto* corpus = app.add_subcommand("corpus", "Run the built-in oracle matrix or a suite document");
  corpus->add_option("suite", suite, "Suite document (omit for the built-in catalog)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (const char* config = std::getenv("SHEAFCALC_CONFIG"); config && *config) opt.caps = load_caps(config, opt.caps);
    if (max_fanin) opt.caps.max_fanin = *max_fanin;
    if (max_enum) opt.caps.max_enum_arrows = *max_enum;
    if (max_frame) opt.caps.max_frame = *max_frame;

    if (*validate) return cmd_validate(path, opt, out);
    if (*check) return cmd_check(path, prop, opt, out);
    if (*ltop) return cmd_ltop(path, prop, output ? std::optional<std::filesystem::path>(*output) : std::nullopt, opt, out);
    if (*fq) return cmd_frame_quotient(path, seeds, opt, out);
    if (*lsub) return cmd_lsub(path, prop, opt, out);
    return cmd_corpus(suite ? std::optional<std::filesystem::path>(*suite) : std::nullopt, opt, out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace sheafcalc::cli
