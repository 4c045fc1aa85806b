#include "coxl2/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "coxl2/betti.hpp"
#include "coxl2/boundary.hpp"
#include "coxl2/classifier.hpp"
#include "coxl2/davis.hpp"
#include "coxl2/diagram.hpp"
#include "coxl2/error.hpp"
#include "coxl2/families.hpp"
#include "coxl2/growth.hpp"
#include "coxl2/nerve.hpp"
#include "coxl2/words.hpp"

namespace coxl2 {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& p, const std::string& data) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorCode::ValidationError, "cannot write " + p.string());
    out << data;
  }
  fs::rename(tmp, p);
}

fs::path default_cache_dir() {
  if (const char* d = std::getenv("COXL2_CACHE_DIR")) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME")) return fs::path(x) / "coxl2";
  if (const char* h = std::getenv("HOME")) return fs::path(h) / ".cache" / "coxl2";
  return ".coxl2-cache";
}

std::string version() { return COXL2_VERSION; }

struct Options {
  std::string command;
  std::string input;
  std::string q;
  std::string qc = "1";
  std::size_t max_length = 0;
  std::vector<std::string> asserts;
  std::string json_path;
  std::string default_override;
  std::string cache_dir;
  std::string manifest_path;
  bool no_cache = false;
  unsigned threads = 0;

  json to_json() const {
    json j{{"q", q}, {"max_length", max_length}, {"assert", asserts}, {"default", default_override}};
    if (command == "cone") j["qc"] = qc;
    return j;
  }
};

struct Loaded {
  DiagramDocument doc;
  CoxeterSystem sys;
  std::string text;
  fs::path path;
};

Loaded load(const std::string& path, const std::string& default_override) {
  Loaded l;
  l.path = path;
  l.text = read_file(path);
  l.doc = parse_diagram(l.text);
  if (!default_override.empty()) {
    if (default_override != "2" && default_override != "inf")
      throw Error(ErrorCode::ParseError, "--default takes 2 or inf");
    l.doc.default_label = default_override == "2" ? Label(2) : Label::infinity();
  }
  l.sys = l.doc.system();
  return l;
}

Assertions assertions_of(const Loaded& in, const std::vector<std::string>& flags) {
  Assertions a;
  auto load_cellulation = [&](const std::string& file) {
    fs::path p = file;
    if (p.is_relative() && !fs::exists(p)) p = in.path.parent_path() / p;
    a.cellulation = CellComplex::from_json(json::parse(read_file(p)));
  };
  if (in.doc.assert_ghs) a.ghs = in.doc.assert_ghs;
  if (in.doc.assert_ghs_file) load_cellulation(*in.doc.assert_ghs_file);
  std::optional<int> disk_dim = in.doc.assert_disk_dim;
  a.disk = in.doc.assert_disk;
  a.vcd = in.doc.assert_vcd;
  a.coned = in.doc.assert_coned;
  for (auto& f : flags) {
    auto colon = f.find(':');
    std::string kind = f.substr(0, colon), arg = colon == std::string::npos ? "" : f.substr(colon + 1);
    auto number = [&] {
      if (arg.empty() || !std::all_of(arg.begin(), arg.end(), ::isdigit))
        throw Error(ErrorCode::ParseError, "--assert " + kind + " needs a number");
      return std::stoi(arg);
    };
    if (kind == "ghs") {
      if (!arg.empty() && std::all_of(arg.begin(), arg.end(), ::isdigit))
        a.ghs = number();
      else if (!arg.empty())
        load_cellulation(arg);
      else
        throw Error(ErrorCode::ParseError, "--assert ghs needs a file or a dimension");
    } else if (kind == "disk") {
      a.disk = true;
      if (!arg.empty()) disk_dim = number();
    } else if (kind == "vcd") {
      a.vcd = number();
    } else if (kind == "coned") {
      a.coned = true;
    } else {
      throw Error(ErrorCode::ParseError, "unknown assertion '" + f + "'");
    }
  }
  if (a.disk && disk_dim && *disk_dim != build_nerve(in.sys).dimension())
    throw Error(ErrorCode::Inconsistency, "asserted disk dimension " + std::to_string(*disk_dim) +
                                              " differs from the nerve dimension");
  return a;
}

json weight_json(const CoxeterSystem& sys, const Weight& w) { return w.to_string(sys); }

std::string system_hash(const CoxeterSystem& sys) { return fnv1a_hex(version() + "\n" + sys.canonical_key()); }

// Growth series as JSON: the uniform ray in q, and the class-variable form.
json compute_growth(const CoxeterSystem& sys) {
  std::vector<std::uint32_t> ones(sys.num_classes(), 1);
  auto ray = growth_on_ray(sys, ones);
  auto multi = growth_series(sys);
  auto names = class_variable_names(sys);
  return {{"key", sys.canonical_key()},
          {"version", version()},
          {"variables", {"q"}},
          {"num", ray.num().to_string({"q"})},
          {"den", ray.den().to_string({"q"})},
          {"class_variables", names},
          {"class_num", multi.num().to_string(names)},
          {"class_den", multi.den().to_string(names)}};
}

json cached_growth(const CoxeterSystem& sys, const Options& o, bool* hit) {
  *hit = false;
  if (o.no_cache) return compute_growth(sys);
  fs::path file = fs::path(o.cache_dir) / "growth" / (system_hash(sys) + ".json");
  if (fs::exists(file)) {
    try {
      json j = json::parse(read_file(file));
      if (j.value("key", "") == sys.canonical_key() && j.value("version", "") == version()) {
        *hit = true;
        return j;
      }
    } catch (const json::exception&) {
      // corrupt entry, recompute below
    }
  }
  json j = compute_growth(sys);
  write_file(file, j.dump(2) + "\n");
  return j;
}

std::size_t degree_count(const BettiReport& r) { return r.degrees.size(); }

json consistency_json(const ConsistencyResult& c) {
  return {{"pass", c.pass}, {"chi", c.chi.to_string()}, {"discrepancy", c.discrepancy.to_string()}, {"detail", c.detail}};
}

json classify_json(const CoxeterSystem& sys) {
  json comps = json::array();
  for (auto& [T, tag] : classify_system(sys)) {
    std::vector<std::string> gens;
    for (int s : T.members()) gens.push_back(sys.name(s));
    json c{{"generators", gens}, {"tag", tag.to_string()}, {"kind", kind_name(tag.kind)}};
    if (!tag.name.empty()) c["name"] = tag.name;
    if (tag.n) c["n"] = tag.n;
    comps.push_back(c);
  }
  auto probe = probe_finiteness(sys, 200000);
  json j{{"components", comps},
         {"finite", is_finite(sys)},
         {"two_spherical", is_two_spherical(sys)},
         {"probe", {{"finite", probe.finite}, {"size", probe.size}, {"explored", probe.explored}}}};
  auto e = euclidean_dimension(sys, sys.all());
  j["euclidean_dimension"] = e ? json(*e) : json(nullptr);
  return j;
}

json nerve_json(const CoxeterSystem& sys) {
  auto n = build_nerve(sys);
  json faces = json::array();
  for (GenSet T : n.faces) {
    std::vector<std::string> f;
    for (int s : T.members()) f.push_back(sys.name(s));
    faces.push_back(f);
  }
  json edges = json::array();
  for (auto& [e, l] : n.edge_labels)
    edges.push_back({{"a", sys.name(e.first)}, {"b", sys.name(e.second)}, {"label", l.to_string()}});
  auto v = vcd_bounds(sys);
  json j{{"vertices", n.vertices},
         {"dimension", n.dimension()},
         {"faces", faces},
         {"edges", edges},
         {"homology", homology(n.complex()).to_string()},
         {"vcd", {{"lo", v.lo}, {"hi", v.hi}, {"exact", v.exact}, {"state", hypothesis_state_name(v.state)},
                  {"notes", v.notes}}}};
  if (n.is_graph()) j["planar"] = planar_nerve(n);
  return j;
}

struct Result {
  json doc;
  int code = kExitOk;
};

Result cmd_betti(const Loaded& in, const Options& o) {
  if (o.q.empty()) throw Error(ErrorCode::ParseError, "betti needs --q");
  auto w = parse_weight(in.sys, o.q);
  auto rep = deduce_betti(in.sys, w, assertions_of(in, o.asserts));
  json j = rep.to_json();
  if (rep.fully_determined()) j["consistency"] = consistency_json(consistency_check(rep, in.sys));
  int code = 2 * rep.unknown_count() > degree_count(rep) ? kExitUnknown : kExitOk;
  return {j, code};
}

Result cmd_cone(const Loaded& in, const Options& o) {
  if (o.q.empty()) throw Error(ErrorCode::ParseError, "cone needs --q");
  mpq_class qc = parse_rational(o.qc);
  auto w = parse_weight(in.sys, o.q);
  auto rep = deduce_betti(in.sys, w, assertions_of(in, o.asserts));
  auto coned = apply_cone_rule(rep, qc);
  std::string apex = "c";
  while (std::find(in.sys.names().begin(), in.sys.names().end(), apex) != in.sys.names().end()) apex += "'";
  auto csys = families::cone(in.sys, apex);
  json j{{"input", rep.to_json()}, {"apex", apex}, {"cone", coned.to_json()}};
  if (!w.is_symbolic()) {
    std::vector<mpq_class> vals(csys.num_classes());
    for (std::size_t g = 0; g + 1 < csys.rank(); ++g) vals[csys.class_of(static_cast<int>(g))] = w.concrete().of_generator(static_cast<int>(g));
    vals[csys.class_of(static_cast<int>(csys.rank() - 1))] = qc;
    coned.weight = Weight(WeightVector::per_class(csys, vals));
    j["consistency"] = consistency_json(consistency_check(coned, csys));
  }
  return {j, kExitOk};
}

Result cmd_e1(const Loaded& in, const Options& o) {
  if (o.q.empty()) throw Error(ErrorCode::ParseError, "e1 needs --q");
  auto w = parse_weight(in.sys, o.q);
  auto t = e1_table(in.sys, w);
  json j = t.to_json(in.sys);
  j["weights"] = weight_json(in.sys, w);
  auto verdict = boundary_b1_vanishes(in.sys, w);
  j["b1_vanishes"] = verdict_name(verdict);
  std::size_t unknown = std::count_if(t.entries.begin(), t.entries.end(), [](auto& e) { return !e.value; });
  return {j, 2 * unknown > t.entries.size() ? kExitUnknown : kExitOk};
}

Result cmd_boundary(const Loaded& in) {
  auto p = nonspherical_poset(in.sys);
  auto f = flag_complex(p);
  std::vector<std::string> elems;
  for (GenSet T : p.elements) elems.push_back(format_subset(in.sys, T));
  json fv = json::array();
  for (int d = 0; d <= f.dimension(); ++d) fv.push_back(f.count(d));
  return {{{"poset", elems},
           {"flag", {{"vertices", f.count(0)}, {"edges", f.count(1)}, {"dimension", f.dimension()}, {"f_vector", fv}}},
           {"decomposition", boundary_decomposition(in.sys).to_json(in.sys)}},
          kExitOk};
}

Result cmd_cells(const Loaded& in, const Options& o) {
  std::size_t L = o.max_length ? o.max_length : 3;
  auto ball = coxeter_cell_ball(in.sys, L);
  json j = ball.to_json(in.sys);
  if (!o.q.empty()) {
    auto w = parse_weight(in.sys, o.q);
    if (w.is_symbolic()) throw Error(ErrorCode::UnsupportedWeightShape, "cells needs concrete weights");
    j["identities"] = verify_chain_identities(in.sys, ball, w.concrete()).to_json();
  }
  return {j, kExitOk};
}

Result cmd_coeffs(const Loaded& in, const Options& o) {
  std::size_t L = o.max_length ? o.max_length : 10;
  std::vector<std::uint32_t> ones(in.sys.num_classes(), 1);
  auto series = taylor_coeffs(growth_on_ray(in.sys, ones), L);
  auto ball = enumerate_ball(in.sys, L, BallOptions{kDefaultEnumerationCap, false, false, BallMethod::Automaton});
  json c = json::array(), b = json::array();
  bool match = true;
  for (std::size_t k = 0; k <= L; ++k) {
    c.push_back(rational_to_string(series[k]));
    b.push_back(ball.counts[k]);
    match &= series[k] == mpq_class(mpz_class(static_cast<unsigned long>(ball.counts[k])));
  }
  return {{{"max_length", L}, {"coefficients", c}, {"enumerated", b}, {"match", match}}, match ? kExitOk : kExitInconsistent};
}

Result run_single(const std::string& cmd, const Loaded& in, const Options& o) {
  const auto& sys = in.sys;
  if (cmd == "validate") {
    return {{{"valid", true},
             {"rank", sys.rank()},
             {"generators", sys.names()},
             {"key", sys.canonical_key()},
             {"hash", system_hash(sys)},
             {"diagram", serialize_diagram(in.doc)}},
            kExitOk};
  }
  if (cmd == "classify") return {classify_json(sys), kExitOk};
  if (cmd == "nerve") return {nerve_json(sys), kExitOk};
  if (cmd == "growth") {
    bool hit = false;
    json g = cached_growth(sys, o, &hit);
    g.erase("key");
    g.erase("version");
    return {g, kExitOk};
  }
  if (cmd == "coeffs") return cmd_coeffs(in, o);
  if (cmd == "euler") {
    if (o.q.empty()) throw Error(ErrorCode::ParseError, "euler needs --q");
    auto w = parse_weight(sys, o.q);
    std::string chi = w.is_symbolic() ? euler_characteristic(sys, w.symbolic()).to_string({"q"})
                                      : rational_to_string(euler_characteristic(sys, w.concrete()));
    return {{{"weights", weight_json(sys, w)}, {"chi", chi}}, kExitOk};
  }
  if (cmd == "region") {
    if (o.q.empty()) throw Error(ErrorCode::ParseError, "region needs --q");
    auto w = parse_weight(sys, o.q);
    auto r = w.is_symbolic() ? region_membership(sys, w.symbolic()) : region_membership(sys, w.concrete());
    return {{{"weights", weight_json(sys, w)},
             {"membership", membership_name(r.membership)},
             {"on_boundary", r.on_boundary},
             {"annotation", r.annotation}},
            r.membership == Membership::Unknown ? kExitUnknown : kExitOk};
  }
  if (cmd == "betti") return cmd_betti(in, o);
  if (cmd == "cone") return cmd_cone(in, o);
  if (cmd == "boundary") return cmd_boundary(in);
  if (cmd == "e1") return cmd_e1(in, o);
  if (cmd == "cells") return cmd_cells(in, o);
  throw Error(ErrorCode::ParseError, "unknown command '" + cmd + "'");
}

std::vector<fs::path> diagram_files(const std::string& path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (auto& e : fs::directory_iterator(path))
      if (e.path().extension() == ".cox") files.push_back(e.path());
  } else {
    files.push_back(path);
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error(ErrorCode::ParseError, "no .cox files in " + path);
  return files;
}

template <typename F>
std::vector<json> parallel_map(const std::vector<fs::path>& files, unsigned threads, F f) {
  std::vector<json> out(files.size());
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  std::size_t next = 0;
  while (next < files.size()) {
    std::vector<std::future<json>> batch;
    for (unsigned k = 0; k < n && next + k < files.size(); ++k)
      batch.push_back(std::async(std::launch::async, f, files[next + k]));
    for (std::size_t k = 0; k < batch.size(); ++k) out[next + k] = batch[k].get();
    next += batch.size();
  }
  return out;
}

json error_json(const Error& e) { return {{"error", code_name(e.code())}, {"message", e.what()}}; }

// Oracle checks for one diagram: series against enumeration, classifier against the probe,
// and chi-consistency of every fully determined report.
json verify_one(const fs::path& file, const Options& o) {
  json checks = json::array();
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  };
  try {
    auto in = load(file.string(), o.default_override);
    const auto& sys = in.sys;
    std::size_t L = o.max_length ? o.max_length : 8;
    std::vector<std::uint32_t> ones(sys.num_classes(), 1);
    auto series = taylor_coeffs(growth_on_ray(sys, ones), L);
    auto ball = enumerate_ball(sys, L, BallOptions{kDefaultEnumerationCap, false, false, BallMethod::Automaton});
    bool eq = true;
    for (std::size_t k = 0; k <= L; ++k) eq &= series[k] == mpq_class(mpz_class(static_cast<unsigned long>(ball.counts[k])));
    add("series_vs_enumeration", eq, "lengths 0.." + std::to_string(L));
    auto probe = probe_finiteness(sys, 200000);
    bool finite = is_finite(sys);
    bool agree = probe.finite ? finite : (!finite || probe.explored >= 200000);
    if (probe.finite) agree &= finite_growth_poly(sys).evaluate(std::vector<mpq_class>(sys.num_classes(), 1)) ==
                               mpq_class(mpz_class(static_cast<unsigned long>(probe.size)));
    add("classifier_vs_probe", agree, probe.finite ? "order " + std::to_string(probe.size) : "infinite");
    for (std::string q : {"1/2", "1", "2", "ge1", "le1"}) {
      try {
        auto rep = deduce_betti(sys, parse_weight(sys, q), assertions_of(in, {}));
        if (rep.fully_determined()) {
          auto c = consistency_check(rep, sys);
          add("betti_consistency q=" + q, c.pass, c.detail);
        } else {
          add("betti_consistency q=" + q, true, std::to_string(rep.unknown_count()) + " degrees unknown");
        }
      } catch (const Error& e) {
        add("betti_consistency q=" + q, false, e.what());
      }
    }
    if (!o.no_cache) {
      bool hit = false;
      json cached = cached_growth(sys, o, &hit);
      add("growth_cache", cached.dump() == compute_growth(sys).dump(), hit ? "cache hit" : "cache filled");
    }
  } catch (const Error& e) {
    add("load", false, e.what());
  }
  bool pass = std::all_of(checks.begin(), checks.end(), [](auto& c) { return c["pass"].template get<bool>(); });
  return {{"file", file.filename().string()}, {"pass", pass}, {"checks", checks}};
}

json corpus_one(const fs::path& file, const Options& o) {
  json j{{"file", file.filename().string()}};
  try {
    auto in = load(file.string(), o.default_override);
    const auto& sys = in.sys;
    j["rank"] = sys.rank();
    std::string tags;
    for (auto& [T, tag] : classify_system(sys)) tags += (tags.empty() ? "" : " x ") + tag.to_string();
    j["type"] = tags;
    json b = json::object();
    for (std::string q : {"1/2", "1", "2", "ge1", "le1"}) {
      try {
        auto rep = deduce_betti(sys, parse_weight(sys, q), assertions_of(in, {}));
        json ds = json::array();
        for (auto& d : rep.degrees)
          ds.push_back(d.status == BettiStatus::Unknown ? "?"
                                                        : d.status == BettiStatus::Zero ? "0" : d.value.to_string());
        b[q] = ds;
      } catch (const Error& e) {
        b[q] = error_json(e);
      }
    }
    j["betti"] = b;
  } catch (const Error& e) {
    j["error"] = error_json(e);
  }
  return j;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Inconsistency:
    case ErrorCode::IdentityViolation: return kExitInconsistent;
    default: return kExitInputError;
  }
}

}  // namespace

Weight parse_weight(const CoxeterSystem& sys, const std::string& text) {
  std::string t = text;
  if (t.rfind("ge1", 0) == 0 || t.rfind("le1", 0) == 0 || t.rfind("q>=1", 0) == 0 || t.rfind("q<=1", 0) == 0) {
    bool ge = t[0] == 'g' || t.rfind("q>=", 0) == 0;
    SymbolicRay ray = SymbolicRay::uniform(sys, ge ? Regime::AtLeastOne : Regime::AtMostOne);
    auto colon = t.find(':');
    if (colon != std::string::npos) {
      auto parts = split(t.substr(colon + 1), ',');
      if (parts.size() != sys.num_classes())
        throw Error(ErrorCode::UnsupportedWeightShape, "need one exponent per class (" + std::to_string(sys.num_classes()) + ")");
      for (std::size_t c = 0; c < parts.size(); ++c) {
        if (parts[c].empty() || !std::all_of(parts[c].begin(), parts[c].end(), ::isdigit) || parts[c] == "0")
          throw Error(ErrorCode::InvalidWeight, "exponents must be positive integers");
        ray.exponents[c] = static_cast<std::uint32_t>(std::stoul(parts[c]));
      }
    }
    return Weight(ray);
  }
  auto parts = split(t, ',');
  std::vector<mpq_class> vals;
  for (auto& p : parts) {
    mpq_class v = parse_rational(p);
    if (v <= 0) throw Error(ErrorCode::InvalidWeight, "weights must be positive");
    vals.push_back(v);
  }
  if (vals.size() == 1) return Weight(WeightVector::uniform(sys, vals[0]));
  if (vals.size() != sys.num_classes())
    throw Error(ErrorCode::UnsupportedWeightShape, "need one value per class (" + std::to_string(sys.num_classes()) + ")");
  return Weight(WeightVector::per_class(sys, vals));
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Exact growth series, weighted Euler characteristics and weighted L2-Betti numbers of Coxeter groups",
               "coxl2");
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate", "parse and validate a diagram"},
      {"classify", "irreducible components and their types"},
      {"nerve", "nerve, labels, homology and vcd bounds"},
      {"growth", "growth series (cached)"},
      {"coeffs", "series coefficients checked against enumeration"},
      {"euler", "weighted Euler characteristic"},
      {"region", "region of convergence membership"},
      {"betti", "weighted L2-Betti deduction report"},
      {"cone", "report for the right-angled cone"},
      {"boundary", "non-spherical poset, flag complex, boundary pieces"},
      {"e1", "E1 dimension table of the boundary spectral sequence"},
      {"cells", "Coxeter cells of a ball and the weighted boundary identities"},
      {"verify", "oracle checks over a diagram or a directory"},
      {"corpus", "summary over a directory of diagrams"},
  };
  for (auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "diagram file (or directory for verify/corpus)")->required();
    sub->add_option("--q", o.q, "weights: rational, per-class list, ge1 or le1[:exponents]");
    sub->add_option("--max-length", o.max_length, "word length bound");
    sub->add_option("--assert", o.asserts, "ghs:<file|n>, disk[:n], vcd:<n>, coned");
    sub->add_option("--json", o.json_path, "write the JSON result to this file");
    sub->add_option("--default", o.default_override, "override the diagram default label (2 or inf)");
    sub->add_option("--cache-dir", o.cache_dir, "cache and manifest directory");
    sub->add_option("--manifest", o.manifest_path, "also write the run manifest here");
    sub->add_flag("--no-cache", o.no_cache, "neither read nor write the cache");
    if (name == "cone") sub->add_option("--qc", o.qc, "weight of the cone generator (default 1)");
    if (name == "corpus" || name == "verify") sub->add_option("--threads", o.threads, "parallel inputs");
    sub->callback([&o, name = name] { o.command = name; });
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return kExitInputError;
  }
  if (o.cache_dir.empty()) o.cache_dir = default_cache_dir().string();

  Result res;
  std::string input_text;
  try {
    if (o.command == "verify" || o.command == "corpus") {
      auto files = diagram_files(o.input);
      for (auto& f : files) input_text += f.filename().string() + "\n" + read_file(f);
      if (o.command == "verify") {
        // the growth cache is shared, so verification runs its cache checks serially
        Options serial = o;
        auto reports = parallel_map(files, o.no_cache ? o.threads : 1, [&](const fs::path& f) { return verify_one(f, serial); });
        bool pass = std::all_of(reports.begin(), reports.end(), [](auto& r) { return r["pass"].template get<bool>(); });
        res = {{{"systems", reports}, {"passed", pass}}, pass ? kExitOk : kExitInconsistent};
      } else {
        Options uncached = o;
        auto rows = parallel_map(files, o.threads, [&](const fs::path& f) { return corpus_one(f, uncached); });
        res = {{{"systems", rows}}, kExitOk};
      }
    } else {
      auto in = load(o.input, o.default_override);
      input_text = in.text;
      res = run_single(o.command, in, o);
    }
  } catch (const Error& e) {
    err << error_json(e).dump() << "\n";
    return exit_for(e);
  } catch (const json::exception& e) {
    err << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return kExitInputError;
  } catch (const fs::filesystem_error& e) {
    err << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
    return kExitInputError;
  }

  std::string text = res.doc.dump(2) + "\n";
  if (o.json_path.empty())
    out << text;
  else
    write_file(o.json_path, text);

  json manifest{{"command", o.command},
                {"input_hash", fnv1a_hex(input_text)},
                {"version", version()},
                {"options", o.to_json()},
                {"outputs", {{"hash", fnv1a_hex(text)}, {"json", o.json_path}, {"exit_code", res.code}}}};
  std::string mtext = manifest.dump(2) + "\n";
  try {
    if (!o.manifest_path.empty()) write_file(o.manifest_path, mtext);
    if (!o.no_cache)
      write_file(fs::path(o.cache_dir) / "manifests" / (fnv1a_hex(input_text) + "-" + o.command + ".json"), mtext);
  } catch (const std::exception& e) {
    err << json{{"warning", "manifest not written"}, {"message", e.what()}}.dump() << "\n";
  }
  return res.code;
}

}  // namespace coxl2
