#include "coxl2/diagram.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "coxl2/error.hpp"

namespace coxl2 {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& t, int line) {
  if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit) || t.size() > 6)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected a number, got '" + t + "'");
  return std::stoi(t);
}

}  // namespace

CoxeterSystem DiagramDocument::system() const {
  CoxeterMatrix m(generators.size(), default_label);
  auto index = [&](const std::string& g) {
    return static_cast<std::size_t>(std::find(generators.begin(), generators.end(), g) - generators.begin());
  };
  for (auto& [a, b, l] : labels) m.set(index(a), index(b), l);
  try {
    return CoxeterSystem(m, generators);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError) throw;
    throw Error(ErrorCode::ValidationError, e.what());
  }
}

DiagramDocument parse_diagram(const std::string& text) {
  DiagramDocument doc;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool have_default = false;
  std::set<std::pair<std::string, std::string>> seen;
  auto fail = [&](const std::string& msg) { return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg); };
  while (std::getline(in, raw)) {
    ++line;
    auto t = tokens_of(raw);
    if (t.empty()) continue;
    const std::string& kw = t[0];
    if (!have_default && kw != "default") throw fail("the first statement must be 'default 2' or 'default inf'");
    if (kw == "default") {
      if (have_default) throw fail("repeated default");
      if (t.size() != 2 || (t[1] != "2" && t[1] != "inf")) throw fail("expected 'default 2' or 'default inf'");
      doc.default_label = t[1] == "2" ? Label(2) : Label::infinity();
      have_default = true;
    } else if (kw == "gen") {
      if (t.size() < 2) throw fail("gen needs at least one name");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (std::find(doc.generators.begin(), doc.generators.end(), t[i]) != doc.generators.end())
          throw fail("generator '" + t[i] + "' declared twice");
        doc.generators.push_back(t[i]);
      }
    } else if (kw == "m") {
      if (t.size() != 4) throw fail("expected 'm <gen> <gen> <label>'");
      for (int k : {1, 2})
        if (std::find(doc.generators.begin(), doc.generators.end(), t[k]) == doc.generators.end())
          throw fail("undeclared generator '" + t[k] + "'");
      if (t[1] == t[2]) throw fail("a label needs two distinct generators");
      if (!seen.insert(std::minmax(t[1], t[2])).second) throw fail("duplicate label for " + t[1] + " " + t[2]);
      Label l;
      try {
        l = Label::parse(t[3]);
      } catch (const Error&) {
        throw fail("bad label '" + t[3] + "'");
      }
      if (l.is_finite() && l.value() < 2) throw fail("labels must be at least 2");
      doc.labels.emplace_back(t[1], t[2], l);
    } else if (kw == "assert") {
      if (t.size() < 2) throw fail("assert needs a kind");
      const std::string& what = t[1];
      if (what == "ghs" && t.size() == 3) {
        if (std::all_of(t[2].begin(), t[2].end(), ::isdigit))
          doc.assert_ghs = parse_int(t[2], line);
        else
          doc.assert_ghs_file = t[2];
      } else if (what == "disk" && t.size() <= 3) {
        doc.assert_disk = true;
        if (t.size() == 3) doc.assert_disk_dim = parse_int(t[2], line);
      } else if (what == "vcd" && t.size() == 3) {
        doc.assert_vcd = parse_int(t[2], line);
      } else if (what == "coned" && t.size() == 2) {
        doc.assert_coned = true;
      } else {
        throw fail("unknown assertion '" + raw + "'");
      }
    } else {
      throw fail("unknown statement '" + kw + "'");
    }
  }
  if (!have_default) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": missing 'default' header");
  if (doc.generators.empty()) throw Error(ErrorCode::ParseError, "no generators declared");
  doc.system();  // validate
  return doc;
}

std::string serialize_diagram(const DiagramDocument& doc) {
  std::ostringstream out;
  out << "default " << doc.default_label.to_string() << "\n";
  out << "gen";
  for (auto& g : doc.generators) out << ' ' << g;
  out << "\n";
  for (auto& [a, b, l] : doc.labels) out << "m " << a << ' ' << b << ' ' << l.to_string() << "\n";
  if (doc.assert_ghs) out << "assert ghs " << *doc.assert_ghs << "\n";
  if (doc.assert_ghs_file) out << "assert ghs " << *doc.assert_ghs_file << "\n";
  if (doc.assert_disk) {
    out << "assert disk";
    if (doc.assert_disk_dim) out << ' ' << *doc.assert_disk_dim;
    out << "\n";
  }
  if (doc.assert_vcd) out << "assert vcd " << *doc.assert_vcd << "\n";
  if (doc.assert_coned) out << "assert coned\n";
  return out.str();
}

DiagramDocument diagram_of(const CoxeterSystem& sys, Label default_label) {
  DiagramDocument doc;
  doc.default_label = default_label;
  doc.generators = sys.names();
  for (std::size_t i = 0; i < sys.rank(); ++i)
    for (std::size_t j = i + 1; j < sys.rank(); ++j) {
      Label l = sys.label(static_cast<int>(i), static_cast<int>(j));
      if (l != default_label) doc.labels.emplace_back(sys.name(static_cast<int>(i)), sys.name(static_cast<int>(j)), l);
    }
  return doc;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace coxl2
