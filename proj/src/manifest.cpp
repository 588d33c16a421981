#include "torusbt/manifest.hpp"

#include "torusbt/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace torusbt {

using nlohmann::json;

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> commands = {"predict", "lvalue",        "wgroup",       "resolve",      "motivic",
                                                    "real-decompose", "local-table", "check-isogeny", "check-shapiro"};
  return commands;
}

namespace {

const std::map<std::string, std::set<std::string>>& section_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"fixture", {"name"}},
      {"group", {"generators", "degree", "table", "builtin"}},
      {"lattice", {"rank", "builtin"}},
      {"lattice2", {"rank", "builtin"}},
      {"realization", {"modulus", "images"}},
      {"certificate", {"complement_spec", "target_spec", "iso"}},
      {"presentation", {"p_spec", "surjection", "q_spec", "inclusion"}},
      {"options",
       {"prime_cap", "stab_cap", "subgroup_bound", "debug_oracles", "search_complement_rank",
        "search_coefficient_bound", "search_max_candidates", "cache_dir"}},
      {"run", {"commands"}},
  };
  return keys;
}

Error parse_error(std::size_t line, const std::string& field, const std::string& what) {
  return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", field '" + field + "': " + what);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

// Splits on ';' outside brackets and quotes; returns the bracket balance.
int split_statements(const std::string& text, std::vector<std::string>& out) {
  int depth = 0;
  bool quoted = false;
  std::string cur;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '"' && (i == 0 || text[i - 1] != '\\')) quoted = !quoted;
    if (!quoted) {
      if (c == '[' || c == '{') ++depth;
      if (c == ']' || c == '}') --depth;
      if (c == ';' && depth == 0) {
        out.push_back(cur);
        cur.clear();
        continue;
      }
    }
    cur += c;
  }
  out.push_back(cur);
  return depth;
}

json parse_value(const std::string& raw, std::size_t line, const std::string& field) {
  static const std::regex bare_key(R"(([{,]\s*)(-?\d+)(\s*:))");
  std::string text = std::regex_replace(raw, bare_key, "$1\"$2\"$3");
  json v = json::parse(text, nullptr, false);
  if (!v.is_discarded()) return v;
  static const std::regex words(R"(^[A-Za-z0-9_:\-\.]+(\s*,\s*[A-Za-z0-9_:\-\.]+)*$)");
  if (std::regex_match(raw, words)) {
    if (raw.find(',') == std::string::npos) return raw;
    json list = json::array();
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) list.push_back(trim(item));
    return list;
  }
  throw parse_error(line, field, "not a valid value: " + raw);
}

void check_types(const std::string& section, const std::string& key, const json& v, std::size_t line) {
  const std::string field = section + "." + key;
  auto is_matrix = [](const json& m) {
    if (!m.is_array()) return false;
    for (const auto& row : m) {
      if (!row.is_array()) return false;
      for (const auto& x : row)
        if (!x.is_number_integer()) return false;
    }
    return true;
  };
  auto is_int_list = [](const json& l) {
    return l.is_array() && std::all_of(l.begin(), l.end(), [](const json& x) { return x.is_number_integer(); });
  };
  if (key.rfind("action.", 0) == 0 || key == "table" || key == "iso" || key == "surjection" || key == "inclusion" ||
      key == "generators") {
    if (!is_matrix(v)) throw parse_error(line, field, "expected a list of integer lists");
  } else if (key == "rank" || key == "modulus" || key == "degree" || key == "prime_cap" || key == "stab_cap" ||
             key == "subgroup_bound" || key == "search_complement_rank" || key == "search_coefficient_bound" ||
             key == "search_max_candidates") {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw parse_error(line, field, "expected a non-negative integer");
  } else if (key == "debug_oracles") {
    if (!v.is_boolean()) throw parse_error(line, field, "expected true or false");
  } else if (key == "images") {
    if (!v.is_object()) throw parse_error(line, field, "expected {unit: element, ...}");
    for (const auto& [unit, elem] : v.items()) {
      if (!std::regex_match(unit, std::regex(R"(-?\d+)")))
        throw parse_error(line, field, "unit '" + unit + "' is not an integer");
      if (!elem.is_number_integer() && !elem.is_string())
        throw parse_error(line, field, "image of " + unit + " must be an element index or a word");
    }
  } else if (key == "p_spec" || key == "q_spec" || key == "complement_spec" || key == "target_spec") {
    if (!is_int_list(v)) throw parse_error(line, field, "expected a list of subgroup class ids");
  } else if (key == "commands") {
    json list = v.is_string() ? json::array({v}) : v;
    if (!list.is_array()) throw parse_error(line, field, "expected a list of command names");
    for (const auto& c : list) {
      if (!c.is_string()) throw parse_error(line, field, "command names are strings");
      const auto& known = known_commands();
      if (std::find(known.begin(), known.end(), c.get<std::string>()) == known.end())
        throw parse_error(line, field, "unknown command '" + c.get<std::string>() + "'");
    }
  } else if (key == "name" || key == "builtin" || key == "cache_dir") {
    if (!v.is_string()) throw parse_error(line, field, "expected a string");
  }
}

}  // namespace

Manifest parse_manifest(std::string_view text) {
  Manifest m;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::string pending;
  std::size_t pending_line = 0;

  auto handle_statement = [&](const std::string& stmt, std::size_t line) {
    std::string s = trim(stmt);
    if (s.empty()) return;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw parse_error(line, section, "expected key = value, got '" + s + "'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (section.empty()) throw parse_error(line, key, "statement outside of a section");
    const auto& allowed = section_keys().at(section);
    bool is_action = (section == "lattice" || section == "lattice2") && key.rfind("action.", 0) == 0 &&
                     std::regex_match(key.substr(7), std::regex(R"(\d+)"));
    if (!allowed.count(key) && !is_action) throw parse_error(line, section + "." + key, "unknown field");
    if (value.empty()) throw parse_error(line, section + "." + key, "missing value");
    json v = parse_value(value, line, section + "." + key);
    check_types(section, key, v, line);
    if (m.sections[section].contains(key)) throw parse_error(line, section + "." + key, "duplicate field");
    m.sections[section][key] = v;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (pending.empty()) {
      std::string t = trim(line);
      if (t.empty()) continue;
      if (t.front() == '[' && t.back() == ']' && t.find('=') == std::string::npos) {
        section = trim(t.substr(1, t.size() - 2));
        if (!section_keys().count(section)) throw parse_error(line_no, section, "unknown section");
        if (m.sections.contains(section)) throw parse_error(line_no, section, "duplicate section");
        m.sections[section] = json::object();
        continue;
      }
      pending_line = line_no;
    }
    pending += line + "\n";
    std::vector<std::string> stmts;
    if (split_statements(pending, stmts) > 0) continue;
    for (const auto& s : stmts) handle_statement(s, pending_line);
    pending.clear();
  }
  if (!pending.empty()) throw parse_error(pending_line, section, "unbalanced brackets at end of input");

  if (!m.sections.contains("fixture") && !m.sections.contains("group"))
    throw parse_error(line_no, "group", "a [group] or [fixture] section is required");
  if (!m.sections.contains("fixture") && !m.sections.contains("lattice"))
    throw parse_error(line_no, "lattice", "a [lattice] section is required");
  if (m.sections.contains("fixture")) {
    if (!m.sections["fixture"].contains("name")) throw parse_error(line_no, "fixture.name", "missing");
    for (const char* s : {"group", "lattice", "realization"})
      if (m.sections.contains(s))
        throw parse_error(line_no, s, "cannot be combined with [fixture]");
    std::string name = m.sections["fixture"]["name"];
    const auto& cat = fixture_catalog();
    if (std::none_of(cat.begin(), cat.end(), [&](const Fixture& f) { return f.name == name; }))
      throw parse_error(line_no, "fixture.name", "unknown fixture '" + name + "'");
  }
  if (m.sections.contains("run")) {
    const json& c = m.sections["run"]["commands"];
    for (const auto& x : c.is_string() ? json::array({c}) : c) m.commands.push_back(x.get<std::string>());
  }
  if (m.sections.contains("options") && m.sections["options"].contains("cache_dir")) {
    m.cache_dir = m.sections["options"]["cache_dir"].get<std::string>();
    m.sections["options"].erase("cache_dir");
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open manifest '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

Manifest fixture_manifest(const std::string& name) {
  fixture(name);
  Manifest m;
  m.sections["fixture"] = {{"name", name}};
  return m;
}

Element parse_group_word(const FiniteGroup& g, const std::string& word) {
  static const std::regex factor(R"(^g(\d+)(\^(-?\d+))?$)");
  Element out = g.identity();
  std::stringstream ss(word);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    tok = trim(tok);
    if (tok == "e" || tok == "1") continue;
    std::smatch mt;
    if (!std::regex_match(tok, mt, factor)) throw Error(ErrorCode::InvalidArgument, "bad group word '" + word + "'");
    std::size_t i = std::stoul(mt[1]);
    if (i >= g.generators().size()) throw Error(ErrorCode::InvalidArgument, "no generator g" + std::to_string(i));
    long k = mt[3].matched ? std::stol(mt[3]) : 1;
    out = g.multiply(out, g.power(g.generators()[i], k));
  }
  return out;
}

namespace {

IntMatrix matrix_from_json(const json& j, std::size_t cols) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    std::vector<Integer> row;
    for (const auto& x : r) row.emplace_back(x.get<long>());
    if (row.size() != cols)
      throw Error(ErrorCode::ShapeMismatch, "row of length " + std::to_string(row.size()) + ", expected " +
                                                std::to_string(cols));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

std::vector<std::size_t> spec_from_json(const json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    if (x.get<long>() < 0) throw Error(ErrorCode::InvalidArgument, "negative subgroup class id");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

GroupPtr group_from_json(const json& s) {
  int given = s.contains("generators") + s.contains("table") + s.contains("builtin");
  if (given != 1) throw Error(ErrorCode::InvalidGroup, "give exactly one of generators, table, builtin");
  if (s.contains("builtin")) {
    std::string b = s["builtin"];
    static const std::regex family(R"(^([CDS])(\d+)$)");
    std::smatch mt;
    if (b == "trivial") return make_group(trivial_group());
    if (b == "V4") return make_group(klein_four_group());
    if (b == "A4") return make_group(alternating_group4());
    if (b == "Q8") return make_group(quaternion_group());
    if (std::regex_match(b, mt, family)) {
      std::size_t n = std::stoul(mt[2]);
      if (mt[1] == "C") return make_group(cyclic_group(n));
      if (mt[1] == "D") return make_group(dihedral_group(n));
      return make_group(symmetric_group(n));
    }
    throw Error(ErrorCode::InvalidGroup, "unknown builtin group '" + b + "'");
  }
  if (s.contains("table")) {
    std::vector<std::vector<Element>> table;
    for (const auto& r : s["table"]) table.push_back(r.get<std::vector<Element>>());
    return make_group(FiniteGroup::from_table(std::move(table)));
  }
  std::vector<Permutation> gens;
  for (const auto& r : s["generators"]) gens.push_back(r.get<Permutation>());
  std::size_t degree = s.contains("degree") ? s["degree"].get<std::size_t>() : (gens.empty() ? 1 : gens[0].size());
  return make_group(FiniteGroup::from_permutations(gens, degree));
}

GLattice lattice_from_json(const json& s, const GroupPtr& group) {
  if (s.contains("builtin")) {
    std::string b = s["builtin"];
    if (b == "trivial") return GLattice::trivial(group);
    if (b == "regular") return permutation_lattice(group, std::vector<Element>{group->identity()});
    if (b == "augmentation_ideal") return augmentation_ideal(group);
    if (b == "norm_quotient") return norm_quotient(group);
    throw Error(ErrorCode::InvalidArgument, "unknown builtin lattice '" + b + "'");
  }
  if (!s.contains("rank")) throw Error(ErrorCode::ShapeMismatch, "lattice needs a rank");
  std::size_t rank = s["rank"];
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < group->generators().size(); ++i) {
    std::string key = "action." + std::to_string(i);
    if (!s.contains(key)) throw Error(ErrorCode::ShapeMismatch, "missing " + key);
    gens.push_back(matrix_from_json(s[key], rank));
  }
  for (const auto& [k, _] : s.items())
    if (k.rfind("action.", 0) == 0 && std::stoul(k.substr(7)) >= group->generators().size())
      throw Error(ErrorCode::ShapeMismatch, k + " does not name a group generator");
  return GLattice::from_generators(group, rank, gens);
}

}  // namespace

Inputs build_inputs(const Manifest& m) {
  Inputs in;
  const json& s = m.sections;
  if (s.contains("fixture")) {
    const Fixture& f = fixture(s["fixture"]["name"].get<std::string>());
    in.group = f.group;
    in.lattice = f.lattice;
    in.realization = f.realization;
    in.presentation = f.presentation;
  } else {
    in.group = group_from_json(s["group"]);
    in.lattice = lattice_from_json(s["lattice"], in.group);
    if (s.contains("realization")) {
      const json& r = s["realization"];
      try {
        if (!r.contains("modulus")) throw Error(ErrorCode::InvalidArgument, "realization needs a modulus");
        std::map<Integer, Element> images;
        if (r.contains("images"))
          for (const auto& [unit, elem] : r["images"].items())
            images[Integer(unit)] = elem.is_string() ? parse_group_word(*in.group, elem.get<std::string>())
                                                     : elem.get<Element>();
        in.realization = AbelianRealization::create(in.group, Integer(r["modulus"].get<long>()), images);
      } catch (const Error& e) {
        in.realization_error = e;
      }
    }
  }
  if (s.contains("lattice2")) in.lattice2 = lattice_from_json(s["lattice2"], in.group);
  if (s.contains("presentation")) {
    const json& p = s["presentation"];
    for (const char* k : {"p_spec", "surjection", "q_spec", "inclusion"})
      if (!p.contains(k)) throw Error(ErrorCode::InvalidArgument, std::string("presentation needs ") + k);
    PermutationPresentation pres;
    pres.p_spec = spec_from_json(p["p_spec"]);
    pres.q_spec = spec_from_json(p["q_spec"]);
    std::size_t p_rank = permutation_lattice_from_spec(in.group, pres.p_spec).rank();
    std::size_t q_rank = permutation_lattice_from_spec(in.group, pres.q_spec).rank();
    pres.surjection = matrix_from_json(p["surjection"], p_rank);
    pres.inclusion = matrix_from_json(p["inclusion"], q_rank);
    in.presentation = std::move(pres);
  }
  if (s.contains("certificate")) {
    const json& c = s["certificate"];
    for (const char* k : {"complement_spec", "target_spec", "iso"})
      if (!c.contains(k)) throw Error(ErrorCode::InvalidArgument, std::string("certificate needs ") + k);
    InvertibilityCertificate cert;
    cert.complement = permutation_lattice_from_spec(in.group, spec_from_json(c["complement_spec"]));
    cert.target_spec = spec_from_json(c["target_spec"]);
    std::size_t cols = c["iso"].empty() ? 0 : c["iso"][0].size();
    cert.iso = matrix_from_json(c["iso"], cols);
    in.certificate = std::move(cert);
  }
  if (s.contains("options")) {
    const json& o = s["options"];
    EngineOptions& e = in.options;
    if (o.contains("prime_cap")) e.prime_cap = o["prime_cap"];
    if (o.contains("stab_cap")) e.stabilization.cap = o["stab_cap"];
    if (o.contains("debug_oracles")) e.stabilization.debug_oracles = o["debug_oracles"];
    if (o.contains("subgroup_bound")) e.subgroup_bound = o["subgroup_bound"];
    if (o.contains("search_complement_rank")) e.search.complement_rank = o["search_complement_rank"];
    if (o.contains("search_coefficient_bound")) e.search.coefficient_bound = o["search_coefficient_bound"];
    if (o.contains("search_max_candidates")) e.search.max_candidates = o["search_max_candidates"];
  }
  return in;
}

}  // namespace torusbt
