#include "torusbt/report.hpp"

#include "torusbt/error.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace torusbt {

using nlohmann::json;

namespace {

json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const FinAbGroup& g) {
  json factors = json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(to_json(d));
  return {{"structure", g.to_string()}, {"invariant_factors", factors}, {"free_rank", g.free_rank()}};
}

json to_json(const WGroupResult& w) {
  json parts = json::array();
  for (const auto& p : w.parts) parts.push_back({{"p", to_json(p.prime)}, {"part", to_json(p.part)}, {"depth", p.depth}});
  return parts;
}

json to_json(const OnoDecomposition& d) {
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back({{"subgroup_id", f.subgroup_id}, {"exponent", to_json(f.exponent)}});
  return {{"m", to_json(d.m)}, {"factors", factors}, {"p_spec", d.p_spec}, {"q_spec", d.q_spec},
          {"identity", ono_identity_string(d)}};
}

json generator_actions(const GLattice& x) {
  json out = json::array();
  for (Element s : x.group()->generators()) out.push_back(to_json(x.action(s)));
  return out;
}

json subgroups_json(const FiniteGroup& g, std::size_t bound) {
  json out = json::array();
  for (const auto& c : g.subgroup_classes(bound))
    out.push_back({{"id", c.id}, {"order", c.order}, {"elements", c.elements}, {"generators", c.generators},
                   {"class_size", c.class_size}});
  return out;
}

json certificate_json(const InvertibilityCertificate& c) {
  return {{"complement_rank", c.complement.rank()},
          {"complement_generator_actions", generator_actions(c.complement)},
          {"target_spec", c.target_spec},
          {"iso", to_json(c.iso)}};
}

const AbelianRealization& need_realization(const Inputs& in) {
  if (!in.group->is_abelian())
    throw Error(ErrorCode::NonAbelianRealization, "the group is not abelian, so no realization in Q(zeta_f) exists");
  if (in.realization_error) throw *in.realization_error;
  if (!in.realization) throw Error(ErrorCode::InvalidArgument, "this command needs a [realization] section");
  return *in.realization;
}

json cmd_predict(const Inputs& in) {
  std::optional<AbelianRealization> r = in.group->is_abelian() ? in.realization : std::nullopt;
  if (in.group->is_abelian() && !r) need_realization(in);
  BTCReport rep = btc_predict(in.lattice, r, in.options, in.certificate, in.presentation);
  json out = {{"motivic_verdict", to_string(rep.motivic.verdict)},
              {"certificate_source", rep.motivic.certificate_source},
              {"ono_identity", to_json(rep.ono)},
              {"warnings", rep.warnings},
              {"totally_real", rep.totally_real}};
  if (rep.predicted) {
    out["l_value"] = to_string(rep.lvalue->value);
    out["l_value_abs"] = to_string(rep.lvalue->abs_value);
    out["w_order"] = to_json(rep.w->total);
    out["w_breakdown"] = to_json(*rep.w);
    out["predicted_kt_order"] = to_string(*rep.predicted);
    out["predicted_odd_part"] = to_string(*rep.predicted_odd_part);
    out["two_defect_rank"] = rep.two_defect_rank;
    out["two_defect"] = "equality asserted up to a power of 2 bounded by 2^" + std::to_string(rep.two_defect_rank);
  } else {
    out["predicted_kt_order"] = nullptr;
  }
  return out;
}

json cmd_lvalue(const Inputs& in) {
  if (!in.group->is_abelian()) {
    OnoDecomposition ono = ono_decomposition(in.lattice, in.options.subgroup_bound);
    return {{"l_value", nullptr},
            {"ono_identity", to_json(ono)},
            {"warnings", {"NonAbelianRealization: only the symbolic Ono identity is available"}}};
  }
  ArtinLValue l = artin_L_minus_one(in.lattice, need_realization(in), in.options.subgroup_bound);
  json table = json::array();
  for (const auto& c : l.table)
    table.push_back({{"conductor", to_json(c.conductor)}, {"order", c.order}, {"multiplicity", to_json(c.multiplicity)},
                     {"value", c.value.to_string()}});
  return {{"l_value", to_string(l.value)}, {"l_value_abs", to_string(l.abs_value)}, {"characters", table},
          {"ono_identity", to_json(l.ono)}, {"ono_product", to_string(l.ono_product)}};
}

json cmd_wgroup(const Inputs& in) {
  const AbelianRealization& r = need_realization(in);
  WGroupResult w = w_group_order(in.lattice, r, in.options.stabilization);
  WGroupResult m = global_coinvariants_order(in.lattice, r, in.options.stabilization);
  return {{"w_total", to_json(w.total)}, {"w_breakdown", to_json(w)}, {"m_global", to_json(m.total)},
          {"m_breakdown", to_json(m)}, {"totally_real", r.totally_real()}};
}

json cmd_resolve(const Inputs& in) {
  const std::size_t bound = in.options.subgroup_bound;
  FlasqueResolution res = flasque_resolution(in.lattice, bound);
  json h1_x = json::array(), h1_q = json::array();
  for (const auto& c : in.group->subgroup_classes(bound)) {
    h1_x.push_back({{"subgroup_id", c.id}, {"h1", to_json(h1(in.lattice, c))}});
    h1_q.push_back({{"subgroup_id", c.id}, {"h1", to_json(h1(res.Q, c))}});
  }
  return {{"subgroups", subgroups_json(*in.group, bound)},
          {"p_spec", res.p_spec},
          {"p_rank", res.P.rank()},
          {"q_rank", res.Q.rank()},
          {"identity_resolution", res.identity},
          {"surjection", to_json(res.surjection)},
          {"inclusion", to_json(res.inclusion)},
          {"q_generator_actions", generator_actions(res.Q)},
          {"q_flasque", is_flasque(res.Q, bound).flasque},
          {"postcondition_violations", check_resolution(in.lattice, res, bound)},
          {"h1_x", h1_x},
          {"h1_q", h1_q}};
}

json cmd_motivic(const Inputs& in) {
  MotivicCheck m = check_motivic_interpretation(in.lattice, in.certificate, in.presentation, in.options.search,
                                                in.options.subgroup_bound);
  json out = {{"verdict", to_string(m.verdict)},
              {"metacyclic", is_metacyclic(*in.group, in.options.subgroup_bound)},
              {"certificate_source", m.certificate_source}};
  if (m.resolution) out["q_rank"] = m.resolution->Q.rank();
  out["certificate"] = m.certificate ? certificate_json(*m.certificate) : json(nullptr);
  return out;
}

json cmd_real(const Inputs& in) {
  const AbelianRealization& r = need_realization(in);
  Element conj = r.complex_conjugation();
  RealDecomposition d = real_decomposition(in.lattice, conj);
  return {{"conjugation_element", conj},
          {"a", d.trivial},
          {"b", d.sign},
          {"c", d.induced},
          {"kt_real_torsion", to_json(d.real_torsion)},
          {"sequence_mod_n", {to_json(d.k_mod_n), to_json(d.h2), to_json(d.h3)}}};
}

json cmd_local(const Inputs& in) {
  json rows = json::array();
  for (const auto& c : local_table(in.lattice, need_realization(in), in.options.prime_cap))
    rows.push_back({{"ell", to_json(c.ell)}, {"count", to_json(c.count)}});
  return {{"prime_cap", in.options.prime_cap}, {"local_table", rows}};
}

json cmd_isogeny(const Inputs& in) {
  if (!in.lattice2) throw Error(ErrorCode::InvalidArgument, "check-isogeny needs a [lattice2] section");
  IsogenyCheck c = isogeny_invariance_check(in.lattice, *in.lattice2, need_realization(in), in.options);
  return {{"predicted_first", to_string(c.predicted_first)},
          {"predicted_second", to_string(c.predicted_second)},
          {"ratio", to_string(c.ratio)},
          {"pass", c.pass},
          {"two_exponent", c.two_exponent},
          {"odd_parts_equal", c.odd_parts_equal}};
}

json cmd_shapiro(const Inputs& in) {
  const AbelianRealization& r = need_realization(in);
  json checks = json::array();
  bool all = true;
  for (const auto& h : in.group->subgroup_classes(in.options.subgroup_bound)) {
    WeilRestrictionCheck c = weil_restriction_check(h, r, in.options);
    all = all && c.pass;
    checks.push_back({{"subgroup_id", c.subgroup_id},
                      {"order", h.order},
                      {"predicted", to_string(c.predicted)},
                      {"zeta_minus_one", to_string(c.zeta)},
                      {"w2", to_json(c.w2)},
                      {"classical", to_string(c.classical)},
                      {"pass", c.pass}});
  }
  return {{"checks", checks}, {"all_pass", all}};
}

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json error_entry(const std::string& code, const std::string& message) {
  return {{"status", "error"}, {"error", {{"code", code}, {"message", message}}}};
}

json execute(const std::string& command, const Manifest& m) {
  try {
    Inputs in = build_inputs(m);
    return {{"status", "ok"}, {"result", run_command(command, in)}};
  } catch (const Error& e) {
    return error_entry(std::string(error_code_name(e.code())), e.what());
  } catch (const std::exception& e) {
    return error_entry("InternalError", e.what());
  }
}

void write_atomically(const std::filesystem::path& target, const std::string& data) {
  std::random_device rd;
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << data;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

json run_command(const std::string& command, const Inputs& in) {
  if (command == "predict") return cmd_predict(in);
  if (command == "lvalue") return cmd_lvalue(in);
  if (command == "wgroup") return cmd_wgroup(in);
  if (command == "resolve") return cmd_resolve(in);
  if (command == "motivic") return cmd_motivic(in);
  if (command == "real-decompose") return cmd_real(in);
  if (command == "local-table") return cmd_local(in);
  if (command == "check-isogeny") return cmd_isogeny(in);
  if (command == "check-shapiro") return cmd_shapiro(in);
  throw Error(ErrorCode::ParseError, "unknown command '" + command + "'");
}

json inputs_echo(const Manifest& m) {
  json echo = m.sections;
  echo.erase("run");
  return echo;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

json run_manifest(const Manifest& m, const std::vector<std::string>& commands) {
  const json echo = inputs_echo(m);
  json results = json::array();
  json warnings = json::array();
  for (const auto& command : commands) {
    const auto& known = known_commands();
    if (std::find(known.begin(), known.end(), command) == known.end())
      throw Error(ErrorCode::ParseError, "line 0, field 'command': unknown command '" + command + "'");
    json entry;
    std::filesystem::path cache_file;
    if (!m.cache_dir.empty()) {
      json key = {{"schema_version", kSchemaVersion}, {"inputs", echo}, {"command", command}};
      cache_file = std::filesystem::path(m.cache_dir) / (sha256_hex(key.dump()) + ".json");
      std::ifstream in(cache_file);
      if (in) {
        json cached = json::parse(in, nullptr, false);
        if (!cached.is_discarded()) {
          entry = std::move(cached);
          std::cerr << "cache hit: " << command << " (" << cache_file.filename().string() << ")\n";
        }
      }
    }
    if (entry.is_null()) {
      entry = execute(command, m);
      entry["command"] = command;
      if (!cache_file.empty()) {
        std::filesystem::create_directories(m.cache_dir);
        write_atomically(cache_file, entry.dump());
        std::cerr << "cache miss: " << command << " (stored " << cache_file.filename().string() << ")\n";
      }
    }
    if (entry.contains("result") && entry["result"].contains("warnings"))
      for (const auto& w : entry["result"]["warnings"]) warnings.push_back(command + ": " + w.get<std::string>());
    results.push_back(std::move(entry));
  }
  return {{"schema_version", kSchemaVersion},
          {"tool", "torusbt"},
          {"inputs", echo},
          {"results", results},
          {"warnings", warnings},
          {"generated_at", utc_timestamp()}};
}

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace torusbt
