// torusbt: Birch-Tate predictions for algebraic tori over Q.
#include "torusbt/error.hpp"
#include "torusbt/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace torusbt;

namespace {

Manifest load(const std::string& source) {
  const std::string prefix = "fixture:";
  if (source.rfind(prefix, 0) == 0) return fixture_manifest(source.substr(prefix.size()));
  return load_manifest(source);
}

void print_summary(const nlohmann::json& report) {
  for (const auto& r : report["results"]) {
    std::cout << r["command"].get<std::string>() << ": ";
    if (r["status"] == "ok") {
      const auto& res = r["result"];
      if (res.contains("predicted_kt_order") && !res["predicted_kt_order"].is_null())
        std::cout << "predicted |K^T(O)| = " << res["predicted_kt_order"].get<std::string>();
      else
        std::cout << "ok";
    } else {
      std::cout << r["error"]["code"].get<std::string>();
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torusbt: Birch-Tate predictions for tori split by abelian fields"};
  std::string command, source, json_out, cache_dir;
  std::optional<unsigned> prime_cap, stab_cap;
  bool debug = false;

  std::vector<std::string> choices = known_commands();
  choices.push_back("run");
  choices.push_back("fixtures");
  app.add_option("command", command, "predict, lvalue, wgroup, resolve, motivic, real-decompose, local-table, "
                                     "check-isogeny, check-shapiro, run (manifest [run] list) or fixtures")
      ->required()
      ->check(CLI::IsMember(choices));
  app.add_option("manifest", source, "manifest file or fixture:NAME");
  app.add_option("--json", json_out, "write the JSON report here instead of stdout");
  app.add_option("--cache-dir", cache_dir, "directory for cached command results");
  app.add_option("--prime-cap", prime_cap, "largest ell in local tables");
  app.add_option("--stab-cap", stab_cap, "stabilization cap for W-group computations");
  app.add_flag("--debug-oracles", debug, "run the extra stabilization and candidate-prime checks");
  CLI11_PARSE(app, argc, argv);

  if (command == "fixtures") {
    for (const auto& f : fixture_catalog()) std::cout << f.name << "\t" << f.description << "\n";
    return 0;
  }
  if (source.empty()) {
    std::cerr << "a manifest file or fixture:NAME is required\n";
    return 2;
  }

  try {
    Manifest m = load(source);
    auto& options = m.sections["options"];
    if (options.is_null()) options = nlohmann::json::object();
    if (prime_cap) options["prime_cap"] = *prime_cap;
    if (stab_cap) options["stab_cap"] = *stab_cap;
    if (debug) options["debug_oracles"] = true;
    if (options.empty()) m.sections.erase("options");
    if (!cache_dir.empty()) m.cache_dir = cache_dir;

    std::vector<std::string> commands{command};
    if (command == "run") {
      if (m.commands.empty()) {
        std::cerr << "ParseError: the manifest has no [run] commands\n";
        return 2;
      }
      commands = m.commands;
    }
    nlohmann::json report = run_manifest(m, commands);
    std::string text = render_report(report);
    if (json_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(json_out);
      out << text;
      if (!out) {
        std::cerr << "cannot write " << json_out << "\n";
        return 1;
      }
      print_summary(report);
    }
    for (const auto& r : report["results"])
      if (r["status"] != "ok") return 3;
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
