#pragma once

#include "torusbt/engine.hpp"
#include "torusbt/error.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torusbt {

const std::vector<std::string>& known_commands();

/// Parsed manifest. Sections are kept as JSON so that objects are only built
/// (and their errors raised) inside the command that needs them.
struct Manifest {
  nlohmann::json sections = nlohmann::json::object();
  std::vector<std::string> commands;
  std::string cache_dir;
};

/// INI-like text: `[section]` headers, `key = <json>` statements separated by
/// newlines or `;`, `#` comments, values may span lines while brackets are
/// open, and bare integer object keys are allowed. Throws ParseError.
Manifest parse_manifest(std::string_view text);
Manifest load_manifest(const std::string& path);
Manifest fixture_manifest(const std::string& name);

struct Inputs {
  GroupPtr group;
  GLattice lattice;
  std::optional<GLattice> lattice2;
  std::optional<AbelianRealization> realization;
  /// Set when [realization] is present but invalid; raised by commands that need it.
  std::optional<Error> realization_error;
  std::optional<InvertibilityCertificate> certificate;
  std::optional<PermutationPresentation> presentation;
  EngineOptions options;
};

/// Builds the mathematical objects; throws the library's Error codes.
Inputs build_inputs(const Manifest& m);

/// Parses a group word such as "e", "g1" or "g0*g1^2" in the generators.
Element parse_group_word(const FiniteGroup& g, const std::string& word);

}  // namespace torusbt
