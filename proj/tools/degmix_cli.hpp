#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "degmix/decomposition.hpp"
#include "degmix/graph.hpp"
#include "degmix/sequences.hpp"
#include "degmix/spectra.hpp"

namespace degmix::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;

/// A sequence file: {"kind":"simple","degrees":[...]}, {"u":[...],"w":[...]}
/// or {"out":[...],"in":[...]}. Bipartite files may carry "forbidden" as
/// 1-based [u, w] pairs.
struct SequenceInput {
  std::variant<DegreeSequence, BipartiteDegreeSequence, DirectedDegreeSequence> value;
  ForbiddenSet forbidden;
};

/// Operand of `compose`: a sequence file, or
/// {"kind":"split"|"splitted","primary":[...],"secondary":[...]} with an
/// optional 1-based "forbidden" list for splitted operands.
using ComposeOperand = std::variant<DegreeSequence, SplitSequence, RestrictedSplittedSequence>;

SequenceInput parse_sequence(const nlohmann::json& j);
ComposeOperand parse_operand(const nlohmann::json& j);
ForbiddenSet parse_forbidden(const nlohmann::json& j);
DegreeSpectraMatrix parse_dsm(const nlohmann::json& j);
nlohmann::json to_json(const DegreeSpectraMatrix& m);
nlohmann::json read_json_file(const std::string& path);

/// Runs one invocation; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degmix::cli
