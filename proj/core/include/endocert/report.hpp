// Machine (JSON) and text renderings of a run. Both are deterministic for a
// fixed input: keys keep insertion order and no timestamps are written.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endocert/galois.hpp"
#include "endocert/verdict.hpp"

namespace endocert {

inline constexpr int kReportSchemaVersion = 1;

struct Report {
  std::string command;
  /// Echo of the inputs, in the order given.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<Verdict> verdict;
  std::optional<CycleTypeCensus> census;
  std::vector<GroupHypothesis> hypotheses;
  std::optional<std::size_t> chosen;
  /// Free-form extra sections (title, body), e.g. matrix dumps.
  std::vector<std::pair<std::string, std::string>> attachments;
};

/// "proved (group supplied)" or "conditional (group identified heuristically)".
std::string mode_string(bool group_supplied);

/// Outcome with its characteristic set, e.g. "SUPERSINGULAR_POSSIBLE({3})".
std::string outcome_label(const Verdict& v);

std::string render_machine(const Report& r);
std::string render_text(const Report& r);

}  // namespace endocert
