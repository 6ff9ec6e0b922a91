#pragma once

#include <string>
#include <utility>
#include <vector>

#include <mcg/interchange.hpp>

namespace mcg {

struct CheckLine {
  std::string id;
  std::string description;
  bool passed = false;
  bool skipped = false;  // not applicable to the requested inputs
  std::string witness;   // optional supporting value, already rendered
};

// Uniform result document for CLI commands and scenario derivations.
// Renders deterministically: fields in fixed order, no timestamps.
struct Report {
  std::string tool;
  std::string command;
  std::vector<std::string> notes;
  std::vector<CheckLine> checks;
  // Named payloads; kind "matrix" values hold interchange JSON, other kinds
  // are plain text.
  struct Artifact {
    std::string name;
    std::string kind;
    std::string value;
  };
  std::vector<Artifact> artifacts;

  bool all_passed() const;
  void add_check(std::string id, std::string description, bool passed,
                 std::string witness = "");
  void add_skip(std::string id, std::string description,
                std::string witness = "");
  void add_note(std::string note);
  void add_matrix(std::string name, const ExactMatrix& m);
  void add_text(std::string name, std::string value);

  std::string render_text() const;
  std::string render_json() const;
};

std::string tool_banner();  // "mcgreps <version>"

}  // namespace mcg
