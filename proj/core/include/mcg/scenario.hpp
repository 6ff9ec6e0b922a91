#pragma once

#include <map>
#include <string>
#include <vector>

#include <mcg/interchange.hpp>
#include <mcg/report.hpp>

namespace mcg {

enum class ScenarioId { Lemma51, Thm13G6M4, Sec7Odd, Sec7Even, Lemma83 };

std::string scenario_name(ScenarioId id);
// Accepts the external ids "lemma51", "thm13_g6m4", "sec7_odd", "sec7_even",
// "lemma83"; throws std::invalid_argument otherwise.
ScenarioId scenario_from_name(const std::string& name);

struct ScenarioOptions {
  // Genus parameter for the parametric derivations; 0 means the scenario
  // default (3 for sec7_odd, 4 for sec7_even). Ignored elsewhere.
  int r = 0;
  int branch_limit = 64;
};

struct ScenarioStep {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;  // witness values, solver logs, rejected branches
};

struct DerivationReport {
  std::string scenario;  // display id, e.g. "sec7_odd(3)"
  std::vector<ScenarioStep> steps;
  // Named intermediates in derivation order, for introspection.
  std::vector<std::pair<std::string, ExactMatrix>> matrices;

  bool passed() const;
  void step(std::string id, std::string description, bool ok,
            std::string detail = "");
  void remember(std::string name, ExactMatrix m);
  const ExactMatrix* find_matrix(const std::string& name) const;
  Report to_report() const;
};

DerivationReport run_scenario(ScenarioId id, ScenarioOptions opt = {});

// Intermediate matrix of a scenario by display name ("C", "U_{2r}", ...);
// throws std::invalid_argument for names the scenario does not define.
ExactMatrix scenario_matrix(ScenarioId id, const std::string& name,
                            ScenarioOptions opt = {});

namespace detail {
DerivationReport scenario_lemma51();
DerivationReport scenario_thm13_g6m4();
DerivationReport scenario_sec7_odd(int r, int branch_limit);
DerivationReport scenario_sec7_even(int r, int branch_limit);
DerivationReport scenario_lemma83(int branch_limit);
}  // namespace detail

}  // namespace mcg
