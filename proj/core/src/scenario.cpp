#include <mcg/scenario.hpp>

#include <sstream>
#include <stdexcept>

namespace mcg {

std::string scenario_name(ScenarioId id) {
  switch (id) {
    case ScenarioId::Lemma51: return "lemma51";
    case ScenarioId::Thm13G6M4: return "thm13_g6m4";
    case ScenarioId::Sec7Odd: return "sec7_odd";
    case ScenarioId::Sec7Even: return "sec7_even";
    case ScenarioId::Lemma83: return "lemma83";
  }
  throw std::logic_error("scenario_name: bad id");
}

ScenarioId scenario_from_name(const std::string& name) {
  if (name == "lemma51") return ScenarioId::Lemma51;
  if (name == "thm13_g6m4") return ScenarioId::Thm13G6M4;
  if (name == "sec7_odd") return ScenarioId::Sec7Odd;
  if (name == "sec7_even") return ScenarioId::Sec7Even;
  if (name == "lemma83") return ScenarioId::Lemma83;
  throw std::invalid_argument("unknown scenario id: " + name);
}

bool DerivationReport::passed() const {
  for (const auto& s : steps)
    if (!s.passed) return false;
  return !steps.empty();
}

void DerivationReport::step(std::string id, std::string description, bool ok,
                            std::string detail) {
  steps.push_back({std::move(id), std::move(description), ok, std::move(detail)});
}

void DerivationReport::remember(std::string name, ExactMatrix m) {
  for (auto& [key, value] : matrices) {
    if (key == name) {
      value = std::move(m);
      return;
    }
  }
  matrices.emplace_back(std::move(name), std::move(m));
}

const ExactMatrix* DerivationReport::find_matrix(const std::string& name) const {
  for (const auto& [key, value] : matrices)
    if (key == name) return &value;
  return nullptr;
}

Report DerivationReport::to_report() const {
  Report rep;
  rep.tool = tool_banner();
  rep.command = "scenario " + scenario;
  for (const auto& s : steps)
    rep.add_check(s.id, s.description, s.passed, s.detail);
  for (const auto& [name, m] : matrices) rep.add_matrix(name, m);
  return rep;
}

DerivationReport run_scenario(ScenarioId id, ScenarioOptions opt) {
  switch (id) {
    case ScenarioId::Lemma51:
      return detail::scenario_lemma51();
    case ScenarioId::Thm13G6M4:
      return detail::scenario_thm13_g6m4();
    case ScenarioId::Sec7Odd:
      return detail::scenario_sec7_odd(opt.r == 0 ? 3 : opt.r, opt.branch_limit);
    case ScenarioId::Sec7Even:
      return detail::scenario_sec7_even(opt.r == 0 ? 4 : opt.r, opt.branch_limit);
    case ScenarioId::Lemma83:
      return detail::scenario_lemma83(opt.branch_limit);
  }
  throw std::logic_error("run_scenario: bad id");
}

ExactMatrix scenario_matrix(ScenarioId id, const std::string& name,
                            ScenarioOptions opt) {
  DerivationReport rep = run_scenario(id, opt);
  if (const ExactMatrix* m = rep.find_matrix(name)) return *m;
  std::ostringstream msg;
  msg << "scenario " << rep.scenario << " defines no matrix named \"" << name
      << "\"; available:";
  for (const auto& [key, value] : rep.matrices) msg << " \"" << key << "\"";
  throw std::invalid_argument(msg.str());
}

}  // namespace mcg
