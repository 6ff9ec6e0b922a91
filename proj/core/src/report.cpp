#include <mcg/report.hpp>

#include <json.hpp>

namespace mcg {

namespace {
constexpr const char* kVersion = "0.1.0";
}

std::string tool_banner() { return std::string("mcgreps ") + kVersion; }

bool Report::all_passed() const {
  for (const CheckLine& c : checks)
    if (!c.passed && !c.skipped) return false;
  return true;
}

void Report::add_check(std::string id, std::string description, bool passed,
                       std::string witness) {
  checks.push_back(CheckLine{std::move(id), std::move(description), passed,
                             false, std::move(witness)});
}

void Report::add_skip(std::string id, std::string description,
                      std::string witness) {
  checks.push_back(CheckLine{std::move(id), std::move(description), false,
                             true, std::move(witness)});
}

void Report::add_note(std::string note) { notes.push_back(std::move(note)); }

void Report::add_matrix(std::string name, const ExactMatrix& m) {
  artifacts.push_back(Artifact{std::move(name), "matrix", to_interchange(m)});
}

void Report::add_text(std::string name, std::string value) {
  artifacts.push_back(Artifact{std::move(name), "text", std::move(value)});
}

std::string Report::render_text() const {
  std::string out = tool + "  " + command + "\n";
  for (const std::string& n : notes) out += n + "\n";
  size_t failed = 0, skipped = 0;
  for (const CheckLine& c : checks) {
    const char* status = c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL";
    if (c.skipped) ++skipped;
    else if (!c.passed) ++failed;
    out += std::string(status) + "  " + c.id;
    if (!c.description.empty()) out += "  " + c.description;
    if (!c.witness.empty()) out += "  [" + c.witness + "]";
    out += "\n";
  }
  for (const Artifact& a : artifacts) {
    if (a.kind == "matrix") {
      out += a.name + " =\n";
      out += plain_str(from_interchange(a.value)) + "\n";
    } else {
      out += a.name + ": " + a.value + "\n";
    }
  }
  if (checks.empty()) {
    out += "0 checks\n";
  } else {
    out += std::to_string(checks.size()) + " checks, " +
           std::to_string(failed) + " failed";
    if (skipped) out += ", " + std::to_string(skipped) + " skipped";
    out += "\n";
  }
  return out;
}

std::string Report::render_json() const {
  nlohmann::ordered_json doc;
  doc["tool"] = tool;
  doc["command"] = command;
  doc["notes"] = notes;
  nlohmann::ordered_json checks_json = nlohmann::ordered_json::array();
  for (const CheckLine& c : checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["status"] = c.skipped ? "skip" : c.passed ? "pass" : "fail";
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks_json.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks_json);
  nlohmann::ordered_json arts = nlohmann::ordered_json::array();
  for (const Artifact& a : artifacts) {
    nlohmann::ordered_json ja;
    ja["name"] = a.name;
    ja["kind"] = a.kind;
    if (a.kind == "matrix")
      ja["value"] = nlohmann::ordered_json::parse(a.value);
    else
      ja["value"] = a.value;
    arts.push_back(std::move(ja));
  }
  doc["artifacts"] = std::move(arts);
  doc["all_passed"] = all_passed();
  return doc.dump(2) + "\n";
}

}  // namespace mcg
