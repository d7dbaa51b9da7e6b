#include "qplane/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qplane {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Finding: return "finding";
  }
  return "?";
}

void CheckReport::pass(std::string id, std::string witness) {
  checks.push_back({std::move(id), Status::Pass, std::move(witness), {}});
}

void CheckReport::fail(std::string id, std::string witness, std::string residual) {
  checks.push_back({std::move(id), Status::Fail, std::move(witness), std::move(residual)});
}

void CheckReport::finding(std::string id, std::string witness, std::string residual) {
  checks.push_back({std::move(id), Status::Finding, std::move(witness), std::move(residual)});
}

void CheckReport::expect(bool ok, std::string id, std::string witness, std::string residual) {
  if (ok) pass(std::move(id), std::move(witness));
  else fail(std::move(id), std::move(witness), std::move(residual));
}

bool CheckReport::ok() const { return count(Status::Fail) == 0; }

std::size_t CheckReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const auto& c) { return c.status == s; }));
}

std::size_t CheckReport::source_rules() const {
  return static_cast<std::size_t>(std::count_if(rules.begin(), rules.end(), [](const auto& r) { return r.provenance == "source"; }));
}

std::size_t CheckReport::derived_rules() const {
  return static_cast<std::size_t>(std::count_if(rules.begin(), rules.end(), [](const auto& r) { return r.provenance == "derived"; }));
}

const CheckRecord* CheckReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

void CheckReport::add_rule(const RuleRecord& r) {
  if (std::find(rules.begin(), rules.end(), r) == rules.end()) rules.push_back(r);
}

void CheckReport::absorb(const CheckReport& other, bool prefix) {
  for (const auto& c : other.checks) {
    CheckRecord copy = c;
    if (prefix) copy.id = other.suite + "/" + c.id;
    checks.push_back(std::move(copy));
  }
  for (const auto& r : other.rules) add_rule(r);
  timing_ms += other.timing_ms;
}

std::string CheckReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  auto& cs = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json o;
    o["id"] = c.id;
    o["status"] = to_string(c.status);
    o["witness"] = c.witness;
    o["residual"] = c.residual;
    cs.push_back(std::move(o));
  }
  auto& rs = j["rules"] = nlohmann::ordered_json::array();
  for (const auto& r : rules) {
    nlohmann::ordered_json o;
    o["presentation"] = r.presentation;
    o["lhs"] = r.lhs;
    o["rhs"] = r.rhs;
    o["provenance"] = r.provenance;
    rs.push_back(std::move(o));
  }
  j["timing_ms"] = with_timing ? timing_ms : 0.0;
  return j.dump(2) + "\n";
}

std::string CheckReport::to_text(bool verbose) const {
  std::ostringstream out;
  out << "== " << suite << " ==\n";
  for (const auto& c : checks) {
    if (!verbose && c.status == Status::Pass) continue;
    out << "  [" << to_string(c.status) << "] " << c.id << "\n";
    if (!c.witness.empty()) out << "      witness:  " << c.witness << "\n";
    if (!c.residual.empty()) out << "      residual: " << c.residual << "\n";
  }
  out << "  " << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, " << count(Status::Finding)
      << " findings; rules used: " << source_rules() << " source, " << derived_rules() << " derived\n";
  return out.str();
}

}  // namespace qplane
