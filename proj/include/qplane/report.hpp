#ifndef QPLANE_REPORT_HPP
#define QPLANE_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace qplane {

enum class Status { Pass, Fail, Finding };

std::string to_string(Status s);

struct CheckRecord {
  std::string id;
  Status status = Status::Pass;
  std::string witness;
  std::string residual;
};

struct RuleRecord {
  std::string presentation;
  std::string lhs;
  std::string rhs;
  std::string provenance;
  bool operator==(const RuleRecord&) const = default;
};

/// Outcome of one check suite. Findings document behaviour worth reporting
/// (such as a misprinted formula) without failing the run.
struct CheckReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  std::vector<RuleRecord> rules;
  double timing_ms = 0.0;

  void pass(std::string id, std::string witness = {});
  void fail(std::string id, std::string witness, std::string residual);
  void finding(std::string id, std::string witness, std::string residual = {});
  /// Records pass or fail depending on `ok`.
  void expect(bool ok, std::string id, std::string witness, std::string residual = {});

  bool ok() const;
  std::size_t count(Status s) const;
  std::size_t source_rules() const;
  std::size_t derived_rules() const;
  const CheckRecord* find(const std::string& id) const;

  /// Appends the other report's checks (ids prefixed by its suite name unless
  /// `prefix` is false) and its rules, deduplicated.
  void absorb(const CheckReport& other, bool prefix = true);
  void add_rule(const RuleRecord& r);

  std::string to_json(bool with_timing) const;
  std::string to_text(bool verbose) const;
};

}  // namespace qplane

#endif  // QPLANE_REPORT_HPP
