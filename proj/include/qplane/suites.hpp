#ifndef QPLANE_SUITES_HPP
#define QPLANE_SUITES_HPP

// Top-level suites: relation fixtures, confluence across the catalog, parser
// round-trips, and the aggregate run.

#include <cstdint>
#include <string>
#include <vector>

#include "qplane/report.hpp"

namespace qplane {

struct RelationFixture {
  std::string presentation;
  std::string name;
  std::string text;  // element that must normalize to zero
};

/// The displayed defining and commutation relations of every presentation,
/// written in commutator form as they are displayed.
const std::vector<RelationFixture>& relation_fixtures();
CheckReport relation_suite();

/// Presentations whose rule sets must be locally confluent through the
/// degree. DERIV and VECT_ACT are examined too but reported as findings.
const std::vector<std::string>& confluent_presentations();
CheckReport confluence_suite(int max_degree = 4);

/// parse(format(e)) == e for `per_presentation` seeded random elements and
/// tensors per presentation; error spans stay inside the input; the
/// documented text fixtures parse to their stated values.
CheckReport parser_suite(int per_presentation = 1000, std::uint64_t seed = 1);

struct CheckAllOptions {
  std::uint64_t seed = 42;
  int hopf_samples = 100;
  int covariance_samples = 40;
  int oracle_cutoff = 6;
  int parser_samples = 1000;
};

/// Every suite, one report per suite, each timed.
std::vector<CheckReport> check_all(const CheckAllOptions& opts = {});

/// Concatenation of several reports under one suite name (ids prefixed).
CheckReport merge_reports(const std::string& suite, const std::vector<CheckReport>& parts);

}  // namespace qplane

#endif  // QPLANE_SUITES_HPP
