#pragma once

#include <string>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/graph_io.hpp"

namespace widthlab {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// count seeded random graphs with 1..max_n vertices; graph i depends only
/// on (seed, i).
std::vector<NamedGraph> audit_corpus(std::uint64_t seed, int count, int max_n);

enum class CheckStatus { pass, fail, skipped, finding };
std::string to_string(CheckStatus s);

struct AuditCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  json values;       ///< the numbers compared
  json certificate;  ///< witnesses, present on failures
  std::string note;
};

struct AuditEntry {
  std::string name;
  Graph graph;
  std::vector<AuditCheck> checks;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  int passed = 0, failed = 0, skipped = 0, findings = 0;
};

struct AuditOptions {
  int jobs = 1;
  /// fault injection: report treewidth one too large
  bool corrupt_treewidth = false;
};

/// Runs every instance-level inequality on each graph. Assertion checks
/// pass or fail; cited-theorem checks are findings when violated.
AuditReport audit(const std::vector<NamedGraph>& corpus, const AuditOptions& options = {});

json to_json(const AuditReport& report);

}  // namespace widthlab
