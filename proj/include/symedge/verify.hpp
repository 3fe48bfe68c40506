#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symedge/betti.hpp"
#include "symedge/corpus.hpp"

namespace symedge {

struct SuiteCase {
  std::string instance;
  std::string claim;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool skipped = false;  // budget exceeded; reported, not counted
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = kCorpusSeed;
  std::vector<SuiteCase> cases;
  double wall_seconds = 0;

  bool pass() const;
  /// Deterministic unless `with_timing` adds the wall time.
  nlohmann::json to_json(bool with_timing = false) const;
};

using Corpus = std::vector<CorpusEntry>;

SuiteReport suite_decomposition(const Corpus& corpus);
SuiteReport suite_colon_w(const Corpus& corpus);
SuiteReport suite_colon_symbolic(const Corpus& corpus);
SuiteReport suite_intersection_m2s(const Corpus& corpus);
SuiteReport suite_regularity(const Corpus& corpus, const BettiBudget& budget = {});
SuiteReport suite_lemma_IsJ(const Corpus& corpus);

struct SuiteSpec {
  std::string name;
  std::function<SuiteReport(const Corpus&)> run;
};

const std::vector<SuiteSpec>& suites();
/// Runs one suite by name, or every suite for "all". Throws on unknown names.
std::vector<SuiteReport> run_suites(const std::string& name, const Corpus& corpus);

/// Full generator list when short, otherwise a size and degree summary.
std::string describe(const MonomialIdeal& a, std::size_t max_listed = 16);

}  // namespace symedge
