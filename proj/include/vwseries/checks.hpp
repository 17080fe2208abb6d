#ifndef VWSERIES_CHECKS_HPP
#define VWSERIES_CHECKS_HPP

// The library's cross-check suite: every identity the computation stack is
// supposed to reproduce, runnable as data. Each check returns a result
// record instead of aborting, so callers (tests, the CLI `check` command)
// can report all outcomes in one pass. The twelve checks cover the
// hand-computed low-rank values, the closed-form/term-by-term series
// agreement, the modular prediction, the wall-crossing round trip and
// worked examples, the general-type first-term identity, root-of-unity
// averaging, the point-thickening series, odd-second-Chern-class
// extraction, and the index formulas.

#include <string>
#include <vector>

namespace vwseries {

struct CheckResult {
  std::string id;           // "C1".."C12"
  std::string description;  // what is being verified
  std::string anchor;       // which computation anchors the expected values
  bool pass = false;
  std::string details;  // computed-vs-expected data, annotations, or the error
};

// Runs every check whose id matches `filter` (exact id, or empty for all).
// Exceptions inside a check are caught and reported as failures.
std::vector<CheckResult> run_checks(const std::string& filter = "");

}  // namespace vwseries

#endif  // VWSERIES_CHECKS_HPP
