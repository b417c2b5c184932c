#pragma once

// Named check suites over the built-in S4/A4 data and the standard corpora.
// Each check carries an anchor naming the statement it exercises.

#include "modbrick/config.hpp"
#include "modbrick/io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace modbrick {

enum class Verdict { Pass, Fail, Indeterminate };

std::string_view to_string(Verdict v);

struct CheckResult {
  std::string id;
  std::string anchor;
  Verdict verdict = Verdict::Fail;
  Json witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by id
  double seconds = 0;

  Verdict overall() const;
  std::size_t count(Verdict v) const;
};

struct SuiteCheck {
  std::string id;
  std::string anchor;
  /// Returns whether the check passed, filling in the witness.
  std::function<bool(Json& witness)> run;
};

/// s4a4, functor-identities, appendix, smc, clifford.
const std::vector<std::string>& suite_names();
std::vector<SuiteCheck> suite_checks(const std::string& name, const Config& cfg);

/// Runs every check; library errors become Indeterminate (budget ran out or
/// hypothesis unverified) or Fail (anything else). `on_result` sees results in
/// id order.
SuiteReport run_suite(const std::string& name, const Config& cfg,
                      const std::function<void(const CheckResult&)>& on_result = {});

Json check_result_to_json(const CheckResult& r);

}  // namespace modbrick
