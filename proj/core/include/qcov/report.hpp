#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qcov {

/// Outcome of an exact identity check.  residual_terms holds the rendered
/// terms of whatever failed to cancel.
struct CheckReport {
  CheckReport(std::string name = {}) : check(std::move(name)) {}

  std::string check;
  bool pass = true;
  std::vector<std::string> residual_terms;
  std::vector<std::string> notes;

  void fail(std::string term) {
    pass = false;
    residual_terms.push_back(std::move(term));
  }
  const char* status() const { return pass ? "pass" : "fail"; }
};

}  // namespace qcov
