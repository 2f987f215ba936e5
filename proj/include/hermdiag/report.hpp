#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hermdiag {

/// Outcome of an exact identity or consistency check. `failure` names the
/// first failing instance; `notes` carries informational lines such as
/// documented divergences that were not asserted.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string name) : name(std::move(name)) {}

  std::string name;
  bool passed = true;
  std::optional<std::string> failure;
  std::size_t cases = 0;
  std::vector<std::string> notes;

  void fail(std::string what) {
    if (passed) {
      passed = false;
      failure = std::move(what);
    }
  }
};

}  // namespace hermdiag
