#pragma once

#include "hermdiag/execution.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace hermdiag::cli {

struct ExampleCheck {
  std::string label;
  bool passed = false;
  std::string detail;
};

/// One reproduced example. `errata` lists places where the computed value
/// is asserted and the published one differs; `notes` are informational.
struct ExampleReport {
  std::string id;
  std::string title;
  std::vector<ExampleCheck> checks;
  std::vector<std::string> errata;
  std::vector<std::string> notes;

  bool passed() const;
};

/// table1, bessel, hermite-ops, geom-factorial, laguerre.
const std::vector<std::string>& example_ids();

/// Throws std::invalid_argument for an unknown id.
ExampleReport run_example(const std::string& id, Execution exec);

void print_text(std::ostream& out, const ExampleReport& report);
nlohmann::json to_json(const ExampleReport& report);

}  // namespace hermdiag::cli
