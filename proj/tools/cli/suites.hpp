#pragma once

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace gessel::cli {

struct SuiteBounds {
    // Unset means the suite's own default.
    std::optional<int> n_max;
    std::optional<int> len_max;
};

// Known suite names, in the order `all` runs them.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Suites run concurrently; the
// entries come back in suite order. Throws PreconditionError for an unknown
// name and ResourceLimitError when a bound exceeds the suite's cap.
std::vector<ReportEntry> run_suite(const std::string& name, const SuiteBounds& bounds);

}  // namespace gessel::cli
