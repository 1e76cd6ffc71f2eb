#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gessel::cli {

enum class Status { pass, fail, conjecture_pass, conjecture_fail };

std::string to_string(Status status);

struct ReportEntry {
    std::string name;
    std::string params;
    std::string expected;
    std::string actual;
    Status status = Status::pass;
    double runtime_ms = 0;
    // First counterexample or other context; empty when nothing to add.
    std::string detail;
};

// Asserted check: pass iff expected == actual.
ReportEntry asserted(std::string name, std::string params, std::string expected, std::string actual,
                     std::string detail = {});
// Conjecture check: never fails the run unless promoted.
ReportEntry conjectured(std::string name, std::string params, std::string expected, std::string actual,
                        std::string detail = {});

enum class Format { plain, csv, json };

struct RenderOptions {
    Format format = Format::plain;
    bool timing = true;
};

void render(std::ostream& out, const std::vector<ReportEntry>& entries, const RenderOptions& options);

// True if any asserted entry failed, or any conjecture failed when strict.
bool has_failure(const std::vector<ReportEntry>& entries, bool strict_conjectures);

}  // namespace gessel::cli
