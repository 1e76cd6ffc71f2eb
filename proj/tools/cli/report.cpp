#include "report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace gessel::cli {

std::string to_string(Status status) {
    switch (status) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::conjecture_pass: return "conjecture-pass";
        case Status::conjecture_fail: return "conjecture-fail";
    }
    return "fail";
}

ReportEntry asserted(std::string name, std::string params, std::string expected, std::string actual,
                     std::string detail) {
    const Status status = expected == actual ? Status::pass : Status::fail;
    return {std::move(name), std::move(params), std::move(expected), std::move(actual), status, 0, std::move(detail)};
}

ReportEntry conjectured(std::string name, std::string params, std::string expected, std::string actual,
                        std::string detail) {
    const Status status = expected == actual ? Status::conjecture_pass : Status::conjecture_fail;
    return {std::move(name), std::move(params), std::move(expected), std::move(actual), status, 0, std::move(detail)};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string milliseconds(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    return os.str();
}

}  // namespace

void render(std::ostream& out, const std::vector<ReportEntry>& entries, const RenderOptions& options) {
    switch (options.format) {
        case Format::plain:
            for (const auto& e : entries) {
                out << std::left << std::setw(16) << to_string(e.status) << e.name;
                if (!e.params.empty()) out << " [" << e.params << "]";
                out << " expected=" << e.expected << " actual=" << e.actual;
                if (options.timing) out << " (" << milliseconds(e.runtime_ms) << " ms)";
                if (!e.detail.empty()) out << " -- " << e.detail;
                out << '\n';
            }
            break;
        case Format::csv:
            out << "check,parameters,expected,actual,status";
            if (options.timing) out << ",runtime_ms";
            out << ",detail\n";
            for (const auto& e : entries) {
                out << csv_field(e.name) << ',' << csv_field(e.params) << ',' << csv_field(e.expected) << ','
                    << csv_field(e.actual) << ',' << to_string(e.status);
                if (options.timing) out << ',' << milliseconds(e.runtime_ms);
                out << ',' << csv_field(e.detail) << '\n';
            }
            break;
        case Format::json: {
            auto array = nlohmann::ordered_json::array();
            for (const auto& e : entries) {
                nlohmann::ordered_json j;
                j["check"] = e.name;
                j["parameters"] = e.params;
                j["expected"] = e.expected;
                j["actual"] = e.actual;
                j["status"] = to_string(e.status);
                if (options.timing) j["runtime_ms"] = e.runtime_ms;
                if (!e.detail.empty()) j["detail"] = e.detail;
                array.push_back(std::move(j));
            }
            out << array.dump(2) << '\n';
            break;
        }
    }
}

bool has_failure(const std::vector<ReportEntry>& entries, bool strict_conjectures) {
    for (const auto& e : entries) {
        if (e.status == Status::fail) return true;
        if (strict_conjectures && e.status == Status::conjecture_fail) return true;
    }
    return false;
}

}  // namespace gessel::cli
