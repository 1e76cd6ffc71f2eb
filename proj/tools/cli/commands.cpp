#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gessel/closed_forms.hpp"
#include "gessel/errors.hpp"
#include "gessel/walks.hpp"
#include "gessel/words.hpp"
#include "oeis.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace gessel::cli {

namespace {

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};

struct CountArgs {
    int d = 2;
    std::optional<int> n;
    std::optional<int> length;
    std::optional<int> n_max;
    std::string endpoint;
    std::string method = "dp";
    Format format = Format::plain;
    int max_length = EnumerationOptions{}.max_length;
};

struct TriangleArgs {
    std::string kind = "profile";
    int n = 0;
    Format format = Format::plain;
};

struct VerifyArgs {
    std::string suite = "all";
    std::optional<int> n_max;
    std::optional<int> len_max;
    bool strict = false;
    bool no_timing = false;
    Format format = Format::plain;
};

struct OeisArgs {
    std::string id;
    int n_max = 10;
    std::string fixtures;
    bool fetch = false;
    std::string base_url = "https://oeis.org";
    bool no_timing = false;
    Format format = Format::plain;
};

Point parse_point(const std::string& text, int d) {
    Point p;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        try {
            std::size_t used = 0;
            p.push_back(std::stoi(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw PreconditionError("bad endpoint coordinate '" + field + "'");
        }
    }
    if (static_cast<int>(p.size()) != d) {
        throw PreconditionError("endpoint needs " + std::to_string(d) + " coordinates");
    }
    return p;
}

std::string point_text(const Point& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out;
}

Count count_by(const std::string& method, int d, int length, const Point& endpoint, int max_length) {
    const bool origin = std::all_of(endpoint.begin(), endpoint.end(), [](int x) { return x == 0; });
    if (method == "dp") return count_confined_walks(gessel_steps(d), length, Point(d, 0), endpoint);
    if (!origin) throw PreconditionError("--method " + method + " only counts returns to the origin");
    if (length % 2 != 0) return 0;
    const int n = length / 2;
    if (method == "enum") {
        EnumerationOptions options;
        options.max_length = max_length;
        return count_complete_words(d, n, options);
    }
    if (d == 1) return catalan(n);
    if (d == 2) return gessel_closed_form(n);
    throw PreconditionError("no closed form for d = " + std::to_string(d));
}

int cmd_count(const CountArgs& a, std::ostream& out) {
    if (a.d < 1) throw PreconditionError("--d must be at least 1");
    const Point endpoint = a.endpoint.empty() ? Point(a.d, 0) : parse_point(a.endpoint, a.d);

    if (a.n_max) {
        std::vector<Count> values;
        if (a.method == "dp" && a.endpoint.empty()) {
            values = g_sequence(a.d, *a.n_max);
        } else {
            for (int n = 0; n <= *a.n_max; ++n) values.push_back(count_by(a.method, a.d, 2 * n, endpoint, a.max_length));
        }
        if (a.format == Format::json) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& v : values) arr.push_back(to_decimal(v));
            nlohmann::ordered_json j;
            j["d"] = a.d;
            j["endpoint"] = endpoint;
            j["counts"] = arr;
            out << j.dump() << '\n';
        } else {
            for (const auto& v : values) out << to_decimal(v) << '\n';
        }
        return exit_ok;
    }

    if (a.n.has_value() == a.length.has_value()) throw PreconditionError("give exactly one of --n and --length");
    const int length = a.length ? *a.length : 2 * *a.n;
    if (length < 0) throw PreconditionError("length must be nonnegative");
    const Count count = count_by(a.method, a.d, length, endpoint, a.max_length);
    switch (a.format) {
        case Format::plain: out << to_decimal(count) << '\n'; break;
        case Format::csv:
            out << "d,length,endpoint,count\n"
                << a.d << ',' << length << ",\"" << point_text(endpoint) << "\"," << to_decimal(count) << '\n';
            break;
        case Format::json: {
            nlohmann::ordered_json j;
            j["d"] = a.d;
            j["length"] = length;
            j["endpoint"] = endpoint;
            j["count"] = to_decimal(count);
            out << j.dump() << '\n';
            break;
        }
    }
    return exit_ok;
}

void print_rows(std::ostream& out, const std::vector<std::vector<Count>>& rows, Format format, bool centred) {
    if (format == Format::json) return;
    std::size_t width = 1, widest_row = 0;
    for (const auto& row : rows) {
        widest_row = std::max(widest_row, row.size());
        for (const auto& v : row) width = std::max(width, to_decimal(v).size());
    }
    // An even cell pitch lets each row sit exactly half a cell in.
    if (width % 2 == 0) ++width;
    for (const auto& row : rows) {
        if (format == Format::csv || !centred) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << to_decimal(row[i]);
        } else {
            const std::size_t indent = (widest_row - row.size()) * (width + 1) / 2;
            out << std::string(indent, ' ');
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? " " : "") << std::setw(static_cast<int>(width)) << to_decimal(row[i]);
            }
        }
        out << '\n';
    }
}

int cmd_triangle(const TriangleArgs& a, std::ostream& out) {
    std::vector<std::vector<Count>> rows;
    if (a.kind == "profile") {
        rows.push_back(profile_triangle_row(a.n));
    } else {
        rows = d_triangle(a.n).rows();
    }
    if (a.format == Format::json) {
        nlohmann::ordered_json j;
        j["kind"] = a.kind;
        j["n"] = a.n;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            auto r = nlohmann::ordered_json::array();
            for (const auto& v : row) r.push_back(to_decimal(v));
            arr.push_back(r);
        }
        j["rows"] = arr;
        out << j.dump() << '\n';
        return exit_ok;
    }
    print_rows(out, rows, a.format, a.kind == "dij");
    return exit_ok;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto entries = run_suite(a.suite, {a.n_max, a.len_max});
    render(out, entries, {a.format, !a.no_timing});
    return has_failure(entries, a.strict) ? exit_check_failed : exit_ok;
}

int cmd_oeis(const OeisArgs& a, std::ostream& out) {
    OeisOptions options;
    options.id = a.id;
    options.n_max = a.n_max;
    options.fixtures = a.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(a.fixtures);
    options.cache = default_cache_dir();
    options.fetch = a.fetch;
    options.base_url = a.base_url;
    const auto entries = oeis_check(options);
    render(out, entries, {a.format, !a.no_timing});
    return has_failure(entries, false) ? exit_check_failed : exit_ok;
}

void add_format(CLI::App* cmd, Format& target) {
    cmd->add_option("--format", target, "Output format")->transform(CLI::CheckedTransformer(kFormats));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting and verification for Gessel words and walks", "gessel"};
    app.require_subcommand(1);

    CountArgs count;
    auto* c = app.add_subcommand("count", "Count walks in the positive orthant (or complete Gessel words)");
    c->add_option("--d", count.d, "Dimension / alphabet size")->capture_default_str();
    c->add_option("--n", count.n, "Half length; walks of length 2n");
    c->add_option("--length", count.length, "Walk length");
    c->add_option("--n-max", count.n_max, "Print the sequence for n = 0..N, one value per line");
    c->add_option("--endpoint", count.endpoint, "Endpoint as comma-separated coordinates (default origin)");
    c->add_option("--method", count.method, "Counting engine")
        ->check(CLI::IsMember({"enum", "dp", "closed"}))
        ->capture_default_str();
    c->add_option("--max-length", count.max_length, "Longest word the enumerator accepts")->capture_default_str();
    add_format(c, count.format);

    TriangleArgs triangle;
    auto* t = app.add_subcommand("triangle", "Print a number triangle");
    t->add_option("--kind", triangle.kind, "profile or dij")->check(CLI::IsMember({"profile", "dij"}))->capture_default_str();
    t->add_option("--n", triangle.n, "Size")->required();
    add_format(t, triangle.format);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    v->add_option("--suite", verify.suite, "Suite to run")->check(CLI::IsMember(suites))->capture_default_str();
    v->add_option("--n-max", verify.n_max, "Largest n (suite-specific default)");
    v->add_option("--len-max", verify.len_max, "Longest word for the bijection suite");
    v->add_flag("--strict-conjectures", verify.strict, "Failed conjecture checks fail the run");
    v->add_flag("--no-timing", verify.no_timing, "Omit runtimes");
    add_format(v, verify.format);

    OeisArgs oeis;
    auto* o = app.add_subcommand("oeis", "Compare computed values with an OEIS b-file");
    o->add_option("--id", oeis.id, "Sequence")->required()->check(CLI::IsMember(known_sequences()));
    o->add_option("--n-max", oeis.n_max, "Largest n compared")->capture_default_str();
    o->add_option("--fixtures", oeis.fixtures, "Directory of vendored b-files");
    o->add_flag("--fetch", oeis.fetch, "Download the b-file when it is not available locally");
    o->add_option("--oeis-base", oeis.base_url, "Base URL for --fetch")->capture_default_str();
    o->add_flag("--no-timing", oeis.no_timing, "Omit runtimes");
    add_format(o, oeis.format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_flags;
    }

    try {
        if (c->parsed()) return cmd_count(count, out);
        if (t->parsed()) return cmd_triangle(triangle, out);
        if (v->parsed()) return cmd_verify(verify, out);
        return cmd_oeis(oeis, out);
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return exit_cap_exceeded;
    } catch (const FixtureMissingError& e) {
        err << "error: " << e.what() << '\n';
        return exit_fixture_missing;
    } catch (const NetworkError& e) {
        err << "error: " << e.what() << '\n';
        return exit_network;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_flags;
    } catch (const MalformedWordError& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_flags;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
}

}  // namespace gessel::cli
