#include "oeis.hpp"

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "gessel/closed_forms.hpp"
#include "gessel/errors.hpp"

namespace gessel::cli {

namespace {

struct Sequence {
    std::string id;
    // Local argument n for b-file index i is i + shift.
    int shift = 0;
    int first_n = 0;
    std::function<Count(int)> compute;
};

const std::vector<Sequence>& sequences() {
    static const std::vector<Sequence> table{
        {"A135404", 0, 0, [](int n) { return gessel_closed_form(n); }},
        {"A000531", 0, 1, [](int n) { return g1_closed(n); }},
        {"A045720", 3, 3, [](int n) { return s2_closed(n); }},
    };
    return table;
}

std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fetch_bfile(const std::string& base_url, const std::string& id) {
    httplib::Client client(base_url);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    const std::string path = "/" + id + "/" + bfile_name(id);
    auto result = client.Get(path);
    if (!result) throw NetworkError("fetching " + base_url + path + ": " + httplib::to_string(result.error()));
    if (result->status != 200) {
        throw NetworkError("fetching " + base_url + path + ": HTTP " + std::to_string(result->status));
    }
    return result->body;
}

}  // namespace

BFile parse_bfile(std::string_view text) {
    BFile out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line.substr(start));
        long index = 0;
        std::string value;
        if (!(fields >> index >> value)) {
            throw PreconditionError("b-file line " + std::to_string(line_no) + " is not 'index value'");
        }
        try {
            out[index] = Count(value);
        } catch (const std::exception&) {
            throw PreconditionError("b-file line " + std::to_string(line_no) + " has a non-integer value");
        }
    }
    return out;
}

std::filesystem::path default_fixture_dir() { return GESSEL_OEIS_FIXTURE_DIR; }

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("GESSEL_OEIS_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "gessel/oeis";
    const char* home = std::getenv("HOME");
    return std::filesystem::path(home ? home : ".") / ".cache/gessel/oeis";
}

const std::vector<std::string>& known_sequences() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& s : sequences()) v.push_back(s.id);
        return v;
    }();
    return ids;
}

std::vector<ReportEntry> oeis_check(const OeisOptions& options) {
    const Sequence* seq = nullptr;
    for (const auto& s : sequences()) {
        if (s.id == options.id) seq = &s;
    }
    if (!seq) throw PreconditionError("unknown sequence '" + options.id + "'");

    const std::string name = bfile_name(seq->id);
    std::optional<long> declared_offset;
    std::string source;
    std::optional<std::string> text = read_file(options.fixtures / name);
    if (text) {
        source = "fixture";
        if (auto meta = read_file(options.fixtures / (seq->id + ".json"))) {
            declared_offset = nlohmann::json::parse(*meta).at("offset").get<long>();
        }
    } else if ((text = read_file(options.cache / name))) {
        source = "cache";
    } else if (options.fetch) {
        text = fetch_bfile(options.base_url, seq->id);
        std::filesystem::create_directories(options.cache);
        std::ofstream(options.cache / name, std::ios::binary) << *text;
        source = "network";
    } else {
        throw FixtureMissingError("no b-file for " + seq->id + " in " + options.fixtures.string() + " or " +
                                  options.cache.string() + "; pass --fetch to download it");
    }

    const BFile values = parse_bfile(*text);
    std::vector<ReportEntry> out;
    if (values.empty()) {
        out.push_back(asserted(seq->id, "source=" + source, "values", "empty b-file"));
        return out;
    }
    const long first_index = values.begin()->first;
    if (declared_offset && *declared_offset != first_index) {
        out.push_back(asserted(seq->id + " offset", "source=" + source, std::to_string(*declared_offset),
                               std::to_string(first_index)));
    }
    for (int n = seq->first_n; n <= options.n_max; ++n) {
        const long index = n - seq->shift;
        const auto it = values.find(index);
        const std::string params = "index=" + std::to_string(index) + " n=" + std::to_string(n) + " source=" + source;
        const auto start = std::chrono::steady_clock::now();
        const Count computed = seq->compute(n);
        const auto elapsed = std::chrono::steady_clock::now() - start;
        auto e = asserted(seq->id, params, it == values.end() ? "missing" : to_decimal(it->second),
                          to_decimal(computed));
        e.runtime_ms = std::chrono::duration<double, std::milli>(elapsed).count();
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace gessel::cli
