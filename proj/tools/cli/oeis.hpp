#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gessel/count.hpp"
#include "report.hpp"

namespace gessel::cli {

struct FixtureMissingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NetworkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// index -> value, from lines "index value"; '#' lines and blanks are skipped.
using BFile = std::map<long, Count>;
BFile parse_bfile(std::string_view text);

struct OeisOptions {
    std::string id;
    int n_max = 10;
    std::filesystem::path fixtures;
    std::filesystem::path cache;
    bool fetch = false;
    std::string base_url = "https://oeis.org";
};

// Fixture directory compiled into the tool.
std::filesystem::path default_fixture_dir();
// $GESSEL_OEIS_CACHE, else ~/.cache/gessel/oeis.
std::filesystem::path default_cache_dir();

const std::vector<std::string>& known_sequences();

// Compares locally computed values with the b-file for `id`, looked up in
// the fixture directory, then the cache, then (with fetch) the network.
// Throws FixtureMissingError, NetworkError, or PreconditionError for an
// unknown id.
std::vector<ReportEntry> oeis_check(const OeisOptions& options);

}  // namespace gessel::cli
