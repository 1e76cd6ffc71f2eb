#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "commands.hpp"
#include "oeis.hpp"
#include "report.hpp"

using namespace gessel::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("gessel_cli_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("count") {
    CHECK(run({"count", "--d", "2", "--n", "2"}).out == "11\n");
    CHECK(run({"count", "--d", "1", "--n", "4"}).out == "14\n");
    CHECK(run({"count", "--d", "2", "--n", "5", "--method", "closed"}).out == "8004\n");
    CHECK(run({"count", "--d", "2", "--length", "3"}).out == "0\n");
    CHECK(run({"count", "--d", "2", "--length", "2", "--endpoint", "2,2"}).out == "1\n");
    const auto json = nlohmann::json::parse(run({"count", "--d", "2", "--n", "3", "--format", "json"}).out);
    CHECK(json["count"] == "85");
    CHECK(json["length"] == 6);
    CHECK(json["endpoint"] == std::vector<int>{0, 0});
    CHECK(run({"count", "--d", "2", "--n-max", "3"}).out == "1\n2\n11\n85\n");
}

TEST_CASE("count engines agree where they overlap") {
    for (const std::string d : {"1", "2", "3"})
        for (int n = 0; n <= 5; ++n) {
            const auto dp = run({"count", "--d", d, "--n", std::to_string(n), "--method", "dp"}).out;
            CHECK(run({"count", "--d", d, "--n", std::to_string(n), "--method", "enum"}).out == dp);
            if (d != "3") CHECK(run({"count", "--d", d, "--n", std::to_string(n), "--method", "closed"}).out == dp);
        }
}

TEST_CASE("count exit codes") {
    CHECK(run({"count", "--d", "2"}).code == exit_bad_flags);
    CHECK(run({"count", "--d", "2", "--n", "1", "--length", "2"}).code == exit_bad_flags);
    CHECK(run({"count", "--d", "x", "--n", "1"}).code == exit_bad_flags);
    CHECK(run({"count", "--d", "2", "--n", "1", "--method", "magic"}).code == exit_bad_flags);
    CHECK(run({"count", "--d", "3", "--n", "1", "--method", "closed"}).code == exit_bad_flags);
    CHECK(run({"count", "--d", "2", "--n", "1", "--endpoint", "1"}).code == exit_bad_flags);
    CHECK(run({"count", "--d", "2", "--n", "9", "--method", "enum"}).code == exit_cap_exceeded);
    CHECK(run({}).code == exit_bad_flags);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("triangle") {
    CHECK(run({"triangle", "--kind", "profile", "--n", "0"}).out == "1\n");
    CHECK(run({"triangle", "--kind", "profile", "--n", "3"}).out == "5,37,38,5\n");
    CHECK(run({"triangle", "--kind", "dij", "--n", "3", "--format", "csv"}).out == "2\n2,2\n2,3,2\n2,3,3,2\n2,4,3,4,2\n");
    const auto dij = nlohmann::json::parse(run({"triangle", "--kind", "dij", "--n", "4", "--format", "json"}).out);
    CHECK(dij["rows"].size() == 7);
    CHECK(dij["rows"][0][0] == "5");
    CHECK(run({"triangle", "--kind", "profile", "--n", "8"}).code == exit_cap_exceeded);
    CHECK(run({"triangle", "--kind", "dij", "--n", "0"}).code == exit_bad_flags);
}

TEST_CASE("verify") {
    const auto theorem = run({"verify", "--suite", "theorem", "--n-max", "30", "--no-timing"});
    CHECK(theorem.code == exit_ok);
    CHECK(theorem.out.find("fail") == std::string::npos);

    CHECK(run({"verify", "--suite", "bijection", "--len-max", "12"}).code == exit_ok);
    CHECK(run({"verify", "--suite", "bijection", "--len-max", "16"}).code == exit_cap_exceeded);

    const auto norton = run({"verify", "--suite", "norton", "--n-max", "6", "--format", "json"});
    CHECK(norton.code == exit_ok);
    const auto entries = nlohmann::json::parse(norton.out);
    int conjectures = 0;
    for (const auto& e : entries) {
        CHECK(e["status"] != "fail");
        CHECK(e["status"] != "conjecture-fail");
        conjectures += e["status"] == "conjecture-pass";
    }
    CHECK(conjectures == 18);
    CHECK(run({"verify", "--suite", "norton", "--n-max", "6", "--strict-conjectures"}).code == exit_ok);
    CHECK(run({"verify", "--suite", "nope"}).code == exit_bad_flags);
}

TEST_CASE("verify output is deterministic without timing") {
    const std::vector<std::string> args{"verify", "--suite", "all", "--no-timing", "--format", "csv"};
    const auto first = run(args);
    CHECK(first.code == exit_ok);
    CHECK(first.out == run(args).out);
    CHECK(first.out.rfind("check,parameters,expected,actual,status,detail\n", 0) == 0);
}

TEST_CASE("report status and failure accounting") {
    std::vector<ReportEntry> entries{asserted("a", "", "1", "1"), conjectured("b", "", "1", "2")};
    CHECK(entries[0].status == Status::pass);
    CHECK(entries[1].status == Status::conjecture_fail);
    CHECK_FALSE(has_failure(entries, false));
    CHECK(has_failure(entries, true));
    entries.push_back(asserted("c", "", "1", "2", "first counterexample"));
    CHECK(has_failure(entries, false));
    std::ostringstream os;
    render(os, entries, {Format::json, false});
    const auto json = nlohmann::json::parse(os.str());
    CHECK(json[2]["detail"] == "first counterexample");
    CHECK_FALSE(json[0].contains("runtime_ms"));
}

TEST_CASE("b-file parsing") {
    const auto values = parse_bfile("# comment\n\n1 1\n2 7\r\n3 38\n");
    CHECK(values.size() == 3);
    CHECK(values.at(3) == 38);
    CHECK_THROWS(parse_bfile("1\n"));
    CHECK_THROWS(parse_bfile("1 x\n"));
}

TEST_CASE("oeis against vendored fixtures") {
    for (const std::string id : {"A135404", "A000531", "A045720"}) {
        const auto r = run({"oeis", "--id", id, "--n-max", "10", "--no-timing"});
        CHECK(r.code == exit_ok);
        CHECK(r.out.find("fail") == std::string::npos);
        CHECK(r.out.find("n=10 ") != std::string::npos);
    }
    CHECK(run({"oeis", "--id", "A000001"}).code == exit_bad_flags);
}

TEST_CASE("oeis fetch, cache, and failure modes") {
    const fs::path empty = scratch("fixtures");
    const fs::path cache = scratch("cache");
    ::setenv("GESSEL_OEIS_CACHE", cache.c_str(), 1);

    CHECK(run({"oeis", "--id", "A000531", "--fixtures", empty.string()}).code == exit_fixture_missing);

    httplib::Server server;
    int hits = 0;
    server.Get("/A000531/b000531.txt", [&](const httplib::Request&, httplib::Response& res) {
        ++hits;
        res.set_content("1 1\n2 7\n3 38\n4 187\n5 874\n", "text/plain");
    });
    server.Get("/A045720/b045720.txt", [](const httplib::Request&, httplib::Response& res) {
        res.set_content("0 1\n1 9\n2 58\n", "text/plain");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    const std::string base = "http://127.0.0.1:" + std::to_string(port);

    const auto fetched = run({"oeis", "--id", "A000531", "--n-max", "5", "--fixtures", empty.string(), "--fetch",
                              "--oeis-base", base, "--no-timing"});
    CHECK(fetched.code == exit_ok);
    CHECK(fetched.out.find("source=network") != std::string::npos);
    CHECK(fs::exists(cache / "b000531.txt"));

    // A wrong value in the served b-file is reported, not ignored.
    const auto wrong = run({"oeis", "--id", "A045720", "--n-max", "5", "--fixtures", empty.string(), "--fetch",
                            "--oeis-base", base});
    CHECK(wrong.code == exit_check_failed);

    server.stop();
    thread.join();

    const auto cached = run({"oeis", "--id", "A000531", "--n-max", "5", "--fixtures", empty.string(), "--no-timing"});
    CHECK(cached.code == exit_ok);
    CHECK(cached.out.find("source=cache") != std::string::npos);
    CHECK(hits == 1);

    // Entries beyond the b-file are failures.
    CHECK(run({"oeis", "--id", "A000531", "--n-max", "6", "--fixtures", empty.string()}).code == exit_check_failed);

    CHECK(run({"oeis", "--id", "A135404", "--fixtures", empty.string(), "--fetch", "--oeis-base", base}).code ==
          exit_network);
    CHECK(run({"oeis", "--id", "A135404", "--fixtures", empty.string(), "--fetch", "--oeis-base",
               "http://127.0.0.1:1"})
              .code == exit_network);

    ::unsetenv("GESSEL_OEIS_CACHE");
    fs::remove_all(empty);
    fs::remove_all(cache);
}
