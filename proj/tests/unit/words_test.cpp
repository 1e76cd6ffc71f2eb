#include <doctest.h>

#include <map>
#include <set>

#include "gessel/closed_forms.hpp"
#include "gessel/errors.hpp"
#include "gessel/words.hpp"
#include "oracles.hpp"

using namespace gessel;

namespace {

bool is_gessel(std::string_view text, int d) { return is_gessel_word(GesselWord::parse(text, d)); }
bool complete(std::string_view text, int d) { return is_complete(GesselWord::parse(text, d)); }

}  // namespace

TEST_CASE("letter tokens") {
    CHECK(Letter::parse("3") == Letter{3, false});
    CHECK(Letter::parse("-2") == Letter{2, true});
    CHECK(Letter{2, true}.to_token() == "-2");
    CHECK_THROWS_AS(Letter::parse("0"), MalformedWordError);
    CHECK_THROWS_AS(Letter::parse("x"), MalformedWordError);
    CHECK_THROWS_AS(Letter::parse("-"), MalformedWordError);
    CHECK(Letter{1, false} < Letter{1, true});
    CHECK(Letter{1, true} < Letter{2, false});
}

TEST_CASE("word parsing round trip") {
    const auto w = GesselWord::parse("2 -1 2 1 -2 -2", 2);
    CHECK(w.size() == 6);
    CHECK(w.to_string() == "2 -1 2 1 -2 -2");
    CHECK(GesselWord::parse("  ", 2).empty());
    CHECK_THROWS_AS(GesselWord::parse("1 3", 2), MalformedWordError);
}

TEST_CASE("is_gessel_word on known examples") {
    CHECK(is_gessel("2 -1", 2));
    CHECK_FALSE(is_gessel("1 -2", 2));
    CHECK_FALSE(is_gessel("2 1 -3 2 3 -2 -1", 3));
    CHECK(is_gessel("3 -2 2 1 -1 -3", 3));
    CHECK(is_gessel("1 2 -1 -2 1", 3));
    CHECK(is_gessel("", 2));
    CHECK_THROWS_AS(is_gessel_word(std::vector<Letter>{{3, false}}, 2), MalformedWordError);
}

TEST_CASE("is_complete on known examples") {
    CHECK(complete("3 -2 2 1 -1 -3", 3));
    CHECK_FALSE(complete("1 2 -1 -2 1", 3));
    CHECK(complete("", 3));
    CHECK_FALSE(complete("2 1 -3 2 3 -2 -1", 3));
}

TEST_CASE("letter profile") {
    const auto p = letter_profile(GesselWord::parse("2 -1 2 1 -2 -2", 2));
    CHECK(p.count({2, false}) == 2);
    CHECK(p.count({2, true}) == 2);
    CHECK(p.count({1, true}) == 1);
    CHECK(p.total() == 6);
}

TEST_CASE("prefix monotonicity: appending an unbarred letter keeps a Gessel prefix valid") {
    for (int n = 0; n <= 3; ++n) {
        for_each_complete_word(3, n, [](std::span<const Letter> word) {
            for (std::size_t cut = 0; cut <= word.size(); ++cut) {
                std::vector<Letter> prefix(word.begin(), word.begin() + cut);
                for (int i = 1; i <= 3; ++i) {
                    prefix.push_back({i, false});
                    CHECK(is_gessel_word(prefix, 3));
                    prefix.pop_back();
                }
            }
        });
    }
}

TEST_CASE("count_complete_words") {
    CHECK(count_complete_words(2, 0) == 1);
    CHECK(count_complete_words(2, 2) == 11);
    CHECK(count_complete_words(2, 3) == 85);
    CHECK(count_complete_words(1, 3) == 5);
    // Frozen from an independent brute-force oracle.
    CHECK(count_complete_words(3, 2) == 27);
    CHECK(count_complete_words(3, 4) == 6552);
    CHECK_THROWS_AS(count_complete_words(2, 8), ResourceLimitError);
    CHECK(count_complete_words(2, 8, {.max_length = 16}) == 12294260);
    CHECK_THROWS_AS(count_complete_words(0, 1), PreconditionError);
}

TEST_CASE("pruned enumeration agrees with the unpruned oracle, in lexicographic order") {
    for (int n = 0; n <= 4; ++n) {
        const auto expected = oracle::complete_two_letter_words(n);
        std::vector<std::vector<Letter>> seen;
        for_each_complete_word(2, n, [&](std::span<const Letter> w) { seen.emplace_back(w.begin(), w.end()); });
        REQUIRE(seen.size() == expected.size());
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        CHECK(std::set(seen.begin(), seen.end()) == std::set(expected.begin(), expected.end()));
    }
}

TEST_CASE("worker count does not change the result") {
    for (unsigned workers : {1u, 2u, 5u}) {
        CHECK(count_complete_words(2, 5, {.workers = workers}) == 8004);
        CHECK(count_complete_words(3, 3, {.workers = workers}) == 375);
    }
}

TEST_CASE("profile_triangle_row reproduces the known rows") {
    CHECK(profile_triangle_row(0) == std::vector<Count>{1});
    CHECK(profile_triangle_row(1) == std::vector<Count>{1, 1});
    CHECK(profile_triangle_row(2) == std::vector<Count>{2, 7, 2});
    CHECK(profile_triangle_row(3) == std::vector<Count>{5, 37, 38, 5});
    CHECK(profile_triangle_row(4) == std::vector<Count>{14, 177, 390, 187, 14});
}

TEST_CASE("row sums and Catalan edges") {
    for (int n = 0; n <= 6; ++n) {
        const auto row = profile_triangle_row(n);
        Count sum = 0;
        for (const auto& v : row) sum += v;
        CHECK(sum == count_complete_words(2, n));
        CHECK(row.front() == catalan(n));
        CHECK(row.back() == catalan(n));
        if (n >= 1) CHECK(row[n - 1] == g1_closed(n));
    }
}

TEST_CASE("d_triangle display rows") {
    const auto t1 = d_triangle(1);
    CHECK(t1.at(1, 2) == 1);
    CHECK(t1.rows().size() == 1);

    const auto t3 = d_triangle(3);
    const std::vector<std::vector<Count>> rows3{{2}, {2, 2}, {2, 3, 2}, {2, 3, 3, 2}, {2, 4, 3, 4, 2}};
    CHECK(t3.rows() == rows3);

    const auto t4 = d_triangle(4);
    CHECK(t4.at(1, 8) == 5);
    CHECK(t4.rows().back() == std::vector<Count>{5, 10, 8, 10, 8, 10, 5});
    CHECK(t4.rows()[4] == std::vector<Count>{5, 8, 7, 8, 5});
    CHECK_THROWS_AS(d_triangle(0), PreconditionError);
}

TEST_CASE("d_triangle block structure and total") {
    for (int n = 2; n <= 6; ++n) {
        const auto t = d_triangle(n);
        CHECK(t.total() == g1_closed(n));
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 1; j <= n - 1; ++j) {
                const Count& base = t.at(2 * i, 2 * j);
                CHECK(t.at(2 * i, 2 * j + 1) == base);
                CHECK(t.at(2 * i + 1, 2 * j) == base);
                CHECK(t.at(2 * i + 1, 2 * j + 1) == base);
            }
    }
}
