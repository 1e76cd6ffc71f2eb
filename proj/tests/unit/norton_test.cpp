#include <doctest.h>

#include "gessel/closed_forms.hpp"
#include "gessel/errors.hpp"
#include "gessel/norton.hpp"

using namespace gessel;

namespace {

std::vector<int> sums(std::string_view w) { return achievable_odd_sums(SignWord::parse(w)); }

}  // namespace

TEST_CASE("sign word parsing") {
    CHECK(SignWord::parse("+++-") == SignWord::parse("1110"));
    CHECK(SignWord::parse("1100").to_signs() == "++--");
    CHECK(SignWord::from_mask(0b0011, 4).to_binary() == "0011");
    CHECK_THROWS_AS(SignWord::parse("101"), PreconditionError);
    CHECK_THROWS_AS(SignWord::parse(""), PreconditionError);
    CHECK_THROWS_AS(SignWord::parse("1x"), PreconditionError);
}

TEST_CASE("sign word statistics") {
    CHECK(stats(SignWord::parse("1111")) == SignWordStats{4, 0, 2});
    CHECK(stats(SignWord::parse("1110")) == SignWordStats{3, 1, 1});
    CHECK(stats(SignWord::parse("0011")) == SignWordStats{2, 0, 1});
    const std::vector<std::uint8_t> odd{0, 1, 1, 0, 0, 0, 0};
    CHECK(count_n10(odd) == 2);
    CHECK(count_n10(odd, N10Reading::descent_blocks) == 1);
}

TEST_CASE("achievable odd sums") {
    CHECK(sums("1111") == std::vector<int>{1, 3});
    CHECK(sums("0111") == std::vector<int>{1});
    CHECK(sums("1100").empty());
    CHECK(sums("10").empty());
    CHECK(sums("01").empty());
    CHECK(sums("11") == std::vector<int>{1});
}

TEST_CASE("witnesses are exact and strictly increasing in (0, 1)") {
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        const auto word = SignWord::from_mask(mask, 8);
        const auto range = signed_sum_range(word);
        for (int t = range.low; t <= range.high; ++t) {
            const auto witness = construct_witness(word, t);
            if (t == range.low || t == range.high) {
                CHECK_FALSE(witness.has_value());
            } else {
                REQUIRE(witness.has_value());
                CHECK(verify_witness(word, *witness, t));
            }
        }
        const ExactRational half(2 * range.high - 1, 2);
        if (range.high > range.low) {
            const auto witness = construct_witness(word, half);
            REQUIRE(witness.has_value());
            CHECK(verify_witness(word, *witness, half));
        }
    }
}

TEST_CASE("norton_count") {
    CHECK(norton_count(1) == 1);
    CHECK(norton_count(2) == 7);
    CHECK_THROWS_AS(norton_count(11), ResourceLimitError);
    CHECK_THROWS_AS(norton_count(0), PreconditionError);
    for (int n = 1; n <= 6; ++n) CHECK(norton_count(n) == g1_closed(n));
}

TEST_CASE("achievable rows for length 4") {
    const auto rows = achievable_rows(2);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].word.to_binary() == "1111");
    CHECK(rows[0].sums == std::vector<int>{1, 3});
    CHECK(rows[0].stats.m == 2);
    std::vector<std::string> words;
    for (const auto& r : rows) words.push_back(r.word.to_binary());
    CHECK(words == std::vector<std::string>{"1111", "1110", "1101", "1011", "0111", "0011"});
    for (const auto& r : rows) CHECK(static_cast<int>(r.sums.size()) == r.stats.m);
}

TEST_CASE("table counts for length 8") {
    const auto table = table_counts(4);
    CHECK(table.at({8, 1}) == 1);
    CHECK(table.at({8, 7}) == 1);
    CHECK(table.at({7, 1}) == 8);
    CHECK(table.at({7, 5}) == 8);
    CHECK(table.count({7, 7}) == 0);
    CHECK(table.at({4, 1}) == 28);
    CHECK(table.at({2, 1}) == 1);
    CHECK(table.at({6, 3}) == 28);
    CHECK(table.at({5, 1}) == 56);
    Count total = 0;
    for (const auto& [key, count] : table) total += count;
    CHECK(total == 187);
}

TEST_CASE("diagonal columns") {
    for (int n = 1; n <= 6; ++n) {
        const auto report = diagonal_columns(n);
        CHECK(report.columns_are_binomial);
        CHECK(report.cells_are_small_binomials);
        CHECK(report.leading_columns_total == one_first_total(n));
        CHECK(report.full_contribution_total == one_first_total(n));
        CHECK(report.partial_contribution_total == bar_first_total(n));
    }
    const auto r4 = diagonal_columns(4);
    CHECK(r4.full_contribution_total == 140);
    CHECK(r4.partial_contribution_total == 47);
}

TEST_CASE("multiplicity formula with matched pairs") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(multiplicity_total(n) == norton_count(n));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * n)); ++mask) {
            const auto w = SignWord::from_mask(mask, 2 * n);
            CHECK(static_cast<int>(achievable_odd_sums(w).size()) == std::max(stats(w).m, 0));
        }
    }
}

TEST_CASE("descent-block reading of n10 breaks the multiplicity formula") {
    const auto w = SignWord::parse("111000");
    CHECK(achievable_odd_sums(w).empty());
    CHECK(stats(w, N10Reading::descent_blocks).m == 1);
    CHECK(stats(w).m == 0);
    CHECK(multiplicity_total(3, N10Reading::descent_blocks) != norton_count(3));
}
