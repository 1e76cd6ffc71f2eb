#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gessel/count.hpp"

namespace gessel {

// A choice of signs for +-a_1 +- ... +- a_{2n}; bit 1 is '+', bit 0 is '-'.
class SignWord {
public:
    explicit SignWord(std::vector<std::uint8_t> bits);

    // Accepts binary ("1110") or sign ("+++-") notation.
    static SignWord parse(std::string_view text);
    // The word of length `length` whose bit i (from the left) is bit
    // length-1-i of `mask`.
    static SignWord from_mask(std::uint64_t mask, int length);

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    int length() const noexcept { return static_cast<int>(bits_.size()); }
    int half_length() const noexcept { return length() / 2; }
    int sign(int i) const { return bits_[i] ? 1 : -1; }

    std::string to_binary() const;
    std::string to_signs() const;

    friend bool operator==(const SignWord&, const SignWord&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

enum class N10Reading {
    // Largest number of disjoint (1, 0) pairs with the 1 before the 0, as in
    // parenthesis matching. n10(1110) = 1, n10(0110000) = 2.
    matched_pairs,
    // Occurrences of the factor "10", i.e. maximal descent blocks.
    descent_blocks,
};

// n10 of an arbitrary binary string (any length).
int count_n10(std::span<const std::uint8_t> bits, N10Reading reading = N10Reading::matched_pairs);

struct SignWordStats {
    int n1 = 0;
    int n10 = 0;
    // floor((n1 - n10) / 2); may be <= 0.
    int m = 0;

    friend bool operator==(const SignWordStats&, const SignWordStats&) = default;
};

SignWordStats stats(const SignWord& word, N10Reading reading = N10Reading::matched_pairs);

// Range of sum_i eps_i a_i over 0 < a_1 < ... < a_{2n} < 1: the open interval
// between the smallest and largest suffix sum sum_{i>k} eps_i, 0 <= k <= 2n.
struct SignedSumRange {
    int low = 0;
    int high = 0;
    int low_vertex = 0;   // k attaining `low`
    int high_vertex = 0;  // k attaining `high`

    bool contains(const ExactRational& value) const { return low < value && value < high; }
};

SignedSumRange signed_sum_range(const SignWord& word);

// An explicit 0 < a_1 < ... < a_{2n} < 1 with sum_i eps_i a_i == target, or
// nullopt when the target is outside the open range.
std::optional<std::vector<ExactRational>> construct_witness(const SignWord& word, const ExactRational& target);

bool verify_witness(const SignWord& word, std::span<const ExactRational> values, const ExactRational& target);

// Positive odd integers reachable as a signed sum, ascending. Each one is
// confirmed with an exact witness; a failed confirmation throws.
std::vector<int> achievable_odd_sums(const SignWord& word);

struct NortonOptions {
    // Largest n (words of length 2n) accepted before ResourceLimitError.
    int max_n = 10;
};

// Size of the multiset of (word, achievable odd sum) pairs over all 2^(2n)
// sign words.
Count norton_count(int n, const NortonOptions& options = {});

// Multiset size by the multiplicity formula: sum_w max(m(w), 0).
Count multiplicity_total(int n, N10Reading reading = N10Reading::matched_pairs,
                         const NortonOptions& options = {});

// (number of '+' signs, odd target) -> number of sign words with that many
// '+' whose achievable set holds the target. Zero cells are omitted.
using TableCounts = std::map<std::pair<int, int>, Count>;
TableCounts table_counts(int n, const NortonOptions& options = {});

struct AchievableRow {
    SignWord word;
    std::vector<int> sums;
    SignWordStats stats;
};

// Every sign word with a nonempty achievable set, in descending binary
// order.
std::vector<AchievableRow> achievable_rows(int n, const NortonOptions& options = {});

struct DiagonalReport {
    // Diagonal r + c = s of the table (row r = 2n - plus signs, column c for
    // target 2c+1), read from its top-right end; zero cells are skipped.
    std::vector<std::vector<Count>> columns;
    // Every column reads binom(2n, 0), binom(2n, 1), ... in order.
    bool columns_are_binomial = true;
    // Every nonzero cell is binom(2n, k) for some 0 <= k <= n-1.
    bool cells_are_small_binomials = true;
    // Cells equal to binom(2n, plus) (all words with that sign profile reach
    // the target), summed.
    Count full_contribution_total = 0;
    // The remaining nonzero cells, summed.
    Count partial_contribution_total = 0;
    // Sum of the first n diagonals.
    Count leading_columns_total = 0;
};

DiagonalReport diagonal_columns(int n, const NortonOptions& options = {});

}  // namespace gessel
