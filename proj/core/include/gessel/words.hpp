#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gessel/count.hpp"

namespace gessel {

// A letter of the Gessel alphabet: `index` in [1, d], optionally barred.
// Ordering (and the enumeration letter code) is 1 < 1bar < 2 < 2bar < ...
struct Letter {
    int index = 1;
    bool barred = false;

    constexpr int code() const noexcept { return 2 * (index - 1) + (barred ? 1 : 0); }
    constexpr int sign() const noexcept { return barred ? -1 : 1; }

    // Token format: "k" for the letter k, "-k" for its complement.
    static Letter parse(std::string_view token);
    std::string to_token() const;

    friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

// A word over the alphabet {1..d} and complements. Construction only checks
// that every index lies in [1, d]; the prefix condition is checked by
// is_gessel_word so that invalid words can still be represented.
class GesselWord {
public:
    explicit GesselWord(int alphabet_size = 2);
    GesselWord(std::vector<Letter> letters, int alphabet_size);

    // Whitespace-separated signed integers, e.g. "2 -1 2 1 -2 -2".
    static GesselWord parse(std::string_view text, int alphabet_size);

    std::span<const Letter> letters() const noexcept { return letters_; }
    int alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    std::string to_string() const;

    friend bool operator==(const GesselWord&, const GesselWord&) = default;

private:
    std::vector<Letter> letters_;
    int alphabet_size_;
};

// Occurrence counts N_i and N_ibar, indexed by i - 1.
struct LetterProfile {
    std::vector<int> unbarred;
    std::vector<int> barred;

    int count(Letter letter) const;
    int total() const;
};

LetterProfile letter_profile(const GesselWord& word);

// Every prefix x and every k in [1, d] satisfies
//   sum_{i=1..k} (N_{d+1-i}(x) - N_{bar(d+1-i)}(x)) >= 0.
// The span overloads throw MalformedWordError for indices outside [1, d].
bool is_gessel_word(std::span<const Letter> letters, int alphabet_size);
bool is_gessel_word(const GesselWord& word);

bool is_complete(std::span<const Letter> letters, int alphabet_size);
bool is_complete(const GesselWord& word);

struct EnumerationOptions {
    // Longest word (2n) the enumerator accepts before ResourceLimitError.
    int max_length = 14;
    // When set, restricts to words with N_i = N_ibar = pair_counts[i-1];
    // the entries must sum to n.
    std::optional<std::vector<int>> pair_counts;
    // Prefix-tree partitioning for the counting entry points. Results do not
    // depend on this value.
    unsigned workers = 1;
};

using WordVisitor = std::function<void(std::span<const Letter>)>;

// Visits every complete Gessel word of length 2n over d letters in
// lexicographic order of letter codes. Prefixes violating the Gessel
// condition, or whose imbalance sum_i |N_i - N_ibar| exceeds the remaining
// length, are pruned.
void for_each_complete_word(int alphabet_size, int n, const WordVisitor& visit,
                            const EnumerationOptions& options = {});

Count count_complete_words(int alphabet_size, int n, const EnumerationOptions& options = {});

// Row n of the d = 2 triangle: entry j counts complete words of length 2n
// with exactly j letters 2 (and j letters 2bar).
std::vector<Count> profile_triangle_row(int n, const EnumerationOptions& options = {});

// d_{i,j} for complete two-letter words with one 1 and one 1bar at the
// 1-based positions i < j, in either order.
class DTriangle {
public:
    explicit DTriangle(int n);

    int n() const noexcept { return n_; }
    const Count& at(int i, int j) const;
    Count& at(int i, int j);

    // Display rows, apex first: row r holds d_{1+t, 2n-r+t} for t = 0..r.
    std::vector<std::vector<Count>> rows() const;
    Count total() const;

private:
    int n_;
    std::vector<Count> cells_;
};

DTriangle d_triangle(int n, const EnumerationOptions& options = {});

}  // namespace gessel
