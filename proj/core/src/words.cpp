#include "gessel/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <numeric>
#include <sstream>
#include <utility>

#include "gessel/errors.hpp"

namespace gessel {

Letter Letter::parse(std::string_view token) {
    bool barred = false;
    if (!token.empty() && (token.front() == '-')) {
        barred = true;
        token.remove_prefix(1);
    }
    int index = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, index);
    if (token.empty() || ec != std::errc() || ptr != end || index < 1) {
        throw MalformedWordError("bad letter token '" + std::string(token) + "'");
    }
    return Letter{index, barred};
}

std::string Letter::to_token() const { return (barred ? "-" : "") + std::to_string(index); }

namespace {

void check_alphabet_size(int alphabet_size) {
    if (alphabet_size < 1) throw PreconditionError("alphabet size must be >= 1");
}

void check_letters(std::span<const Letter> letters, int alphabet_size) {
    check_alphabet_size(alphabet_size);
    for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p].index < 1 || letters[p].index > alphabet_size) {
            throw MalformedWordError("letter " + letters[p].to_token() + " at position " +
                                     std::to_string(p + 1) + " is outside the alphabet of size " +
                                     std::to_string(alphabet_size));
        }
    }
}

// Suffix partial sums of the balance vector, from the top index down.
bool prefix_condition_holds(std::span<const int> balance) {
    int running = 0;
    for (std::size_t i = balance.size(); i-- > 0;) {
        running += balance[i];
        if (running < 0) return false;
    }
    return true;
}

}  // namespace

GesselWord::GesselWord(int alphabet_size) : alphabet_size_(alphabet_size) {
    check_alphabet_size(alphabet_size);
}

GesselWord::GesselWord(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
    check_letters(letters_, alphabet_size_);
}

GesselWord GesselWord::parse(std::string_view text, int alphabet_size) {
    std::vector<Letter> letters;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) letters.push_back(Letter::parse(token));
    return GesselWord(std::move(letters), alphabet_size);
}

std::string GesselWord::to_string() const {
    std::string out;
    for (const auto& letter : letters_) {
        if (!out.empty()) out += ' ';
        out += letter.to_token();
    }
    return out;
}

int LetterProfile::count(Letter letter) const {
    const auto& side = letter.barred ? barred : unbarred;
    if (letter.index < 1 || static_cast<std::size_t>(letter.index) > side.size()) return 0;
    return side[letter.index - 1];
}

int LetterProfile::total() const {
    return std::accumulate(unbarred.begin(), unbarred.end(), 0) +
           std::accumulate(barred.begin(), barred.end(), 0);
}

LetterProfile letter_profile(const GesselWord& word) {
    LetterProfile profile{std::vector<int>(word.alphabet_size(), 0),
                          std::vector<int>(word.alphabet_size(), 0)};
    for (const auto& letter : word.letters()) {
        (letter.barred ? profile.barred : profile.unbarred)[letter.index - 1] += 1;
    }
    return profile;
}

bool is_gessel_word(std::span<const Letter> letters, int alphabet_size) {
    check_letters(letters, alphabet_size);
    std::vector<int> balance(alphabet_size, 0);
    for (const auto& letter : letters) {
        balance[letter.index - 1] += letter.sign();
        if (!prefix_condition_holds(balance)) return false;
    }
    return true;
}

bool is_gessel_word(const GesselWord& word) {
    return is_gessel_word(word.letters(), word.alphabet_size());
}

bool is_complete(std::span<const Letter> letters, int alphabet_size) {
    if (!is_gessel_word(letters, alphabet_size)) return false;
    std::vector<int> balance(alphabet_size, 0);
    for (const auto& letter : letters) balance[letter.index - 1] += letter.sign();
    return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

bool is_complete(const GesselWord& word) { return is_complete(word.letters(), word.alphabet_size()); }

namespace {

// Depth-first walk of the pruned prefix tree. Holds mutable search state, so
// each worker owns its own instance.
class Enumerator {
public:
    Enumerator(int alphabet_size, int n, const std::optional<std::vector<int>>& pair_counts)
        : d_(alphabet_size),
          length_(2 * n),
          limits_(pair_counts),
          balance_(alphabet_size, 0),
          used_(2 * alphabet_size, 0) {
        word_.reserve(length_);
    }

    // Replays a prefix; returns false if it is not a viable prefix.
    bool push_prefix(std::span<const Letter> prefix) {
        for (const auto& letter : prefix) {
            if (!try_push(letter)) return false;
        }
        return true;
    }

    template <typename OnWord>
    void run(OnWord&& on_word) {
        if (static_cast<int>(word_.size()) == length_) {
            on_word(std::span<const Letter>(word_));
            return;
        }
        for (int code = 0; code < 2 * d_; ++code) {
            const Letter letter{code / 2 + 1, code % 2 == 1};
            if (!try_push(letter)) continue;
            run(on_word);
            pop();
        }
    }

    // All viable prefixes of the given depth, in enumeration order.
    std::vector<std::vector<Letter>> prefixes(int depth) {
        std::vector<std::vector<Letter>> out;
        collect(depth, out);
        return out;
    }

private:
    void collect(int depth, std::vector<std::vector<Letter>>& out) {
        if (static_cast<int>(word_.size()) == depth || static_cast<int>(word_.size()) == length_) {
            out.push_back(word_);
            return;
        }
        for (int code = 0; code < 2 * d_; ++code) {
            const Letter letter{code / 2 + 1, code % 2 == 1};
            if (!try_push(letter)) continue;
            collect(depth, out);
            pop();
        }
    }

    bool try_push(Letter letter) {
        if (static_cast<int>(word_.size()) >= length_) return false;
        const int code = letter.code();
        if (limits_ && used_[code] >= (*limits_)[letter.index - 1]) return false;
        const int i = letter.index - 1;
        const int before = balance_[i];
        balance_[i] += letter.sign();
        imbalance_ += std::abs(balance_[i]) - std::abs(before);
        const int remaining = length_ - static_cast<int>(word_.size()) - 1;
        if (imbalance_ > remaining || !prefix_condition_holds(balance_)) {
            balance_[i] = before;
            imbalance_ -= std::abs(before + letter.sign()) - std::abs(before);
            return false;
        }
        ++used_[code];
        word_.push_back(letter);
        return true;
    }

    void pop() {
        const Letter letter = word_.back();
        word_.pop_back();
        --used_[letter.code()];
        const int i = letter.index - 1;
        const int before = balance_[i];
        balance_[i] -= letter.sign();
        imbalance_ += std::abs(balance_[i]) - std::abs(before);
    }

    int d_;
    int length_;
    const std::optional<std::vector<int>>& limits_;
    std::vector<int> balance_;
    std::vector<int> used_;
    int imbalance_ = 0;
    std::vector<Letter> word_;
};

void check_enumeration_request(int alphabet_size, int n, const EnumerationOptions& options) {
    check_alphabet_size(alphabet_size);
    if (n < 0) throw PreconditionError("word half-length n must be >= 0");
    if (2 * n > options.max_length) {
        throw ResourceLimitError("enumeration of length " + std::to_string(2 * n) +
                                 " exceeds the cap " + std::to_string(options.max_length));
    }
    if (options.pair_counts) {
        const auto& counts = *options.pair_counts;
        if (counts.size() != static_cast<std::size_t>(alphabet_size)) {
            throw PreconditionError("pair_counts must have one entry per letter");
        }
        if (std::any_of(counts.begin(), counts.end(), [](int c) { return c < 0; }) ||
            std::accumulate(counts.begin(), counts.end(), 0) != n) {
            throw PreconditionError("pair_counts must be nonnegative and sum to n");
        }
    }
}

}  // namespace

void for_each_complete_word(int alphabet_size, int n, const WordVisitor& visit,
                            const EnumerationOptions& options) {
    check_enumeration_request(alphabet_size, n, options);
    Enumerator enumerator(alphabet_size, n, options.pair_counts);
    enumerator.run(visit);
}

Count count_complete_words(int alphabet_size, int n, const EnumerationOptions& options) {
    check_enumeration_request(alphabet_size, n, options);
    if (options.workers <= 1 || n < 2) {
        std::uint64_t total = 0;
        Enumerator enumerator(alphabet_size, n, options.pair_counts);
        enumerator.run([&](std::span<const Letter>) { ++total; });
        return total;
    }

    auto prefixes = Enumerator(alphabet_size, n, options.pair_counts).prefixes(2);
    const std::size_t workers = std::min<std::size_t>(options.workers, prefixes.size());
    std::vector<std::future<std::uint64_t>> parts;
    for (std::size_t w = 0; w < workers; ++w) {
        parts.push_back(std::async(std::launch::async, [&, w] {
            std::uint64_t subtotal = 0;
            for (std::size_t p = w; p < prefixes.size(); p += workers) {
                Enumerator enumerator(alphabet_size, n, options.pair_counts);
                if (!enumerator.push_prefix(prefixes[p])) continue;
                enumerator.run([&](std::span<const Letter>) { ++subtotal; });
            }
            return subtotal;
        }));
    }
    Count total = 0;
    for (auto& part : parts) total += part.get();
    return total;
}

std::vector<Count> profile_triangle_row(int n, const EnumerationOptions& options) {
    std::vector<Count> row;
    for (int j = 0; j <= n; ++j) {
        EnumerationOptions restricted = options;
        restricted.pair_counts = std::vector<int>{n - j, j};
        row.push_back(count_complete_words(2, n, restricted));
    }
    return row;
}

DTriangle::DTriangle(int n) : n_(n) {
    if (n < 1) throw PreconditionError("d-triangle needs n >= 1");
    cells_.resize(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1));
}

const Count& DTriangle::at(int i, int j) const {
    if (i < 1 || i >= j || j > 2 * n_) throw PreconditionError("d-triangle index needs 1 <= i < j <= 2n");
    return cells_[static_cast<std::size_t>(i) * (2 * n_ + 1) + j];
}

Count& DTriangle::at(int i, int j) {
    return const_cast<Count&>(std::as_const(*this).at(i, j));
}

std::vector<std::vector<Count>> DTriangle::rows() const {
    std::vector<std::vector<Count>> out;
    for (int r = 0; r <= 2 * n_ - 2; ++r) {
        std::vector<Count> row;
        for (int t = 0; t <= r; ++t) row.push_back(at(1 + t, 2 * n_ - r + t));
        out.push_back(std::move(row));
    }
    return out;
}

Count DTriangle::total() const {
    Count sum = 0;
    for (int i = 1; i <= 2 * n_; ++i)
        for (int j = i + 1; j <= 2 * n_; ++j) sum += at(i, j);
    return sum;
}

DTriangle d_triangle(int n, const EnumerationOptions& options) {
    DTriangle triangle(n);
    EnumerationOptions restricted = options;
    restricted.pair_counts = std::vector<int>{1, n - 1};
    for_each_complete_word(2, n, [&](std::span<const Letter> word) {
        int first = 0;
        int second = 0;
        for (std::size_t p = 0; p < word.size(); ++p) {
            if (word[p].index != 1) continue;
            (first == 0 ? first : second) = static_cast<int>(p) + 1;
        }
        triangle.at(first, second) += 1;
    }, restricted);
    return triangle;
}

}  // namespace gessel
