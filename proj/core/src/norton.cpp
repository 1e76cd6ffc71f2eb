#include "gessel/norton.hpp"

#include <algorithm>

#include "gessel/errors.hpp"

namespace gessel {

SignWord::SignWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty() || bits_.size() % 2 != 0) {
        throw PreconditionError("sign word length must be even and positive, got " + std::to_string(bits_.size()));
    }
    for (auto b : bits_) {
        if (b > 1) throw PreconditionError("sign word bits must be 0 or 1");
    }
}

SignWord SignWord::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c == '1' || c == '+') {
            bits.push_back(1);
        } else if (c == '0' || c == '-') {
            bits.push_back(0);
        } else {
            throw PreconditionError(std::string("bad sign word character '") + c + "'");
        }
    }
    return SignWord(std::move(bits));
}

SignWord SignWord::from_mask(std::uint64_t mask, int length) {
    std::vector<std::uint8_t> bits(length);
    for (int i = 0; i < length; ++i) bits[i] = (mask >> (length - 1 - i)) & 1u;
    return SignWord(std::move(bits));
}

std::string SignWord::to_binary() const {
    std::string out;
    for (auto b : bits_) out += b ? '1' : '0';
    return out;
}

std::string SignWord::to_signs() const {
    std::string out;
    for (auto b : bits_) out += b ? '+' : '-';
    return out;
}

int count_n10(std::span<const std::uint8_t> bits, N10Reading reading) {
    int count = 0;
    if (reading == N10Reading::descent_blocks) {
        for (std::size_t i = 0; i + 1 < bits.size(); ++i) count += bits[i] == 1 && bits[i + 1] == 0;
        return count;
    }
    int open = 0;
    for (auto b : bits) {
        if (b) {
            ++open;
        } else if (open > 0) {
            --open;
            ++count;
        }
    }
    return count;
}

SignWordStats stats(const SignWord& word, N10Reading reading) {
    SignWordStats s;
    s.n1 = static_cast<int>(std::count(word.bits().begin(), word.bits().end(), 1));
    s.n10 = count_n10(word.bits(), reading);
    const int diff = s.n1 - s.n10;
    s.m = diff >= 0 ? diff / 2 : -((-diff + 1) / 2);
    return s;
}

SignedSumRange signed_sum_range(const SignWord& word) {
    // Vertex k of the closed order polytope is (0^k, 1^(2n-k)).
    SignedSumRange range;
    int suffix = 0;
    const int length = word.length();
    range.low = range.high = 0;
    range.low_vertex = range.high_vertex = length;
    for (int k = length - 1; k >= 0; --k) {
        suffix += word.sign(k);
        if (suffix < range.low) {
            range.low = suffix;
            range.low_vertex = k;
        }
        if (suffix > range.high) {
            range.high = suffix;
            range.high_vertex = k;
        }
    }
    return range;
}

namespace {

ExactRational signed_sum(const SignWord& word, std::span<const ExactRational> values) {
    ExactRational sum = 0;
    for (int i = 0; i < word.length(); ++i) sum += word.sign(i) * values[i];
    return sum;
}

std::vector<ExactRational> vertex(int k, int length) {
    std::vector<ExactRational> v(length, 0);
    for (int i = k; i < length; ++i) v[i] = 1;
    return v;
}

}  // namespace

bool verify_witness(const SignWord& word, std::span<const ExactRational> values, const ExactRational& target) {
    if (static_cast<int>(values.size()) != word.length()) return false;
    if (!(values.front() > 0) || !(values.back() < 1)) return false;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i - 1] < values[i])) return false;
    }
    return signed_sum(word, values) == target;
}

std::optional<std::vector<ExactRational>> construct_witness(const SignWord& word, const ExactRational& target) {
    const SignedSumRange range = signed_sum_range(word);
    if (!range.contains(target)) return std::nullopt;

    // Blend the two extreme vertices to hit the target, then pull the point
    // into the interior toward c_i = i / (2n+1).
    const int length = word.length();
    std::vector<ExactRational> centre(length);
    for (int i = 0; i < length; ++i) centre[i] = ExactRational(i + 1, length + 1);
    const ExactRational centre_value = signed_sum(word, centre);
    const auto high = vertex(range.high_vertex, length);
    const auto low = vertex(range.low_vertex, length);

    ExactRational delta(1, 2);
    for (int attempt = 0; attempt < 64; ++attempt, delta /= 2) {
        const ExactRational blended = (target - delta * centre_value) / (1 - delta);
        if (blended < range.low || blended > range.high) continue;
        const ExactRational lambda = (blended - range.low) / (range.high - range.low);
        std::vector<ExactRational> values(length);
        for (int i = 0; i < length; ++i) {
            values[i] = (1 - delta) * (lambda * high[i] + (1 - lambda) * low[i]) + delta * centre[i];
        }
        return values;
    }
    return std::nullopt;
}

std::vector<int> achievable_odd_sums(const SignWord& word) {
    const SignedSumRange range = signed_sum_range(word);
    std::vector<int> sums;
    for (int t = 1; t < range.high; t += 2) {
        const ExactRational target(t);
        auto witness = construct_witness(word, target);
        if (!witness || !verify_witness(word, *witness, target)) {
            throw IntegralityError("no exact witness for sum " + std::to_string(t) + " of " + word.to_signs());
        }
        sums.push_back(t);
    }
    return sums;
}

namespace {

template <typename Visit>
void for_each_sign_word(int n, const NortonOptions& options, Visit&& visit) {
    if (n < 1) throw PreconditionError("sign words need n >= 1");
    if (n > options.max_n) {
        throw ResourceLimitError("sign word enumeration for n = " + std::to_string(n) + " exceeds the cap " +
                                 std::to_string(options.max_n));
    }
    const int length = 2 * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
        visit(SignWord::from_mask(mask, length));
    }
}

}  // namespace

Count norton_count(int n, const NortonOptions& options) {
    Count total = 0;
    for_each_sign_word(n, options, [&](const SignWord& w) { total += achievable_odd_sums(w).size(); });
    return total;
}

Count multiplicity_total(int n, N10Reading reading, const NortonOptions& options) {
    Count total = 0;
    for_each_sign_word(n, options, [&](const SignWord& w) { total += std::max(stats(w, reading).m, 0); });
    return total;
}

TableCounts table_counts(int n, const NortonOptions& options) {
    TableCounts table;
    for_each_sign_word(n, options, [&](const SignWord& w) {
        const int plus = stats(w).n1;
        for (int t : achievable_odd_sums(w)) table[{plus, t}] += 1;
    });
    return table;
}

std::vector<AchievableRow> achievable_rows(int n, const NortonOptions& options) {
    std::vector<AchievableRow> rows;
    for_each_sign_word(n, options, [&](const SignWord& w) {
        auto sums = achievable_odd_sums(w);
        if (!sums.empty()) rows.push_back({w, std::move(sums), stats(w)});
    });
    std::reverse(rows.begin(), rows.end());
    return rows;
}

DiagonalReport diagonal_columns(int n, const NortonOptions& options) {
    const TableCounts table = table_counts(n, options);
    const int length = 2 * n;
    auto cell = [&](int row, int column) -> Count {
        auto it = table.find({length - row, 2 * column + 1});
        return it == table.end() ? Count(0) : it->second;
    };

    DiagonalReport report;
    for (const auto& [key, count] : table) {
        const Count full = binomial(length, key.first);
        (count == full ? report.full_contribution_total : report.partial_contribution_total) += count;
        bool small = false;
        for (int k = 0; k <= n - 1; ++k) small = small || count == binomial(length, k);
        report.cells_are_small_binomials = report.cells_are_small_binomials && small;
    }

    const int max_row = length;
    for (int diagonal = 0; diagonal <= max_row + n - 1; ++diagonal) {
        std::vector<Count> column;
        for (int c = std::min(diagonal, n - 1); c >= 0; --c) {
            const int row = diagonal - c;
            if (row > max_row) continue;
            Count value = cell(row, c);
            if (value != 0) column.push_back(std::move(value));
        }
        if (column.empty()) continue;
        for (std::size_t k = 0; k < column.size(); ++k) {
            if (column[k] != binomial(length, static_cast<std::int64_t>(k))) report.columns_are_binomial = false;
        }
        if (static_cast<int>(report.columns.size()) < n) {
            for (const auto& v : column) report.leading_columns_total += v;
        }
        report.columns.push_back(std::move(column));
    }
    return report;
}

}  // namespace gessel
