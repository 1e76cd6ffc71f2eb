#include "gessel/dyck.hpp"

#include <algorithm>

#include "gessel/errors.hpp"

namespace gessel {

DyckPath::DyckPath(std::vector<int> steps) : steps_(std::move(steps)) {
    for (int s : steps_) {
        if (s != 1 && s != -1) throw PreconditionError("path steps must be +1 or -1");
    }
}

DyckPath DyckPath::parse(std::string_view text) {
    std::vector<int> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'U' || c == 'u') {
            steps.push_back(1);
        } else if (c == 'D' || c == 'd') {
            steps.push_back(-1);
        } else {
            throw PreconditionError(std::string("bad path character '") + c + "'");
        }
    }
    return DyckPath(std::move(steps));
}

std::string DyckPath::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (int s : steps_) out += s > 0 ? 'U' : 'D';
    return out;
}

int DyckPath::height_at(int abscissa) const {
    if (abscissa < 0 || abscissa > length()) throw PreconditionError("abscissa outside the path");
    int h = 0;
    for (int x = 0; x < abscissa; ++x) h += steps_[x];
    return h;
}

bool DyckPath::stays_nonnegative() const {
    int h = 0;
    for (int s : steps_) {
        h += s;
        if (h < 0) return false;
    }
    return true;
}

bool DyckPath::ends_on_axis() const { return height_at(length()) == 0; }

void PHConstraint::validate() const {
    if (positions.size() != floors.size()) throw PreconditionError("|P| must equal |H|");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 0) throw PreconditionError("P entries must be nonnegative");
        if (i > 0 && positions[i] < positions[i - 1]) throw PreconditionError("P must be non-decreasing");
        if (floors[i] < 0) throw PreconditionError("H entries must be nonnegative");
    }
}

int PHConstraint::floor_at(int abscissa) const {
    int floor = 0;
    for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
        if (positions[i] <= abscissa && abscissa <= positions[i + 1]) floor = std::max(floor, floors[i]);
    }
    return floor;
}

std::optional<PHConstraint::Violation> PHConstraint::first_violation(const DyckPath& path) const {
    int h = 0;
    for (int x = 0; x <= path.length(); ++x) {
        if (x > 0) h += path.steps()[x - 1];
        if (h < 0) return Violation{0, x};
        for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
            if (positions[i] <= x && x <= positions[i + 1] && h < floors[i]) return Violation{i + 1, x};
        }
    }
    if (h != 0) return Violation{0, path.length()};
    return std::nullopt;
}

std::vector<int> floors_from_signs(std::span<const Letter> signs) {
    std::vector<int> floors;
    floors.reserve(signs.size());
    int running = 0;
    for (const auto& s : signs) {
        running += s.sign();
        floors.push_back(std::max(-running, 0));
    }
    return floors;
}

MarkerLists markers_from(std::span<const int> word_positions, std::span<const Letter> signs) {
    if (word_positions.size() != signs.size()) throw PreconditionError("|S| must equal |P~|");
    int balance = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i].index != 1) throw PreconditionError("marker signs must be 1 or 1bar");
        if (word_positions[i] < 1 || (i > 0 && word_positions[i] <= word_positions[i - 1])) {
            throw PreconditionError("marker positions must be strictly increasing and >= 1");
        }
        balance += signs[i].sign();
    }
    if (balance != 0) throw PreconditionError("S must hold equally many 1 and 1bar");

    MarkerLists lists;
    lists.signs.assign(signs.begin(), signs.end());
    lists.word_positions.assign(word_positions.begin(), word_positions.end());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        lists.steps.push_back(signs[i].sign());
        lists.path_positions.push_back(word_positions[i] - static_cast<int>(i + 1));
    }
    lists.floors = floors_from_signs(signs);
    return lists;
}

MarkerLists word_to_markers(const GesselWord& word) {
    if (word.alphabet_size() != 2) throw MalformedWordError("marker lists need a two-letter word");
    if (!is_complete(word)) throw MalformedWordError("marker lists need a complete Gessel word");
    std::vector<int> positions;
    std::vector<Letter> signs;
    for (std::size_t p = 0; p < word.size(); ++p) {
        if (word[p].index == 1) {
            positions.push_back(static_cast<int>(p) + 1);
            signs.push_back(word[p]);
        }
    }
    return markers_from(positions, signs);
}

GesselWord markers_to_word(const DyckPath& path, std::span<const int> word_positions,
                           std::span<const Letter> signs) {
    const MarkerLists lists = markers_from(word_positions, signs);
    const int total = path.length() + static_cast<int>(signs.size());
    if (!word_positions.empty() && word_positions.back() > total) {
        throw PreconditionError("marker position beyond the word length");
    }
    if (auto violation = lists.constraint().first_violation(path)) {
        const std::string where = violation->segment == 0
                                      ? std::string("the axis")
                                      : "floor H_" + std::to_string(violation->segment) + " = " +
                                            std::to_string(lists.floors[violation->segment - 1]) +
                                            " on [" +
                                            std::to_string(lists.path_positions[violation->segment - 1]) +
                                            ", " + std::to_string(lists.path_positions[violation->segment]) +
                                            "]";
        throw ConstraintViolationError(violation->segment, violation->abscissa,
                                       "path " + path.to_string() + " violates " + where +
                                           " at abscissa " + std::to_string(violation->abscissa));
    }

    std::vector<Letter> letters;
    letters.reserve(total);
    std::size_t marker = 0;
    std::size_t step = 0;
    for (int p = 1; p <= total; ++p) {
        if (marker < signs.size() && word_positions[marker] == p) {
            letters.push_back(signs[marker++]);
        } else {
            letters.push_back(Letter{2, path.steps()[step++] < 0});
        }
    }
    return GesselWord(std::move(letters), 2);
}

Count ballot_count(std::int64_t i, std::int64_t j, std::int64_t k) {
    if (i < 0 || j < 0 || k < 0) return 0;
    if ((k + i + j) % 2 != 0) return 0;
    return binomial(k, (k + i - j) / 2) - binomial(k, (k + i + j) / 2 + 1);
}

Count ballot_count_dp(int i, int j, int k, int max_steps) {
    if (k > max_steps) {
        throw ResourceLimitError("ballot DP with " + std::to_string(k) + " steps exceeds the cap " +
                                 std::to_string(max_steps));
    }
    if (i < 0 || j < 0 || k < 0) return 0;
    const int top = i + k;
    std::vector<Count> ways(top + 2, 0);
    std::vector<Count> next(top + 2, 0);
    ways[i] = 1;
    for (int step = 0; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (int h = 0; h <= top; ++h) {
            if (ways[h] == 0) continue;
            next[h + 1] += ways[h];
            if (h > 0) next[h - 1] += ways[h];
        }
        std::swap(ways, next);
    }
    return j <= top ? ways[j] : Count(0);
}

BallotTable::BallotTable(int max_height, int max_steps)
    : max_height_(max_height), max_steps_(max_steps) {
    if (max_height < 0 || max_steps < 0) throw PreconditionError("ballot table bounds must be >= 0");
    values_.resize(static_cast<std::size_t>(max_height + 1) * (max_height + 1) * (max_steps + 1));
    for (int i = 0; i <= max_height; ++i)
        for (int j = 0; j <= max_height; ++j)
            for (int k = 0; k <= max_steps; ++k) values_[index(i, j, k)] = ballot_count(i, j, k);
}

std::size_t BallotTable::index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * (max_height_ + 1) + j) * (max_steps_ + 1) + k;
}

Count BallotTable::operator()(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0) return 0;
    if (i > max_height_ || j > max_height_ || k > max_steps_) return ballot_count(i, j, k);
    return values_[index(i, j, k)];
}

Count count_ph_paths(const PHConstraint& constraint, int length) {
    constraint.validate();
    if (length < 0) throw PreconditionError("path length must be >= 0");
    if (!constraint.positions.empty() && constraint.positions.back() > length) {
        throw PreconditionError("constraint position beyond the path length");
    }
    if (length % 2 != 0) return 0;

    // Height DP, one abscissa at a time, zeroing cells under the floor.
    const int top = length / 2;
    std::vector<Count> ways(top + 2, 0);
    std::vector<Count> next(top + 2, 0);
    ways[0] = constraint.floor_at(0) == 0 ? 1 : 0;
    for (int x = 1; x <= length; ++x) {
        std::fill(next.begin(), next.end(), 0);
        for (int h = 0; h <= top; ++h) {
            if (ways[h] == 0) continue;
            if (h + 1 <= top) next[h + 1] += ways[h];
            if (h > 0) next[h - 1] += ways[h];
        }
        const int floor = constraint.floor_at(x);
        for (int h = 0; h < std::min(floor, top + 1); ++h) next[h] = 0;
        std::swap(ways, next);
    }
    return ways[0];
}

}  // namespace gessel
