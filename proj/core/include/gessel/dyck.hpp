#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gessel/count.hpp"
#include "gessel/words.hpp"

namespace gessel {

// A sequence of +1 / -1 steps. Whether it must stay on or above the axis,
// or end on it, is a property queried by the caller, not an invariant.
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::vector<int> steps);

    // "U" for +1, "D" for -1.
    static DyckPath parse(std::string_view text);
    std::string to_string() const;

    std::span<const int> steps() const noexcept { return steps_; }
    int length() const noexcept { return static_cast<int>(steps_.size()); }

    // Ordinate after the first `abscissa` steps.
    int height_at(int abscissa) const;
    bool stays_nonnegative() const;
    bool ends_on_axis() const;
    bool is_dyck() const { return stays_nonnegative() && ends_on_axis(); }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    std::vector<int> steps_;
};

// Floors for a (P,H)-Dyck path: on every abscissa in [P_i, P_{i+1}]
// (inclusive) the ordinate must be at least H_i, for i = 1..m-1. Outside
// those segments only the axis floor 0 applies. P is non-decreasing since
// consecutive markers share an abscissa; H_m is carried but never binds.
struct PHConstraint {
    std::vector<int> positions;
    std::vector<int> floors;

    void validate() const;

    int floor_at(int abscissa) const;

    // Violation of the constraint by `path`: the 1-based floor index i
    // (0 when the path leaves the axis region or does not return to it)
    // and the offending abscissa.
    struct Violation {
        std::size_t segment;
        int abscissa;
    };
    std::optional<Violation> first_violation(const DyckPath& path) const;
};

// The data read off the 1 / 1bar letters of a complete two-letter word:
// signs S, steps T, 1-based word positions P~, path abscissae P = P~_i - i
// and floors H_i = max(-(T_1 + ... + T_i), 0).
struct MarkerLists {
    std::vector<Letter> signs;
    std::vector<int> steps;
    std::vector<int> word_positions;
    std::vector<int> path_positions;
    std::vector<int> floors;

    PHConstraint constraint() const { return PHConstraint{path_positions, floors}; }

    friend bool operator==(const MarkerLists&, const MarkerLists&) = default;
};

std::vector<int> floors_from_signs(std::span<const Letter> signs);

// Builds the marker lists for given marker positions and signs. Requires
// strictly increasing positions >= 1, signs over {1, 1bar} with equal
// numbers of each, and matching sizes.
MarkerLists markers_from(std::span<const int> word_positions, std::span<const Letter> signs);

MarkerLists word_to_markers(const GesselWord& word);

// Interleaves the path (U -> 2, D -> 2bar) with the markers at the given word
// positions. Throws ConstraintViolationError if the path does not conform to
// the constraint the markers induce.
GesselWord markers_to_word(const DyckPath& path, std::span<const int> word_positions,
                           std::span<const Letter> signs);

// Paths of k steps from height i to height j that never go below the axis,
// by the reflection principle:
//   binom(k, (k+i-j)/2) - binom(k, (k+i+j)/2 + 1)  when k+i+j is even, else 0.
Count ballot_count(std::int64_t i, std::int64_t j, std::int64_t k);

// The same count by height-indexed dynamic programming. Throws
// ResourceLimitError when k exceeds `max_steps`.
Count ballot_count_dp(int i, int j, int k, int max_steps = 64);

// Memoized ballot numbers for i, j <= max_height and k <= max_steps.
// Immutable after construction; queries outside the table are computed.
class BallotTable {
public:
    BallotTable(int max_height, int max_steps);

    Count operator()(int i, int j, int k) const;

private:
    std::size_t index(int i, int j, int k) const;

    int max_height_;
    int max_steps_;
    std::vector<Count> values_;
};

// Axis-to-axis paths of the given length that stay nonnegative and satisfy
// the floors. Odd lengths give 0.
Count count_ph_paths(const PHConstraint& constraint, int length);

}  // namespace gessel
