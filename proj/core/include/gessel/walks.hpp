#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gessel/count.hpp"

namespace gessel {

using Point = std::vector<int>;

struct StepSet {
    int dimension = 0;
    std::vector<Point> steps;

    void validate() const;
};

// The 2d vectors (1,...,1,0,...,0) with k leading ones, k = d..1, followed
// by their negations. For d = 2: (1,1), (1,0), (-1,-1), (-1,0).
StepSet gessel_steps(int dimension);

// Walk counts at a fixed time, keyed by lattice point in the closed first
// orthant. Only nonzero cells are stored.
struct WalkCountTable {
    int dimension = 0;
    int length = 0;
    std::map<Point, Count> counts;

    Count total() const;
    Count at(const Point& point) const;
};

struct WalkOptions {
    // Upper bound on the dense DP box volume before ResourceLimitError.
    std::size_t max_cells = 20'000'000;
};

WalkCountTable confined_walk_table(const StepSet& steps, int length, const Point& start,
                                   const WalkOptions& options = {});

// Walks of exactly `length` steps from `start` to `end` whose every point
// has nonnegative coordinates.
Count count_confined_walks(const StepSet& steps, int length, const Point& start, const Point& end,
                           const WalkOptions& options = {});

// G^(d)(n) for n = 0..n_max: origin-to-origin walks of length 2n with the
// Gessel-type step set. One DP pass, sampled at even times.
std::vector<Count> g_sequence(int dimension, int n_max, const WalkOptions& options = {});

}  // namespace gessel
