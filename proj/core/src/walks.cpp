#include "gessel/walks.hpp"

#include <algorithm>
#include <functional>

#include "gessel/errors.hpp"

namespace gessel {

void StepSet::validate() const {
    if (dimension < 1) throw PreconditionError("step set dimension must be >= 1");
    for (const auto& step : steps) {
        if (static_cast<int>(step.size()) != dimension) {
            throw PreconditionError("step vector has the wrong dimension");
        }
    }
}

StepSet gessel_steps(int dimension) {
    if (dimension < 1) throw PreconditionError("dimension must be >= 1");
    StepSet set{dimension, {}};
    for (int sign : {1, -1}) {
        for (int ones = dimension; ones >= 1; --ones) {
            Point step(dimension, 0);
            std::fill_n(step.begin(), ones, sign);
            set.steps.push_back(std::move(step));
        }
    }
    return set;
}

Count WalkCountTable::total() const {
    Count sum = 0;
    for (const auto& [point, count] : counts) sum += count;
    return sum;
}

Count WalkCountTable::at(const Point& point) const {
    auto it = counts.find(point);
    return it == counts.end() ? Count(0) : it->second;
}

namespace {

// Dense DP over the box [0, start_k + length]^d with two swapped layers.
class BoxDP {
public:
    BoxDP(const StepSet& steps, int length, const Point& start, const WalkOptions& options)
        : steps_(steps), dimension_(steps.dimension) {
        steps.validate();
        if (length < 0) throw PreconditionError("walk length must be >= 0");
        if (static_cast<int>(start.size()) != dimension_) throw PreconditionError("start point has the wrong dimension");
        if (std::any_of(start.begin(), start.end(), [](int c) { return c < 0; })) {
            throw PreconditionError("start point must have nonnegative coordinates");
        }
        extent_.resize(dimension_);
        stride_.resize(dimension_);
        std::size_t volume = 1;
        for (int k = dimension_ - 1; k >= 0; --k) {
            extent_[k] = start[k] + length + 1;
            stride_[k] = volume;
            if (volume > options.max_cells / static_cast<std::size_t>(extent_[k])) {
                throw ResourceLimitError("walk DP box exceeds the cap of " +
                                         std::to_string(options.max_cells) + " cells");
            }
            volume *= extent_[k];
        }
        current_.assign(volume, 0);
        next_.assign(volume, 0);
        current_[flat(start)] = 1;
        length_ = length;
    }

    // Calls `on_layer(t)` after each time step t = 0..length.
    void run(const std::function<void(int)>& on_layer) {
        on_layer(0);
        Point coords(dimension_);
        for (int t = 1; t <= length_; ++t) {
            std::fill(next_.begin(), next_.end(), 0);
            std::fill(coords.begin(), coords.end(), 0);
            for (std::size_t cell = 0; cell < current_.size(); ++cell, advance(coords)) {
                if (current_[cell] == 0) continue;
                for (const auto& step : steps_.steps) {
                    if (!inside(coords, step)) continue;
                    std::ptrdiff_t offset = 0;
                    for (int k = 0; k < dimension_; ++k) offset += step[k] * static_cast<std::ptrdiff_t>(stride_[k]);
                    next_[cell + offset] += current_[cell];
                }
            }
            std::swap(current_, next_);
            on_layer(t);
        }
    }

    const Count& at(const Point& point) const {
        static const Count zero = 0;
        for (int k = 0; k < dimension_; ++k) {
            if (point[k] < 0 || point[k] >= extent_[k]) return zero;
        }
        return current_[flat(point)];
    }

    WalkCountTable table(int length) const {
        WalkCountTable out{dimension_, length, {}};
        Point coords(dimension_, 0);
        for (std::size_t cell = 0; cell < current_.size(); ++cell, advance(coords)) {
            if (current_[cell] != 0) out.counts.emplace(coords, current_[cell]);
        }
        return out;
    }

private:
    std::size_t flat(const Point& point) const {
        std::size_t index = 0;
        for (int k = 0; k < dimension_; ++k) index += point[k] * stride_[k];
        return index;
    }

    bool inside(const Point& coords, const Point& step) const {
        for (int k = 0; k < dimension_; ++k) {
            const int c = coords[k] + step[k];
            if (c < 0 || c >= extent_[k]) return false;
        }
        return true;
    }

    // Row-major odometer matching `flat`.
    void advance(Point& coords) const {
        for (int k = dimension_ - 1; k >= 0; --k) {
            if (++coords[k] < extent_[k]) return;
            coords[k] = 0;
        }
    }

    const StepSet& steps_;
    int dimension_;
    int length_ = 0;
    std::vector<int> extent_;
    std::vector<std::size_t> stride_;
    std::vector<Count> current_;
    std::vector<Count> next_;
};

}  // namespace

WalkCountTable confined_walk_table(const StepSet& steps, int length, const Point& start,
                                   const WalkOptions& options) {
    BoxDP dp(steps, length, start, options);
    dp.run([](int) {});
    return dp.table(length);
}

Count count_confined_walks(const StepSet& steps, int length, const Point& start, const Point& end,
                           const WalkOptions& options) {
    if (static_cast<int>(end.size()) != steps.dimension) throw PreconditionError("end point has the wrong dimension");
    if (std::any_of(end.begin(), end.end(), [](int c) { return c < 0; })) {
        throw PreconditionError("end point must have nonnegative coordinates");
    }
    BoxDP dp(steps, length, start, options);
    dp.run([](int) {});
    return dp.at(end);
}

std::vector<Count> g_sequence(int dimension, int n_max, const WalkOptions& options) {
    if (n_max < 0) throw PreconditionError("n_max must be >= 0");
    const StepSet steps = gessel_steps(dimension);
    const Point origin(dimension, 0);
    std::vector<Count> sequence;
    BoxDP dp(steps, 2 * n_max, origin, options);
    dp.run([&](int t) {
        if (t % 2 == 0) sequence.push_back(dp.at(origin));
    });
    return sequence;
}

}  // namespace gessel
