#include "gessel/closed_forms.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gessel/dyck.hpp"
#include "gessel/errors.hpp"

namespace gessel {

namespace {

void require_positive(int n, const char* what) {
    if (n < 1) throw PreconditionError(std::string(what) + " needs n >= 1");
}

Count factorial(std::int64_t n) {
    Count result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

ExactRational ratio(std::int64_t num, std::int64_t den) { return ExactRational(num, den); }

}  // namespace

ExactRational pochhammer(const ExactRational& a, int n) {
    if (n < 0) throw PreconditionError("pochhammer needs n >= 0");
    ExactRational product = 1;
    for (int i = 0; i < n; ++i) product *= a + i;
    return product;
}

Count gessel_closed_form(int n) {
    if (n < 0) throw PreconditionError("gessel_closed_form needs n >= 0");
    ExactRational value = ExactRational(pow2(4 * static_cast<std::int64_t>(n)));
    value *= pochhammer(ratio(5, 6), n) * pochhammer(ratio(1, 2), n);
    value /= pochhammer(2, n) * pochhammer(ratio(5, 3), n);
    return require_integer(value, "gessel_closed_form(" + std::to_string(n) + ")");
}

Count g1_closed(int n) {
    require_positive(n, "g1_closed");
    ExactRational value = ratio(2 * n + 1, 2) * ExactRational(binomial(2 * n, n));
    value -= ExactRational(pow2(2 * n - 1));
    return require_integer(value, "g1_closed(" + std::to_string(n) + ")");
}

Count catalan_triangle(std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0 || n > m) return 0;
    Count numerator = (m - n + 1) * binomial(m + n, n);
    Count quotient = numerator / (m + 1);
    if (quotient * (m + 1) != numerator) {
        throw IntegralityError("catalan_triangle(" + std::to_string(m) + ", " + std::to_string(n) + ")");
    }
    return quotient;
}

Count catalan_triangle_half(std::int64_t twice_m, std::int64_t twice_n) {
    if (twice_m % 2 != 0 || twice_n % 2 != 0) return 0;
    return catalan_triangle(twice_m / 2, twice_n / 2);
}

namespace {

void validate_marker_config(std::span<const Letter> signs, std::span<const int> positions, int n) {
    if (n < 0) throw PreconditionError("word half-length must be >= 0");
    if (signs.size() % 2 != 0) throw PreconditionError("marker lists must have even length 2 n1");
    if (!positions.empty() && positions.back() > 2 * n) {
        throw PreconditionError("marker position beyond the word length 2n");
    }
}

Count cpt_segmentwise(const MarkerLists& lists, int n) {
    const int m = static_cast<int>(lists.signs.size());
    const int path_length = 2 * n - m;
    if (m == 0) return ballot_count(0, 0, path_length);

    const auto& at = lists.path_positions;
    const auto& floors = lists.floors;
    BallotTable ballots(path_length, path_length);

    // heights[k]: paths reaching height k at abscissa at[i], with every
    // floor up to that point satisfied.
    std::vector<Count> heights(path_length + 1, 0);
    for (int k = 0; k <= at[0]; ++k) heights[k] = ballots(0, k, at[0]);
    for (int i = 1; i < m; ++i) {
        const int span = at[i] - at[i - 1];
        const int floor = floors[i - 1];
        std::vector<Count> next(path_length + 1, 0);
        for (int from = floor; from <= path_length; ++from) {
            if (heights[from] == 0) continue;
            for (int to = floor; to <= std::min(path_length, from + span); ++to) {
                next[to] += heights[from] * ballots(from - floor, to - floor, span);
            }
        }
        heights = std::move(next);
    }
    Count total = 0;
    for (int k = 0; k <= path_length; ++k) {
        if (heights[k] != 0) total += heights[k] * ballots(k, 0, path_length - at[m - 1]);
    }
    return total;
}

// Literal nested sum: k_1 from delta_{(1-T_1)/2,0} to P~_1 - 1, k_i from H_i
// to P~_i - 1, factors a_{0,k_1}(P~_1 - 1) a_{k_m,0}(2n - P~_m) and
// prod_{i=2..m-1} a_{k_{i-1}-H_i, k_i-H_i}(P~_i - P~_{i-1} - 1).
Count cpt_literal(const MarkerLists& lists, int n) {
    const int m = static_cast<int>(lists.signs.size());
    if (m == 0) return ballot_count(0, 0, 2 * n);
    const auto& pos = lists.word_positions;
    const auto& floors = lists.floors;
    std::vector<int> k(m, 0);

    std::function<Count(int)> sum_from = [&](int level) -> Count {
        if (level == m) {
            Count term = ballot_count(0, k[0], pos[0] - 1) * ballot_count(k[m - 1], 0, 2 * n - pos[m - 1]);
            for (int i = 1; i + 1 < m; ++i) {
                if (term == 0) break;
                term *= ballot_count(k[i - 1] - floors[i], k[i] - floors[i], pos[i] - pos[i - 1] - 1);
            }
            return term;
        }
        const int low = level == 0 ? ((1 - lists.steps[0]) / 2 == 0 ? 1 : 0) : floors[level];
        Count total = 0;
        for (k[level] = low; k[level] <= pos[level] - 1; ++k[level]) total += sum_from(level + 1);
        return total;
    };
    return sum_from(0);
}

}  // namespace

Count g_n1_fixed_markers(std::span<const Letter> signs, std::span<const int> positions, int n,
                         CptVariant variant) {
    validate_marker_config(signs, positions, n);
    const MarkerLists lists = markers_from(positions, signs);
    return variant == CptVariant::segmentwise ? cpt_segmentwise(lists, n) : cpt_literal(lists, n);
}

Count g1_pair(int i, int j, int n, PairOrder order) {
    require_positive(n, "g1_pair");
    if (i < 1 || i >= j || j > 2 * n) throw PreconditionError("g1_pair needs 1 <= i < j <= 2n");
    if (order == PairOrder::one_first) return catalan(n - 1);

    const std::int64_t gap = j - i - 1;
    const std::int64_t tail = 2 * n - j;
    Count total = 0;
    for (std::int64_t k1 = 1; k1 <= i - 1; ++k1) {
        const Count head = catalan_triangle_half(i - 1 + k1, i - 1 - k1);
        if (head == 0) continue;
        for (std::int64_t k2 = 0; k2 <= j - 1; ++k2) {
            const Count last = catalan_triangle_half(tail + k2, tail - k2);
            if (last == 0) continue;
            const Count middle = binomial_half(2 * gap, gap + k1 - k2) - binomial_half(2 * gap, gap + k1 + k2);
            total += head * last * middle;
        }
    }
    return total;
}

bool diamond_equal(int i, int j, int n) {
    if (i < 1 || i >= j || j > n - 1) throw PreconditionError("diamond_equal needs 1 <= i < j <= n-1");
    const Count base = g1_pair(2 * i, 2 * j, n, PairOrder::bar_first);
    return g1_pair(2 * i, 2 * j + 1, n, PairOrder::bar_first) == base &&
           g1_pair(2 * i + 1, 2 * j, n, PairOrder::bar_first) == base &&
           g1_pair(2 * i + 1, 2 * j + 1, n, PairOrder::bar_first) == base;
}

Count s1_direct(int n) {
    require_positive(n, "s1_direct");
    Count total = 0;
    for (int i = 1; i <= n - 1; ++i)
        for (int r = 1; r <= i; ++r)
            for (int s = 1; s <= i; ++s) {
                const Count bracket = binomial(0, r - s) - binomial(0, r + s - 1);
                if (bracket == 0) continue;
                total += catalan_triangle(i - 1 + r, i - r) * catalan_triangle(n - i + s - 1, n - i - s) * bracket;
            }
    return total;
}

namespace {

template <typename LowerIndex>
Count s23_direct(int n, LowerIndex lower) {
    Count total = 0;
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i + 1; j <= n - 1; ++j)
            for (int r = 0; r <= i - 1; ++r)
                for (int s = 0; s <= n - j - 1; ++s) {
                    const Count b = binomial(2 * j - 2 * i - 1, lower(i, j, r, s));
                    if (b == 0) continue;
                    total += catalan_triangle(2 * i - r - 1, r) * catalan_triangle(2 * n - 2 * j - s, s) * b;
                }
    return total;
}

}  // namespace

Count s2_direct(int n) {
    require_positive(n, "s2_direct");
    return s23_direct(n, [n](int, int j, int r, int s) { return 2 * j + s - n - r - 1; });
}

Count s3_direct(int n) {
    require_positive(n, "s3_direct");
    return s23_direct(n, [n](int, int, int r, int s) { return n - s - r - 1; });
}

Count s1_closed(int n) {
    require_positive(n, "s1_closed");
    return (n - 1) * catalan(n - 1);
}

Count s2_closed(int n) {
    require_positive(n, "s2_closed");
    ExactRational value = ratio(n + 2, 4) * ExactRational(binomial(2 * n, n));
    value -= 3 * ExactRational(pow2(2 * n)) / 8;
    return require_integer(value, "s2_closed(" + std::to_string(n) + ")");
}

Count s3_closed(int n) {
    require_positive(n, "s3_closed");
    if (n < 3) return 0;
    ExactRational value = ratio(n, 2) * ExactRational(binomial(2 * n - 2, n - 4));
    value -= ExactRational(pow2(2 * n - 2));
    value += ExactRational(factorial(2 * n) * (3 * n * n + n + 2), 2 * factorial(n) * factorial(n + 2));
    return require_integer(value, "s3_closed(" + std::to_string(n) + ")");
}

Count bar_first_total(int n) {
    require_positive(n, "bar_first_total");
    return 4 * (s2_closed(n) - s3_closed(n)) + s1_closed(n);
}

Count bar_first_total_closed(int n) {
    require_positive(n, "bar_first_total_closed");
    const std::int64_t poly = static_cast<std::int64_t>(n) * n * n + 4 * n * n + 5 * n + 2;
    ExactRational value(factorial(2 * n) * poly, 2 * factorial(n) * factorial(n + 2));
    value -= ExactRational(pow2(2 * n - 1));
    return require_integer(value, "bar_first_total_closed(" + std::to_string(n) + ")");
}

Count bar_first_total_pairs(int n) {
    require_positive(n, "bar_first_total_pairs");
    Count total = 0;
    for (int i = 1; i <= 2 * n - 1; ++i)
        for (int j = i + 1; j <= 2 * n; ++j) total += g1_pair(i, j, n, PairOrder::bar_first);
    return total;
}

Count one_first_total(int n) {
    require_positive(n, "one_first_total");
    return (2 * n - 1) * binomial(2 * n - 2, n - 1);
}

bool check_identity_catid(int a, int b, int c) {
    Count lhs = 0;
    for (int i = 0; i <= c; ++i) lhs += catalan_triangle(i + a, i) * catalan_triangle(b - i, c - i);
    return lhs == catalan_triangle(a + b + 1, c);
}

bool check_identity_catid2(int a, int b, int c) {
    Count lhs = 0;
    for (int j = c; j <= b; ++j) lhs += catalan_triangle(a - j, b - j) * binomial(2 * j + 1, j - c);
    return lhs == binomial(a + b + 2, b - c);
}

bool check_split_sum(int a, const std::function<Count(int, int)>& f) {
    if (a < 0) throw PreconditionError("split sum needs A >= 0");
    Count lhs = 0;
    for (int u = 0; u <= a; ++u)
        for (int s = 0; s <= a - u; ++s) lhs += f(u, s);

    Count rhs = 0;
    for (int v = 0; v <= a; ++v)
        for (int u = v; 2 * u <= a + v; ++u) rhs += f(u, u - v);
    for (int v = 0; v <= a; ++v)
        for (int s = v; 2 * s <= a + v; ++s) rhs += f(s - v, s);
    for (int s = 0; 2 * s <= a; ++s) rhs -= f(s, s);
    return lhs == rhs;
}

}  // namespace gessel
