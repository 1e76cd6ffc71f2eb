#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "gessel/count.hpp"
#include "gessel/words.hpp"

namespace gessel {

// Rising factorial a (a+1) ... (a+n-1); the empty product is 1.
ExactRational pochhammer(const ExactRational& a, int n);

// 16^n (5/6)_n (1/2)_n / ((2)_n (5/3)_n), checked to be an integer.
Count gessel_closed_form(int n);

// Complete two-letter words of length 2n with one 1 and one 1bar:
//   (2n+1)/2 * binom(2n, n) - 2^(2n-1),  n >= 1.
Count g1_closed(int n);

// C^m_n = (m-n+1)/(m+1) * binom(m+n, n) for 0 <= n <= m, else 0.
Count catalan_triangle(std::int64_t m, std::int64_t n);

// Same with doubled arguments; odd (half-integer) arguments give 0.
Count catalan_triangle_half(std::int64_t twice_m, std::int64_t twice_n);

enum class CptVariant {
    // Chain of ballot numbers between consecutive marker abscissae, each
    // segment shifted by its floor.
    segmentwise,
    // The nested sum transcribed index-for-index from its printed form,
    // kept for comparison only.
    literal,
};

// G_{n1}(S, P~; 2n): complete words of length 2n whose 1 / 1bar letters sit
// at the 1-based positions P~ with signs S.
Count g_n1_fixed_markers(std::span<const Letter> signs, std::span<const int> positions, int n,
                         CptVariant variant = CptVariant::segmentwise);

enum class PairOrder { one_first, bar_first };

// Complete words of length 2n with exactly one 1 and one 1bar, the first of
// them at position i and the other at j. one_first is C_{n-1}; bar_first is
// the double sum over the heights at i and j.
Count g1_pair(int i, int j, int n, PairOrder order);

// bar_first g1_pair agrees on (2i,2j), (2i,2j+1), (2i+1,2j), (2i+1,2j+1).
// Requires 1 <= i < j <= n-1.
bool diamond_equal(int i, int j, int n);

// The three parts of the bar-first total, as printed nested sums with the
// zero-outside-range conventions (empty ranges give 0).
Count s1_direct(int n);
Count s2_direct(int n);
Count s3_direct(int n);

// Their closed forms, evaluated exactly:
//   S1 = (n-1) C_{n-1}
//   S2 = (n+2)/4 binom(2n,n) - 3 * 2^(2n-3)
//   S3 = n/2 binom(2n-2, n-4) - 2^(2n-2) + (2n)! (3n^2+n+2) / (2 n! (n+2)!)
// S3 is only meaningful for n >= 3 and is 0 below.
Count s1_closed(int n);
Count s2_closed(int n);
Count s3_closed(int n);

// Words with 1bar before 1: 4 (S2 - S3) + S1 from the closed forms.
Count bar_first_total(int n);
// (n^3 + 4n^2 + 5n + 2) (2n)! / (2 n! (n+2)!) - 2^(2n-1).
Count bar_first_total_closed(int n);
// Sum of bar_first g1_pair over all 1 <= i < j <= 2n.
Count bar_first_total_pairs(int n);

// Words with 1 before 1bar: (2n-1) binom(2n-2, n-1).
Count one_first_total(int n);

// sum_{i=0..C} C^{i+A}_i C^{B-i}_{C-i} == C^{A+B+1}_C
bool check_identity_catid(int a, int b, int c);
// sum_{j=C..B} C^{A-j}_{B-j} binom(2j+1, j-C) == binom(A+B+2, B-C)
bool check_identity_catid2(int a, int b, int c);

// The double sum over {u, s >= 0, u + s <= A} regrouped along the
// diagonals u - s = v and s - u = v', minus the doubly counted u = s line.
bool check_split_sum(int a, const std::function<Count(int, int)>& f);

}  // namespace gessel
