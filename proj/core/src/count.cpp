#include "gessel/count.hpp"

#include <vector>

#include "gessel/errors.hpp"

namespace gessel {

namespace {

constexpr std::int64_t kPascalRows = 200;

const std::vector<std::vector<Count>>& pascal() {
    static const std::vector<std::vector<Count>> table = [] {
        std::vector<std::vector<Count>> rows(kPascalRows + 1);
        for (std::int64_t n = 0; n <= kPascalRows; ++n) {
            rows[n].resize(n + 1);
            rows[n][0] = rows[n][n] = 1;
            for (std::int64_t k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
        return rows;
    }();
    return table;
}

}  // namespace

Count binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n <= kPascalRows) return pascal()[n][k];
    if (k > n - k) k = n - k;
    Count result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Count binomial_half(std::int64_t twice_n, std::int64_t twice_k) {
    if (twice_n % 2 != 0 || twice_k % 2 != 0) return 0;
    return binomial(twice_n / 2, twice_k / 2);
}

Count catalan(std::int64_t n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

Count pow2(std::int64_t e) {
    if (e < 0) throw PreconditionError("pow2: negative exponent");
    Count result = 1;
    result <<= static_cast<unsigned>(e);
    return result;
}

Count require_integer(const ExactRational& value, std::string_view what) {
    if (boost::multiprecision::denominator(value) != 1) {
        throw IntegralityError(std::string(what) + " evaluated to non-integer " + to_string(value));
    }
    return boost::multiprecision::numerator(value);
}

std::string to_decimal(const Count& value) { return value.str(); }

std::string to_string(const ExactRational& value) {
    const Count& den = boost::multiprecision::denominator(value);
    if (den == 1) return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace gessel
