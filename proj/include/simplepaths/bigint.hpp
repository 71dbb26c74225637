#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace simplepaths {

using BigInt = mpz_class;

/// Exact binomial coefficient, zero when kk < 0 or kk > nn.
BigInt binomial(std::int64_t nn, std::int64_t kk);

/// Signed binomial row: entry j holds (-1)^j * C(m, j) for j = 0..max_j (zero past m).
std::vector<BigInt> signed_binomial_row(std::int64_t m, std::int64_t max_j);

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

}  // namespace simplepaths
