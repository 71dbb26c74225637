#include "simplepaths/bigint.hpp"

namespace simplepaths {

BigInt binomial(std::int64_t nn, std::int64_t kk) {
  BigInt out;
  if (nn < 0 || kk < 0 || kk > nn) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(nn), static_cast<unsigned long>(kk));
  return out;
}

std::vector<BigInt> signed_binomial_row(std::int64_t m, std::int64_t max_j) {
  std::vector<BigInt> row(static_cast<std::size_t>(max_j + 1));
  for (std::int64_t j = 0; j <= max_j; ++j) {
    row[static_cast<std::size_t>(j)] = binomial(m, j);
    if (j % 2 == 1) row[static_cast<std::size_t>(j)] = -row[static_cast<std::size_t>(j)];
  }
  return row;
}

}  // namespace simplepaths
