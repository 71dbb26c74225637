#include "simplepaths/series.hpp"

namespace simplepaths {

SelfCheckCounters& self_check_counters() {
  static SelfCheckCounters counters;
  return counters;
}

SignedBinomialTable::SignedBinomialTable(std::size_t max_m, std::size_t max_j) : rows_(max_m + 1) {
  for (std::size_t m = 0; m <= max_m; ++m)
    rows_[m] = signed_binomial_row(static_cast<std::int64_t>(m), static_cast<std::int64_t>(max_j));
}

BigInt ie_indicator(std::size_t n_total, std::size_t v, std::size_t len, bool closed) {
  if (v < 1 || v > n_total) throw UsageError("ie_indicator requires 1 <= v <= n");
  const auto n = static_cast<std::int64_t>(n_total);
  const auto top = static_cast<std::int64_t>(closed ? len : len + 1);
  BigInt sum = 0;
  for (auto s = static_cast<std::int64_t>(v); s <= n; ++s) {
    BigInt term = binomial(n - static_cast<std::int64_t>(v), s - static_cast<std::int64_t>(v)) * binomial(n - s, top - s);
    if ((top - s) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace simplepaths
