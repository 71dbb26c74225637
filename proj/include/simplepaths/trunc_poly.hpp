#pragma once

// Polynomials in z truncated at a fixed degree cap, and square matrices of
// them over a subgraph's local index space.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "simplepaths/bigint.hpp"
#include "simplepaths/error.hpp"
#include "simplepaths/graph.hpp"
#include "simplepaths/ring.hpp"

namespace simplepaths {

template <Ring R>
class TruncPoly {
 public:
  using value_type = typename R::value_type;

  explicit TruncPoly(std::size_t cap = 0) : coeffs_(cap + 1, R::zero()) {}

  static TruncPoly monomial(std::size_t cap, std::size_t degree, value_type c) {
    TruncPoly p(cap);
    if (degree <= cap) p.coeffs_[degree] = std::move(c);
    return p;
  }

  std::size_t cap() const noexcept { return coeffs_.size() - 1; }
  const value_type& operator[](std::size_t d) const { return coeffs_.at(d); }
  value_type& operator[](std::size_t d) { return coeffs_.at(d); }
  const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const value_type& c) { return R::is_zero(c); });
  }

  TruncPoly& operator+=(const TruncPoly& other) {
    check_cap(other);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) R::add_to(coeffs_[d], other.coeffs_[d]);
    return *this;
  }

  void check_cap(const TruncPoly& other) const {
    if (other.cap() != cap()) throw UsageError("truncated polynomial cap mismatch");
  }

  friend bool operator==(const TruncPoly& a, const TruncPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<value_type> coeffs_;
};

/// Product a*b truncated at the common cap; ring products keep the order a_i * b_j.
template <Ring R>
TruncPoly<R> poly_mul_trunc(const TruncPoly<R>& a, const TruncPoly<R>& b) {
  a.check_cap(b);
  const std::size_t cap = a.cap();
  TruncPoly<R> out(cap);
  for (std::size_t i = 0; i <= cap; ++i) {
    if (R::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= cap; ++j) {
      if (!R::is_zero(b[j])) R::add_product(out[i + j], a[i], b[j]);
    }
  }
  return out;
}

template <Ring R>
class LocalPolyMatrix {
 public:
  using value_type = typename R::value_type;

  LocalPolyMatrix(std::vector<Vertex> index_map, std::size_t cap)
      : index_map_(std::move(index_map)), cap_(cap), entries_(index_map_.size() * index_map_.size(), TruncPoly<R>(cap)) {
    if (!std::is_sorted(index_map_.begin(), index_map_.end()) ||
        std::adjacent_find(index_map_.begin(), index_map_.end()) != index_map_.end())
      throw UsageError("index_map must be strictly ascending");
  }

  /// Restricted identity I_S: ones on the local diagonal.
  static LocalPolyMatrix identity(std::vector<Vertex> index_map, std::size_t cap) {
    LocalPolyMatrix m(std::move(index_map), cap);
    for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i)[0] = R::one();
    return m;
  }

  /// z * W_S.
  static LocalPolyMatrix z_times(const LocalMatrix<R>& w, std::size_t cap) {
    LocalPolyMatrix m(w.index_map, cap);
    if (cap >= 1)
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) m.at(i, j)[1] = w.at(i, j);
    return m;
  }

  std::size_t dim() const noexcept { return index_map_.size(); }
  std::size_t cap() const noexcept { return cap_; }
  const std::vector<Vertex>& index_map() const noexcept { return index_map_; }

  TruncPoly<R>& at(std::size_t i, std::size_t j) { return entries_[i * dim() + j]; }
  const TruncPoly<R>& at(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }

  void check_compatible(const LocalPolyMatrix& other) const {
    if (other.cap_ != cap_ || other.index_map_ != index_map_)
      throw UsageError("local polynomial matrices differ in dimension, cap or index map");
  }

  LocalPolyMatrix& operator+=(const LocalPolyMatrix& other) {
    check_compatible(other);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
  }

  LocalPolyMatrix scaled(const BigInt& k) const {
    LocalPolyMatrix out(index_map_, cap_);
    for (std::size_t e = 0; e < entries_.size(); ++e)
      for (std::size_t d = 0; d <= cap_; ++d) out.entries_[e][d] = R::scale(entries_[e][d], k);
    return out;
  }

  friend bool operator==(const LocalPolyMatrix& a, const LocalPolyMatrix& b) {
    return a.cap_ == b.cap_ && a.index_map_ == b.index_map_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<Vertex> index_map_;
  std::size_t cap_;
  std::vector<TruncPoly<R>> entries_;
};

/// Matrix product A*B with truncated polynomial entries; order A then B.
template <Ring R>
LocalPolyMatrix<R> mat_mul_trunc(const LocalPolyMatrix<R>& a, const LocalPolyMatrix<R>& b) {
  a.check_compatible(b);
  const std::size_t k = a.dim();
  const std::size_t cap = a.cap();
  LocalPolyMatrix<R> out(a.index_map(), cap);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const TruncPoly<R>& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j) {
        const TruncPoly<R>& y = b.at(l, j);
        TruncPoly<R>& acc = out.at(i, j);
        for (std::size_t da = 0; da <= cap; ++da) {
          if (R::is_zero(x[da])) continue;
          for (std::size_t db = 0; da + db <= cap; ++db)
            if (!R::is_zero(y[db])) R::add_product(acc[da + db], x[da], y[db]);
        }
      }
    }
  }
  return out;
}

/// A^k; A^0 is the restricted identity on A's index space.
template <Ring R>
LocalPolyMatrix<R> mat_pow_trunc(const LocalPolyMatrix<R>& a, std::uint64_t k) {
  LocalPolyMatrix<R> result = LocalPolyMatrix<R>::identity(a.index_map(), a.cap());
  LocalPolyMatrix<R> base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1u) {
      result = first ? base : mat_mul_trunc(result, base);
      first = false;
    }
    k >>= 1;
    if (k > 0) base = mat_mul_trunc(base, base);
  }
  return result;
}

/// (I - A)^m truncated at A's cap via the binomial theorem. A must have zero
/// constant terms, so only the powers A^0..A^min(m, cap) contribute.
template <Ring R>
LocalPolyMatrix<R> binom_expand_i_minus(const LocalPolyMatrix<R>& a, std::uint64_t m) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!R::is_zero(a.at(i, j)[0]))
        throw UsageError("binom_expand_i_minus: matrix has a nonzero constant term");
  const std::uint64_t top = std::min<std::uint64_t>(m, a.cap());
  LocalPolyMatrix<R> power = LocalPolyMatrix<R>::identity(a.index_map(), a.cap());
  LocalPolyMatrix<R> sum = power;
  for (std::uint64_t j = 1; j <= top; ++j) {
    power = mat_mul_trunc(power, a);
    BigInt c = binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(j));
    if (j % 2 == 1) c = -c;
    sum += power.scaled(c);
  }
  return sum;
}

}  // namespace simplepaths
