#pragma once

// Coefficient rings for path generating series. Each ring is a stateless
// policy struct over its value_type; multiplication is never assumed to
// commute (see WordRing).

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simplepaths/bigint.hpp"

namespace simplepaths {

using ArcId = std::uint32_t;

template <class R>
concept Ring = requires(typename R::value_type& acc, const typename R::value_type& a, const BigInt& k,
                        std::string_view tok) {
  { R::name } -> std::convertible_to<std::string_view>;
  { R::kExact } -> std::convertible_to<bool>;
  { R::kDivision } -> std::convertible_to<bool>;
  { R::zero() } -> std::same_as<typename R::value_type>;
  { R::one() } -> std::same_as<typename R::value_type>;
  { R::is_zero(a) } -> std::same_as<bool>;
  { R::add(a, a) } -> std::same_as<typename R::value_type>;
  { R::mul(a, a) } -> std::same_as<typename R::value_type>;
  { R::neg(a) } -> std::same_as<typename R::value_type>;
  { R::scale(a, k) } -> std::same_as<typename R::value_type>;
  R::add_to(acc, a);
  R::add_product(acc, a, a);
  R::add_scaled(acc, k, a);
  { R::arc_weight(std::optional<std::string_view>{}, ArcId{}) } -> std::same_as<typename R::value_type>;
};

/// Arbitrary-precision integers. Counting instantiation: weight 1 per arc by default.
struct CountRing {
  using value_type = BigInt;
  static constexpr std::string_view name = "bigint";
  static constexpr bool kExact = true;
  static constexpr bool kDivision = true;

  static value_type zero() { return BigInt(0); }
  static value_type one() { return BigInt(1); }
  static value_type from_int(std::int64_t v) { return BigInt(static_cast<long>(v)); }
  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return -a; }
  static value_type scale(const value_type& a, const BigInt& k) { return a * k; }
  static void add_to(value_type& acc, const value_type& a) { acc += a; }
  static void add_product(value_type& acc, const value_type& a, const value_type& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static void add_scaled(value_type& acc, const BigInt& k, const value_type& a) { add_product(acc, k, a); }
  /// Exact quotient, or nullopt when d does not divide a.
  static std::optional<value_type> divide_exact(const value_type& a, const BigInt& d);
  static value_type arc_weight(std::optional<std::string_view> token, ArcId arc);
};

/// IEEE doubles for real-valued arc weights. Division is plain floating division.
struct FloatRing {
  using value_type = double;
  static constexpr std::string_view name = "float";
  static constexpr bool kExact = false;
  static constexpr bool kDivision = true;

  static value_type zero() { return 0.0; }
  static value_type one() { return 1.0; }
  static value_type from_int(std::int64_t v) { return static_cast<double>(v); }
  static bool is_zero(const value_type& a) { return a == 0.0; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return -a; }
  static value_type scale(const value_type& a, const BigInt& k) { return a * k.get_d(); }
  static void add_to(value_type& acc, const value_type& a) { acc += a; }
  static void add_product(value_type& acc, const value_type& a, const value_type& b) { acc += a * b; }
  static void add_scaled(value_type& acc, const BigInt& k, const value_type& a) { acc += k.get_d() * a; }
  static std::optional<value_type> divide_exact(const value_type& a, const BigInt& d) { return a / d.get_d(); }
  static value_type arc_weight(std::optional<std::string_view> token, ArcId arc);
};

/// A word over the arc alphabet; the empty word is the ring one.
using Word = std::vector<ArcId>;

/// Finite formal sum of words with integer coefficients, kept canonical:
/// terms sorted by word, no zero coefficients.
class WordSum {
 public:
  struct Term {
    Word word;
    BigInt coeff;
    friend bool operator==(const Term& a, const Term& b) { return a.word == b.word && a.coeff == b.coeff; }
  };

  WordSum() = default;
  static WordSum single(Word w, BigInt coeff = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend bool operator==(const WordSum& a, const WordSum& b) { return a.terms_ == b.terms_; }

  WordSum& operator+=(const WordSum& other);
  friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
  /// Bilinear extension of concatenation: (a*b) has words u.v in that order.
  friend WordSum operator*(const WordSum& a, const WordSum& b);
  WordSum scaled(const BigInt& k) const;
  WordSum negated() const { return scaled(BigInt(-1)); }

 private:
  static std::vector<Term> canonicalize(std::vector<Term> raw);
  std::vector<Term> terms_;
};

/// Non-commutative ring of path words; each arc carries its own letter.
struct WordRing {
  using value_type = WordSum;
  static constexpr std::string_view name = "word";
  static constexpr bool kExact = true;
  static constexpr bool kDivision = false;

  static value_type zero() { return {}; }
  static value_type one() { return WordSum::single({}); }
  static bool is_zero(const value_type& a) { return a.is_zero(); }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type neg(const value_type& a) { return a.negated(); }
  static value_type scale(const value_type& a, const BigInt& k) { return a.scaled(k); }
  static void add_to(value_type& acc, const value_type& a) { acc += a; }
  static void add_product(value_type& acc, const value_type& a, const value_type& b) {
    if (!a.is_zero() && !b.is_zero()) acc += a * b;
  }
  static void add_scaled(value_type& acc, const BigInt& k, const value_type& a) {
    if (sgn(k) != 0) acc += a.scaled(k);
  }
  /// Letter `arc` with coefficient given by the token (default 1).
  static value_type arc_weight(std::optional<std::string_view> token, ArcId arc);
};

/// Parses a decimal integer token ("-12", "+3", "40"). Throws std::invalid_argument.
BigInt parse_integer_token(std::string_view token);

}  // namespace simplepaths
