#include "simplepaths/ring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace simplepaths {

BigInt parse_integer_token(std::string_view token) {
  std::string_view digits = token;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("not a decimal integer: '" + std::string(token) + "'");
  BigInt out;
  std::string text(token.front() == '+' ? token.substr(1) : token);
  out.set_str(text, 10);
  return out;
}

std::optional<BigInt> CountRing::divide_exact(const BigInt& a, const BigInt& d) {
  if (sgn(d) == 0 || !mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt CountRing::arc_weight(std::optional<std::string_view> token, ArcId) {
  return token ? parse_integer_token(*token) : one();
}

double FloatRing::arc_weight(std::optional<std::string_view> token, ArcId) {
  if (!token) return one();
  double value = 0.0;
  const char* first = token->data();
  const char* last = first + token->size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw std::invalid_argument("not a finite decimal float: '" + std::string(*token) + "'");
  return value;
}

WordSum WordRing::arc_weight(std::optional<std::string_view> token, ArcId arc) {
  BigInt coeff = token ? parse_integer_token(*token) : BigInt(1);
  return WordSum::single(Word{arc}, std::move(coeff));
}

WordSum WordSum::single(Word w, BigInt coeff) {
  WordSum s;
  if (sgn(coeff) != 0) s.terms_.push_back({std::move(w), std::move(coeff)});
  return s;
}

std::vector<WordSum::Term> WordSum::canonicalize(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.word < b.word; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().word == t.word) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

WordSum& WordSum::operator+=(const WordSum& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->word < b->word)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->word < a->word) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->coeff + b->coeff;
      if (sgn(c) != 0) merged.push_back({std::move(a->word), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

WordSum operator*(const WordSum& a, const WordSum& b) {
  std::vector<WordSum::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Word w;
      w.reserve(ta.word.size() + tb.word.size());
      w.insert(w.end(), ta.word.begin(), ta.word.end());
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      raw.push_back({std::move(w), ta.coeff * tb.coeff});
    }
  }
  WordSum out;
  out.terms_ = WordSum::canonicalize(std::move(raw));
  return out;
}

WordSum WordSum::scaled(const BigInt& k) const {
  WordSum out;
  if (sgn(k) == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff *= k;
  return out;
}

}  // namespace simplepaths
