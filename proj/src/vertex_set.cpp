#include "simplepaths/vertex_set.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace simplepaths {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = universe == 64 ? mask : (mask & ((std::uint64_t{1} << universe) - 1));
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw std::out_of_range("VertexSet::insert: vertex outside universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexSet::min() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
  throw std::logic_error("VertexSet::min on empty set");
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  auto av = a.to_vector();
  auto bv = b.to_vector();
  return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace simplepaths
