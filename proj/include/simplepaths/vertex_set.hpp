#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace simplepaths {

using Vertex = std::uint32_t;

/// Subset of {0, ..., n-1} stored as a bitset. Iteration is strictly ascending.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  /// Smallest member; precondition: non-empty.
  Vertex min() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
  /// Lexicographic on the ascending member lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  std::vector<Vertex> to_vector() const;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const VertexSet* set, std::size_t word, std::uint64_t bits) : set_(set), word_(word), bits_(bits) {
      skip();
    }
    Vertex operator*() const { return static_cast<Vertex>(word_ * 64 + std::countr_zero(bits_)); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      skip();
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.word_ == b.word_ && a.bits_ == b.bits_; }

   private:
    void skip() {
      while (bits_ == 0 && word_ + 1 < set_->words_.size()) bits_ = set_->words_[++word_];
      if (bits_ == 0) word_ = set_->words_.size();
    }
    const VertexSet* set_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  iterator begin() const { return words_.empty() ? end() : iterator(this, 0, words_[0]); }
  iterator end() const { return iterator(this, words_.size(), 0); }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace simplepaths
