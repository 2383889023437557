#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hajos {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kMaxOrder = 1024;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

namespace bits {

// Word-level kernels shared by VertexSet and Graph rows.

inline bool test(std::span<const Word> w, Vertex v) { return (w[v / kWordBits] >> (v % kWordBits)) & 1U; }

inline std::size_t count(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/// Smallest set bit >= from, or nullopt.
inline std::optional<Vertex> next(std::span<const Word> w, std::size_t from) {
  std::size_t i = from / kWordBits;
  if (i >= w.size()) return std::nullopt;
  Word cur = w[i] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur != 0) return static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
    if (++i >= w.size()) return std::nullopt;
    cur = w[i];
  }
}

/// Smallest bit >= from set in both a and b.
inline std::optional<Vertex> next_and(std::span<const Word> a, std::span<const Word> b, std::size_t from) {
  std::size_t i = from / kWordBits;
  if (i >= a.size()) return std::nullopt;
  Word cur = a[i] & b[i] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur != 0) return static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
    if (++i >= a.size()) return std::nullopt;
    cur = a[i] & b[i];
  }
}

template <class F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word cur = w[i];
    while (cur != 0) {
      f(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(cur))));
      cur &= cur - 1;
    }
  }
}

}  // namespace bits

/// Bitset over the vertex indices [0, universe) of a host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

  static VertexSet from_words(std::size_t universe, std::span<const Word> words) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size() && i < words.size(); ++i) s.words_[i] = words[i];
    s.trim();
    return s;
  }
  static VertexSet of(std::size_t universe, std::span<const Vertex> vertices) {
    VertexSet s(universe);
    for (Vertex v : vertices) s.insert(v);
    return s;
  }
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> vertices) {
    VertexSet s(universe);
    for (Vertex v : vertices) s.insert(v);
    return s;
  }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }

  bool contains(Vertex v) const { return v < universe_ && bits::test(words_, v); }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) {
    if (v < universe_) words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  std::size_t size() const { return bits::count(words_); }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  std::optional<Vertex> first() const { return bits::next(words_, 0); }
  std::optional<Vertex> next(std::size_t from) const { return bits::next(words_, from); }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    bits::for_each(words_, [&](Vertex v) { out.push_back(v); });
    return out;
  }

  /// The k smallest members (fewer if the set is smaller).
  std::vector<Vertex> smallest(std::size_t k) const {
    std::vector<Vertex> out;
    for (auto v = first(); v && out.size() < k; v = next(*v + 1)) out.push_back(*v);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    bits::for_each(words_, std::forward<F>(f));
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& intersect_words(std::span<const Word> row) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= row[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

 private:
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace hajos
