#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kdim {

/**
 * Fixed-universe bit vector over vertices 0..n-1.
 *
 * Used both for adjacency rows and for the R_k{x,y} sets of the solver, so
 * the hot operations (intersection tests, popcount, first set bit) work a
 * word at a time.
 */
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) set(v);
  }
  template <class Range>
  static VertexSet from_range(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.set(v);
    return s;
  }

  int universe() const { return universe_; }

  bool test(int v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
  void set(int v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void reset(int v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  /// Lowest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
    return -1;
  }
  /// Lowest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= universe_) return -1;
    std::size_t i = v / kWordBits;
    Word w = words_[i] & (~Word{0} << (v % kWordBits));
    while (true) {
      if (w) return static_cast<int>(i) * kWordBits + std::countr_zero(w);
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  /// |this \ o|
  int count_minus(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & ~o.words_[i]);
    return c;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  /// this |= (a \ b) without a temporary.
  void unite_minus(const VertexSet& a, const VertexSet& b) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= a.words_[i] & ~b.words_[i];
  }
  /// Lowest member of this \ o, or -1.
  int first_minus(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (Word w = words_[i] & ~o.words_[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(w);
    return -1;
  }
  int last() const {
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i]) return static_cast<int>(i) * kWordBits + (kWordBits - 1 - std::countl_zero(words_[i]));
    return -1;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        f(static_cast<int>(i) * kWordBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace kdim
