#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>

#include <boost/container/small_vector.hpp>

namespace td {

// Set of vertex ids over a fixed universe {0..n-1}, packed into 64-bit words.
// One word is stored inline, so sets stay allocation-free for n <= 64; larger
// universes spill to the heap transparently. Bits at positions >= n are kept
// zero at all times.
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(uint32_t n) : nbits_(n), words_(words_for(n), 0) {}

  VertexSet(uint32_t n, std::initializer_list<uint32_t> elems) : VertexSet(n) {
    for (uint32_t v : elems) set(v);
  }

  static VertexSet full(uint32_t n) {
    VertexSet s(n);
    for (auto& w : s.words_) w = ~uint64_t{0};
    s.mask_tail();
    return s;
  }

  uint32_t universe() const { return nbits_; }
  uint32_t word_count() const { return static_cast<uint32_t>(words_.size()); }
  uint64_t word(uint32_t i) const { return words_[i]; }
  void set_word(uint32_t i, uint64_t w) { words_[i] = w; mask_tail(); }

  bool test(uint32_t v) const {
    assert(v < nbits_);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(uint32_t v) {
    assert(v < nbits_);
    words_[v >> 6] |= uint64_t{1} << (v & 63);
  }

  void reset(uint32_t v) {
    assert(v < nbits_);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  VertexSet with(uint32_t v) const {
    VertexSet s = *this;
    s.set(v);
    return s;
  }

  VertexSet without(uint32_t v) const {
    VertexSet s = *this;
    s.reset(v);
    return s;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
    return c;
  }

  // Smallest element; the set must be nonempty.
  uint32_t front() const {
    for (uint32_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<uint32_t>(std::countr_zero(words_[i]));
    assert(false && "front() on empty set");
    return nbits_;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Total order on same-universe sets: the bit pattern read as one big
  // integer. Used wherever a deterministic tie-break over sets is needed.
  static int compare(const VertexSet& a, const VertexSet& b) {
    assert(a.nbits_ == b.nbits_);
    for (size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
    }
    return 0;
  }

  struct Hash {
    size_t operator()(const VertexSet& s) const noexcept {
      uint64_t h = 0xcbf29ce484222325ull;
      for (uint64_t w : s.words_) {
        h ^= w;
        h *= 0x100000001b3ull;
        h ^= h >> 29;
      }
      return static_cast<size_t>(h);
    }
  };

  class const_iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = uint32_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const uint32_t*;
    using reference = uint32_t;

    const_iterator() = default;
    const_iterator(const VertexSet* s, uint32_t pos) : s_(s), pos_(pos) {}

    uint32_t operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = s_->next_after(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator t = *this;
      ++*this;
      return t;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }
    bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

  private:
    const VertexSet* s_ = nullptr;
    uint32_t pos_ = 0;
  };

  const_iterator begin() const {
    return {this, empty() ? nbits_ : front()};
  }
  const_iterator end() const { return {this, nbits_}; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (uint32_t v : *this) {
      if (!first) out += ", ";
      out += std::to_string(v);
      first = false;
    }
    out += "}";
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    return os << s.to_string();
  }

private:
  static uint32_t words_for(uint32_t n) { return (n + 63) / 64; }

  void mask_tail() {
    if (nbits_ % 64 != 0 && !words_.empty())
      words_.back() &= (uint64_t{1} << (nbits_ % 64)) - 1;
  }

  // First element strictly greater than pos, or the universe size.
  uint32_t next_after(uint32_t pos) const {
    uint32_t i = (pos + 1) >> 6;
    if (i >= words_.size()) return nbits_;
    uint64_t w = words_[i] & ~((uint64_t{2} << (pos & 63)) - 1);
    // (pos+1) may have wrapped to a fresh word whose low bits all count
    if (((pos + 1) & 63) == 0) w = words_[i];
    while (true) {
      if (w) return i * 64 + static_cast<uint32_t>(std::countr_zero(w));
      if (++i >= words_.size()) return nbits_;
      w = words_[i];
    }
  }

  uint32_t nbits_ = 0;
  boost::container::small_vector<uint64_t, 1> words_;
};

}  // namespace td
