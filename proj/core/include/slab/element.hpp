#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace slab {

/// Hard upper bound on ring order. The configurable cap (default 32) may be
/// raised up to this value.
inline constexpr std::size_t kHardMaxOrder = 256;
inline constexpr std::size_t kDefaultMaxOrder = 32;

/// Index of an element in the operation tables of its owning ring.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::size_t index) : index_(static_cast<std::uint16_t>(index)) {}

  [[nodiscard]] constexpr std::size_t index() const { return index_; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint16_t index_ = 0;
};

/// Fixed-capacity bitmask over element indices. Ordering compares the masks
/// as unsigned integers (bit i is element i).
class ElementSet {
  static constexpr std::size_t kWords = kHardMaxOrder / 64;

 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Element;

    iterator() = default;
    iterator(const ElementSet* set, std::size_t pos) : set_(set), pos_(pos) { seek(); }

    Element operator*() const { return Element{pos_}; }
    iterator& operator++() {
      ++pos_;
      seek();
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    void seek() {
      while (pos_ < kHardMaxOrder) {
        const std::uint64_t word = set_->words_[pos_ / 64] >> (pos_ % 64);
        if (word != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(word));
          return;
        }
        pos_ = (pos_ / 64 + 1) * 64;
      }
      pos_ = kHardMaxOrder;
    }

    const ElementSet* set_ = nullptr;
    std::size_t pos_ = kHardMaxOrder;
  };

  ElementSet() = default;
  ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }
  static ElementSet from_range(const std::vector<Element>& elements) {
    ElementSet set;
    for (Element e : elements) set.insert(e);
    return set;
  }
  static ElementSet all(std::size_t order) {
    ElementSet set;
    for (std::size_t i = 0; i < order; ++i) set.insert(Element{i});
    return set;
  }

  void insert(Element e) { words_[e.index() / 64] |= bit(e); }
  void erase(Element e) { words_[e.index() / 64] &= ~bit(e); }
  [[nodiscard]] bool contains(Element e) const { return (words_[e.index() / 64] & bit(e)) != 0; }

  [[nodiscard]] std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  [[nodiscard]] bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  [[nodiscard]] bool subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }
  [[nodiscard]] bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= other.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  [[nodiscard]] iterator begin() const { return iterator(this, 0); }
  [[nodiscard]] iterator end() const { return iterator(this, kHardMaxOrder); }

  [[nodiscard]] std::vector<Element> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = kWords; i-- > 0;) {
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  static constexpr std::uint64_t bit(Element e) { return std::uint64_t{1} << (e.index() % 64); }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace slab
