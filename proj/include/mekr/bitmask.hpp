#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mekr {

/// Fixed-width bitset sized at construction.  Used for family membership
/// vectors and per-member compatibility masks, where the width is the size
/// of the ambient universe.
class Bitmask {
 public:
  Bitmask() = default;
  explicit Bitmask(std::uint64_t width, bool fill = false)
      : width_(width), words_((width + 63) / 64, 0) {
    if (fill) {
      for (auto& w : words_) w = ~std::uint64_t{0};
      trim();
    }
  }

  std::uint64_t width() const { return width_; }

  void set(std::uint64_t i) { words_[word(i)] |= bit(i); }
  void reset(std::uint64_t i) { words_[word(i)] &= ~bit(i); }
  bool test(std::uint64_t i) const { return (words_[word(i)] & bit(i)) != 0; }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitmask& operator&=(const Bitmask& o) {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitmask& operator|=(const Bitmask& o) {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitmask& operator^=(const Bitmask& o) {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend Bitmask operator&(Bitmask a, const Bitmask& b) { return a &= b; }
  friend Bitmask operator|(Bitmask a, const Bitmask& b) { return a |= b; }
  friend Bitmask operator^(Bitmask a, const Bitmask& b) { return a ^= b; }

  /// Set difference: bits of *this not present in o.
  Bitmask minus(const Bitmask& o) const {
    match(o);
    Bitmask r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  Bitmask complement() const {
    Bitmask r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  bool intersects(const Bitmask& o) const {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitmask& o) const {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const Bitmask&) const = default;

  /// Total order (width, then word sequence); supports use as a map/set key.
  bool operator<(const Bitmask& o) const {
    if (width_ != o.width_) return width_ < o.width_;
    return words_ < o.words_;
  }

  /// Clear bits [0, end).
  void reset_prefix(std::uint64_t end) {
    if (end > width_) end = width_;
    const std::uint64_t full = end >> 6;
    for (std::uint64_t i = 0; i < full; ++i) words_[i] = 0;
    if (full < words_.size() && (end & 63))
      words_[full] &= ~((std::uint64_t{1} << (end & 63)) - 1);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(wi * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint64_t> to_indices() const {
    std::vector<std::uint64_t> out;
    out.reserve(count());
    for_each([&](std::uint64_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ width_);
  }

 private:
  static std::uint64_t bit(std::uint64_t i) { return std::uint64_t{1} << (i & 63); }
  std::uint64_t word(std::uint64_t i) const {
    if (i >= width_) throw std::out_of_range("Bitmask index out of range");
    return i >> 6;
  }
  void match(const Bitmask& o) const {
    if (width_ != o.width_) throw std::invalid_argument("Bitmask width mismatch");
  }
  void trim() {
    if (width_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
  }

  std::uint64_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitmaskHash {
  std::size_t operator()(const Bitmask& b) const { return b.hash(); }
};

}  // namespace mekr
