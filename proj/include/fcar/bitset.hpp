#pragma once

// Fixed-width bit vectors over the two universes of a formal context.
// ObjSet and AttrSet are distinct instantiations of the same template so
// extent-side and intent-side sets cannot be mixed up at compile time.
// Bits beyond width() are kept at zero, which makes equality, popcount and
// emptiness tests plain word loops.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fcar {

template <typename Tag>
class FixedBitset {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  FixedBitset() = default;
  explicit FixedBitset(std::size_t width)
      : width_(width), words_((width + word_bits - 1) / word_bits, 0) {}

  static FixedBitset full(std::size_t width) {
    FixedBitset s(width);
    s.set_all();
    return s;
  }

  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t pos) const {
    check_pos(pos);
    return (words_[pos / word_bits] >> (pos % word_bits)) & 1u;
  }

  void set(std::size_t pos) {
    check_pos(pos);
    words_[pos / word_bits] |= word_type{1} << (pos % word_bits);
  }

  void reset(std::size_t pos) {
    check_pos(pos);
    words_[pos / word_bits] &= ~(word_type{1} << (pos % word_bits));
  }

  void clear_all() noexcept {
    for (auto& w : words_) w = 0;
  }

  void set_all() noexcept {
    for (auto& w : words_) w = ~word_type{0};
    mask_tail();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool any() const noexcept { return !none(); }

  FixedBitset& operator&=(const FixedBitset& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  FixedBitset& operator|=(const FixedBitset& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  // Removes o's members from this set.
  FixedBitset& and_not(const FixedBitset& o) {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend FixedBitset operator&(FixedBitset a, const FixedBitset& b) {
    a &= b;
    return a;
  }

  friend FixedBitset operator|(FixedBitset a, const FixedBitset& b) {
    a |= b;
    return a;
  }

  friend FixedBitset difference(FixedBitset a, const FixedBitset& b) {
    a.and_not(b);
    return a;
  }

  FixedBitset complement() const {
    FixedBitset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.mask_tail();
    return r;
  }

  bool is_subset_of(const FixedBitset& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool is_proper_subset_of(const FixedBitset& o) const {
    return is_subset_of(o) && words_ != o.words_;
  }

  bool intersects(const FixedBitset& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const FixedBitset&) const = default;

  // Total order on equal-width sets: the bit pattern read as an unsigned
  // integer with position 0 least significant. Returns -1, 0 or 1.
  int compare_value(const FixedBitset& o) const {
    check_width(o);
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i] ? -1 : 1;
    }
    return 0;
  }

  // True when the two sets agree on every position in [0, limit).
  bool equal_below(const FixedBitset& o, std::size_t limit) const {
    check_width(o);
    if (limit > width_) limit = width_;
    const std::size_t whole = limit / word_bits;
    for (std::size_t i = 0; i < whole; ++i)
      if (words_[i] != o.words_[i]) return false;
    const std::size_t rem = limit % word_bits;
    if (rem) {
      const word_type mask = (word_type{1} << rem) - 1;
      if ((words_[whole] ^ o.words_[whole]) & mask) return false;
    }
    return true;
  }

  // Visits set positions in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      word_type w = words_[i];
      while (w) {
        fn(i * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t p) { out.push_back(p); });
    return out;
  }

private:
  std::size_t width_ = 0;
  std::vector<word_type> words_;

  void mask_tail() noexcept {
    const std::size_t rem = width_ % word_bits;
    if (rem && !words_.empty()) words_.back() &= (word_type{1} << rem) - 1;
  }

  void check_pos(std::size_t pos) const {
    if (pos >= width_) throw std::out_of_range("bit position out of range");
  }

  void check_width(const FixedBitset& o) const {
    if (o.width_ != width_) throw std::invalid_argument("bitset width mismatch");
  }
};

struct ObjectTag {};
struct AttributeTag {};

using ObjSet = FixedBitset<ObjectTag>;
using AttrSet = FixedBitset<AttributeTag>;

}  // namespace fcar
