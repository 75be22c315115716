#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stonework {

/// Fixed-length bit vector with word-parallel Boolean operations.
///
/// Elements of a finite Boolean algebra are stored as one of these, indexed
/// by the points of the spectrum. Bits past `size()` are kept at zero so that
/// equality and popcount are plain word comparisons.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size, bool value = false)
      : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  static BitVec from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] == '1');
    return v;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool all() const { return count() == size_; }

  /// True when every set bit of *this is also set in `other`.
  bool is_subset_of(const BitVec& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  BitVec& operator&=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  BitVec operator~() const {
    BitVec r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  /// Indices of the set bits, ascending.
  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  void trim() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace stonework
