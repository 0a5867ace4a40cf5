// Copyright 2026 The covercraft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace covercraft {

/// Fixed-size bitset sized at runtime. Element sets, subgroup membership and
/// parity tables are all small (a few thousand bits), so everything is kept
/// in a plain word vector with value semantics.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size, bool fill = false)
      : size_(size), words_((size + 63) / 64, fill ? ~0ULL : 0ULL) {
    trim();
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1ULL;
  }
  void set(std::size_t i, bool value = true) {
    if (value)
      words_[i >> 6] |= 1ULL << (i & 63);
    else
      words_[i >> 6] &= ~(1ULL << (i & 63));
  }
  void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    check_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    check_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    check_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  /// Numeric order with bit i as the 2^i digit. Used wherever a deterministic
  /// "bitset order" is called for.
  friend bool operator<(const Bitset& a, const Bitset& b) {
    std::size_t n = a.words_.size() > b.words_.size() ? a.words_.size() : b.words_.size();
    for (std::size_t i = n; i-- > 0;) {
      std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
      std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
      if (wa != wb) return wa < wb;
    }
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    check_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// True when this and o share no set bit.
  bool disjoint_with(const Bitset& o) const {
    check_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return false;
    return true;
  }

  std::size_t find_first() const { return find_next_from(0); }
  std::size_t find_next(std::size_t prev) const { return find_next_from(prev + 1); }

  /// Smallest set bit of (*this & ~mask), npos if none. The covering searches
  /// use this to locate the minimal uncovered element.
  std::size_t first_not_covered_by(const Bitset& covered) const {
    check_size(covered);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i] & ~covered.words_[i];
      if (w) return (i << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
    }
    return npos;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        std::uint64_t low = w & (~w + 1);
        fn((i << 6) + static_cast<std::size_t>(__builtin_ctzll(low)));
        w ^= low;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (std::uint64_t w : words_) {
      h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Lowercase hex, two digits per byte, byte 0 (bits 0..7) first.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    std::size_t bytes = (size_ + 7) / 8;
    out.reserve(bytes * 2);
    for (std::size_t b = 0; b < bytes; ++b) {
      std::uint8_t byte = static_cast<std::uint8_t>(words_[b >> 3] >> ((b & 7) * 8));
      out.push_back(digits[byte >> 4]);
      out.push_back(digits[byte & 15]);
    }
    return out;
  }

 private:
  void trim() {
    if (size_ & 63) words_.back() &= (1ULL << (size_ & 63)) - 1;
  }
  void check_size(const Bitset& o) const {
    if (size_ != o.size_) throw std::invalid_argument("bitset size mismatch");
  }
  std::size_t find_next_from(std::size_t start) const {
    if (start >= size_) return npos;
    std::size_t wi = start >> 6;
    std::uint64_t w = words_[wi] & (~0ULL << (start & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace covercraft
