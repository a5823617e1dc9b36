#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace geocover {

/// Fixed-universe bit set over point indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet from_indices(std::size_t universe, const std::vector<std::size_t>& indices) {
    IndexSet s(universe);
    for (auto i : indices) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return size_; }

  void insert(std::size_t i) {
    assert(i < size_);
    words_[i / 64] |= (std::uint64_t{1} << (i % 64));
  }
  void erase(std::size_t i) {
    assert(i < size_);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  bool contains(std::size_t i) const {
    return i < size_ && (words_[i / 64] >> (i % 64)) & 1U;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const IndexSet& other) const {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool is_proper_subset_of(const IndexSet& other) const {
    return is_subset_of(other) && *this != other;
  }

  IndexSet& operator|=(const IndexSet& other) {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  /// Removes every element of `other`.
  IndexSet& subtract(const IndexSet& other) {
    assert(size_ == other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }
  /// |this \ other|
  std::size_t count_without(const IndexSet& other) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & ~other.words_[k]));
    return c;
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  /// Orders by the ascending element list, so sorted families print naturally.
  friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.to_vector() < b.to_vector(); }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

/// Keeps the members of `family` that are not proper subsets of another
/// member, with duplicates collapsed. Output is sorted.
inline std::vector<IndexSet> maximal_sets(std::vector<IndexSet> family) {
  std::sort(family.begin(), family.end(), [](const IndexSet& a, const IndexSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    return a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<IndexSet> kept;
  for (auto& s : family) {
    if (s.empty()) continue;
    bool dominated = false;
    for (const auto& k : kept) {
      if (s.is_subset_of(k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace geocover
