#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace menger {

/// Growable bitset over dense nonnegative ids. Used for edge sets and vertex
/// sets alike. Trailing zero words are always trimmed, so two sets with the
/// same members compare equal regardless of how they were built.
class IdSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    const_iterator() = default;
    const_iterator(const std::vector<Word>* words, std::size_t word_index)
        : words_(words), word_index_(word_index) {
      if (words_ != nullptr && word_index_ < words_->size()) {
        current_ = (*words_)[word_index_];
        settle();
      }
    }

    std::size_t operator*() const {
      return word_index_ * kWordBits +
             static_cast<std::size_t>(std::countr_zero(current_));
    }
    const_iterator& operator++() {
      current_ &= current_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return word_index_ == other.word_index_ && current_ == other.current_;
    }

   private:
    void settle() {
      while (current_ == 0) {
        ++word_index_;
        if (word_index_ >= words_->size()) {
          word_index_ = words_->size();
          return;
        }
        current_ = (*words_)[word_index_];
      }
    }

    const std::vector<Word>* words_ = nullptr;
    std::size_t word_index_ = 0;
    Word current_ = 0;
  };

  IdSet() = default;
  IdSet(std::initializer_list<std::size_t> ids) {
    for (std::size_t id : ids) insert(id);
  }
  template <typename It>
  IdSet(It first, It last) {
    for (; first != last; ++first) insert(static_cast<std::size_t>(*first));
  }

  /// The set {0, 1, ..., n-1}.
  static IdSet range(std::size_t n) {
    IdSet out;
    out.words_.assign((n + kWordBits - 1) / kWordBits, ~Word{0});
    if (n % kWordBits != 0 && !out.words_.empty()) {
      out.words_.back() = (Word{1} << (n % kWordBits)) - 1;
    }
    out.trim();
    return out;
  }

  void insert(std::size_t id) {
    const std::size_t w = id / kWordBits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= Word{1} << (id % kWordBits);
  }
  void erase(std::size_t id) {
    const std::size_t w = id / kWordBits;
    if (w >= words_.size()) return;
    words_[w] &= ~(Word{1} << (id % kWordBits));
    trim();
  }
  void toggle(std::size_t id) {
    if (contains(id)) {
      erase(id);
    } else {
      insert(id);
    }
  }
  bool contains(std::size_t id) const {
    const std::size_t w = id / kWordBits;
    return w < words_.size() && ((words_[w] >> (id % kWordBits)) & 1U) != 0;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const { return words_.empty(); }

  IdSet with(std::size_t id) const {
    IdSet out = *this;
    out.insert(id);
    return out;
  }
  IdSet without(std::size_t id) const {
    IdSet out = *this;
    out.erase(id);
    return out;
  }

  IdSet& operator|=(const IdSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  IdSet& operator&=(const IdSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    trim();
    return *this;
  }
  IdSet& operator-=(const IdSet& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    trim();
    return *this;
  }
  IdSet& operator^=(const IdSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
  }

  friend IdSet operator|(IdSet a, const IdSet& b) { return a |= b; }
  friend IdSet operator&(IdSet a, const IdSet& b) { return a &= b; }
  friend IdSet operator-(IdSet a, const IdSet& b) { return a -= b; }
  friend IdSet operator^(IdSet a, const IdSet& b) { return a ^= b; }
  friend bool operator==(const IdSet&, const IdSet&) = default;

  bool is_subset_of(const IdSet& other) const {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }
  bool intersects(const IdSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  const_iterator begin() const { return {&words_, 0}; }
  const_iterator end() const { return {&words_, words_.size()}; }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

  /// Smallest member; the set must be nonempty.
  std::size_t front() const { return *begin(); }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Word w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  /// Strict weak order: by numeric value of the bit encoding.
  friend bool encoding_less(const IdSet& a, const IdSet& b) {
    if (a.words_.size() != b.words_.size()) return a.words_.size() < b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t id : *this) {
      if (!first) out += ",";
      out += std::to_string(id);
      first = false;
    }
    return out + "}";
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<Word> words_;
};

struct IdSetHash {
  std::size_t operator()(const IdSet& s) const { return s.hash(); }
};

using EdgeSet = IdSet;
using VertexSet = IdSet;

}  // namespace menger
