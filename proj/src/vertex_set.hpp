#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace stc {

// Fixed-universe bitset over vertex ids. Ordering is lexicographic on the
// sorted member list, so sets sort the way their vertex lists would.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet of(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return n_; }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  VertexSet complement() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v)
      if (!contains(v)) s.insert(v);
    return s;
  }

  bool subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.members() < b.members();
  }

  size_t hash() const {
    size_t h = static_cast<size_t>(n_);
    for (uint64_t w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<uint64_t>{}(w);
    return h;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace stc
