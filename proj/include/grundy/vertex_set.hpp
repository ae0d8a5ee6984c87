#pragma once

// Bitmask over vertex indices of a fixed universe. This is the public
// currency for neighborhoods, covered sets, footprints and hyperedges.
// The exact-search engines use fixed-width word arrays internally and
// convert at the boundary.

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace grundy {

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> bits) {
    VertexSet s(universe);
    for (int b : bits) s.set(b);
    return s;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto word : w_) c += __builtin_popcountll(word);
    return c;
  }

  bool empty() const {
    for (auto word : w_)
      if (word) return false;
    return true;
  }

  bool subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  // set difference
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }

  std::vector<int> bits() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t word = w_[i];
      while (word) {
        out.push_back(static_cast<int>(i * 64 + __builtin_ctzll(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_bit = true;
    for (int b : bits()) {
      if (!first_bit) s += ',';
      s += std::to_string(b);
      first_bit = false;
    }
    s += '}';
    return s;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace grundy
