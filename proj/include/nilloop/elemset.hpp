#pragma once

#include <cstdint>
#include <vector>

namespace nilloop {

// Fixed-universe bitset over element indices 0..size-1. Comparison is
// lexicographic on the packed words, which gives every family of subsets a
// canonical order independent of how it was produced.
class ElemSet {
public:
  ElemSet() : n_(0) {}
  explicit ElemSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static ElemSet single(int universe, int i) {
    ElemSet s(universe);
    s.set(i);
    return s;
  }
  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  ElemSet& operator|=(const ElemSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  bool subset_of(const ElemSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const ElemSet& o) const { return !(*this == o); }
  bool operator<(const ElemSet& o) const { return w_ < o.w_; }

  std::vector<int> members() const {
    std::vector<int> m;
    m.reserve(count());
    for (int i = 0; i < n_; ++i)
      if (test(i)) m.push_back(i);
    return m;
  }

private:
  int n_;
  std::vector<uint64_t> w_;
};

} // namespace nilloop
