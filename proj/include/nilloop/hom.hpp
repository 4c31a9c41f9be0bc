#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nilloop/elemset.hpp"
#include "nilloop/loop.hpp"

namespace nilloop {

// A verified homomorphism between finite loops. Holds shared copies of both
// loops so it stays valid independently of the caller's objects.
class Homomorphism {
public:
  static Homomorphism checked(const FiniteLoop& src, const FiniteLoop& dst,
                              std::vector<int32_t> map);
  static Homomorphism identity(const FiniteLoop& L);

  const FiniteLoop& source() const { return *src_; }
  const FiniteLoop& target() const { return *dst_; }
  int operator()(int x) const { return map_[x]; }
  const std::vector<int32_t>& map() const { return map_; }
  bool surjective() const { return surjective_; }

  ElemSet kernel() const; // preimage of 0
  ElemSet image() const;

  friend Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

private:
  Homomorphism() = default;
  std::shared_ptr<const FiniteLoop> src_, dst_;
  std::vector<int32_t> map_;
  bool surjective_ = false;
};

Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

// A small generating sequence found greedily (multiplicative closure is
// enough: finite multiplication-closed subsets are subloops).
std::vector<int> generating_sequence(const FiniteLoop& L);

// All homomorphisms X -> Y by backtracking over a generating sequence of X.
std::vector<Homomorphism> enumerate_homs(const FiniteLoop& X, const FiniteLoop& Y,
                                         int order_guard = 32);

std::optional<std::vector<int32_t>> find_isomorphism(const FiniteLoop& A,
                                                     const FiniteLoop& B);

} // namespace nilloop
