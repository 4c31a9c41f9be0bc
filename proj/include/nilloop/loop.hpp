#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilloop/elemset.hpp"
#include "nilloop/errors.hpp"
#include "nilloop/kernels.hpp"

namespace nilloop {

// A finite loop given by its Cayley table. Index 0 is always the two-sided
// identity and the table is a Latin square; both are enforced at
// construction, and the two division tables are precomputed. Instances are
// immutable afterwards, so they can be shared freely across threads.
class FiniteLoop {
public:
  static FiniteLoop validate(const std::vector<int32_t>& table, int order,
                             std::vector<std::string> names = {});

  int order() const { return n_; }
  int mul(int x, int y) const { return mul_[x * n_ + y]; }
  // y with x*y == z
  int ldiv(int x, int z) const { return ldiv_[x * n_ + z]; }
  // x with x*y == z
  int rdiv(int z, int y) const { return rdiv_[z * n_ + y]; }
  // right inverse x\1; coincides with the left inverse 1/x in groups and
  // Moufang loops (not assumed in general)
  int inverse(int x) const { return ldiv_[x * n_ + 0]; }

  kern::Tables tables() const { return {mul_.data(), ldiv_.data(), rdiv_.data(), n_}; }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(int i) const {
    return names_.empty() ? std::to_string(i) : names_[i];
  }

  uint64_t fingerprint() const;

  bool same_table(const FiniteLoop& o) const {
    return n_ == o.n_ && mul_ == o.mul_;
  }

private:
  FiniteLoop() = default;
  int n_ = 0;
  std::vector<int32_t> mul_, ldiv_, rdiv_;
  std::vector<std::string> names_;
};

struct TripleWitness {
  int x, y, z;
  int law; // 0: associativity, 1/2: first/second Moufang identity
};

// Exhaustive triple scans; guarded so they fail loudly instead of running
// unbounded on large inputs.
std::optional<TripleWitness> associativity_defect(const FiniteLoop& L,
                                                  int order_guard = 64);
std::optional<TripleWitness> moufang_defect(const FiniteLoop& L,
                                            int order_guard = 64);
bool is_associative(const FiniteLoop& L, int order_guard = 64);
bool is_moufang(const FiniteLoop& L, int order_guard = 64);

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull);
std::string hex64(uint64_t v);

} // namespace nilloop
