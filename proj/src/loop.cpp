#include "nilloop/loop.hpp"

#include <numeric>

#include "nilloop/scan.hpp"

namespace nilloop {

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* d = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = d[v & 0xf];
  return s;
}

FiniteLoop FiniteLoop::validate(const std::vector<int32_t>& table, int order,
                                std::vector<std::string> names) {
  if (order <= 0)
    throw validation_error("BadParameter", "order must be positive");
  if (table.size() != static_cast<size_t>(order) * order)
    throw validation_error("BadParameter", "table size does not match order");
  for (int32_t v : table)
    if (v < 0 || v >= order)
      throw validation_error("BadParameter",
                             "table entry " + std::to_string(v) + " out of range");
  if (!names.empty() && names.size() != static_cast<size_t>(order))
    throw validation_error("BadParameter", "name list length does not match order");

  std::vector<uint8_t> seen(order);
  for (int r = 0; r < order; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < order; ++c) {
      int32_t v = table[r * order + c];
      if (seen[v]++)
        throw validation_error("NotLatinSquare",
                               "row " + std::to_string(r) + " repeats entry " +
                                   std::to_string(v));
    }
  }
  for (int c = 0; c < order; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < order; ++r) {
      int32_t v = table[r * order + c];
      if (seen[v]++)
        throw validation_error("NotLatinSquare",
                               "column " + std::to_string(c) + " repeats entry " +
                                   std::to_string(v));
    }
  }
  for (int x = 0; x < order; ++x) {
    if (table[0 * order + x] != x || table[x * order + 0] != x)
      throw validation_error("NoIdentity",
                             "index 0 is not a two-sided identity at " +
                                 std::to_string(x));
  }

  FiniteLoop L;
  L.n_ = order;
  L.mul_ = table;
  L.ldiv_.assign(table.size(), 0);
  L.rdiv_.assign(table.size(), 0);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int z = table[x * order + y];
      L.ldiv_[x * order + z] = y;
      L.rdiv_[z * order + y] = x;
    }
  L.names_ = std::move(names);
  return L;
}

uint64_t FiniteLoop::fingerprint() const {
  uint64_t h = fnv1a64(&n_, sizeof n_);
  return fnv1a64(mul_.data(), mul_.size() * sizeof(int32_t), h);
}

namespace {

std::vector<int32_t> iota_domain(int n) {
  std::vector<int32_t> d(n);
  std::iota(d.begin(), d.end(), 0);
  return d;
}

// residue (x*y)*z / (x*(y*z)); zero everywhere iff associative
kern::Program assoc_residue() {
  ProgramBuilder b(2);
  int16_t x = b.slot_reg(0), y = b.slot_reg(1), z = b.lane();
  int16_t lhs = b.op(kern::OP_MUL, b.op(kern::OP_MUL, x, y), z);
  int16_t rhs = b.op(kern::OP_MUL, x, b.op(kern::OP_MUL, y, z));
  return b.finish(b.op(kern::OP_RDIV, lhs, rhs));
}

// residues of (z(xy))z = (zx)(yz) and (zx)(yz) = z((xy)z)
kern::Program moufang_residue(int law) {
  ProgramBuilder b(2);
  int16_t x = b.slot_reg(0), y = b.slot_reg(1), z = b.lane();
  int16_t xy = b.op(kern::OP_MUL, x, y);
  int16_t mid = b.op(kern::OP_MUL, b.op(kern::OP_MUL, z, x),
                     b.op(kern::OP_MUL, y, z));
  int16_t other = law == 1 ? b.op(kern::OP_MUL, b.op(kern::OP_MUL, z, xy), z)
                           : b.op(kern::OP_MUL, z, b.op(kern::OP_MUL, xy, z));
  return b.finish(b.op(kern::OP_RDIV, other, mid));
}

void check_guard(const FiniteLoop& L, int guard, const char* op) {
  if (L.order() > guard)
    throw guard_error("TooLarge", std::string(op) + " guarded at order " +
                                      std::to_string(guard) + ", got " +
                                      std::to_string(L.order()));
}

} // namespace

std::optional<TripleWitness> associativity_defect(const FiniteLoop& L, int guard) {
  check_guard(L, guard, "associativity scan");
  auto dom = iota_domain(L.order());
  auto hit = scan_first_nonzero(L.tables(), assoc_residue(), {&dom, &dom}, dom);
  if (!hit) return std::nullopt;
  return TripleWitness{hit->outer[0], hit->outer[1], hit->lane, 0};
}

std::optional<TripleWitness> moufang_defect(const FiniteLoop& L, int guard) {
  check_guard(L, guard, "Moufang scan");
  auto dom = iota_domain(L.order());
  std::optional<TripleWitness> best;
  for (int law = 1; law <= 2; ++law) {
    auto hit =
        scan_first_nonzero(L.tables(), moufang_residue(law), {&dom, &dom}, dom);
    if (!hit) continue;
    TripleWitness w{hit->outer[0], hit->outer[1], hit->lane, law};
    if (!best || std::tie(w.x, w.y, w.z) < std::tie(best->x, best->y, best->z))
      best = w;
  }
  return best;
}

bool is_associative(const FiniteLoop& L, int guard) {
  return !associativity_defect(L, guard).has_value();
}

bool is_moufang(const FiniteLoop& L, int guard) {
  return !moufang_defect(L, guard).has_value();
}

} // namespace nilloop
