#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nilloop::kern {

// Flattened n*n lookup tables for one loop: mul[x*n+y], ldiv[x*n+z] (the y
// with x*y=z) and rdiv[z*n+y] (the x with x*y=z).
struct Tables {
  const int32_t* mul = nullptr;
  const int32_t* ldiv = nullptr;
  const int32_t* rdiv = nullptr;
  int32_t n = 0;
};

// A term compiled to a straight-line register program, evaluated for a batch
// of "lanes" at once. Every lane shares the fixed leaf values and differs in
// the per-lane input value. Table ops are single gathers, so the whole
// program is data-parallel across lanes.
enum : uint8_t { OP_MUL = 0, OP_LDIV = 1, OP_RDIV = 2 };

struct Instr {
  uint8_t op;
  int16_t dst, lhs, rhs;
};

struct Program {
  static constexpr int kMaxRegs = 96;

  std::vector<std::pair<int16_t, int32_t>> fixed; // reg <- constant
  std::vector<int16_t> lane_regs;                 // reg <- lane value
  std::vector<Instr> code;
  int16_t out = -1;
  int nregs = 0;
};

// out[i] = value of `prog.out` when the lane registers hold lanes[i].
using EvalBatchFn = void (*)(const Tables&, const Program&,
                             const int32_t* lanes, int count, int32_t* out);

struct Backend {
  EvalBatchFn eval_batch;
  const char* name;
};

const Backend& scalar_backend();
// Null when the binary was built without AVX2 or the CPU lacks it.
const Backend* avx2_backend();
// Scalar or AVX2, chosen once per process; NILLOOP_SIMD=scalar overrides.
const Backend& active_backend();

namespace detail {
void eval_batch_scalar(const Tables&, const Program&, const int32_t* lanes,
                       int count, int32_t* out);
#if NILLOOP_HAVE_AVX2
void eval_batch_avx2(const Tables&, const Program&, const int32_t* lanes,
                     int count, int32_t* out);
bool cpu_has_avx2();
#endif
} // namespace detail

} // namespace nilloop::kern
