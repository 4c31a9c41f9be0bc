#include "nilloop/kernels.hpp"

#if NILLOOP_HAVE_AVX2

#include <cassert>
#include <immintrin.h>

namespace nilloop::kern::detail {

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

// Eight lanes per step; every table op is one vpgatherdd. The remainder
// lanes go through the scalar reference kernel so both paths stay in sync.
void eval_batch_avx2(const Tables& t, const Program& p, const int32_t* lanes,
                     int count, int32_t* out) {
  assert(p.nregs <= Program::kMaxRegs);
  __m256i regs[Program::kMaxRegs];
  const __m256i vn = _mm256_set1_epi32(t.n);

  int i = 0;
  for (; i + 8 <= count; i += 8) {
    for (const auto& [reg, val] : p.fixed) regs[reg] = _mm256_set1_epi32(val);
    for (int16_t reg : p.lane_regs)
      regs[reg] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lanes + i));
    for (const Instr& ins : p.code) {
      const __m256i idx = _mm256_add_epi32(
          _mm256_mullo_epi32(regs[ins.lhs], vn), regs[ins.rhs]);
      const int32_t* table = ins.op == OP_MUL    ? t.mul
                             : ins.op == OP_LDIV ? t.ldiv
                                                 : t.rdiv;
      regs[ins.dst] = _mm256_i32gather_epi32(table, idx, 4);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), regs[p.out]);
  }
  if (i < count) eval_batch_scalar(t, p, lanes + i, count - i, out + i);
}

} // namespace nilloop::kern::detail

#endif // NILLOOP_HAVE_AVX2
