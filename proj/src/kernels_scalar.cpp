#include "nilloop/kernels.hpp"

#include <cassert>

namespace nilloop::kern::detail {

void eval_batch_scalar(const Tables& t, const Program& p, const int32_t* lanes,
                       int count, int32_t* out) {
  assert(p.nregs <= Program::kMaxRegs);
  int32_t regs[Program::kMaxRegs];
  const int32_t n = t.n;
  for (int i = 0; i < count; ++i) {
    for (const auto& [reg, val] : p.fixed) regs[reg] = val;
    for (int16_t reg : p.lane_regs) regs[reg] = lanes[i];
    for (const Instr& ins : p.code) {
      const int32_t a = regs[ins.lhs];
      const int32_t b = regs[ins.rhs];
      const int32_t idx = a * n + b;
      switch (ins.op) {
        case OP_MUL: regs[ins.dst] = t.mul[idx]; break;
        case OP_LDIV: regs[ins.dst] = t.ldiv[idx]; break;
        default: regs[ins.dst] = t.rdiv[idx]; break;
      }
    }
    out[i] = regs[p.out];
  }
}

} // namespace nilloop::kern::detail
