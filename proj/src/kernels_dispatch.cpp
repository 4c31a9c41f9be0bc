#include "nilloop/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace nilloop::kern {

const Backend& scalar_backend() {
  static const Backend b{&detail::eval_batch_scalar, "scalar"};
  return b;
}

const Backend* avx2_backend() {
#if NILLOOP_HAVE_AVX2
  static const Backend b{&detail::eval_batch_avx2, "avx2"};
  static const bool ok = detail::cpu_has_avx2();
  return ok ? &b : nullptr;
#else
  return nullptr;
#endif
}

const Backend& active_backend() {
  static const Backend* chosen = [] {
    const char* env = std::getenv("NILLOOP_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_backend();
    if (const Backend* v = avx2_backend()) return v;
    return &scalar_backend();
  }();
  return *chosen;
}

} // namespace nilloop::kern
