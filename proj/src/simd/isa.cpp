#include <atomic>
#include <string>

#include "kakeyalab/error.hpp"
#include "kakeyalab/simd/kernels.hpp"

namespace kl::simd {

namespace {

Isa probe() {
#if defined(__x86_64__) || defined(__i386__)
  if (detail::avx2_compiled() && __builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{probe()};
  return isa;
}

}  // namespace

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "?";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  if (name == "auto") return detected_isa();
  return std::nullopt;
}

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

bool is_supported(Isa isa) {
  return isa == Isa::Scalar || detected_isa() == Isa::Avx2;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!is_supported(isa))
    throw DomainError(std::string("instruction set '") + to_string(isa) + "' is not available on this CPU");
  active().store(isa, std::memory_order_relaxed);
}

const Kernels& kernels_for(Isa isa) {
  if (isa == Isa::Avx2 && is_supported(Isa::Avx2)) return detail::kAvx2Kernels;
  return detail::kScalarKernels;
}

const Kernels& kernels() { return kernels_for(active_isa()); }

}  // namespace kl::simd
