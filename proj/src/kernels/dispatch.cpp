#include <algorithm>
#include <cstdlib>
#include <string_view>

#include "arcorpus/kernels/edit_distance.hpp"
#include "cpu_features.hpp"

namespace arcorpus::kernels {

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> isas{Isa::Scalar};
#if defined(ARCORPUS_HAVE_AVX2)
  if (cpu_has_avx2()) isas.push_back(Isa::Avx2);
#endif
#if defined(ARCORPUS_HAVE_NEON)
  if (cpu_has_neon()) isas.push_back(Isa::Neon);
#endif
  return isas;
}

namespace {

Isa select_isa() {
  const auto isas = available_isas();
  if (const char* env = std::getenv("ARCORPUS_KERNEL")) {
    const std::string_view wanted(env);
    for (Isa isa : isas) {
      if (wanted == to_string(isa)) return isa;
    }
  }
  return isas.back();
}

}  // namespace

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

AlignmentCost align(std::span<const Symbol> ref, std::span<const Symbol> hyp, Isa isa) {
  switch (isa) {
#if defined(ARCORPUS_HAVE_AVX2)
    case Isa::Avx2:
      if (cpu_has_avx2()) return align_avx2(ref, hyp);
      break;
#endif
#if defined(ARCORPUS_HAVE_NEON)
    case Isa::Neon:
      return align_neon(ref, hyp);
#endif
    default:
      break;
  }
  return align_scalar(ref, hyp);
}

AlignmentCost align(std::span<const Symbol> ref, std::span<const Symbol> hyp) {
  // The wavefront only pays off once a diagonal fills a few vectors.
  if (ref.size() < 16 || hyp.size() < 16) return align_scalar(ref, hyp);
  return align(ref, hyp, active_isa());
}

}  // namespace arcorpus::kernels
