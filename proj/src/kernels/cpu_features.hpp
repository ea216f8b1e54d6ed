#pragma once

namespace arcorpus::kernels {

bool cpu_has_avx2() noexcept;
bool cpu_has_neon() noexcept;

}  // namespace arcorpus::kernels
