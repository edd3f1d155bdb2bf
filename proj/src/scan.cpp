// Kernel dispatch and state-index helpers.

#include <cstdlib>
#include <string>

#include "nilorbit/errors.hpp"
#include "nilorbit/scan.hpp"

namespace nilorbit {

#ifndef NILORBIT_HAVE_AVX2
const NilpotentScanKernel* avx2_scan_kernel() { return nullptr; }
#endif

std::vector<const NilpotentScanKernel*> available_scan_kernels(
    const FqField& field, int n) {
  std::vector<const NilpotentScanKernel*> out;
  if (scalar_scan_kernel().supports(field, n)) out.push_back(&scalar_scan_kernel());
  if (const auto* avx2 = avx2_scan_kernel(); avx2 && avx2->supports(field, n))
    out.push_back(avx2);
  return out;
}

const NilpotentScanKernel& select_scan_kernel(const FqField& field, int n) {
  std::string mode = "auto";
  if (const char* env = std::getenv("NILORBIT_KERNEL")) mode = env;
  if (mode == "scalar") {
    if (!scalar_scan_kernel().supports(field, n))
      throw HypothesisError("scalar kernel does not support this field size");
    return scalar_scan_kernel();
  }
  if (mode == "avx2") {
    const auto* avx2 = avx2_scan_kernel();
    if (!avx2) throw HypothesisError("avx2 kernel is unavailable on this machine");
    if (!avx2->supports(field, n))
      throw HypothesisError("avx2 kernel does not support F_" +
                            std::to_string(field.q()) + " with n = " +
                            std::to_string(n));
    return *avx2;
  }
  if (mode != "auto")
    throw HypothesisError("NILORBIT_KERNEL must be auto, scalar or avx2");
  if (const auto* avx2 = avx2_scan_kernel(); avx2 && avx2->supports(field, n))
    return *avx2;
  if (!scalar_scan_kernel().supports(field, n))
    throw HypothesisError("no scan kernel supports this field size");
  return scalar_scan_kernel();
}

std::uint64_t matrix_state_count(const FqField& field, int n) {
  std::uint64_t count = 1;
  for (int e = 0; e < n * n; ++e) {
    if (count > UINT64_MAX / static_cast<std::uint64_t>(field.q()))
      throw HypothesisError("state count overflows 64 bits");
    count *= static_cast<std::uint64_t>(field.q());
  }
  return count;
}

FqMatrix matrix_from_index(const FqField& field, int n, std::uint64_t index) {
  FqMatrix m(field, n);
  for (int e = 0; e < n * n; ++e) {
    m.data()[e] = static_cast<Fq>(index % field.q());
    index /= field.q();
  }
  return m;
}

std::uint64_t matrix_to_index(const FqMatrix& m) {
  std::uint64_t index = 0;
  const int cells = m.n() * m.n();
  for (int e = cells - 1; e >= 0; --e)
    index = index * m.field().q() + m.data()[e];
  return index;
}

}  // namespace nilorbit
