#pragma once
// Nilpotent-scan kernels: walk a dense range of matrix states over F_q and
// report which are nilpotent. A state index is the base-q odometer over the
// row-major entries, digit 0 (fastest) = entry (0,0).
//
// The scalar kernel is the definitional reference (M^n == 0 by repeated
// multiplication). The AVX2 kernels batch 32 states through byte-plane
// arithmetic and are selected at runtime when the CPU and field allow;
// NILORBIT_KERNEL=scalar|avx2|auto overrides the choice. Every kernel must
// produce the identical index list, which the equivalence tests enforce.

#include <cstdint>
#include <string_view>
#include <vector>

#include "nilorbit/fq.hpp"
#include "nilorbit/fq_matrix.hpp"

namespace nilorbit {

class NilpotentScanKernel {
 public:
  virtual ~NilpotentScanKernel() = default;
  virtual std::string_view name() const = 0;
  virtual bool supports(const FqField& field, int n) const = 0;
  // Appends the indices of every state in [lo, hi) whose matrix M has
  // M^n == 0, in increasing order.
  virtual void scan(const FqField& field, int n, std::uint64_t lo,
                    std::uint64_t hi, std::vector<std::uint64_t>& out) const = 0;
};

const NilpotentScanKernel& scalar_scan_kernel();
const NilpotentScanKernel* avx2_scan_kernel();  // nullptr when unavailable

// Kernels that support (field, n) on this machine, scalar first.
std::vector<const NilpotentScanKernel*> available_scan_kernels(
    const FqField& field, int n);

// Fastest supported kernel, honoring the NILORBIT_KERNEL override.
const NilpotentScanKernel& select_scan_kernel(const FqField& field, int n);

std::uint64_t matrix_state_count(const FqField& field, int n);
FqMatrix matrix_from_index(const FqField& field, int n, std::uint64_t index);
std::uint64_t matrix_to_index(const FqMatrix& m);

}  // namespace nilorbit
