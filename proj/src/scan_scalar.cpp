// Reference kernel: odometer over the entry digits, literal M^n == 0 check.

#include <array>

#include "nilorbit/errors.hpp"
#include "nilorbit/scan.hpp"

namespace nilorbit {

namespace {

constexpr int kMaxCells = 36;  // n <= 6

class ScalarKernel final : public NilpotentScanKernel {
 public:
  std::string_view name() const override { return "scalar"; }

  bool supports(const FqField&, int n) const override {
    return n >= 1 && n * n <= kMaxCells;
  }

  void scan(const FqField& field, int n, std::uint64_t lo, std::uint64_t hi,
            std::vector<std::uint64_t>& out) const override {
    if (!supports(field, n)) throw HypothesisError("scalar kernel: n too large");
    const int cells = n * n;
    const int q = field.q();
    const Fq* mul = field.mul_table();
    const Fq* add = field.add_table();

    std::array<Fq, kMaxCells> m{};  // current state digits = matrix entries
    {
      std::uint64_t rest = lo;
      for (int e = 0; e < cells; ++e) {
        m[e] = static_cast<Fq>(rest % q);
        rest /= q;
      }
    }

    std::array<Fq, kMaxCells> p{}, t{};
    for (std::uint64_t index = lo; index < hi; ++index) {
      // p = M^n by repeated multiplication.
      for (int e = 0; e < cells; ++e) p[e] = m[e];
      for (int step = 1; step < n; ++step) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            Fq acc = 0;
            for (int k = 0; k < n; ++k)
              acc = add[static_cast<size_t>(acc) * q +
                        mul[static_cast<size_t>(p[i * n + k]) * q + m[k * n + j]]];
            t[i * n + j] = acc;
          }
        p = t;
      }
      bool zero = true;
      for (int e = 0; e < cells && zero; ++e) zero = p[e] == 0;
      if (zero) out.push_back(index);

      // Advance the odometer.
      for (int e = 0; e < cells; ++e) {
        if (++m[e] < q) break;
        m[e] = 0;
      }
    }
  }
};

}  // namespace

const NilpotentScanKernel& scalar_scan_kernel() {
  static const ScalarKernel kernel;
  return kernel;
}

}  // namespace nilorbit
