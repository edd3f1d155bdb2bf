// AVX2 scan kernels. 32 consecutive states are processed as byte planes
// (one 32-byte vector per matrix entry). Two field classes are covered:
//
//  * q <= 4 (F2, F3, F4): elements stay packed in one byte; add/mul are
//    16-entry pshufb lookups indexed by (a << 2) | b.
//  * F9 = F3[x]/(x^2+1): elements split into two base-3 coordinate planes;
//    base-3 digit products (<= 4) and the x^2 = -1 reduction go through
//    16-entry pshufb lookups as well.
//
// Anything else falls back to the scalar kernel via the dispatcher.

#include "nilorbit/errors.hpp"
#include "nilorbit/scan.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <array>
#include <cstring>

namespace nilorbit {

namespace {

constexpr int kBatch = 32;
constexpr int kMaxCells = 16;  // n <= 4 on the vector path

struct PlaneBuffer {
  alignas(32) std::uint8_t bytes[kMaxCells][kBatch];
};

// Fills one plane buffer (or a coordinate pair) for states
// [base, base + kBatch) and leaves the odometer advanced past the batch.
template <typename WriteLane>
void fill_batch(std::array<std::uint8_t, kMaxCells>& digits, int cells, int q,
                WriteLane&& write_lane) {
  for (int lane = 0; lane < kBatch; ++lane) {
    write_lane(lane, digits);
    for (int e = 0; e < cells; ++e) {
      if (++digits[e] < q) break;
      digits[e] = 0;
    }
  }
}

__m256i broadcast_lut(const std::uint8_t lut[16]) {
  __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(lut));
  return _mm256_broadcastsi128_si256(lo);
}

__m256i lut_pair(__m256i lut, __m256i a, __m256i b) {
  const __m256i idx = _mm256_or_si256(_mm256_slli_epi16(a, 2), b);
  return _mm256_shuffle_epi8(lut, idx);
}

// ---------------------------------------------------------------- q <= 4 --

class PackedLutKernel final : public NilpotentScanKernel {
 public:
  std::string_view name() const override { return "avx2"; }

  bool supports(const FqField& field, int n) const override {
    return field.q() <= 4 && n >= 1 && n * n <= kMaxCells;
  }

  void scan(const FqField& field, int n, std::uint64_t lo, std::uint64_t hi,
            std::vector<std::uint64_t>& out) const override {
    const int cells = n * n;
    const int q = field.q();

    std::uint8_t mul8[16] = {0};
    std::uint8_t add8[16] = {0};
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        mul8[(a << 2) | b] = field.mul_table()[a * q + b];
        add8[(a << 2) | b] = field.add_table()[a * q + b];
      }
    const __m256i mul_lut = broadcast_lut(mul8);
    const __m256i add_lut = broadcast_lut(add8);

    std::array<std::uint8_t, kMaxCells> digits{};
    {
      std::uint64_t rest = lo;
      for (int e = 0; e < cells; ++e) {
        digits[e] = static_cast<std::uint8_t>(rest % q);
        rest /= q;
      }
    }

    PlaneBuffer buf;
    __m256i m[kMaxCells], p[kMaxCells], t[kMaxCells];
    std::uint64_t base = lo;
    for (; base + kBatch <= hi; base += kBatch) {
      fill_batch(digits, cells, q,
                 [&](int lane, const std::array<std::uint8_t, kMaxCells>& d) {
                   for (int e = 0; e < cells; ++e) buf.bytes[e][lane] = d[e];
                 });
      for (int e = 0; e < cells; ++e)
        m[e] = _mm256_load_si256(reinterpret_cast<const __m256i*>(buf.bytes[e]));

      for (int e = 0; e < cells; ++e) p[e] = m[e];
      for (int step = 1; step < n; ++step) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            __m256i acc = lut_pair(mul_lut, p[i * n], m[j]);
            for (int k = 1; k < n; ++k)
              acc = lut_pair(add_lut, acc,
                             lut_pair(mul_lut, p[i * n + k], m[k * n + j]));
            t[i * n + j] = acc;
          }
        for (int e = 0; e < cells; ++e) p[e] = t[e];
      }

      __m256i any = p[0];
      for (int e = 1; e < cells; ++e) any = _mm256_or_si256(any, p[e]);
      const __m256i eq0 = _mm256_cmpeq_epi8(any, _mm256_setzero_si256());
      std::uint32_t mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(eq0));
      while (mask) {
        const int lane = __builtin_ctz(mask);
        out.push_back(base + static_cast<std::uint64_t>(lane));
        mask &= mask - 1;
      }
    }
    if (base < hi) scalar_scan_kernel().scan(field, n, base, hi, out);
  }
};

// ------------------------------------------------------------------- F9 ---

class F9PlaneKernel final : public NilpotentScanKernel {
 public:
  std::string_view name() const override { return "avx2"; }

  bool supports(const FqField& field, int n) const override {
    return field.p() == 3 && field.k() == 2 &&
           field.modulus() == std::pair<int, int>(0, 1) && n >= 1 &&
           n * n <= kMaxCells;
  }

  void scan(const FqField& field, int n, std::uint64_t lo, std::uint64_t hi,
            std::vector<std::uint64_t>& out) const override {
    const int cells = n * n;
    const int q = field.q();

    std::uint8_t prod8[16];
    std::uint8_t mod38[16];
    for (int i = 0; i < 16; ++i) {
      prod8[i] = static_cast<std::uint8_t>((i >> 2) * (i & 3));
      mod38[i] = static_cast<std::uint8_t>(i % 3);
    }
    const __m256i prod_lut = broadcast_lut(prod8);
    const __m256i mod3_lut = broadcast_lut(mod38);

    auto digit_prod = [&](__m256i a, __m256i b) {
      return lut_pair(prod_lut, a, b);
    };
    auto mod3 = [&](__m256i v) { return _mm256_shuffle_epi8(mod3_lut, v); };
    // (a0 + a1 x)(b0 + b1 x) with x^2 = -1 = 2 over F3.
    auto f9_mul = [&](__m256i a0, __m256i a1, __m256i b0, __m256i b1,
                      __m256i& c0, __m256i& c1) {
      const __m256i t00 = digit_prod(a0, b0);
      const __m256i t11 = digit_prod(a1, b1);
      const __m256i t01 = digit_prod(a0, b1);
      const __m256i t10 = digit_prod(a1, b0);
      c0 = mod3(_mm256_add_epi8(t00, _mm256_add_epi8(t11, t11)));
      c1 = mod3(_mm256_add_epi8(t01, t10));
    };
    auto f9_add = [&](__m256i a, __m256i b) {
      return mod3(_mm256_add_epi8(a, b));
    };

    std::array<std::uint8_t, kMaxCells> digits{};
    {
      std::uint64_t rest = lo;
      for (int e = 0; e < cells; ++e) {
        digits[e] = static_cast<std::uint8_t>(rest % q);
        rest /= q;
      }
    }

    PlaneBuffer b0, b1;
    __m256i m0[kMaxCells], m1[kMaxCells];
    __m256i p0[kMaxCells], p1[kMaxCells];
    __m256i t0[kMaxCells], t1[kMaxCells];
    std::uint64_t base = lo;
    for (; base + kBatch <= hi; base += kBatch) {
      fill_batch(digits, cells, q,
                 [&](int lane, const std::array<std::uint8_t, kMaxCells>& d) {
                   for (int e = 0; e < cells; ++e) {
                     b0.bytes[e][lane] = static_cast<std::uint8_t>(d[e] % 3);
                     b1.bytes[e][lane] = static_cast<std::uint8_t>(d[e] / 3);
                   }
                 });
      for (int e = 0; e < cells; ++e) {
        m0[e] = _mm256_load_si256(reinterpret_cast<const __m256i*>(b0.bytes[e]));
        m1[e] = _mm256_load_si256(reinterpret_cast<const __m256i*>(b1.bytes[e]));
      }

      for (int e = 0; e < cells; ++e) {
        p0[e] = m0[e];
        p1[e] = m1[e];
      }
      for (int step = 1; step < n; ++step) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            __m256i acc0, acc1;
            f9_mul(p0[i * n], p1[i * n], m0[j], m1[j], acc0, acc1);
            for (int k = 1; k < n; ++k) {
              __m256i c0, c1;
              f9_mul(p0[i * n + k], p1[i * n + k], m0[k * n + j], m1[k * n + j],
                     c0, c1);
              acc0 = f9_add(acc0, c0);
              acc1 = f9_add(acc1, c1);
            }
            t0[i * n + j] = acc0;
            t1[i * n + j] = acc1;
          }
        for (int e = 0; e < cells; ++e) {
          p0[e] = t0[e];
          p1[e] = t1[e];
        }
      }

      __m256i any = _mm256_or_si256(p0[0], p1[0]);
      for (int e = 1; e < cells; ++e)
        any = _mm256_or_si256(any, _mm256_or_si256(p0[e], p1[e]));
      const __m256i eq0 = _mm256_cmpeq_epi8(any, _mm256_setzero_si256());
      std::uint32_t mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(eq0));
      while (mask) {
        const int lane = __builtin_ctz(mask);
        out.push_back(base + static_cast<std::uint64_t>(lane));
        mask &= mask - 1;
      }
    }
    if (base < hi) scalar_scan_kernel().scan(field, n, base, hi, out);
  }
};

// Facade choosing between the two vector paths.
class Avx2Kernel final : public NilpotentScanKernel {
 public:
  std::string_view name() const override { return "avx2"; }

  bool supports(const FqField& field, int n) const override {
    return packed_.supports(field, n) || f9_.supports(field, n);
  }

  void scan(const FqField& field, int n, std::uint64_t lo, std::uint64_t hi,
            std::vector<std::uint64_t>& out) const override {
    if (packed_.supports(field, n)) return packed_.scan(field, n, lo, hi, out);
    if (f9_.supports(field, n)) return f9_.scan(field, n, lo, hi, out);
    throw HypothesisError("avx2 kernel does not support this field");
  }

 private:
  PackedLutKernel packed_;
  F9PlaneKernel f9_;
};

}  // namespace

const NilpotentScanKernel* avx2_scan_kernel() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Avx2Kernel kernel;
  return &kernel;
}

}  // namespace nilorbit

#else  // !__AVX2__

namespace nilorbit {
const NilpotentScanKernel* avx2_scan_kernel() { return nullptr; }
}  // namespace nilorbit

#endif
