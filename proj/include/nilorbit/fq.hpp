#pragma once
// Arithmetic in F_p and F_{p^2}, table-driven. Elements are dense indices
// 0..q-1; for k = 2 the element c0 + c1*x is encoded as c0 + p*c1, where
// x generates F_p[x]/(f) and f is the lexicographically smallest monic
// irreducible quadratic (ordered by the (linear, constant) coefficients).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nilorbit {

using Fq = std::uint8_t;

class FqField {
 public:
  FqField(int p, int k);  // k in {1, 2}; p prime, q = p^k <= 249

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  std::pair<int, int> modulus() const { return {mod_a_, mod_b_}; }  // x^2+ax+b

  Fq element(int c0, int c1 = 0) const;
  std::pair<int, int> coords(Fq e) const { return {e % p_, e / p_}; }

  Fq add(Fq a, Fq b) const { return add_[idx(a, b)]; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const { return mul_[idx(a, b)]; }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq inv(Fq a) const;               // throws on zero
  Fq pow(Fq a, long long e) const;  // e >= 0
  Fq frobenius_p(Fq a) const { return frob_[a]; }  // a^p

  // Raw q*q tables (row-major by first operand) for the scan kernels.
  const Fq* add_table() const { return add_.data(); }
  const Fq* mul_table() const { return mul_.data(); }

  std::string element_str(Fq e) const;  // "0", "2", "1+2x"

  friend bool operator==(const FqField& a, const FqField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  size_t idx(Fq a, Fq b) const { return static_cast<size_t>(a) * q_ + b; }
  int p_, k_, q_;
  int mod_a_ = 0, mod_b_ = 0;
  std::vector<Fq> add_, mul_, neg_, frob_, inv_;
};

}  // namespace nilorbit
