#include "nilorbit/fq.hpp"

#include "nilorbit/dynkin.hpp"  // is_prime
#include "nilorbit/errors.hpp"

namespace nilorbit {

FqField::FqField(int p, int k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p)) throw HypothesisError("field characteristic must be prime");
  if (k != 1 && k != 2)
    throw HypothesisError("only F_p and F_{p^2} are supported (k must be 1 or 2)");
  for (int i = 0; i < k; ++i) q_ *= p;
  if (q_ > 249) throw HypothesisError("field size " + std::to_string(q_) +
                                      " exceeds the table limit");

  if (k_ == 2) {
    // Smallest (a, b) with x^2 + a x + b irreducible over F_p, i.e. without
    // a root.
    bool found = false;
    for (int a = 0; a < p_ && !found; ++a)
      for (int b = 0; b < p_ && !found; ++b) {
        bool has_root = false;
        for (int x = 0; x < p_ && !has_root; ++x)
          has_root = (x * x + a * x + b) % p_ == 0;
        if (!has_root) {
          mod_a_ = a;
          mod_b_ = b;
          found = true;
        }
      }
    if (!found) throw std::logic_error("no irreducible quadratic found");
  }

  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(q_);
  frob_.resize(q_);
  inv_.assign(q_, 0);

  auto pack = [&](int c0, int c1) {
    return static_cast<Fq>(((c0 % p_ + p_) % p_) + p_ * ((c1 % p_ + p_) % p_));
  };
  for (int a = 0; a < q_; ++a) {
    const int a0 = a % p_, a1 = a / p_;
    neg_[a] = pack(-a0, -a1);
    for (int b = 0; b < q_; ++b) {
      const int b0 = b % p_, b1 = b / p_;
      add_[idx(a, b)] = pack(a0 + b0, a1 + b1);
      // (a0 + a1 x)(b0 + b1 x) with x^2 = -(a x + b) from the modulus.
      const int t0 = a0 * b0;
      const int t1 = a0 * b1 + a1 * b0;
      const int t2 = a1 * b1;
      mul_[idx(a, b)] = pack(t0 - t2 * mod_b_, t1 - t2 * mod_a_);
    }
  }
  for (int a = 0; a < q_; ++a) {
    Fq v = static_cast<Fq>(a);
    for (int i = 1; i < p_; ++i) v = mul(v, static_cast<Fq>(a));
    frob_[a] = v;
    for (int b = 0; b < q_; ++b)
      if (mul(static_cast<Fq>(a), static_cast<Fq>(b)) == element(1)) {
        inv_[a] = static_cast<Fq>(b);
        break;
      }
  }
}

Fq FqField::element(int c0, int c1) const {
  if (k_ == 1 && c1 != 0)
    throw HypothesisError("prime field element has no x coordinate");
  const int r0 = (c0 % p_ + p_) % p_;
  const int r1 = (c1 % p_ + p_) % p_;
  return static_cast<Fq>(r0 + p_ * r1);
}

Fq FqField::inv(Fq a) const {
  if (a == 0) throw HypothesisError("inverse of zero");
  return inv_[a];
}

Fq FqField::pow(Fq a, long long e) const {
  if (e < 0) throw HypothesisError("negative exponent");
  Fq result = element(1);
  Fq base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string FqField::element_str(Fq e) const {
  const auto [c0, c1] = coords(e);
  if (k_ == 1 || c1 == 0) return std::to_string(c0);
  std::string xs = c1 == 1 ? "x" : std::to_string(c1) + "x";
  if (c0 == 0) return xs;
  return std::to_string(c0) + "+" + xs;
}

}  // namespace nilorbit
