#pragma once
// Exact rational arithmetic and small dense linear algebra over Q.
// This is the verification-side toolkit: kernel ranks of commutator
// operators, Jordan types of rational matrices, Cartan-system solves.
// No floating point anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorbit {

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  static Rat make(__int128 n, __int128 d);
  long long num_;
  long long den_;  // > 0, gcd(num_, den_) == 1
};

using QMat = std::vector<std::vector<Rat>>;

QMat q_zero(int rows, int cols);
QMat q_identity(int n);
QMat q_mul(const QMat& a, const QMat& b);
QMat q_transpose(const QMat& a);
bool q_is_zero(const QMat& a);

// Rank by Gaussian elimination; takes its argument by value.
int q_rank(QMat a);

// Inverse of a square matrix; throws HypothesisError when singular.
QMat q_inverse(const QMat& a);

// Unique solution of a square system A x = b; throws when A is singular.
std::vector<Rat> q_solve(QMat a, std::vector<Rat> b);

}  // namespace nilorbit
