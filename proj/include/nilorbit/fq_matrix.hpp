#pragma once
// Square matrices over a small finite field: rank, nilpotency, Jordan type
// from the rank sequence of powers, and the entrywise / twisted Frobenius
// maps.

#include <optional>
#include <vector>

#include "nilorbit/fq.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

class FqMatrix {
 public:
  FqMatrix(const FqField& field, int n);
  static FqMatrix jordan(const FqField& field, const Partition& type);

  const FqField& field() const { return *field_; }
  int n() const { return n_; }
  Fq at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, Fq v) { a_[static_cast<size_t>(i) * n_ + j] = v; }
  const std::vector<Fq>& data() const { return a_; }
  std::vector<Fq>& data() { return a_; }

  FqMatrix mul(const FqMatrix& o) const;
  bool is_zero() const;
  bool is_nilpotent() const;  // M^n == 0
  int rank() const;
  Fq trace() const;

  // Jordan type off the rank sequence: #parts >= j equals
  // rank(M^(j-1)) - rank(M^j). Throws when M is not nilpotent.
  Partition jordan_type() const;

  FqMatrix entrywise_pow(long long e) const;
  // -(M^(q))^T; requires trace zero (an sl_n element).
  FqMatrix twisted_frobenius(long long q) const;
  FqMatrix transpose() const;
  FqMatrix negate() const;

  std::vector<int> row_major() const;  // element indices, for serialization

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  const FqField* field_;
  int n_;
  std::vector<Fq> a_;
};

}  // namespace nilorbit
