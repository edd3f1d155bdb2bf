#include "nilorbit/fq_matrix.hpp"

#include <algorithm>

#include "nilorbit/errors.hpp"

namespace nilorbit {

FqMatrix::FqMatrix(const FqField& field, int n)
    : field_(&field), n_(n), a_(static_cast<size_t>(n) * n, 0) {
  if (n < 1) throw HypothesisError("matrix size must be positive");
}

FqMatrix FqMatrix::jordan(const FqField& field, const Partition& type) {
  FqMatrix m(field, type.total());
  int offset = 0;
  const Fq one = field.element(1);
  for (int d : type.parts()) {
    for (int i = 0; i + 1 < d; ++i) m.set(offset + i, offset + i + 1, one);
    offset += d;
  }
  return m;
}

FqMatrix FqMatrix::mul(const FqMatrix& o) const {
  FqMatrix out(*field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Fq aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j)
        out.set(i, j, field_->add(out.at(i, j), field_->mul(aik, o.at(k, j))));
    }
  return out;
}

bool FqMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Fq v) { return v == 0; });
}

bool FqMatrix::is_nilpotent() const {
  FqMatrix p = *this;
  for (int i = 1; i < n_; ++i) p = p.mul(*this);
  return p.is_zero();
}

int FqMatrix::rank() const {
  std::vector<Fq> w = a_;
  auto at_w = [&](int i, int j) -> Fq& { return w[static_cast<size_t>(i) * n_ + j]; };
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_; ++r)
      if (at_w(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < n_; ++c) std::swap(at_w(rank, c), at_w(pivot, c));
    const Fq piv_inv = field_->inv(at_w(rank, col));
    for (int r = rank + 1; r < n_; ++r) {
      const Fq f = field_->mul(at_w(r, col), piv_inv);
      if (f == 0) continue;
      for (int c = col; c < n_; ++c)
        at_w(r, c) = field_->sub(at_w(r, c), field_->mul(f, at_w(rank, c)));
    }
    ++rank;
  }
  return rank;
}

Fq FqMatrix::trace() const {
  Fq t = 0;
  for (int i = 0; i < n_; ++i) t = field_->add(t, at(i, i));
  return t;
}

Partition FqMatrix::jordan_type() const {
  if (!is_nilpotent())
    throw HypothesisError("Jordan type requested for a non-nilpotent matrix");
  std::vector<int> ranks;  // rank(M^0), rank(M^1), ...
  ranks.push_back(n_);
  FqMatrix p = *this;
  while (true) {
    ranks.push_back(p.rank());
    if (ranks.back() == 0) break;
    p = p.mul(*this);
  }
  // counts[j] = #parts >= j+1 = rank(M^j) - rank(M^(j+1)); weakly decreasing.
  std::vector<int> counts;
  for (size_t j = 0; j + 1 < ranks.size(); ++j)
    counts.push_back(ranks[j] - ranks[j + 1]);
  std::vector<int> parts;
  for (int j = static_cast<int>(counts.size()) - 1; j >= 0; --j) {
    const int next = j + 1 < static_cast<int>(counts.size()) ? counts[j + 1] : 0;
    for (int c = 0; c < counts[j] - next; ++c) parts.push_back(j + 1);
  }
  return Partition(parts);
}

FqMatrix FqMatrix::entrywise_pow(long long e) const {
  FqMatrix out(*field_, n_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->pow(a_[i], e);
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix out(*field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.set(j, i, at(i, j));
  return out;
}

FqMatrix FqMatrix::negate() const {
  FqMatrix out(*field_, n_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->neg(a_[i]);
  return out;
}

FqMatrix FqMatrix::twisted_frobenius(long long q) const {
  if (trace() != 0)
    throw HypothesisError("twisted Frobenius needs a trace-zero matrix");
  return entrywise_pow(q).transpose().negate();
}

std::vector<int> FqMatrix::row_major() const {
  return std::vector<int>(a_.begin(), a_.end());
}

}  // namespace nilorbit
