#include "nilorbit/rational.hpp"

#include <numeric>

#include "nilorbit/errors.hpp"

namespace nilorbit {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(__int128 v) {
  constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
  constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
  if (v < lo || v > hi) throw std::overflow_error("rational overflow");
  return static_cast<long long>(v);
}

}  // namespace

Rat Rat::make(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rat r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rat::Rat(long long n, long long d) { *this = make(n, d); }

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  *this = make(static_cast<__int128>(num_) * o.den_ +
                   static_cast<__int128>(o.num_) * den_,
               static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  *this = make(static_cast<__int128>(num_) * o.num_,
               static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  *this = make(static_cast<__int128>(num_) * o.den_,
               static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QMat q_zero(int rows, int cols) {
  return QMat(rows, std::vector<Rat>(cols, Rat(0)));
}

QMat q_identity(int n) {
  QMat m = q_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

QMat q_mul(const QMat& a, const QMat& b) {
  const int r = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int c = static_cast<int>(b.empty() ? 0 : b[0].size());
  QMat out = q_zero(r, c);
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

QMat q_transpose(const QMat& a) {
  const int r = static_cast<int>(a.size());
  const int c = static_cast<int>(a.empty() ? 0 : a[0].size());
  QMat out = q_zero(c, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out[j][i] = a[i][j];
  return out;
}

bool q_is_zero(const QMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

int q_rank(QMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col].is_zero()) continue;
      Rat f = a[r][col] / a[rank][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

QMat q_inverse(const QMat& a) {
  const int n = static_cast<int>(a.size());
  QMat work = a;
  QMat inv = q_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!work[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw HypothesisError("matrix is singular");
    std::swap(work[col], work[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rat d = work[col][col];
    for (int c = 0; c < n; ++c) {
      work[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col].is_zero()) continue;
      Rat f = work[r][col];
      for (int c = 0; c < n; ++c) {
        work[r][c] -= f * work[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<Rat> q_solve(QMat a, std::vector<Rat> b) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw HypothesisError("singular linear system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Rat f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rat> x(n, Rat(0));
  for (int r = n - 1; r >= 0; --r) {
    Rat acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  return x;
}

}  // namespace nilorbit
