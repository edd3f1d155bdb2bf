#include "nilorbit/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <thread>

#include "nilorbit/errors.hpp"
#include "nilorbit/scan.hpp"

namespace nilorbit {

EnumerationBudget EnumerationBudget::from_env() {
  EnumerationBudget b;
  if (const char* env = std::getenv("NILORBIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw HypothesisError("NILORBIT_BUDGET must be a decimal state count");
    b.state_cap = static_cast<std::uint64_t>(v);
  }
  return b;
}

void EnumerationBudget::check(const FqField& field, int n) const {
  const std::uint64_t states = matrix_state_count(field, n);
  if (state_cap) {
    if (states > *state_cap)
      throw BudgetError("enumeration over F_" + std::to_string(field.q()) +
                            " with n = " + std::to_string(n) + " needs " +
                            std::to_string(states) +
                            " states, over the NILORBIT_BUDGET cap of " +
                            std::to_string(*state_cap),
                        states);
    return;
  }
  const bool ok = n <= 3 || (n == 4 && field.q() == 2);
  if (!ok)
    throw BudgetError(
        "enumeration over F_" + std::to_string(field.q()) + " with n = " +
            std::to_string(n) + " needs " + std::to_string(states) +
            " states; the default budget allows n <= 3 (n = 4 over F_2 only). "
            "Set NILORBIT_BUDGET to override.",
        states);
}

std::string map_name(FrobeniusMap map) {
  return map == FrobeniusMap::standard ? "standard" : "twisted";
}

FqMatrix apply_map(const FqMatrix& m, FrobeniusMap map) {
  if (map == FrobeniusMap::standard) return m.entrywise_pow(m.field().p());
  return m.twisted_frobenius(m.field().p());
}

namespace {

std::vector<std::uint64_t> scan_all(const FqField& field, int n, int threads) {
  const std::uint64_t total = matrix_state_count(field, n);
  const auto& kernel = select_scan_kernel(field, n);
  if (threads <= 1) {
    std::vector<std::uint64_t> out;
    kernel.scan(field, n, 0, total, out);
    return out;
  }
  const int t = std::min<std::uint64_t>(threads, total);
  std::vector<std::vector<std::uint64_t>> parts(t);
  std::vector<std::thread> workers;
  for (int w = 0; w < t; ++w) {
    const std::uint64_t lo = total / t * w + std::min<std::uint64_t>(w, total % t);
    const std::uint64_t hi =
        total / t * (w + 1) + std::min<std::uint64_t>(w + 1, total % t);
    workers.emplace_back(
        [&, w, lo, hi]() { kernel.scan(field, n, lo, hi, parts[w]); });
  }
  for (auto& th : workers) th.join();
  std::vector<std::uint64_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

void for_each_nilpotent(
    const FqField& field, int n,
    const std::function<void(std::uint64_t, const FqMatrix&)>& fn, int threads,
    const EnumerationBudget& budget) {
  budget.check(field, n);
  for (const std::uint64_t index : scan_all(field, n, threads))
    fn(index, matrix_from_index(field, n, index));
}

std::vector<FqMatrix> enumerate_nilpotent(const FqField& field, int n,
                                          int threads,
                                          const EnumerationBudget& budget) {
  std::vector<FqMatrix> out;
  for_each_nilpotent(
      field, n, [&](std::uint64_t, const FqMatrix& m) { out.push_back(m); },
      threads, budget);
  return out;
}

namespace {

// Scans the whole matrix space for twisted-fixed nilpotents, recording the
// first representative of each target Jordan type. The fixedness condition
// m[j][i] == -(m[i][j]^p) is checked digit-wise with fast-changing entries
// first, so almost every state is rejected after one byte compare.
void scan_fixed_points(const FqField& field, int n,
                       std::map<Partition, std::optional<FqMatrix>>& found) {
  const int q = field.q();
  const int cells = n * n;
  std::vector<Fq> twin(q);  // twin[v] = -(v^p)
  for (int v = 0; v < q; ++v)
    twin[v] = field.neg(field.frobenius_p(static_cast<Fq>(v)));

  // Condition list: (lhs_cell, rhs_cell) meaning m[lhs] == twin[m[rhs]],
  // ordered by the slowest-changing cell involved.
  std::vector<std::pair<int, int>> conds;
  for (int i = 0; i < n; ++i) conds.emplace_back(i * n + i, i * n + i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) conds.emplace_back(j * n + i, i * n + j);
  std::sort(conds.begin(), conds.end(), [](const auto& a, const auto& b) {
    return std::max(a.first, a.second) < std::max(b.first, b.second);
  });

  std::size_t remaining = 0;
  for (const auto& [type, rep] : found)
    if (!rep) ++remaining;
  if (remaining == 0) return;

  const std::uint64_t total = matrix_state_count(field, n);
  std::vector<Fq> m(cells, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    bool fixed = true;
    for (const auto& [lhs, rhs] : conds)
      if (m[lhs] != twin[m[rhs]]) {
        fixed = false;
        break;
      }
    if (fixed) {
      FqMatrix mat(field, n);
      mat.data() = m;
      if (mat.is_nilpotent()) {
        const Partition type = mat.jordan_type();
        auto it = found.find(type);
        if (it != found.end() && !it->second) {
          it->second = mat;
          if (--remaining == 0) return;
        }
      }
    }
    for (int e = 0; e < cells; ++e) {
      if (++m[e] < q) break;
      m[e] = 0;
    }
  }
}

}  // namespace

VerifyReport verify_orbit_stability(const FqField& field, int n,
                                    FrobeniusMap map, int threads,
                                    bool with_fixed_points,
                                    const EnumerationBudget& budget) {
  if (map == FrobeniusMap::twisted && field.k() != 2)
    throw HypothesisError(
        "the twisted map lives on the quadratic extension; use F_{p^2}");
  budget.check(field, n);

  VerifyReport report;
  report.n = n;
  report.p = field.p();
  report.k = field.k();
  report.q = field.q();
  report.map = map;
  report.kernel = std::string(select_scan_kernel(field, n).name());
  report.scanned = matrix_state_count(field, n);

  for (const std::uint64_t index : scan_all(field, n, threads)) {
    const FqMatrix m = matrix_from_index(field, n, index);
    const Partition type = m.jordan_type();
    ++report.census[type];
    ++report.nilpotent_total;
    const FqMatrix image = apply_map(m, map);
    if (!image.is_nilpotent() || !(image.jordan_type() == type)) {
      report.type_invariant = false;
      if (!report.counterexample) report.counterexample = m;
    }
  }

  if (with_fixed_points) {
    if (map != FrobeniusMap::twisted)
      throw HypothesisError("fixed-point search is defined for the twisted map");
    for (const auto& type : Partition::all(n))
      report.fixed_points.emplace(type, std::nullopt);
    scan_fixed_points(field, n, report.fixed_points);
  }
  return report;
}

std::optional<FqMatrix> find_fixed_point(const Partition& jordan,
                                         const FqField& field,
                                         const EnumerationBudget& budget) {
  if (field.k() != 2)
    throw HypothesisError("fixed-point search needs a quadratic extension field");
  const int n = jordan.total();
  budget.check(field, n);
  std::map<Partition, std::optional<FqMatrix>> found;
  found.emplace(jordan, std::nullopt);
  scan_fixed_points(field, n, found);
  return found.at(jordan);
}

// ------------------------------------------------------------ rational ----

QMat rational_jordan(const Partition& type) {
  const int n = type.total();
  QMat j = q_zero(n, n);
  int offset = 0;
  for (int d : type.parts()) {
    for (int i = 0; i + 1 < d; ++i) j[offset + i][offset + i + 1] = Rat(1);
    offset += d;
  }
  return j;
}

Partition rational_jordan_type(const QMat& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> ranks;
  ranks.push_back(n);
  QMat p = m;
  while (true) {
    ranks.push_back(q_rank(p));
    if (ranks.back() == 0) break;
    if (static_cast<int>(ranks.size()) > n + 1)
      throw HypothesisError("matrix is not nilpotent");
    p = q_mul(p, m);
  }
  std::vector<int> counts;
  for (size_t i = 0; i + 1 < ranks.size(); ++i)
    counts.push_back(ranks[i] - ranks[i + 1]);
  std::vector<int> parts;
  for (int j = static_cast<int>(counts.size()) - 1; j >= 0; --j) {
    const int next = j + 1 < static_cast<int>(counts.size()) ? counts[j + 1] : 0;
    for (int c = 0; c < counts[j] - next; ++c) parts.push_back(j + 1);
  }
  return Partition(parts);
}

namespace {

QMat antidiag_form(int m) {
  QMat k = q_zero(m, m);
  for (int i = 0; i < m; ++i) k[i][m - 1 - i] = Rat(1);
  return k;
}

bool in_so(const QMat& x) {
  const int m = static_cast<int>(x.size());
  // X^T K + K X = 0 <=> x[i][j] == -x[m+1-j][m+1-i] (1-based).
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!(x[i][j] == -x[m - 1 - j][m - 1 - i])) return false;
  return true;
}

// Single Jordan block of odd size m inside so(antidiag_m): alternating-sign
// superdiagonal, +1 on the first half and -1 on the second.
QMat odd_block(int m) {
  QMat x = q_zero(m, m);
  for (int i = 1; i < m; ++i)
    x[i - 1][i] = Rat(i <= (m - 1) / 2 ? 1 : -1);
  return x;
}

// Jordan type [v, v] inside so(antidiag_{2v}): superdiagonal with the forced
// zero in the middle, signs mirrored.
QMat equal_pair_block(int v) {
  const int s = 2 * v;
  QMat x = q_zero(s, s);
  for (int i = 1; i < s; ++i) {
    if (i == v) continue;
    x[i - 1][i] = Rat(i < v ? 1 : -1);
  }
  return x;
}

// Jordan type [c, d] (both odd, c >= d) inside so(antidiag_{c+d}). The two
// single blocks live in so(antidiag_c) + so(-antidiag_d); a hyperbolic basis
// of that form is mapped onto the one of antidiag_{c+d} and the block sum is
// conjugated across.
QMat odd_pair_block(int c, int d) {
  const int s = c + d;
  // Y = odd_block(c) (+) odd_block(d) in local coordinates.
  QMat y = q_zero(s, s);
  {
    const QMat a = odd_block(c), b = odd_block(d);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) y[i][j] = a[i][j];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) y[c + i][c + j] = b[i][j];
  }
  // Hyperbolic pairs of K' = diag(antidiag_c, -antidiag_d).
  std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> pairs;
  auto unit = [&](int i) {  // 0-based coordinate vector
    std::vector<Rat> v(s, Rat(0));
    v[i] = Rat(1);
    return v;
  };
  for (int i = 1; i <= (c - 1) / 2; ++i)
    pairs.emplace_back(unit(i - 1), unit(c - i));
  for (int j = 1; j <= (d - 1) / 2; ++j) {
    auto w = unit(c + d - j);
    for (auto& v : w) v = -v;
    pairs.emplace_back(unit(c + j - 1), w);
  }
  {
    // Middle vectors: B'(u,u) = +1 from the c side, B'(v,v) = -1 from the
    // d side; (u+v, (u-v)/2) is a hyperbolic pair.
    const std::vector<Rat> u = unit((c + 1) / 2 - 1);
    const std::vector<Rat> v = unit(c + (d + 1) / 2 - 1);
    std::vector<Rat> p(s), q(s);
    for (int i = 0; i < s; ++i) {
      p[i] = u[i] + v[i];
      q[i] = (u[i] - v[i]) / Rat(2);
    }
    pairs.emplace_back(std::move(p), std::move(q));
  }
  if (static_cast<int>(pairs.size()) != s / 2)
    throw std::logic_error("hyperbolic pair count mismatch");
  QMat t = q_zero(s, s);
  for (int idx = 0; idx < s / 2; ++idx) {
    for (int r = 0; r < s; ++r) {
      t[r][idx] = pairs[idx].first[r];
      t[r][s - 1 - idx] = pairs[idx].second[r];
    }
  }
  return q_mul(q_mul(q_inverse(t), y), t);
}

}  // namespace

QMat so_representative(const Partition& p) {
  const int total = p.total();
  if (total % 2 != 0)
    throw HypothesisError("so representative needs a partition of even total");
  for (int v = 2; v <= total; v += 2)
    if (p.multiplicity(v) % 2 != 0)
      throw HypothesisError(p.str() +
                            " is not an so Jordan type (even parts need even "
                            "multiplicity)");

  // Blocks: equal pairs plus leftover odd singles grouped two at a time.
  struct Block {
    QMat x;
    int size;
  };
  std::vector<Block> blocks;
  std::vector<int> singles;
  std::vector<int> values = p.parts();
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int v : values) {
    const int m = p.multiplicity(v);
    for (int i = 0; i < m / 2; ++i) blocks.push_back({equal_pair_block(v), 2 * v});
    if (m % 2 != 0) singles.push_back(v);
  }
  for (size_t i = 0; i + 1 < singles.size(); i += 2)
    blocks.push_back({odd_pair_block(singles[i], singles[i + 1]),
                      singles[i] + singles[i + 1]});
  if (singles.size() % 2 != 0)
    throw std::logic_error("odd number of leftover odd blocks");

  // Nest the blocks on shells of the antidiagonal form: block-local
  // coordinate t maps to o + t on the first half and mirrors on the second.
  QMat x = q_zero(total, total);
  int offset = 0;
  for (const auto& block : blocks) {
    const int s = block.size;
    auto global = [&](int t) {  // 0-based local -> 0-based global
      return t < s / 2 ? offset + t : total - offset - s + t;
    };
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        if (!block.x[i][j].is_zero()) x[global(i)][global(j)] = block.x[i][j];
    offset += s / 2;
  }

  if (!in_so(x))
    throw std::logic_error("so representative for " + p.str() +
                           " is not in the form's algebra");
  if (!(rational_jordan_type(x) == p))
    throw std::logic_error("so representative for " + p.str() +
                           " has the wrong Jordan type");
  return x;
}

int centralizer_dim(const QMat& j, Ambient ambient) {
  const int m = static_cast<int>(j.size());
  if (ambient == Ambient::gl) {
    // Operator matrix of X -> JX - XJ on the E_ab basis.
    QMat op = q_zero(m * m, m * m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const int col = a * m + b;
        for (int i = 0; i < m; ++i) op[i * m + b][col] += j[i][a];
        for (int jj = 0; jj < m; ++jj) op[a * m + jj][col] -= j[b][jj];
      }
    return m * m - q_rank(std::move(op));
  }
  if (!in_so(j))
    throw HypothesisError(
        "matrix is not in so for the split antidiagonal form");
  // Basis of so_m: E_ij - E_{m+1-j, m+1-i} for positions above the
  // antidiagonal (i + j < m + 1, 1-based).
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < m; ++i)
    for (int jj = 0; jj < m; ++jj)
      if ((i + 1) + (jj + 1) < m + 1) basis.emplace_back(i, jj);
  QMat op = q_zero(m * m, static_cast<int>(basis.size()));
  for (size_t t = 0; t < basis.size(); ++t) {
    const auto [a, b] = basis[t];
    QMat e = q_zero(m, m);
    e[a][b] = Rat(1);
    e[m - 1 - b][m - 1 - a] = e[m - 1 - b][m - 1 - a] - Rat(1);
    const QMat bracket_left = q_mul(j, e);
    const QMat bracket_right = q_mul(e, j);
    for (int i = 0; i < m; ++i)
      for (int jj = 0; jj < m; ++jj)
        op[i * m + jj][t] = bracket_left[i][jj] - bracket_right[i][jj];
  }
  return static_cast<int>(basis.size()) - q_rank(std::move(op));
}

}  // namespace nilorbit
