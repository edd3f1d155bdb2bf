#include "nilorbit/dynkin.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nilorbit/errors.hpp"

namespace nilorbit {

DynkinType DynkinType::make(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw HypothesisError("invalid rank " + std::to_string(rank) +
                          " for family " + std::string(1, static_cast<char>(family)));
  return DynkinType{family, rank};
}

DynkinType DynkinType::parse(const std::string& text) {
  if (text.size() < 2)
    throw HypothesisError("cannot parse Dynkin type '" + text + "'");
  char f = text[0];
  if (f < 'A' || f > 'G')
    throw HypothesisError("cannot parse Dynkin type '" + text + "'");
  std::string digits = text.substr(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw HypothesisError("cannot parse Dynkin type '" + text + "'");
  int rank = std::stoi(digits);
  return make(static_cast<Family>(f), rank);
}

std::string DynkinType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::vector<std::vector<int>> cartan_matrix(DynkinType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int a, int b) {  // simple edge between 1-based nodes
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i + 1 < n; ++i) edge(i, i + 1);
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      c[n - 2][n - 1] = -2;
      c[n - 1][n - 2] = -1;
      break;
    case Family::C:
      for (int i = 1; i + 1 < n; ++i) edge(i, i + 1);
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      c[n - 2][n - 1] = -1;
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 1; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1);
      edge(n - 2, n);
      break;
    case Family::E:
      edge(1, 3);
      edge(3, 4);
      edge(2, 4);
      for (int i = 4; i < n; ++i) edge(i, i + 1);
      break;
    case Family::F:
      edge(1, 2);
      edge(3, 4);
      c[1][2] = -2;  // <alpha_2, alpha_3^vee>
      c[2][1] = -1;
      break;
    case Family::G:
      c[0][1] = -1;  // <alpha_1, alpha_2^vee>
      c[1][0] = -3;
      break;
  }
  return c;
}

namespace {

// Closure of the simple roots under root addition. Roots are processed in
// height order, so the down-string length of alpha through alpha_i is always
// known when alpha is handled: alpha + alpha_i is a root iff
// p - <alpha, alpha_i^vee> > 0 with p the down-string length.
std::vector<std::vector<int>> generate_positive_roots(
    const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<std::vector<int>> roots;
  std::map<std::vector<int>, bool> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> simple(n, 0);
    simple[i] = 1;
    roots.push_back(simple);
    seen[simple] = true;
  }
  auto pairing = [&](const std::vector<int>& alpha, int i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += alpha[j] * cartan[j][i];
    return s;
  };
  for (size_t head = 0; head < roots.size(); ++head) {
    std::vector<int> alpha = roots[head];
    for (int i = 0; i < n; ++i) {
      int p = 0;
      std::vector<int> down = alpha;
      while (true) {
        down[i] -= 1;
        if (down[i] < 0 || !seen.count(down)) break;
        ++p;
      }
      if (p - pairing(alpha, i) > 0) {
        std::vector<int> up = alpha;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = true;
          roots.push_back(up);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = std::accumulate(a.begin(), a.end(), 0);
              int hb = std::accumulate(b.begin(), b.end(), 0);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  return roots;
}

int expected_positive_count(DynkinType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace

RootSystem::RootSystem(DynkinType t)
    : type_(DynkinType::make(t.family, t.rank)),
      rank_(t.rank),
      cartan_(cartan_matrix(type_)),
      pos_(generate_positive_roots(cartan_)) {
  if (static_cast<int>(pos_.size()) != expected_positive_count(type_))
    throw std::logic_error("positive root count mismatch for " + type_.str());
}

int RootSystem::dimension() const {
  return 2 * static_cast<int>(pos_.size()) + rank_;
}

int RootSystem::max_root_coefficient() const {
  int m = 0;
  for (const auto& r : pos_)
    for (int c : r) m = std::max(m, c);
  return m;
}

int RootSystem::pairing(const std::vector<int>& coeffs, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += coeffs[j] * cartan_[j][i];
  return s;
}

DiagramAutomorphism DiagramAutomorphism::identity(DynkinType t) {
  DiagramAutomorphism a{t, std::vector<int>(t.rank)};
  std::iota(a.perm.begin(), a.perm.end(), 0);
  return a;
}

DiagramAutomorphism DiagramAutomorphism::transposition(DynkinType t, int node_a,
                                                       int node_b) {
  DiagramAutomorphism a = identity(t);
  a.perm[node_a - 1] = node_b - 1;
  a.perm[node_b - 1] = node_a - 1;
  if (!a.preserves_cartan())
    throw HypothesisError("(" + std::to_string(node_a) + " " +
                          std::to_string(node_b) +
                          ") does not preserve the Cartan matrix of " + t.str());
  return a;
}

bool DiagramAutomorphism::is_identity() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramAutomorphism DiagramAutomorphism::compose(
    const DiagramAutomorphism& inner) const {
  if (!(type == inner.type))
    throw HypothesisError("composing automorphisms of different types");
  DiagramAutomorphism out{type, std::vector<int>(perm.size())};
  for (size_t i = 0; i < perm.size(); ++i) out.perm[i] = perm[inner.perm[i]];
  return out;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  DiagramAutomorphism out{type, std::vector<int>(perm.size())};
  for (size_t i = 0; i < perm.size(); ++i) out.perm[perm[i]] = static_cast<int>(i);
  return out;
}

bool DiagramAutomorphism::preserves_cartan() const {
  const auto c = cartan_matrix(type);
  const int n = type.rank;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c[perm[i]][perm[j]] != c[i][j]) return false;
  return true;
}

std::string DiagramAutomorphism::cycle_str() const {
  if (is_identity()) return "id";
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (done[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(perm[j]);
    }
    out += ")";
  }
  return out;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(DynkinType t) {
  DynkinType::make(t.family, t.rank);  // validate
  const auto c = cartan_matrix(t);
  const int n = t.rank;
  std::vector<DiagramAutomorphism> found;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);

  // Backtracking over node images with incremental Cartan consistency.
  auto consistent = [&](int i, int img) {
    for (int j = 0; j < i; ++j) {
      if (c[i][j] != c[img][perm[j]] || c[j][i] != c[perm[j]][img]) return false;
    }
    return c[i][i] == c[img][img];
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      found.push_back(DiagramAutomorphism{t, perm});
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[img] || !consistent(i, img)) continue;
      perm[i] = img;
      used[img] = true;
      self(self, i + 1);
      used[img] = false;
      perm[i] = -1;
    }
  };
  rec(rec, 0);
  return found;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool good_prime(DynkinType t, int p) {
  if (!is_prime(p))
    throw HypothesisError(std::to_string(p) + " is not prime");
  return p > RootSystem(t).max_root_coefficient();
}

int coxeter_number(DynkinType t) {
  DynkinType::make(t.family, t.rank);
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace nilorbit
