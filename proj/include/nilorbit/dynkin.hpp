#pragma once
// Root-system and Dynkin-diagram infrastructure: Cartan matrices, positive
// roots, diagram automorphisms, good primes, Coxeter numbers.
//
// Node numbering follows Bourbaki. For D4 that means: node 1 = left end,
// node 2 = central (trivalent) node, node 3 = top fork, node 4 = right fork,
// so the transposition (3 4) swaps top/right and (1 3) swaps left/top.
// For D_n in general the chain is nodes 1..n-2 and the fork is {n-1, n},
// printed in (chain..., top, right) order.

#include <string>
#include <vector>

namespace nilorbit {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

struct DynkinType {
  Family family;
  int rank;

  // Validates the rank constraints (A>=1, B>=2, C>=3, D>=4, E in {6,7,8},
  // F=4, G=2); throws HypothesisError otherwise.
  static DynkinType make(Family family, int rank);
  static DynkinType parse(const std::string& text);  // "D4", "A12"

  std::string str() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// cartan[i][j] = <alpha_i, alpha_j^vee>, 0-based rows/columns for nodes 1..r.
std::vector<std::vector<int>> cartan_matrix(DynkinType t);

class RootSystem {
 public:
  explicit RootSystem(DynkinType t);

  const DynkinType& type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Positive roots as coefficient vectors over the simple roots, generated
  // by closure under simple-root addition from the Cartan matrix alone.
  const std::vector<std::vector<int>>& positive_roots() const { return pos_; }

  int dimension() const;  // 2 * #positive + rank
  int max_root_coefficient() const;

  // <alpha, alpha_i^vee> for alpha given by simple-root coefficients (0-based i).
  int pairing(const std::vector<int>& coeffs, int i) const;

 private:
  DynkinType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> pos_;
};

struct DiagramAutomorphism {
  DynkinType type;
  std::vector<int> perm;  // perm[i] = image of node i, 0-based

  static DiagramAutomorphism identity(DynkinType t);
  // Builds the transposition of two 1-based nodes and checks it preserves
  // the Cartan matrix.
  static DiagramAutomorphism transposition(DynkinType t, int node_a, int node_b);

  bool is_identity() const;
  int image(int node_id) const { return perm[node_id - 1] + 1; }  // 1-based
  DiagramAutomorphism compose(const DiagramAutomorphism& inner) const;
  DiagramAutomorphism inverse() const;
  bool preserves_cartan() const;
  std::string cycle_str() const;  // "(34)", "(15)(24)", "id"

  friend bool operator==(const DiagramAutomorphism&,
                         const DiagramAutomorphism&) = default;
};

// All Cartan-matrix-preserving node permutations. Group order is 1 for
// A1/B/C/G2/F4/E7/E8, 2 for A_n (n>1) / D_n (n>=5) / E6, and 6 for D4.
std::vector<DiagramAutomorphism> diagram_automorphisms(DynkinType t);

bool is_prime(long long n);

// True iff p exceeds every coefficient of every positive root in the
// simple-root basis. Requires p prime.
bool good_prime(DynkinType t, int p);

int coxeter_number(DynkinType t);

}  // namespace nilorbit
