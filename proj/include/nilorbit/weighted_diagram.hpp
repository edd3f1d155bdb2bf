#pragma once
// Weighted Dynkin diagrams: h-lists from partitions, the type-A and type-D
// label formulas, the so8 golden table, one-parameter subgroups, grading
// dimensions and orbit dimensions. All arithmetic is exact.

#include <string>
#include <utility>
#include <vector>

#include "nilorbit/dynkin.hpp"
#include "nilorbit/orbits.hpp"

namespace nilorbit {

struct WeightedDynkinDiagram {
  DynkinType type;
  std::vector<int> labels;  // labels[i] belongs to node i+1

  // Validates node count and that every label lies in {0, 1, 2}.
  static WeightedDynkinDiagram make(DynkinType t, std::vector<int> labels);

  int label(int node_id) const { return labels[node_id - 1]; }
  std::string str() const;  // "(0,2,0,2)" in node order

  friend bool operator==(const WeightedDynkinDiagram&,
                         const WeightedDynkinDiagram&) = default;
};

// Multiset of sl2 weights: each part d contributes d-1, d-3, ..., -d+1;
// the union is sorted non-increasing. Always symmetric under negation.
std::vector<int> h_list(const Partition& p);

// Node i gets h_i - h_{i+1}.
WeightedDynkinDiagram diagram_type_A(const OrbitLabel& label);

// Chain node i (1 <= i <= n-2) gets h_i - h_{i+1}; the fork gets
// (top, right) = (h_{n-1} - h_n, h_{n-1} + h_n) when the partition is not
// very even. For very even partitions decoration I keeps that fork order
// and II swaps it. D4 requests are answered from d4_table().
WeightedDynkinDiagram diagram_type_D(const OrbitLabel& label);

// Dispatches on the label's family (A or D).
WeightedDynkinDiagram diagram_of(const OrbitLabel& label);

// All 12 D4 diagrams in canonical label order. The ten diagrams known in
// closed form are stored as golden constants and cross-validated against
// the general type-D formula at first use; a mismatch is a hard failure.
const std::vector<std::pair<OrbitLabel, WeightedDynkinDiagram>>& d4_table();

// Relabels nodes: output label at node gamma(i) equals input label at node i.
WeightedDynkinDiagram apply_automorphism(const DiagramAutomorphism& gamma,
                                         const WeightedDynkinDiagram& d);

// Coefficients a_i of lambda = sum a_i alpha_i^vee solving
// sum_i a_i C[j][i] = b_j exactly; throws when the solution is not integral.
std::vector<long long> one_param_subgroup(const WeightedDynkinDiagram& d);

// dim g(lambda, degree): number of roots (positive and negative) pairing to
// `degree` against lambda, plus the rank when degree == 0.
int grading_dimension(const WeightedDynkinDiagram& d, int degree);

// dim g - dim g(lambda,0) - dim g(lambda,1).
int orbit_dimension(const WeightedDynkinDiagram& d);

}  // namespace nilorbit
