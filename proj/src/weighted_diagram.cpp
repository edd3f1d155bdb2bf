#include "nilorbit/weighted_diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nilorbit/errors.hpp"
#include "nilorbit/rational.hpp"

namespace nilorbit {

WeightedDynkinDiagram WeightedDynkinDiagram::make(DynkinType t,
                                                  std::vector<int> labels) {
  DynkinType::make(t.family, t.rank);
  if (static_cast<int>(labels.size()) != t.rank)
    throw HypothesisError("diagram for " + t.str() + " needs " +
                          std::to_string(t.rank) + " node labels, got " +
                          std::to_string(labels.size()));
  for (int b : labels)
    if (b < 0 || b > 2)
      throw HypothesisError("diagram labels must lie in {0,1,2}, got " +
                            std::to_string(b));
  return WeightedDynkinDiagram{t, std::move(labels)};
}

std::string WeightedDynkinDiagram::str() const {
  std::string out = "(";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels[i]);
  }
  return out + ")";
}

std::vector<int> h_list(const Partition& p) {
  if (p.parts().empty()) throw HypothesisError("h-list of an empty partition");
  std::vector<int> h;
  h.reserve(p.total());
  for (int d : p.parts())
    for (int w = d - 1; w >= -d + 1; w -= 2) h.push_back(w);
  std::sort(h.begin(), h.end(), std::greater<int>());
  return h;
}

WeightedDynkinDiagram diagram_type_A(const OrbitLabel& label) {
  if (label.type.family != Family::A)
    throw HypothesisError("diagram_type_A needs a type-A label");
  const auto h = h_list(label.partition);  // length rank+1
  std::vector<int> b(label.type.rank);
  for (int i = 0; i < label.type.rank; ++i) b[i] = h[i] - h[i + 1];
  return WeightedDynkinDiagram::make(label.type, std::move(b));
}

namespace {

// The general type-D recipe, valid for every rank >= 4 under this node
// convention (chain 1..n-2, node n-1 = top fork, node n = right fork).
WeightedDynkinDiagram diagram_type_D_formula(const OrbitLabel& label) {
  const int n = label.type.rank;
  const auto h = h_list(label.partition);  // length 2n, take h_1..h_n
  std::vector<int> b(n);
  for (int i = 0; i + 2 < n; ++i) b[i] = h[i] - h[i + 1];
  const int a = h[n - 2] - h[n - 1];
  const int bb = h[n - 2] + h[n - 1];
  if (label.decoration == Decoration::II) {
    b[n - 2] = bb;
    b[n - 1] = a;
  } else {
    b[n - 2] = a;
    b[n - 1] = bb;
  }
  return WeightedDynkinDiagram::make(label.type, std::move(b));
}

struct D4Golden {
  std::vector<int> parts;
  Decoration dec;
  std::vector<int> labels;
};

// The ten so8 diagrams known in closed form, (left, central, top, right).
const D4Golden kD4Golden[] = {
    {{7, 1}, Decoration::none, {2, 2, 2, 2}},
    {{5, 3}, Decoration::none, {2, 0, 2, 2}},
    {{5, 1, 1, 1}, Decoration::none, {2, 2, 0, 0}},
    {{4, 4}, Decoration::I, {0, 2, 0, 2}},
    {{4, 4}, Decoration::II, {0, 2, 2, 0}},
    {{3, 1, 1, 1, 1, 1}, Decoration::none, {2, 0, 0, 0}},
    {{2, 2, 2, 2}, Decoration::I, {0, 0, 0, 2}},
    {{2, 2, 2, 2}, Decoration::II, {0, 0, 2, 0}},
    {{2, 2, 1, 1, 1, 1}, Decoration::none, {0, 1, 0, 0}},
    {{1, 1, 1, 1, 1, 1, 1, 1}, Decoration::none, {0, 0, 0, 0}},
};

std::vector<std::pair<OrbitLabel, WeightedDynkinDiagram>> build_d4_table() {
  const DynkinType d4 = DynkinType::make(Family::D, 4);
  std::vector<std::pair<OrbitLabel, WeightedDynkinDiagram>> table;
  for (const auto& label : orbit_labels(d4))
    table.emplace_back(label, diagram_type_D_formula(label));
  // Cross-validate the formula against the golden constants.
  for (const auto& g : kD4Golden) {
    const OrbitLabel label = OrbitLabel::make(d4, Partition(g.parts), g.dec);
    const auto it =
        std::find_if(table.begin(), table.end(),
                     [&](const auto& e) { return e.first == label; });
    if (it == table.end())
      throw std::logic_error("D4 table is missing " + label.str());
    if (it->second.labels != g.labels)
      throw std::logic_error("D4 diagram mismatch for " + label.str() +
                             ": formula gives " + it->second.str());
  }
  return table;
}

}  // namespace

const std::vector<std::pair<OrbitLabel, WeightedDynkinDiagram>>& d4_table() {
  static const auto table = build_d4_table();
  return table;
}

WeightedDynkinDiagram diagram_type_D(const OrbitLabel& label) {
  if (label.type.family != Family::D)
    throw HypothesisError("diagram_type_D needs a type-D label");
  OrbitLabel::make(label.type, label.partition, label.decoration);  // validate
  if (label.type.rank == 4) {
    for (const auto& [l, d] : d4_table())
      if (l == label) return d;
    throw std::logic_error("label missing from D4 table: " + label.str());
  }
  return diagram_type_D_formula(label);
}

WeightedDynkinDiagram diagram_of(const OrbitLabel& label) {
  switch (label.type.family) {
    case Family::A: return diagram_type_A(label);
    case Family::D: return diagram_type_D(label);
    default:
      throw HypothesisError("no diagram formula for family " +
                            std::string(1, static_cast<char>(label.type.family)));
  }
}

WeightedDynkinDiagram apply_automorphism(const DiagramAutomorphism& gamma,
                                         const WeightedDynkinDiagram& d) {
  if (!(gamma.type == d.type))
    throw HypothesisError("automorphism of " + gamma.type.str() +
                          " applied to a diagram of " + d.type.str());
  std::vector<int> out(d.labels.size());
  for (size_t i = 0; i < d.labels.size(); ++i)
    out[gamma.perm[i]] = d.labels[i];
  return WeightedDynkinDiagram::make(d.type, std::move(out));
}

std::vector<long long> one_param_subgroup(const WeightedDynkinDiagram& d) {
  const auto cartan = cartan_matrix(d.type);
  const int n = d.type.rank;
  // b_j = sum_i a_i <alpha_j, alpha_i^vee> = sum_i C[j][i] a_i.
  QMat a = q_zero(n, n);
  std::vector<Rat> b(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) a[j][i] = Rat(cartan[j][i]);
    b[j] = Rat(d.labels[j]);
  }
  const auto x = q_solve(std::move(a), std::move(b));
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) {
    if (!x[i].is_integer())
      throw HypothesisError(d.str() + " is not a weighted Dynkin diagram of " +
                            d.type.str() + ": coefficient a_" +
                            std::to_string(i + 1) + " = " + x[i].str() +
                            " is not an integer");
    out[i] = x[i].num();
  }
  return out;
}

namespace {

// Degree of a positive root against lambda_Delta: the pairing is linear in
// the root, so it is just the label-weighted coefficient sum.
int root_degree(const std::vector<int>& coeffs, const std::vector<int>& labels) {
  int s = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * labels[i];
  return s;
}

}  // namespace

int grading_dimension(const WeightedDynkinDiagram& d, int degree) {
  const RootSystem rs(d.type);
  int count = degree == 0 ? d.type.rank : 0;
  const int want = std::abs(degree);
  // Positive roots pair to >= 0; negatives mirror them, so degree 0 counts
  // each zero-degree positive root twice and |degree| > 0 counts once.
  for (const auto& alpha : rs.positive_roots())
    if (root_degree(alpha, d.labels) == want) count += degree == 0 ? 2 : 1;
  return count;
}

int orbit_dimension(const WeightedDynkinDiagram& d) {
  const RootSystem rs(d.type);
  return rs.dimension() - grading_dimension(d, 0) - grading_dimension(d, 1);
}

}  // namespace nilorbit
