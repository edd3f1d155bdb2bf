#include "nilorbit/orbits.hpp"

#include <algorithm>

#include "nilorbit/errors.hpp"

namespace nilorbit {

namespace {

bool valid_d_partition(const Partition& p) {
  for (int v = 2; v <= p.total(); v += 2)
    if (p.multiplicity(v) % 2 != 0) return false;
  return true;
}

std::string decoration_suffix(Decoration d) {
  switch (d) {
    case Decoration::none: return "";
    case Decoration::I: return ":I";
    case Decoration::II: return ":II";
  }
  return "";
}

}  // namespace

OrbitLabel OrbitLabel::make(DynkinType t, Partition p, Decoration d) {
  DynkinType::make(t.family, t.rank);
  switch (t.family) {
    case Family::A:
      if (p.total() != t.rank + 1)
        throw HypothesisError("type " + t.str() + " needs a partition of " +
                              std::to_string(t.rank + 1) + ", got " + p.str());
      if (d != Decoration::none)
        throw HypothesisError("type A labels carry no decoration");
      break;
    case Family::D: {
      if (p.total() != 2 * t.rank)
        throw HypothesisError("type " + t.str() + " needs a partition of " +
                              std::to_string(2 * t.rank) + ", got " + p.str());
      if (!valid_d_partition(p))
        throw HypothesisError(p.str() +
                              " is not a type-D partition (every even part "
                              "must occur with even multiplicity)");
      const bool ve = p.very_even();
      if (ve && d == Decoration::none)
        throw HypothesisError("very even partition " + p.str() +
                              " labels two orbits; a decoration I or II is required");
      if (!ve && d != Decoration::none)
        throw HypothesisError("partition " + p.str() +
                              " is not very even; no decoration is allowed");
      break;
    }
    default:
      throw HypothesisError("orbit parameterization for family " +
                            std::string(1, static_cast<char>(t.family)) +
                            " is not in scope (types A and D only)");
  }
  return OrbitLabel{t, std::move(p), d};
}

OrbitLabel OrbitLabel::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw HypothesisError("cannot parse orbit label '" + text + "'");
  DynkinType t = DynkinType::parse(text.substr(0, colon));
  std::string rest = text.substr(colon + 1);
  Decoration d = Decoration::none;
  if (rest.size() > 2 && rest.substr(rest.size() - 3) == ":II") {
    d = Decoration::II;
    rest = rest.substr(0, rest.size() - 3);
  } else if (rest.size() > 1 && rest.substr(rest.size() - 2) == ":I") {
    d = Decoration::I;
    rest = rest.substr(0, rest.size() - 2);
  }
  return make(t, Partition::parse(rest), d);
}

std::string OrbitLabel::str() const {
  return type.str() + ":" + partition.str() + decoration_suffix(decoration);
}

bool label_before(const OrbitLabel& a, const OrbitLabel& b) {
  if (a.partition.parts() != b.partition.parts())
    return Partition::lex_greater(a.partition, b.partition);
  return static_cast<int>(a.decoration) < static_cast<int>(b.decoration);
}

std::vector<OrbitLabel> orbit_labels(DynkinType t) {
  DynkinType::make(t.family, t.rank);
  std::vector<OrbitLabel> out;
  if (t.family == Family::A) {
    for (auto& p : Partition::all(t.rank + 1))
      out.push_back(OrbitLabel::make(t, p));
  } else if (t.family == Family::D) {
    for (auto& p : Partition::all(2 * t.rank)) {
      if (!valid_d_partition(p)) continue;
      if (p.very_even()) {
        out.push_back(OrbitLabel::make(t, p, Decoration::I));
        out.push_back(OrbitLabel::make(t, p, Decoration::II));
      } else {
        out.push_back(OrbitLabel::make(t, p));
      }
    }
  } else {
    throw HypothesisError("orbit parameterization for family " +
                          std::string(1, static_cast<char>(t.family)) +
                          " is not in scope (types A and D only)");
  }
  std::sort(out.begin(), out.end(), label_before);
  return out;
}

std::vector<OrbitLabel> closure(const OrbitLabel& label) {
  if (label.type.family == Family::D) {
    if (label.decoration != Decoration::none)
      throw HypothesisError("closure of decorated type-D orbits is out of scope");
    throw HypothesisError("closure is implemented for type A only");
  }
  if (label.type.family != Family::A)
    throw HypothesisError("closure is implemented for type A only");
  std::vector<OrbitLabel> out;
  for (auto& cand : orbit_labels(label.type))
    if (dominance_leq(cand.partition, label.partition)) out.push_back(cand);
  return out;
}

ClosurePoset closure_poset(std::vector<OrbitLabel> labels) {
  for (const auto& l : labels)
    if (l.type.family != Family::A)
      throw HypothesisError("closure posets are implemented for type A only");
  std::sort(labels.begin(), labels.end(), label_before);
  const int m = static_cast<int>(labels.size());
  std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j)
        less[i][j] = dominance_leq(labels[j].partition, labels[i].partition) &&
                     !(labels[i].partition == labels[j].partition);
  ClosurePoset poset;
  poset.labels = labels;
  // Transitive reduction: i covers j iff j < i with nothing strictly between.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!less[i][j]) continue;
      bool mid = false;
      for (int k = 0; k < m && !mid; ++k) mid = less[i][k] && less[k][j];
      if (!mid) poset.covers.emplace_back(i, j);
    }
  std::sort(poset.covers.begin(), poset.covers.end());
  return poset;
}

ClosurePoset closure_poset(DynkinType t) {
  if (t.family != Family::A)
    throw HypothesisError("closure posets are implemented for type A only");
  return closure_poset(orbit_labels(t));
}

}  // namespace nilorbit
