#include "nilorbit/frobenius.hpp"

#include <algorithm>
#include <map>

#include "nilorbit/errors.hpp"

namespace nilorbit {

namespace {

FrobeniusDescriptor split_descriptor(DynkinType t) {
  return {t, DiagramAutomorphism::identity(t), "F0", "split"};
}

// The order-2 outer twist where one exists.
DiagramAutomorphism standard_twist(DynkinType t) {
  switch (t.family) {
    case Family::A: {
      // Diagram reversal i -> n+1-i.
      DiagramAutomorphism a = DiagramAutomorphism::identity(t);
      for (int i = 0; i < t.rank; ++i) a.perm[i] = t.rank - 1 - i;
      if (!a.preserves_cartan())
        throw std::logic_error("type A reversal must preserve the Cartan matrix");
      return a;
    }
    case Family::D:
      return DiagramAutomorphism::transposition(t, t.rank - 1, t.rank);
    case Family::E: {
      if (t.rank != 6) break;
      DiagramAutomorphism a = DiagramAutomorphism::identity(t);
      std::swap(a.perm[0], a.perm[5]);
      std::swap(a.perm[2], a.perm[4]);
      if (!a.preserves_cartan())
        throw std::logic_error("E6 flip must preserve the Cartan matrix");
      return a;
    }
    default: break;
  }
  throw HypothesisError("type " + t.str() + " has no twisted Frobenius class");
}

}  // namespace

std::vector<FrobeniusDescriptor> frobenius_classes(DynkinType t) {
  DynkinType::make(t.family, t.rank);
  std::vector<FrobeniusDescriptor> out;
  out.push_back(split_descriptor(t));
  if (t.family == Family::D && t.rank == 4) {
    out.push_back({t, DiagramAutomorphism::transposition(t, 3, 4), "F1",
                   "twist (34)"});
    out.push_back({t, DiagramAutomorphism::transposition(t, 1, 3), "F2",
                   "twist (13)"});
    return out;
  }
  const bool has_twist = (t.family == Family::A && t.rank > 1) ||
                         (t.family == Family::D && t.rank >= 5) ||
                         (t.family == Family::E && t.rank == 6);
  if (has_twist) {
    auto tw = standard_twist(t);
    out.push_back({t, tw, "F1", "twist " + tw.cycle_str()});
  }
  return out;
}

FrobeniusDescriptor frobenius_by_name(DynkinType t, const std::string& name) {
  auto classes = frobenius_classes(t);
  if (name == "split") return classes[0];
  if (name == "twisted") {
    if (classes.size() < 2)
      throw HypothesisError("type " + t.str() +
                            " has no twisted Frobenius class");
    return classes[1];
  }
  for (const auto& c : classes)
    if (c.name == name) return c;
  if (name == "F3" && t.family == Family::D && t.rank == 4)
    return {t, DiagramAutomorphism::transposition(t, 1, 4), "F3", "twist (14)"};
  throw HypothesisError("unknown Frobenius class '" + name + "' for " + t.str());
}

bool twist_fixes(const FrobeniusDescriptor& f, const WeightedDynkinDiagram& d) {
  if (!(f.type == d.type))
    throw HypothesisError("Frobenius descriptor for " + f.type.str() +
                          " applied to a diagram of " + d.type.str());
  return apply_automorphism(f.twist, d) == d;
}

bool is_stable(const OrbitLabel& label, const FrobeniusDescriptor& f) {
  if (!(label.type == f.type))
    throw HypothesisError("orbit label and Frobenius descriptor disagree on type");
  if (f.twist.is_identity()) return true;  // split stabilizes every orbit
  return twist_fixes(f, diagram_of(label));
}

OrbitLabel orbit_image(const OrbitLabel& label, const FrobeniusDescriptor& f) {
  if (!(label.type == f.type))
    throw HypothesisError("orbit label and Frobenius descriptor disagree on type");
  if (f.twist.is_identity()) return label;
  const auto twisted = apply_automorphism(f.twist, diagram_of(label));
  // Kostant injectivity: the twisted diagram names a unique label.
  for (const auto& cand : orbit_labels(label.type))
    if (diagram_of(cand) == twisted) return cand;
  throw std::logic_error("twisted diagram of " + label.str() +
                         " matches no orbit label");
}

std::vector<std::pair<OrbitLabel, OrbitLabel>> orbit_action(
    const FrobeniusDescriptor& f) {
  std::vector<std::pair<OrbitLabel, OrbitLabel>> out;
  std::map<std::string, OrbitLabel> by_diagram;
  const auto labels = orbit_labels(f.type);
  for (const auto& l : labels) by_diagram.emplace(diagram_of(l).str(), l);
  for (const auto& l : labels) {
    const auto twisted = apply_automorphism(f.twist, diagram_of(l));
    const auto it = by_diagram.find(twisted.str());
    if (it == by_diagram.end())
      throw std::logic_error("twisted diagram of " + l.str() +
                             " matches no orbit label");
    out.emplace_back(l, it->second);
  }
  return out;
}

RationalityReport rationality_report(DynkinType t, const FrobeniusDescriptor& f,
                                     int p, long long q) {
  if (!(t == f.type))
    throw HypothesisError("type and Frobenius descriptor disagree");
  if (!is_prime(p))
    throw HypothesisError("characteristic p = " + std::to_string(p) +
                          " is not prime");
  if (p <= 3)
    throw HypothesisError("hypothesis p > 3 violated (p = " + std::to_string(p) +
                          ")");
  if (!good_prime(t, p))
    throw HypothesisError("p = " + std::to_string(p) + " is not good for " +
                          t.str());
  long long qq = q;
  if (qq < p) throw HypothesisError("q must be a power of p");
  while (qq > 1) {
    if (qq % p != 0)
      throw HypothesisError("q = " + std::to_string(q) +
                            " is not a power of p = " + std::to_string(p));
    qq /= p;
  }
  RationalityReport rep{t, f.name, p, q, p >= coxeter_number(t), {}};
  for (const auto& [from, to] : orbit_action(f)) {
    const bool stable = from == to;
    rep.reports.push_back({from, f.name, stable, to, stable});
  }
  return rep;
}

}  // namespace nilorbit
