#pragma once
// Frobenius twist classes per type, stability of orbits under a twist,
// the induced permutation of orbit labels, and rationality reports.
//
// A Frobenius morphism splits as a diagram automorphism composed with a
// split Frobenius; only the automorphism decides orbit stability, so a
// descriptor is just a named twist.

#include <string>
#include <vector>

#include "nilorbit/dynkin.hpp"
#include "nilorbit/orbits.hpp"
#include "nilorbit/weighted_diagram.hpp"

namespace nilorbit {

struct FrobeniusDescriptor {
  DynkinType type;
  DiagramAutomorphism twist;
  std::string name;         // "F0", "F1", ...
  std::string description;  // "split", "twist (34)", ...

  friend bool operator==(const FrobeniusDescriptor&,
                         const FrobeniusDescriptor&) = default;
};

// Representatives of the twist classes: one (split) for A1/B/C/G2/F4/E7/E8,
// two for A_n (n>1) / D_n (n>=5) / E6, three for D4 (id, (34), (13)).
std::vector<FrobeniusDescriptor> frobenius_classes(DynkinType t);

// Accepts "F0"/"split", "F1"/"twisted", "F2", and for D4 also "F3"
// (the twist (14), equivalent to F2 but acting differently on labels).
FrobeniusDescriptor frobenius_by_name(DynkinType t, const std::string& name);

// True iff the twist fixes the diagram nodewise. Works for any family,
// which is how caller-supplied diagrams (e.g. E6) are handled.
bool twist_fixes(const FrobeniusDescriptor& f, const WeightedDynkinDiagram& d);

// True iff the orbit's diagram is invariant under the twist (split twists
// stabilize everything). Types A and D.
bool is_stable(const OrbitLabel& label, const FrobeniusDescriptor& f);

// The label whose diagram is the twisted diagram of `label`.
OrbitLabel orbit_image(const OrbitLabel& label, const FrobeniusDescriptor& f);

// The permutation of orbit_labels(t) induced by the twist, as (from, to)
// pairs in canonical label order.
std::vector<std::pair<OrbitLabel, OrbitLabel>> orbit_action(
    const FrobeniusDescriptor& f);

struct StabilityReport {
  OrbitLabel orbit;
  std::string frobenius;
  bool stable;
  OrbitLabel image;
  bool has_rational_point;  // equals `stable`
};

struct RationalityReport {
  DynkinType type;
  std::string frobenius;
  int p;
  long long q;
  bool p_ge_coxeter;  // when true the nilpotent cone equals the restricted one
  std::vector<StabilityReport> reports;
};

// One report per orbit label. Requires p prime and good for t with p > 3,
// and q a power of p.
RationalityReport rationality_report(DynkinType t, const FrobeniusDescriptor& f,
                                     int p, long long q);

}  // namespace nilorbit
