#pragma once
// Nilpotent orbit labels: partitions with type-dependent validity, very-even
// I/II decorations, closures and closure posets in the dominance order.
//
// Serialized label grammar: `<family><rank>:[p1,p2,...]` with an optional
// `:I` / `:II` suffix, e.g. "A3:[2,2]" or "D4:[4,4]:I".

#include <string>
#include <utility>
#include <vector>

#include "nilorbit/dynkin.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

enum class Decoration : unsigned char { none, I, II };

struct OrbitLabel {
  DynkinType type;
  Partition partition;
  Decoration decoration = Decoration::none;

  // Validates against the type: A_n needs total n+1 and no decoration;
  // D_n needs total 2n, even parts in even multiplicity, and a decoration
  // exactly when the partition is very even. Other families are out of
  // scope and rejected.
  static OrbitLabel make(DynkinType t, Partition p,
                         Decoration d = Decoration::none);
  static OrbitLabel parse(const std::string& text);

  std::string str() const;

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

// Canonical output order: descending lexicographic partitions, I before II.
bool label_before(const OrbitLabel& a, const OrbitLabel& b);

// Complete duplicate-free label list for types A and D; very even partitions
// contribute an I and a II label. Throws for other families.
std::vector<OrbitLabel> orbit_labels(DynkinType t);

// Orbit closure for type A: every label dominated by the given one,
// in canonical order (the label itself first, the zero orbit last).
// Type D input is rejected (decorated closures are not defined here).
std::vector<OrbitLabel> closure(const OrbitLabel& label);

struct ClosurePoset {
  std::vector<OrbitLabel> labels;               // canonical order
  std::vector<std::pair<int, int>> covers;      // (i, j): labels[i] covers labels[j]
};

// Covering relations of the dominance order on the full label set (type A).
ClosurePoset closure_poset(DynkinType t);

// Covering relations restricted to an explicit set of type-A labels.
ClosurePoset closure_poset(std::vector<OrbitLabel> labels);

}  // namespace nilorbit
