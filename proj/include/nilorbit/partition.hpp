#pragma once
// Integer partitions in canonical weakly decreasing form, dominance order,
// exhaustive enumeration.

#include <compare>
#include <string>
#include <vector>

namespace nilorbit {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts descending, parts >= 1

  static Partition parse(const std::string& text);  // "[4,4]"
  // Every partition of `total`, in descending lexicographic order.
  static std::vector<Partition> all(int total);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  int count() const { return static_cast<int>(parts_.size()); }
  int multiplicity(int value) const;

  // All parts even, each value with even multiplicity.
  bool very_even() const;

  std::string str() const;  // "[4,4]"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  // Descending lexicographic order on parts; refines dominance.
  static bool lex_greater(const Partition& a, const Partition& b) {
    return a.parts_ > b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// Dominance order on partitions of equal total: a <= b iff every prefix sum
// of a is bounded by the corresponding prefix sum of b. Throws on unequal
// totals.
bool dominance_leq(const Partition& a, const Partition& b);

}  // namespace nilorbit
