#pragma once
// Brute-force verification over small finite fields and exact rational
// linear algebra: nilpotent enumeration, Jordan-type censuses, Frobenius
// fixed points, and centralizer dimensions. Everything here is independent
// of the diagram formulas it is used to check.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilorbit/fq.hpp"
#include "nilorbit/fq_matrix.hpp"
#include "nilorbit/partition.hpp"
#include "nilorbit/rational.hpp"

namespace nilorbit {

// Default enumeration policy: n <= 3 over any supported field, n = 4 only
// over F_2. NILORBIT_BUDGET=<count> replaces the policy with the plain cap
// q^(n^2) <= count. Exceeding the budget is an error, never a truncation.
struct EnumerationBudget {
  std::optional<std::uint64_t> state_cap;  // from NILORBIT_BUDGET when set

  static EnumerationBudget from_env();
  // Throws BudgetError (carrying the required count) when not allowed.
  void check(const FqField& field, int n) const;
};

enum class FrobeniusMap {
  standard,  // entrywise x -> x^p
  twisted,   // M -> -(M^(p))^T; needs k = 2 and trace-zero inputs
};

std::string map_name(FrobeniusMap map);
FqMatrix apply_map(const FqMatrix& m, FrobeniusMap map);

// Calls fn(index, matrix) for every nilpotent matrix, in index order.
// `threads` > 1 partitions the index space into contiguous ranges; results
// are merged in range order, so output is deterministic.
void for_each_nilpotent(const FqField& field, int n,
                        const std::function<void(std::uint64_t, const FqMatrix&)>& fn,
                        int threads = 1,
                        const EnumerationBudget& budget = EnumerationBudget::from_env());

// Materialized variant of the stream above.
std::vector<FqMatrix> enumerate_nilpotent(
    const FqField& field, int n, int threads = 1,
    const EnumerationBudget& budget = EnumerationBudget::from_env());

struct VerifyReport {
  int n = 0;
  int p = 0, k = 1;
  long long q = 0;
  FrobeniusMap map = FrobeniusMap::standard;
  std::string kernel;
  std::uint64_t scanned = 0;
  std::uint64_t nilpotent_total = 0;
  std::map<Partition, std::uint64_t> census;  // per Jordan type
  bool type_invariant = true;
  std::optional<FqMatrix> counterexample;
  // First Frobenius-fixed nilpotent of each Jordan type (twisted maps only;
  // filled when with_fixed_points is requested).
  std::map<Partition, std::optional<FqMatrix>> fixed_points;
};

// Enumerates every nilpotent matrix, checks that the chosen Frobenius map
// preserves the Jordan type of each, and tallies the census. For twisted
// maps with with_fixed_points set, also scans the full matrix space for a
// map-fixed nilpotent of every Jordan type of n.
VerifyReport verify_orbit_stability(
    const FqField& field, int n, FrobeniusMap map, int threads = 1,
    bool with_fixed_points = false,
    const EnumerationBudget& budget = EnumerationBudget::from_env());

// Exhaustive search for a twisted-Frobenius-fixed nilpotent of the given
// Jordan type over F_{p^2}; std::nullopt when the full scan finds none.
std::optional<FqMatrix> find_fixed_point(
    const Partition& jordan, const FqField& field,
    const EnumerationBudget& budget = EnumerationBudget::from_env());

enum class Ambient { gl, so };

// dim ker(X -> JX - XJ) on gl_n, or on so_m for the split symmetric form
// antidiag(1,...,1) (J must lie in that algebra). Exact rational ranks.
int centralizer_dim(const QMat& j, Ambient ambient);

// Rational nilpotent Jordan matrix of the given type.
QMat rational_jordan(const Partition& type);

// A nilpotent element of so_m (split form antidiag(1,...,1), m = p.total())
// with the given Jordan type; validated against both the form and the type.
QMat so_representative(const Partition& p);

// Jordan type of a nilpotent rational matrix via exact rank sequences.
Partition rational_jordan_type(const QMat& m);

}  // namespace nilorbit
