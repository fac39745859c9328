#pragma once

#include <cstdint>
#include <vector>

#include "ept/partition.hpp"
#include "ept/sample_space.hpp"
#include "ept/sym_int.hpp"
#include "ept/tolerances.hpp"

/// Brute-force certification oracles.  Everything here deliberately avoids
/// the algorithms of the main library (restricted growth strings instead of
/// recursive block assembly, principal minors and random quadratic forms
/// instead of an eigensolver, raw cell counting instead of the symmetric
/// integer-function arithmetic) so that one bug cannot hide in both paths.
namespace ept::oracle {

struct EnumerationBudget {
  int max_n = 6;
  std::uint64_t max_items = 10'000'000;
};

/// Every partition of the space — incomplete and empty included — exactly
/// once, by enumerating support subsets (bitmask) and, per subset, its set
/// partitions (restricted growth strings).  Order is not the canonical
/// global order; sort if one is needed.  Throws CapExceededError past the
/// budget.
std::vector<Partition> enumerate_all_partitions(const SampleSpace& space,
                                                const EnumerationBudget& budget = {});

/// Complete partitions only, same machinery.
std::vector<Partition> enumerate_complete_partitions(const SampleSpace& space,
                                                     const EnumerationBudget& budget = {});

/// Bell number by the Bell-triangle recurrence (n <= 25; larger overflows).
std::uint64_t bell_number(int n);

/// Number of all partitions (incomplete and empty included) of an n-set:
/// sum over k of C(n,k) * B(k), computed with an independent Pascal
/// triangle.  Equals bell_number(n+1); the equality is itself a test.
std::uint64_t partial_partition_count(int n);

/// Exact integer equality on every cell of Omega^2.
bool pointwise_identity_oracle(const SymIntFunction& lhs, const SymIntFunction& rhs);

/// chi((A_1 u ... u A_s)^2) built cell by cell from raw membership tests.
std::vector<long long> union_square_cells(int n, const std::vector<std::vector<int>>& subsets);

/// sum_{i<j} chi((A_i u A_j)^2) - (s-2) * sum_i chi(A_i^2), built cell by
/// cell from raw membership tests — the right side of the disjoint-union
/// square identity, assembled without the function arithmetic it certifies.
std::vector<long long> pairwise_rhs_cells(int n, const std::vector<std::vector<int>>& subsets);

/// Positive semidefiniteness without an eigensolver: for n <= 3 the exact
/// characterization (every principal minor non-negative, within a
/// scale-relative tolerance); for larger n a deterministic probe sweep
/// (coordinate vectors and pair sums/differences) followed by 10^4 seeded
/// random quadratic forms f'Mf >= -tol * max(1, maxabs*n) * |f|^2.
/// The matrix must be symmetric (DomainError otherwise).
bool psd_oracle(const std::vector<double>& sym, int n, double tolerance = kPsdTolerance,
                std::uint64_t seed = kDefaultSeed);

}  // namespace ept::oracle
