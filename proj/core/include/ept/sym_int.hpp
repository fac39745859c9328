#pragma once

#include <cstddef>
#include <vector>

#include "ept/sample_space.hpp"
#include "ept/stset.hpp"

namespace ept {

/// A symmetric integer-valued function on Omega x Omega.  All arithmetic is
/// exact (64-bit); the identities this module checks are integer identities,
/// so residuals are exactly zero or meaningfully non-zero.
class SymIntFunction {
 public:
  /// The zero function.
  explicit SymIntFunction(SampleSpace space);
  /// Row-major n*n values; throws DomainError unless symmetric.
  SymIntFunction(SampleSpace space, std::vector<long long> values);

  /// Indicator of a symmetric-transitive set.
  static SymIntFunction indicator(const STSet& r);
  /// Indicator of subset x subset.
  static SymIntFunction square_indicator(const SampleSpace& space, const std::vector<int>& subset);
  /// Basis element for an off-diagonal pair: the indicator of {x,y}^2 (x != y).
  static SymIntFunction pair_basis(const SampleSpace& space, int x, int y);
  /// Basis element for a point: the indicator of {x}^2.
  static SymIntFunction point_basis(const SampleSpace& space, int x);
  /// f tensor f for an integer function f on Omega.
  static SymIntFunction tensor_square(const SampleSpace& space, const std::vector<long long>& f);

  const SampleSpace& space() const { return space_; }
  long long value(int x, int y) const {
    return values_[static_cast<std::size_t>(x) * static_cast<std::size_t>(space_.size()) +
                   static_cast<std::size_t>(y)];
  }
  bool is_zero() const;

  SymIntFunction& operator+=(const SymIntFunction& o);
  SymIntFunction& operator-=(const SymIntFunction& o);
  SymIntFunction& operator*=(long long k);
  friend SymIntFunction operator+(SymIntFunction a, const SymIntFunction& b) { return a += b; }
  friend SymIntFunction operator-(SymIntFunction a, const SymIntFunction& b) { return a -= b; }
  friend SymIntFunction operator*(long long k, SymIntFunction a) { return a *= k; }
  friend bool operator==(const SymIntFunction& a, const SymIntFunction& b) {
    return a.space_.same_as(b.space_) && a.values_ == b.values_;
  }

 private:
  SampleSpace space_;
  std::vector<long long> values_;
};

/// Integer coordinates of a symmetric function over the basis
/// { pair elements indexed by x<y } plus { point elements indexed by x }.
struct BasisCoefficients {
  std::vector<long long> point;  // one per outcome x
  std::vector<long long> pair;   // one per unordered pair x<y, see pair_index

  /// Flat index of the unordered pair x<y among all such pairs over n outcomes.
  static std::size_t pair_index(int n, int x, int y);
};

/// Unique integer coordinates: pair coefficient = f(x,y) for x<y, point
/// coefficient = f(x,x) - sum over z != x of f(x,z).
BasisCoefficients basis_decompose(const SymIntFunction& f);
SymIntFunction basis_recompose(const SampleSpace& space, const BasisCoefficients& c);

/// Residual of the disjoint-union indicator identity for pairwise disjoint
/// subsets A_1..A_s:
///   chi((A_1 u ... u A_s)^2) - [ sum_{i<j} chi((A_i u A_j)^2)
///                                - (s-2) * sum_i chi(A_i^2) ].
/// Empty sums count as zero, so s = 0 and s = 1 degenerate gracefully.
/// Identically zero by contract.  Throws DomainError on overlapping subsets.
SymIntFunction plus_identity_residual(const SampleSpace& space,
                                      const std::vector<std::vector<int>>& disjoint_subsets);

/// Residual of the tensor-square identity for integer functions f_1..f_s on
/// Omega:
///   (sum f_i)^{x2} - [ sum_{i<j} (f_i+f_j)^{x2} - (s-2) * sum_i f_i^{x2} ].
SymIntFunction tensor_identity_residual(const SampleSpace& space,
                                        const std::vector<std::vector<long long>>& fs);

/// Residual of additivity in the second slot of the polarization form
/// B(f,g) = (f+g)^{x2} - f^{x2} - g^{x2}:  B(f,g+h) - B(f,g) - B(f,h).
SymIntFunction form_linearity_residual(const SampleSpace& space, const std::vector<long long>& f,
                                       const std::vector<long long>& g,
                                       const std::vector<long long>& h);

}  // namespace ept
