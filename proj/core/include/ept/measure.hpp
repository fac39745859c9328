#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ept/context.hpp"
#include "ept/partition.hpp"
#include "ept/sample_space.hpp"
#include "ept/stset.hpp"
#include "ept/tolerances.hpp"

namespace ept {

/// Result of validating a state at construction time.
struct StateValidation {
  bool psd = false;             // lambda_min >= -tol * max(1, lambda_max)
  bool positive_trace = false;  // weighted trace strictly positive
  bool gram_cross_check = true; // sampled matrices (lambda(A_i x A_j)) are PSD
  double lambda_min = 0.0;      // of the weighted coefficient matrix
  double lambda_max = 0.0;
  double trace = 0.0;           // sum of p(x,x) * nu_x^2
  /// Member of the state space: strongly positive with positive trace.
  bool ok() const { return psd && positive_trace; }
};

/// A quadratic probability measure: a symmetric coefficient matrix p over
/// the sample space together with positive per-outcome weights nu (counting
/// measure by default).  Events evaluate as P(e) = sum over blocks B of
/// sum_{x,y in B} p(x,y) nu_x nu_y.  Construction validates eagerly and the
/// verdict is stored; invalid states are constructible (so they can be
/// inspected and reported) but flagged.
class QuadraticState {
 public:
  /// p is row-major n*n and must be exactly symmetric; weights must be
  /// strictly positive (empty means all ones).  Throws DomainError on
  /// structural problems; numeric validity lands in validation().
  QuadraticState(SampleSpace space, std::vector<double> p, std::vector<double> weights = {},
                 double psd_tolerance = kPsdTolerance);

  const SampleSpace& space() const { return space_; }
  double p(int x, int y) const {
    return p_[static_cast<std::size_t>(x) * static_cast<std::size_t>(space_.size()) +
              static_cast<std::size_t>(y)];
  }
  double weight(int x) const { return nu_[static_cast<std::size_t>(x)]; }
  /// nu_x * p(x,y) * nu_y — the entry actually summed by measures.
  double weighted(int x, int y) const { return weight(x) * p(x, y) * weight(y); }
  double psd_tolerance() const { return tol_; }
  const StateValidation& validation() const { return validation_; }
  /// Weighted trace, the total mass scale of the state.
  double trace() const { return validation_.trace; }

  /// The same measure rescaled by k > 0 (revalidated; verdicts are scale
  /// invariant by construction of the tolerances).
  QuadraticState scaled(double k) const;

 private:
  SampleSpace space_;
  std::vector<double> p_;
  std::vector<double> nu_;
  double tol_;
  StateValidation validation_;
};

/// Stored validation of the state (computed once at construction).
inline const StateValidation& check_strong_positivity(const QuadraticState& s) {
  return s.validation();
}

/// P(e): sum of the weighted matrix over each block's square.  Results
/// within tolerance below zero clamp to zero; results beyond that throw
/// ValidationError, signalling a state that is not strongly positive.
double measure_of(const QuadraticState& s, const Partition& e);

/// Signed measure of an arbitrary set of cells of Omega^2 (duplicates
/// collapse: the input is a set).
double lambda_of(const QuadraticState& s, const std::vector<std::pair<int, int>>& cells);
/// Signed measure of a symmetric-transitive set.
double lambda_of(const QuadraticState& s, const STSet& r);
/// lambda over the rectangle A x B (index lists; duplicates collapse).
double lambda_product(const QuadraticState& s, const std::vector<int>& a,
                      const std::vector<int>& b);

/// Reconstructs the coefficient matrix from measured atoms:
/// p(x,x) = P({x}^2) / nu_x^2 and
/// p(x,y) = [P({x,y}^2) - P({x}^2) - P({y}^2)] / (2 nu_x nu_y).
/// singleton_values has one entry per outcome; dyad_values one entry per
/// unordered pair x<y, indexed like BasisCoefficients::pair_index.
/// The state is constructed even when not strongly positive (flagged).
QuadraticState distribution_from_measure(const SampleSpace& space,
                                         const std::vector<double>& singleton_values,
                                         const std::vector<double>& dyad_values,
                                         std::vector<double> weights = {});

/// F_K(e) = P(e) / P(u_K) for a member event of a regular context.
/// Throws DomainError when e is not in k, ValidationError when k is
/// irregular for s (P(u_K) below the regularity threshold).
double frequency(const QuadraticState& s, const Context& k, const Partition& e);

/// True when P(u_K) clears the relative regularity threshold.
bool is_regular(const QuadraticState& s, const Context& k);

/// Verdict of checking an arbitrary event evaluation against the extended
/// measure conditions over every partition of a small space: empty event
/// measures zero, values are non-negative, and every event equals the sum
/// of its one-block atoms.
struct MeasureVerdict {
  std::uint64_t events_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
MeasureVerdict validate_extended_measure(const SampleSpace& space,
                                         const std::function<double(const Partition&)>& eval,
                                         double tolerance = kIdentityTolerance);

/// Signed residual of the disjoint-union measure identity
///   P((A_1 u...u A_s)^2) - [ sum_{i<j} P((A_i u A_j)^2) - (s-2) sum P(A_i^2) ].
/// Throws DomainError on overlapping subsets.
double quadratic_identity_residual(const QuadraticState& s,
                                   const std::vector<std::vector<int>>& disjoint_subsets);

/// The four bound checks for a validated state: entrywise Cauchy-Schwarz,
/// largest eigenvalue at most the trace, existence of a positive-measure
/// event, and Cauchy-Schwarz for lambda over rectangles (exhaustive subset
/// pairs when the space is small, seeded samples otherwise).
struct StateBoundsReport {
  bool entrywise_cauchy_schwarz = false;
  bool opnorm_le_trace = false;
  bool positive_witness_found = false;
  bool lambda_cauchy_schwarz = false;
  std::vector<int> witness;           // subset with positive measure
  double max_entry_violation = 0.0;   // max of M(x,y)^2 - M(x,x)M(y,y)
  double max_lambda_violation = 0.0;  // max of lambda(AxB)^2 - lambda(A^2)lambda(B^2)
  bool ok() const {
    return entrywise_cauchy_schwarz && opnorm_le_trace && positive_witness_found &&
           lambda_cauchy_schwarz;
  }
};
StateBoundsReport state_bounds_check(const QuadraticState& s, std::uint64_t seed = kDefaultSeed);

/// Built-in demonstration states over a two-slit space with n positions
/// (2n outcomes).  The classical state is diagonal with uniform entries
/// 1/(2n): no off-diagonal terms, so the per-position frequency is flat in
/// every context.  The interference state is the rank-one state v v^T with
/// v = 1/2 on every slit-1 outcome and alternating +1/2, -1/2 on slit-2
/// outcomes (plus at position 1): positions where the two contributions
/// agree light up under the dyadic context, positions where they cancel go
/// dark, while the singleton context still sees flat frequencies.
QuadraticState two_slit_classical_state(const TwoSlit& slit);
QuadraticState two_slit_interference_state(const TwoSlit& slit);

}  // namespace ept
