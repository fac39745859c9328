#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ept/tolerances.hpp"

namespace ept {

/// A point of the probability simplex: non-negative entries summing to one
/// within tolerance.  Validated at construction (DomainError otherwise).
class ClassicalDistribution {
 public:
  explicit ClassicalDistribution(std::vector<double> probabilities,
                                 double tolerance = kStochasticTolerance);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_.at(static_cast<std::size_t>(i)); }
  const std::vector<double>& probabilities() const { return probs_; }

 private:
  std::vector<double> probs_;
};

/// A linear map preserving the simplex: non-negative matrix whose COLUMNS
/// each sum to one (note: much of the literature uses rows; files can carry
/// either orientation, see the loader).  Entry (i,j) is the weight with
/// which source state j feeds target state i.
class ProbabilityTransformation {
 public:
  /// Row-major n*n; validated (DomainError otherwise).
  ProbabilityTransformation(std::vector<double> column_stochastic, int n,
                            double tolerance = kStochasticTolerance);

  static ProbabilityTransformation identity(int n);
  /// The map sending (p_1..p_n) to (p_{pi(1)}..p_{pi(n)}) for a 0-based
  /// permutation pi.
  static ProbabilityTransformation permutation(const std::vector<int>& pi);

  int size() const { return n_; }
  double entry(int i, int j) const {
    return m_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(j)];
  }

  /// Matrix product this * inner: apply inner first, then this.
  ProbabilityTransformation compose(const ProbabilityTransformation& inner) const;

 private:
  std::vector<double> m_;
  int n_;
};

ClassicalDistribution apply(const ProbabilityTransformation& phi, const ClassicalDistribution& p);

/// Classification of a transformation.  Invertibility is decided by the
/// permutation criterion (invertible simplex maps are exactly the
/// permutations); the matrix-inverse route — inverse exists and is itself
/// non-negative column-stochastic — is computed independently as a
/// cross-check and reported alongside.
struct TransformationClass {
  bool deterministic = false;  // every column is a unit vector
  bool permutation = false;    // deterministic with pairwise distinct targets
  bool invertible = false;     // == permutation, by the classification
  bool inverse_route_invertible = false;
  bool inverse_route_agrees = false;
  std::vector<int> column_targets;  // for deterministic maps: target of each column
};
TransformationClass classify_transformation(const ProbabilityTransformation& phi,
                                            double tolerance = kStochasticTolerance);

/// Classification of a distribution.  The non-dissipative flag is computed
/// independently of the deterministic flag, by searching all permutations
/// for one mapping the distribution to a vertex; the two flags agreeing on
/// every input is the machine check of the classical no-go statement.
struct DistributionClass {
  bool deterministic = false;
  bool non_dissipative = false;
};
DistributionClass classify_distribution(const ClassicalDistribution& p,
                                        double tolerance = kStochasticTolerance);

/// A two-index family of transformations keyed by (later, earlier).
using TransformationFamily = std::map<std::pair<int, int>, ProbabilityTransformation>;

/// Chain-rule verification: for every s > r > t with (s,r) and (r,t)
/// present, (s,t) must be present (DomainError otherwise) and equal the
/// composition within tolerance.  A present (t,t) key must be the identity.
struct ChainReport {
  std::uint64_t triples_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
ChainReport check_chain(const TransformationFamily& family,
                        double tolerance = kStochasticTolerance);

/// Exhaustive enumeration of all n^n deterministic transformations,
/// counting the invertible ones and checking each against the classifier:
/// exactly n! invertible maps exist and each is a permutation.  This is the
/// machine-checked reason an invertible classical Markov process cannot
/// host non-deterministic evolution.
struct NoGoReport {
  int n = 0;
  std::uint64_t deterministic_maps = 0;  // n^n
  std::uint64_t invertible_count = 0;    // must equal n!
  std::uint64_t expected_invertible = 0; // n!
  bool all_invertible_are_permutations = false;
  bool classifier_agreement = false;  // classifier matches the bijection test
  bool ok() const {
    return invertible_count == expected_invertible && all_invertible_are_permutations &&
           classifier_agreement;
  }
};
/// n <= 8 (the enumeration is n^n).
NoGoReport cpt_no_go_certificate(int n);

}  // namespace ept
