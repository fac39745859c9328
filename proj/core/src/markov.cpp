#include "ept/markov.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ept/errors.hpp"

namespace ept {

ClassicalDistribution::ClassicalDistribution(std::vector<double> probabilities, double tolerance)
    : probs_(std::move(probabilities)) {
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= -tolerance) || !std::isfinite(probs_[i])) {
      throw DomainError("probability " + std::to_string(i + 1) + " is " +
                        std::to_string(probs_[i]) + ", not non-negative");
    }
    sum += probs_[i];
  }
  if (std::abs(sum - 1.0) > tolerance * static_cast<double>(std::max<std::size_t>(1, probs_.size()))) {
    throw DomainError("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

ProbabilityTransformation::ProbabilityTransformation(std::vector<double> column_stochastic, int n,
                                                     double tolerance)
    : m_(std::move(column_stochastic)), n_(n) {
  if (n_ < 1 || m_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
    throw DomainError("transformation matrix must be square and non-empty");
  }
  for (int j = 0; j < n_; ++j) {
    double column_sum = 0.0;
    for (int i = 0; i < n_; ++i) {
      const double v = entry(i, j);
      if (!(v >= -tolerance) || !std::isfinite(v)) {
        throw DomainError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") is " + std::to_string(v) + ", not non-negative");
      }
      column_sum += v;
    }
    if (std::abs(column_sum - 1.0) > tolerance * static_cast<double>(n_)) {
      throw DomainError("column " + std::to_string(j + 1) + " sums to " +
                        std::to_string(column_sum) + ", not 1 (the convention here is "
                        "column-stochastic; row-stochastic files need orientation \"row\")");
    }
  }
}

ProbabilityTransformation ProbabilityTransformation::identity(int n) {
  std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
        1.0;
  }
  return ProbabilityTransformation(std::move(m), n);
}

ProbabilityTransformation ProbabilityTransformation::permutation(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<char> seen(pi.size(), 0);
  for (int v : pi) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  // Result_i = p_{pi(i)}, so row i has its one in column pi(i).
  std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
      static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = 1.0;
  }
  return ProbabilityTransformation(std::move(m), n);
}

ProbabilityTransformation ProbabilityTransformation::compose(
    const ProbabilityTransformation& inner) const {
  if (n_ != inner.n_) throw DomainError("composition needs matching dimensions");
  std::vector<double> m(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n_; ++k) sum += entry(i, k) * inner.entry(k, j);
      m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] =
          sum;
    }
  }
  return ProbabilityTransformation(std::move(m), n_);
}

ClassicalDistribution apply(const ProbabilityTransformation& phi, const ClassicalDistribution& p) {
  if (phi.size() != p.size()) throw DomainError("dimension mismatch between map and distribution");
  std::vector<double> out(static_cast<std::size_t>(phi.size()), 0.0);
  for (int i = 0; i < phi.size(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < phi.size(); ++j) sum += phi.entry(i, j) * p[j];
    out[static_cast<std::size_t>(i)] = sum;
  }
  return ClassicalDistribution(std::move(out));
}

TransformationClass classify_transformation(const ProbabilityTransformation& phi,
                                            double tolerance) {
  TransformationClass result;
  const int n = phi.size();

  result.deterministic = true;
  result.column_targets.assign(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    int target = -1;
    bool unit = true;
    for (int i = 0; i < n; ++i) {
      const double v = phi.entry(i, j);
      if (std::abs(v - 1.0) <= tolerance) {
        if (target >= 0) unit = false;
        target = i;
      } else if (std::abs(v) > tolerance) {
        unit = false;
      }
    }
    if (!unit || target < 0) {
      result.deterministic = false;
      break;
    }
    result.column_targets[static_cast<std::size_t>(j)] = target;
  }
  if (!result.deterministic) result.column_targets.clear();

  result.permutation = result.deterministic;
  if (result.permutation) {
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int t : result.column_targets) {
      if (hit[static_cast<std::size_t>(t)]) {
        result.permutation = false;
        break;
      }
      hit[static_cast<std::size_t>(t)] = 1;
    }
  }
  result.invertible = result.permutation;

  // Independent route: a numeric inverse that is again non-negative and
  // column-stochastic.  Agreement with the permutation criterion holds for
  // every stochastic matrix; divergence would expose a bug in either path.
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = phi.entry(i, j);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  result.inverse_route_invertible = false;
  if (lu.isInvertible()) {
    const Eigen::MatrixXd inv = lu.inverse();
    bool stochastic = true;
    for (int j = 0; j < n && stochastic; ++j) {
      double column_sum = 0.0;
      for (int i = 0; i < n; ++i) {
        if (inv(i, j) < -1e-6) {
          stochastic = false;
          break;
        }
        column_sum += inv(i, j);
      }
      if (stochastic && std::abs(column_sum - 1.0) > 1e-6) stochastic = false;
    }
    result.inverse_route_invertible = stochastic;
  }
  result.inverse_route_agrees = result.inverse_route_invertible == result.invertible;
  return result;
}

DistributionClass classify_distribution(const ClassicalDistribution& p, double tolerance) {
  DistributionClass result;
  const int n = p.size();

  int ones = 0;
  bool rest_zero = true;
  for (int i = 0; i < n; ++i) {
    if (std::abs(p[i] - 1.0) <= tolerance) {
      ++ones;
    } else if (std::abs(p[i]) > tolerance) {
      rest_zero = false;
    }
  }
  result.deterministic = ones == 1 && rest_zero;

  if (n > 8) {
    throw CapExceededError("non-dissipativity searches all n! permutations; capped at 8 states, "
                           "got " + std::to_string(n));
  }
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  result.non_dissipative = false;
  do {
    const ClassicalDistribution image = apply(ProbabilityTransformation::permutation(pi), p);
    int image_ones = 0;
    bool image_rest_zero = true;
    for (int i = 0; i < n; ++i) {
      if (std::abs(image[i] - 1.0) <= tolerance) {
        ++image_ones;
      } else if (std::abs(image[i]) > tolerance) {
        image_rest_zero = false;
      }
    }
    if (image_ones == 1 && image_rest_zero) {
      result.non_dissipative = true;
      break;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return result;
}

ChainReport check_chain(const TransformationFamily& family, double tolerance) {
  ChainReport report;
  int dim = -1;
  for (const auto& [key, phi] : family) {
    if (key.first < key.second) {
      throw DomainError("chain keys are (later, earlier); got (" + std::to_string(key.first) +
                        "," + std::to_string(key.second) + ")");
    }
    if (dim == -1) dim = phi.size();
    if (phi.size() != dim) throw DomainError("chain members must share one dimension");
  }
  const auto max_diff = [](const ProbabilityTransformation& a,
                           const ProbabilityTransformation& b) {
    double worst = 0.0;
    for (int i = 0; i < a.size(); ++i) {
      for (int j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a.entry(i, j) - b.entry(i, j)));
      }
    }
    return worst;
  };
  for (const auto& [key, phi] : family) {
    if (key.first == key.second) {
      ++report.triples_checked;
      const double gap = max_diff(phi, ProbabilityTransformation::identity(phi.size()));
      if (gap > tolerance) {
        report.violations.push_back("(" + std::to_string(key.first) + "," +
                                    std::to_string(key.second) +
                                    ") is present but differs from the identity by " +
                                    std::to_string(gap));
      }
    }
  }
  for (const auto& [sr_key, phi_sr] : family) {
    const auto [s, r] = sr_key;
    if (s == r) continue;
    for (const auto& [rt_key, phi_rt] : family) {
      const auto [r2, t] = rt_key;
      if (r2 != r || r2 == t) continue;
      const auto st = family.find({s, t});
      if (st == family.end()) {
        throw DomainError("chain rule needs (" + std::to_string(s) + "," + std::to_string(t) +
                          ") because (" + std::to_string(s) + "," + std::to_string(r) +
                          ") and (" + std::to_string(r) + "," + std::to_string(t) +
                          ") are present");
      }
      ++report.triples_checked;
      const double gap = max_diff(st->second, phi_sr.compose(phi_rt));
      if (gap > tolerance) {
        report.violations.push_back("(" + std::to_string(s) + "," + std::to_string(t) +
                                    ") differs from the composition through " +
                                    std::to_string(r) + " by " + std::to_string(gap));
      }
    }
  }
  return report;
}

NoGoReport cpt_no_go_certificate(int n) {
  if (n < 1) throw DomainError("the enumeration needs at least one state");
  if (n > 8) {
    throw CapExceededError("deterministic-map enumeration is n^n; capped at 8 states, got " +
                           std::to_string(n));
  }
  NoGoReport report;
  report.n = n;
  report.expected_invertible = 1;
  for (int k = 2; k <= n; ++k) report.expected_invertible *= static_cast<std::uint64_t>(k);
  report.all_invertible_are_permutations = true;
  report.classifier_agreement = true;

  // Column-target odometer over all n^n deterministic maps.
  std::vector<int> targets(static_cast<std::size_t>(n), 0);
  const bool classify_every_map = n <= 5;
  while (true) {
    ++report.deterministic_maps;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    bool bijective = true;
    for (int t : targets) {
      if (hit[static_cast<std::size_t>(t)]) bijective = false;
      hit[static_cast<std::size_t>(t)] = 1;
    }
    if (bijective) ++report.invertible_count;

    if (classify_every_map || bijective) {
      std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
      for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(targets[static_cast<std::size_t>(j)]) *
              static_cast<std::size_t>(n) +
          static_cast<std::size_t>(j)] = 1.0;
      }
      const TransformationClass c =
          classify_transformation(ProbabilityTransformation(std::move(m), n));
      if (!c.deterministic || c.permutation != bijective || c.invertible != bijective ||
          !c.inverse_route_agrees) {
        report.classifier_agreement = false;
      }
      if (bijective && !c.permutation) report.all_invertible_are_permutations = false;
    }

    int pos = n - 1;
    while (pos >= 0 && targets[static_cast<std::size_t>(pos)] == n - 1) {
      targets[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++targets[static_cast<std::size_t>(pos)];
  }
  return report;
}

}  // namespace ept
