#include "ept/measure.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "ept/errors.hpp"
#include "ept/sym_int.hpp"

namespace ept {

namespace {

Eigen::MatrixXd weighted_matrix(const SampleSpace& space, const std::vector<double>& p,
                                const std::vector<double>& nu) {
  const int n = space.size();
  Eigen::MatrixXd m(n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      m(x, y) = nu[static_cast<std::size_t>(x)] *
                p[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(y)] *
                nu[static_cast<std::size_t>(y)];
    }
  }
  return m;
}

bool matrix_psd(const Eigen::MatrixXd& m, double tol, double* lambda_min = nullptr,
                double* lambda_max = nullptr) {
  if (m.rows() == 0) {
    if (lambda_min) *lambda_min = 0.0;
    if (lambda_max) *lambda_max = 0.0;
    return true;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  const double hi = solver.eigenvalues().maxCoeff();
  if (lambda_min) *lambda_min = lo;
  if (lambda_max) *lambda_max = hi;
  return lo >= -tol * std::max(1.0, hi);
}

/// Sampled cross-check: matrices (lambda(A_i x A_j)) over random disjoint
/// families must be PSD whenever the weighted matrix is.
bool gram_families_psd(const Eigen::MatrixXd& m, double tol, std::uint64_t seed) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return true;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 24; ++trial) {
    const int s = 1 + static_cast<int>(rng() % 3u);
    std::vector<std::vector<int>> family(static_cast<std::size_t>(s));
    for (int x = 0; x < n; ++x) {
      const auto slot = rng() % static_cast<std::uint64_t>(s + 1);
      if (slot > 0) family[static_cast<std::size_t>(slot - 1)].push_back(x);
    }
    family.erase(std::remove_if(family.begin(), family.end(),
                                [](const std::vector<int>& a) { return a.empty(); }),
                 family.end());
    if (family.empty()) continue;
    const int k = static_cast<int>(family.size());
    Eigen::MatrixXd gram(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        double sum = 0.0;
        for (int x : family[static_cast<std::size_t>(i)]) {
          for (int y : family[static_cast<std::size_t>(j)]) sum += m(x, y);
        }
        gram(i, j) = sum;
      }
    }
    gram = ((gram + gram.transpose()) / 2.0).eval();
    if (!matrix_psd(gram, tol)) return false;
  }
  return true;
}

}  // namespace

QuadraticState::QuadraticState(SampleSpace space, std::vector<double> p,
                               std::vector<double> weights, double psd_tolerance)
    : space_(std::move(space)), p_(std::move(p)), nu_(std::move(weights)), tol_(psd_tolerance) {
  const int n = space_.size();
  if (p_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw DomainError("coefficient matrix size does not match the sample space");
  }
  if (nu_.empty()) nu_.assign(static_cast<std::size_t>(n), 1.0);
  if (nu_.size() != static_cast<std::size_t>(n)) {
    throw DomainError("weight vector length does not match the sample space");
  }
  for (int x = 0; x < n; ++x) {
    const double w = nu_[static_cast<std::size_t>(x)];
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw DomainError("weights must be strictly positive and finite; nu(" + space_.label(x) +
                        ") = " + std::to_string(w));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const double xy = p_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(y)];
      const double yx = p_[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(x)];
      if (xy != yx) {
        throw DomainError("coefficient matrix is not symmetric at (" + space_.label(x) + "," +
                          space_.label(y) + "); writers must symmetrize exactly");
      }
    }
  }
  if (!(tol_ >= 0.0)) throw DomainError("the positivity tolerance must be non-negative");

  const Eigen::MatrixXd m = weighted_matrix(space_, p_, nu_);
  validation_.psd = matrix_psd(m, tol_, &validation_.lambda_min, &validation_.lambda_max);
  validation_.trace = n == 0 ? 0.0 : m.trace();
  validation_.positive_trace =
      validation_.trace > 0.0 &&
      validation_.trace > tol_ * std::max(0.0, validation_.lambda_max);
  validation_.gram_cross_check = !validation_.psd || gram_families_psd(m, tol_, kDefaultSeed);
}

QuadraticState QuadraticState::scaled(double k) const {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("states rescale by strictly positive finite factors only");
  }
  std::vector<double> q = p_;
  for (auto& v : q) v *= k;
  return QuadraticState(space_, std::move(q), nu_, tol_);
}

namespace {

/// Negative results within this band of zero are rounding noise; beyond it
/// they falsify strong positivity.
double clamp_band(const QuadraticState& s) {
  const auto& v = s.validation();
  return s.psd_tolerance() * std::max(std::abs(v.lambda_min), std::abs(v.lambda_max)) *
         static_cast<double>(std::max(1, s.space().size()));
}

}  // namespace

double measure_of(const QuadraticState& s, const Partition& e) {
  require_same_space(s.space(), e.space());
  double total = 0.0;
  for (const auto& block : e.blocks()) {
    for (int x : block) {
      for (int y : block) total += s.weighted(x, y);
    }
  }
  if (total < 0.0) {
    if (total < -clamp_band(s)) {
      throw ValidationError("event '" + format_partition(e) + "' measures " +
                            std::to_string(total) +
                            "; the state is not strongly positive");
    }
    total = 0.0;
  }
  return total;
}

double lambda_of(const QuadraticState& s, const std::vector<std::pair<int, int>>& cells) {
  std::vector<std::pair<int, int>> set = cells;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  double total = 0.0;
  for (const auto& [x, y] : set) {
    if (x < 0 || x >= s.space().size() || y < 0 || y >= s.space().size()) {
      throw DomainError("cell (" + std::to_string(x) + "," + std::to_string(y) +
                        ") outside the sample space square");
    }
    total += s.weighted(x, y);
  }
  return total;
}

double lambda_of(const QuadraticState& s, const STSet& r) {
  require_same_space(s.space(), r.space());
  return lambda_of(s, r.pairs());
}

double lambda_product(const QuadraticState& s, const std::vector<int>& a,
                      const std::vector<int>& b) {
  std::vector<std::pair<int, int>> cells;
  for (int x : a) {
    for (int y : b) cells.emplace_back(x, y);
  }
  return lambda_of(s, cells);
}

QuadraticState distribution_from_measure(const SampleSpace& space,
                                         const std::vector<double>& singleton_values,
                                         const std::vector<double>& dyad_values,
                                         std::vector<double> weights) {
  const int n = space.size();
  if (singleton_values.size() != static_cast<std::size_t>(n)) {
    throw DomainError("expected one singleton value per outcome");
  }
  if (dyad_values.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) {
    throw DomainError("expected one dyad value per unordered pair of outcomes");
  }
  std::vector<double> nu = weights;
  if (nu.empty()) nu.assign(static_cast<std::size_t>(n), 1.0);
  std::vector<double> p(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  const auto at = [n](int x, int y) {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y);
  };
  for (int x = 0; x < n; ++x) {
    p[at(x, x)] = singleton_values[static_cast<std::size_t>(x)] /
                  (nu[static_cast<std::size_t>(x)] * nu[static_cast<std::size_t>(x)]);
    for (int y = x + 1; y < n; ++y) {
      const std::size_t k = BasisCoefficients::pair_index(n, x, y);
      const double off = (dyad_values[k] - singleton_values[static_cast<std::size_t>(x)] -
                          singleton_values[static_cast<std::size_t>(y)]) /
                         (2.0 * nu[static_cast<std::size_t>(x)] * nu[static_cast<std::size_t>(y)]);
      p[at(x, y)] = off;
      p[at(y, x)] = off;
    }
  }
  return QuadraticState(space, std::move(p), std::move(weights));
}

bool is_regular(const QuadraticState& s, const Context& k) {
  const double pu = measure_of(s, k.universe().partition());
  return pu > kRegularityTolerance * std::max(s.trace(), 0.0) && pu > 0.0;
}

double frequency(const QuadraticState& s, const Context& k, const Partition& e) {
  if (!k.contains(e)) {
    throw DomainError("event '" + format_partition(e) + "' is not a member of the context of '" +
                      format_partition(k.universe().partition()) + "'");
  }
  const double pu = measure_of(s, k.universe().partition());
  if (!(pu > kRegularityTolerance * std::max(s.trace(), 0.0)) || !(pu > 0.0)) {
    throw ValidationError("context of '" + format_partition(k.universe().partition()) +
                          "' is irregular for this state (P(universe) = " + std::to_string(pu) +
                          "): this context never happens");
  }
  return measure_of(s, e) / pu;
}

namespace {

/// Visits every partition (complete, incomplete, and empty) of the space:
/// each outcome in turn is left out, appended to an existing block, or
/// opens a new block.  Local to this checker; the library's universe
/// enumeration and the brute-force oracle use different schemes.
void visit_partial_partitions(const SampleSpace& space, int next,
                              std::vector<std::vector<int>>& blocks,
                              const std::function<void(const Partition&)>& visit) {
  if (next == space.size()) {
    visit(Partition(space, blocks));
    return;
  }
  visit_partial_partitions(space, next + 1, blocks, visit);  // leave `next` out
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(next);
    visit_partial_partitions(space, next + 1, blocks, visit);
    blocks[b].pop_back();
  }
  blocks.push_back({next});
  visit_partial_partitions(space, next + 1, blocks, visit);
  blocks.pop_back();
}

}  // namespace

MeasureVerdict validate_extended_measure(const SampleSpace& space,
                                         const std::function<double(const Partition&)>& eval,
                                         double tolerance) {
  if (space.size() > 5) {
    throw CapExceededError("extended-measure validation enumerates every partition; capped at 5 "
                           "outcomes, got " + std::to_string(space.size()));
  }
  MeasureVerdict verdict;
  const double scale = std::max(1.0, std::abs(eval(Partition(space, [&] {
    std::vector<std::vector<int>> singletons;
    for (int x = 0; x < space.size(); ++x) singletons.push_back({x});
    return singletons;
  }()))));
  const double tol = tolerance * scale;

  std::vector<std::vector<int>> blocks;
  visit_partial_partitions(space, 0, blocks, [&](const Partition& a) {
    ++verdict.events_checked;
    const double value = eval(a);
    if (a.is_zero() && std::abs(value) > tol) {
      verdict.violations.push_back("the impossible event measures " + std::to_string(value) +
                                   ", not 0");
      return;
    }
    if (value < -tol) {
      verdict.violations.push_back("event '" + format_partition(a) + "' measures " +
                                   std::to_string(value) + " < 0");
    }
    double atom_sum = 0.0;
    for (const auto& block : a.blocks()) {
      atom_sum += eval(Partition(space, {block}));
    }
    if (std::abs(value - atom_sum) > tol) {
      verdict.violations.push_back("event '" + format_partition(a) + "' measures " +
                                   std::to_string(value) + " but its atoms sum to " +
                                   std::to_string(atom_sum));
    }
  });
  return verdict;
}

double quadratic_identity_residual(const QuadraticState& s,
                                   const std::vector<std::vector<int>>& disjoint_subsets) {
  std::vector<char> seen(static_cast<std::size_t>(s.space().size()), 0);
  std::vector<int> all;
  for (const auto& subset : disjoint_subsets) {
    for (int x : subset) {
      if (x < 0 || x >= s.space().size()) {
        throw DomainError("outcome index " + std::to_string(x) + " outside sample space");
      }
      if (seen[static_cast<std::size_t>(x)]) {
        throw DomainError("subsets must be pairwise disjoint; outcome '" + s.space().label(x) +
                          "' repeats");
      }
      seen[static_cast<std::size_t>(x)] = 1;
      all.push_back(x);
    }
  }
  const auto square_measure = [&s](std::vector<int> subset) {
    if (subset.empty()) return 0.0;
    return measure_of(s, Partition(s.space(), {std::move(subset)}));
  };
  const auto count = static_cast<double>(disjoint_subsets.size());
  double residual = square_measure(all);
  for (std::size_t i = 0; i < disjoint_subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < disjoint_subsets.size(); ++j) {
      std::vector<int> both = disjoint_subsets[i];
      both.insert(both.end(), disjoint_subsets[j].begin(), disjoint_subsets[j].end());
      residual -= square_measure(std::move(both));
    }
    residual += (count - 2.0) * square_measure(disjoint_subsets[i]);
  }
  return residual;
}

StateBoundsReport state_bounds_check(const QuadraticState& s, std::uint64_t seed) {
  StateBoundsReport report;
  const int n = s.space().size();
  const auto& v = s.validation();
  const double scale = std::max(1.0, v.lambda_max);

  report.max_entry_violation = 0.0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const double gap = s.weighted(x, y) * s.weighted(x, y) - s.weighted(x, x) * s.weighted(y, y);
      report.max_entry_violation = std::max(report.max_entry_violation, gap);
    }
  }
  report.entrywise_cauchy_schwarz =
      report.max_entry_violation <= s.psd_tolerance() * scale * scale;

  report.opnorm_le_trace =
      v.lambda_max <= v.trace + s.psd_tolerance() * std::max(v.lambda_max, v.trace);

  // A strongly positive state with positive trace always has a positive
  // diagonal entry; the wider searches are belt and braces.
  const double positive_floor = kRegularityTolerance * std::max(v.trace, 0.0);
  const auto try_witness = [&](std::vector<int> subset) {
    if (report.positive_witness_found) return;
    if (measure_of(s, Partition(s.space(), {subset})) > positive_floor) {
      report.positive_witness_found = true;
      report.witness = std::move(subset);
    }
  };
  for (int x = 0; x < n && !report.positive_witness_found; ++x) try_witness({x});
  for (int x = 0; x < n && !report.positive_witness_found; ++x) {
    for (int y = x + 1; y < n && !report.positive_witness_found; ++y) try_witness({x, y});
  }
  if (!report.positive_witness_found && n > 0) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) all[static_cast<std::size_t>(x)] = x;
    try_witness(std::move(all));
  }

  const double lambda_slack =
      s.psd_tolerance() * scale * scale * static_cast<double>(std::max(1, n * n));
  report.max_lambda_violation = 0.0;
  const auto check_pair = [&](const std::vector<int>& a, const std::vector<int>& b) {
    const double cross = lambda_product(s, a, b);
    const double gap = cross * cross - lambda_product(s, a, a) * lambda_product(s, b, b);
    report.max_lambda_violation = std::max(report.max_lambda_violation, gap);
  };
  if (n <= 5) {
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      for (int x = 0; x < n; ++x) {
        if (mask & (1u << x)) subset.push_back(x);
      }
      subsets.push_back(std::move(subset));
    }
    for (const auto& a : subsets) {
      for (const auto& b : subsets) check_pair(a, b);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> a, b;
      for (int x = 0; x < n; ++x) {
        if (rng() & 1u) a.push_back(x);
        if (rng() & 1u) b.push_back(x);
      }
      if (a.empty() || b.empty()) continue;
      check_pair(a, b);
    }
  }
  report.lambda_cauchy_schwarz = report.max_lambda_violation <= lambda_slack;
  return report;
}

QuadraticState two_slit_classical_state(const TwoSlit& slit) {
  const int n = slit.space.size();
  std::vector<double> p(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int x = 0; x < n; ++x) {
    p[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)] =
        1.0 / static_cast<double>(n);
  }
  return QuadraticState(slit.space, std::move(p));
}

QuadraticState two_slit_interference_state(const TwoSlit& slit) {
  const int n = slit.space.size();
  const int positions = n / 2;
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  for (int x = 0; x < positions; ++x) {
    v[static_cast<std::size_t>(2 * x)] = 0.5;                          // slit 1
    v[static_cast<std::size_t>(2 * x + 1)] = (x % 2 == 0) ? 0.5 : -0.5;  // slit 2
  }
  std::vector<double> p(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
          v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    }
  }
  return QuadraticState(slit.space, std::move(p));
}

}  // namespace ept
