#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ept/errors.hpp"
#include "ept/measure.hpp"
#include "ept/oracle.hpp"
#include "ept/partition.hpp"
#include "ept/sample_space.hpp"
#include "ept/sym_int.hpp"

namespace {

ept::SampleSpace space_n(int n) { return ept::SampleSpace::with_size(n); }

ept::Partition part(const ept::SampleSpace& s, const std::string& literal) {
  return ept::parse_partition(s, literal);
}

}  // namespace

TEST_CASE("the brute-force enumeration lists every partition once") {
  const auto s1 = space_n(1);
  const auto tiny = ept::oracle::enumerate_all_partitions(s1);
  REQUIRE(tiny.size() == 2);
  CHECK(std::count_if(tiny.begin(), tiny.end(),
                      [](const ept::Partition& p) { return p.is_zero(); }) == 1);

  const auto s2 = space_n(2);
  auto five = ept::oracle::enumerate_all_partitions(s2);
  REQUIRE(five.size() == 5);
  std::sort(five.begin(), five.end());
  const std::vector<ept::Partition> expected{
      ept::Partition::zero(s2), part(s2, "e1"),      part(s2, "e1,e2"),
      part(s2, "e1 | e2"),      part(s2, "e2"),
  };
  auto sorted_expected = expected;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  CHECK(five == sorted_expected);

  for (int n = 1; n <= 6; ++n) {
    const auto all = ept::oracle::enumerate_all_partitions(space_n(n));
    CHECK(all.size() == ept::oracle::partial_partition_count(n));
    const std::set<ept::Partition> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
  }

  CHECK_THROWS_AS(ept::oracle::enumerate_all_partitions(space_n(7)), ept::CapExceededError);
  ept::oracle::EnumerationBudget small;
  small.max_n = 2;
  CHECK_THROWS_AS(ept::oracle::enumerate_all_partitions(space_n(3), small),
                  ept::CapExceededError);
  ept::oracle::EnumerationBudget strangled;
  strangled.max_items = 3;
  CHECK_THROWS_AS(ept::oracle::enumerate_all_partitions(space_n(3), strangled),
                  ept::CapExceededError);
}

TEST_CASE("complete partitions count to the Bell numbers") {
  for (int n = 1; n <= 6; ++n) {
    const auto complete = ept::oracle::enumerate_complete_partitions(space_n(n));
    CHECK(complete.size() == ept::oracle::bell_number(n));
    for (const auto& p : complete) CHECK(p.is_complete());
  }
  CHECK(ept::oracle::enumerate_complete_partitions(space_n(3)).size() == 5);
}

TEST_CASE("the Bell recurrence delivers the textbook values") {
  const std::vector<std::uint64_t> expected{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(ept::oracle::bell_number(static_cast<int>(n)) == expected[n]);
  }
  CHECK_THROWS_AS(ept::oracle::bell_number(26), ept::DomainError);
  CHECK_THROWS_AS(ept::oracle::bell_number(-1), ept::DomainError);
}

TEST_CASE("partial-partition counts shift the Bell sequence by one") {
  const std::vector<std::uint64_t> expected{2, 5, 15, 52, 203, 877};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(ept::oracle::partial_partition_count(static_cast<int>(i) + 1) == expected[i]);
  }
  for (int n = 0; n <= 12; ++n) {
    CHECK(ept::oracle::partial_partition_count(n) == ept::oracle::bell_number(n + 1));
  }
  CHECK_THROWS_AS(ept::oracle::partial_partition_count(25), ept::DomainError);
}

TEST_CASE("pointwise comparison is exact cell equality") {
  const auto s = space_n(3);
  const auto full = ept::SymIntFunction::square_indicator(s, {0, 1, 2});
  CHECK(ept::oracle::pointwise_identity_oracle(full, full));

  // One perturbed diagonal cell breaks the equality.
  auto bumped = full + ept::SymIntFunction::point_basis(s, 1);
  CHECK_FALSE(ept::oracle::pointwise_identity_oracle(full, bumped));

  // Functions over different spaces never compare equal.
  CHECK_FALSE(ept::oracle::pointwise_identity_oracle(
      full, ept::SymIntFunction::square_indicator(space_n(4), {0, 1, 2})));
}

TEST_CASE("raw-cell assembly matches the function arithmetic") {
  const auto s = space_n(4);
  const std::vector<std::vector<int>> family{{0, 2}, {1}, {3}};

  const auto lhs_cells = ept::oracle::union_square_cells(4, family);
  const auto rhs_cells = ept::oracle::pairwise_rhs_cells(4, family);
  CHECK(lhs_cells == rhs_cells);

  const auto chi = ept::SymIntFunction::square_indicator(s, {0, 1, 2, 3});
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(lhs_cells[static_cast<std::size_t>(x) * 4 + static_cast<std::size_t>(y)] ==
            chi.value(x, y));
    }
  }
}

TEST_CASE("the minor and quadratic-form oracle grades positivity") {
  CHECK(ept::oracle::psd_oracle({0.25, 0.25, 0.25, 0.25}, 2));
  CHECK_FALSE(ept::oracle::psd_oracle({1.0, -0.9, -0.9, 0.5}, 2));
  CHECK(ept::oracle::psd_oracle({1, 0, 0, 0, 1, 0, 0, 0, 1}, 3));
  CHECK(ept::oracle::psd_oracle({0.0}, 1));
  CHECK_FALSE(ept::oracle::psd_oracle({-1e-3}, 1));

  // Indefinite diagonal in the sampled regime (n >= 4).
  std::vector<double> indefinite(25, 0.0);
  for (int x = 0; x < 5; ++x) {
    indefinite[static_cast<std::size_t>(x) * 5 + static_cast<std::size_t>(x)] =
        x == 3 ? -1.0 : 1.0;
  }
  CHECK_FALSE(ept::oracle::psd_oracle(indefinite, 5));

  // Gram matrices pass at every size.
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 7; ++n) {
    std::vector<double> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (auto& value : g) value = 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0;
    std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) {
          dot += g[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(k)] *
                 g[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(k)];
        }
        m[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(y)] = dot;
      }
    }
    CHECK(ept::oracle::psd_oracle(m, n));
  }

  // Asymmetric input is a usage error, not a verdict.
  CHECK_THROWS_AS(ept::oracle::psd_oracle({1.0, 0.5, 0.4, 1.0}, 2), ept::DomainError);
}

TEST_CASE("oracle and eigensolver verdicts coincide on a mixed batch") {
  std::mt19937_64 rng(57);
  int agreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int x = 0; x < n; ++x) {
      for (int y = x; y < n; ++y) {
        const double value = 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0;
        m[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(y)] = value;
        m[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(x)] = value;
      }
    }
    const ept::QuadraticState state(space_n(n), m);
    const bool eigen_psd = state.validation().psd;
    const bool oracle_psd = ept::oracle::psd_oracle(m, n);
    // Verdicts may only differ inside the tolerance band around zero.
    if (eigen_psd != oracle_psd) {
      CHECK(std::abs(state.validation().lambda_min) <=
            100 * 1e-9 * std::max(1.0, state.validation().lambda_max));
    } else {
      ++agreements;
    }
  }
  CHECK(agreements > 150);
}
