#include <doctest.h>

#include <cmath>
#include <vector>

#include "ept/context.hpp"
#include "ept/errors.hpp"
#include "ept/measure.hpp"
#include "ept/partition.hpp"
#include "ept/randvar.hpp"
#include "ept/sample_space.hpp"

namespace {

ept::SampleSpace space_n(int n) { return ept::SampleSpace::with_size(n); }

ept::Partition part(const ept::SampleSpace& s, const std::string& literal) {
  return ept::parse_partition(s, literal);
}

double cell(const std::vector<double>& m, int n, int x, int y) {
  return m[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(y)];
}

}  // namespace

TEST_CASE("a variable needs one value per universe block") {
  const auto s = space_n(3);
  const ept::Context k(ept::Universe(part(s, "e1,e2 | e3")));
  CHECK_NOTHROW(ept::ContextRandomVariable(k, {1.0, 2.0}));
  CHECK_THROWS_AS(ept::ContextRandomVariable(k, {1.0}), ept::DomainError);
  CHECK_THROWS_AS(ept::ContextRandomVariable(k, {1.0, 2.0, 3.0}), ept::DomainError);
  const ept::ContextRandomVariable x(k, {1.5, -2.0});
  CHECK(x.block_value(0) == 1.5);
  CHECK(x.block_values() == std::vector<double>{1.5, -2.0});
}

TEST_CASE("the square extension is block-constant and zero elsewhere") {
  const auto s = space_n(3);

  // Constant one on the classical context marks exactly the diagonal.
  const ept::ContextRandomVariable diag_one(ept::Context::classical(s), {1, 1, 1});
  const auto m = diag_one.as_omega2_function();
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK(cell(m, 3, x, y) == (x == y ? 1.0 : 0.0));
    }
  }

  // Position index on the two-slit dyadic context fills each 2x2 block.
  const auto slit = ept::two_slit_space(2);
  const ept::ContextRandomVariable position(ept::Context(slit.dyadic), {1.0, 2.0});
  const auto cells = position.as_omega2_function();
  const int n = slit.space.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const bool same_position = x / 2 == y / 2;
      const double expected = same_position ? static_cast<double>(x / 2 + 1) : 0.0;
      CHECK(cell(cells, n, x, y) == expected);
    }
  }

  // One block means one constant over the whole square.
  const ept::ContextRandomVariable constant(ept::Context::irreducible(s), {2.5});
  for (double value : constant.as_omega2_function()) CHECK(value == 2.5);
}

TEST_CASE("expectations agree between the square and classical views") {
  const auto s = space_n(2);
  const ept::QuadraticState diag(s, {0.3, 0, 0, 0.7});
  const ept::ContextRandomVariable pick_first(ept::Context::classical(s), {1.0, 0.0});
  CHECK(ept::expectation(diag, pick_first) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(ept::expectation_via_cells(diag, pick_first) ==
        doctest::Approx(ept::expectation_via_frequencies(diag, pick_first)).epsilon(1e-12));

  // A constant variable has its constant as expectation in any regular context.
  const ept::QuadraticState bright(s, {0.25, 0.25, 0.25, 0.25});
  for (const auto& u : ept::enumerate_universes(s)) {
    const ept::ContextRandomVariable constant(
        ept::Context(u), std::vector<double>(static_cast<std::size_t>(u.block_count()), 2.5));
    if (!ept::is_regular(bright, ept::Context(u))) continue;
    CHECK(ept::expectation(bright, constant) == doctest::Approx(2.5).epsilon(1e-12));
  }

  // Two-slit interference: every unit of frequency sits at position 1.
  const auto slit = ept::two_slit_space(2);
  const auto state = ept::two_slit_interference_state(slit);
  const ept::ContextRandomVariable position(ept::Context(slit.dyadic), {1.0, 2.0});
  CHECK(ept::expectation(state, position) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("expectation is linear over one context") {
  const auto s = space_n(3);
  const ept::QuadraticState state(
      s, {0.4, 0.1, 0.0, 0.1, 0.3, -0.05, 0.0, -0.05, 0.3});
  REQUIRE(state.validation().ok());
  const ept::Context k(ept::Universe(part(s, "e1,e2 | e3")));
  const ept::ContextRandomVariable x(k, {1.0, -2.0});
  const ept::ContextRandomVariable y(k, {0.5, 3.0});
  const auto combined = x * 2.0 + y * -1.5;
  CHECK(ept::expectation(state, combined) ==
        doctest::Approx(2.0 * ept::expectation(state, x) - 1.5 * ept::expectation(state, y))
            .epsilon(1e-12));

  const ept::ContextRandomVariable other(ept::Context::classical(s), {1, 2, 3});
  CHECK_THROWS_AS(x + other, ept::DomainError);
}

TEST_CASE("the unnormalized functional is linear in the state") {
  const auto s = space_n(3);
  const ept::QuadraticState first(s, {0.5, 0.2, 0, 0.2, 0.3, 0, 0, 0, 0.2});
  const ept::QuadraticState second(s, {0.3, 0, 0.1, 0, 0.4, 0, 0.1, 0, 0.3});
  REQUIRE(first.validation().ok());
  REQUIRE(second.validation().ok());

  const double mu = 0.375;
  std::vector<double> mixed(9, 0.0);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      mixed[static_cast<std::size_t>(x) * 3 + static_cast<std::size_t>(y)] =
          mu * first.p(x, y) + (1.0 - mu) * second.p(x, y);
    }
  }
  const ept::QuadraticState mixture(s, std::move(mixed));
  REQUIRE(mixture.validation().ok());

  const ept::Context k(ept::Universe(part(s, "e1,e2 | e3")));
  const ept::ContextRandomVariable x(k, {2.0, -1.0});
  const auto integral = [&](const ept::QuadraticState& state) {
    return ept::expectation(state, x) *
           ept::measure_of(state, k.universe().partition());
  };
  CHECK(integral(mixture) ==
        doctest::Approx(mu * integral(first) + (1.0 - mu) * integral(second)).epsilon(1e-12));
}

TEST_CASE("irregular contexts refuse expectations") {
  const auto s = space_n(2);
  const ept::QuadraticState dark(s, {1.0, -1.0, -1.0, 1.0});
  REQUIRE(dark.validation().ok());
  const ept::ContextRandomVariable x(ept::Context::irreducible(s), {4.0});
  CHECK_THROWS_AS(ept::expectation(dark, x), ept::ValidationError);
  CHECK_THROWS_AS(ept::expectation_via_cells(dark, x), ept::ValidationError);
}
