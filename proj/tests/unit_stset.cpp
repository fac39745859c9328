#include <doctest.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ept/context.hpp"
#include "ept/errors.hpp"
#include "ept/oracle.hpp"
#include "ept/partition.hpp"
#include "ept/sample_space.hpp"
#include "ept/stset.hpp"

namespace {

ept::SampleSpace space_n(int n) { return ept::SampleSpace::with_size(n); }

ept::Partition part(const ept::SampleSpace& s, const std::string& literal) {
  return ept::parse_partition(s, literal);
}

ept::STSet from_pairs(const ept::SampleSpace& s, const std::vector<std::pair<int, int>>& cells) {
  const auto n = static_cast<std::size_t>(s.size());
  std::vector<std::uint8_t> membership(n * n, 0);
  for (const auto& [x, y] : cells) {
    membership[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = 1;
  }
  return ept::STSet(s, std::move(membership));
}

}  // namespace

TEST_CASE("construction rejects non-symmetric-transitive relations") {
  const auto s = space_n(3);
  // Asymmetric: (0,1) without (1,0).
  CHECK_THROWS_AS(from_pairs(s, {{0, 0}, {1, 1}, {0, 1}}), ept::DomainError);
  // Symmetric but not transitive: 0~1 and 1~2 without 0~2.
  CHECK_THROWS_AS(
      from_pairs(s, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {1, 2}, {2, 1}}),
      ept::DomainError);
  // Pairs without the diagonal are not transitive either ((0,1),(1,0) force (0,0)).
  CHECK_THROWS_AS(from_pairs(s, {{0, 1}, {1, 0}}), ept::DomainError);
  CHECK_NOTHROW(from_pairs(s, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST_CASE("quadratic representation squares every block") {
  const auto s = space_n(4);
  // One dyad block contributes the full 2x2 cell square.
  const auto r = ept::quad_rep(part(s, "e1,e2"));
  CHECK(r.pair_count() == 4);
  CHECK(r.pairs() == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  // A complete classical partition maps to the diagonal.
  CHECK(ept::quad_rep(part(s, "e1 | e2 | e3 | e4")) == ept::STSet::diagonal(s));

  // The impossible event maps to the empty relation.
  CHECK(ept::quad_rep(ept::Partition::zero(s)) == ept::STSet::empty(s));
  CHECK(ept::STSet::empty(s).pair_count() == 0);
}

TEST_CASE("partition recovery inverts the representation") {
  const auto s = space_n(3);
  CHECK(ept::partition_of(ept::STSet::diagonal(s)) == part(s, "e1 | e2 | e3"));
  CHECK(ept::partition_of(ept::STSet::full(s)) == part(s, "e1,e2,e3"));
  const auto r = from_pairs(s, {{0, 0}, {1, 1}, {0, 1}, {1, 0}, {2, 2}});
  CHECK(ept::partition_of(r) == part(s, "e1,e2 | e3"));

  // Exhaustive round trip over every partition of up to four points.
  for (int n = 1; n <= 4; ++n) {
    const auto sn = space_n(n);
    for (const auto& p : ept::oracle::enumerate_all_partitions(sn)) {
      CHECK(ept::partition_of(ept::quad_rep(p)) == p);
    }
  }
}

TEST_CASE("set operations transport the partition operations") {
  const auto s = space_n(3);
  const auto a = part(s, "e1,e2");
  const auto b = part(s, "e2,e3");

  // Intersection keeps exactly the shared cell (e2,e2).
  const auto m = ept::meet(ept::quad_rep(a), ept::quad_rep(b));
  CHECK(m.pairs() == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(m == ept::quad_rep(ept::meet(a, b)));

  // Closure of the diagonal over {e1,e2} is the full square over {e1,e2}.
  const auto diag12 = ept::quad_rep(part(s, "e1 | e2"));
  CHECK(ept::closure(diag12) == ept::STSet::square(s, {0, 1}));

  // Complement of {e1,e2}^2 is {(e3,e3)}.
  const auto neg = ept::negate(ept::STSet::square(s, {0, 1}));
  CHECK(neg.pairs() == std::vector<std::pair<int, int>>{{2, 2}});

  // Difference removes everything touching the other support.
  const auto sm = ept::setminus(ept::quad_rep(a), ept::quad_rep(part(s, "e2")));
  CHECK(sm.pairs() == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("squares of disjoint supports combine into one square") {
  const auto s = space_n(4);
  const auto u = ept::sq_union({ept::STSet::square(s, {0}), ept::STSet::square(s, {2, 3})});
  CHECK(u == ept::STSet::square(s, {0, 2, 3}));
  CHECK_THROWS_AS(
      ept::sq_union({ept::STSet::square(s, {0, 1}), ept::STSet::square(s, {1, 2})}),
      ept::DomainError);
}

TEST_CASE("predicates identify classical, quadratic, and universe relations") {
  const auto s = space_n(3);
  CHECK(ept::STSet::diagonal(s).is_classical());
  CHECK_FALSE(ept::STSet::full(s).is_classical());
  CHECK(ept::STSet::empty(s).is_classical());

  CHECK(ept::quad_rep(part(s, "e1,e2")).is_quadratic());
  CHECK(ept::STSet::full(s).is_quadratic());
  // The empty relation is excluded so quadratic sets match one-block events.
  CHECK_FALSE(ept::STSet::empty(s).is_quadratic());
  CHECK_FALSE(ept::STSet::diagonal(s).is_quadratic());

  // The dyadic two-slit universe has full support.
  const auto slit = ept::two_slit_space(2);
  CHECK(ept::quad_rep(slit.dyadic.partition()).is_universe());
  CHECK_FALSE(ept::quad_rep(part(space_n(3), "e1,e2")).is_universe());
}

TEST_CASE("support truncation is not a sub-event") {
  // {e1} as a relation sits inside {e1,e2}^2 cellwise, but the partitions
  // {{e1}} and {{e1,e2}} are unrelated, so the transported order must say no.
  const auto s = space_n(2);
  const auto small = ept::quad_rep(part(s, "e1"));
  const auto big = ept::quad_rep(part(s, "e1,e2"));
  CHECK_FALSE(ept::leq(small, big));
  CHECK_FALSE(ept::pitchfork(small, big));
  CHECK_FALSE(ept::leq(part(s, "e1"), part(s, "e1,e2")));
  CHECK_FALSE(ept::compatible(part(s, "e1"), part(s, "e1,e2")));
}

TEST_CASE("order and compatibility transport exactly") {
  for (int n = 1; n <= 3; ++n) {
    const auto s = space_n(n);
    const auto all = ept::oracle::enumerate_all_partitions(s);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto ra = ept::quad_rep(a);
        const auto rb = ept::quad_rep(b);
        CHECK(ept::leq(ra, rb) == ept::leq(a, b));
        CHECK(ept::pitchfork(ra, rb) == ept::compatible(a, b));
        CHECK((ept::quad_rep(ept::meet(a, b)) == ept::meet(ra, rb)));
        CHECK((ept::quad_rep(ept::join(a, b)) == ept::join(ra, rb)));
        CHECK((ept::quad_rep(ept::negate(a)) == ept::negate(ra)));
      }
    }
  }
}

TEST_CASE("constructors produce the documented shapes") {
  const auto s = space_n(3);
  CHECK(ept::STSet::full(s).pair_count() == 9);
  CHECK(ept::STSet::diagonal(s).pair_count() == 3);
  CHECK(ept::STSet::square(s, {1}).pairs() == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(ept::STSet::square(s, {0, 2}).support() == std::vector<int>{0, 2});
  CHECK(ept::STSet::full(s).support() == std::vector<int>{0, 1, 2});
  CHECK(ept::STSet::empty(s).support().empty());
  CHECK(ept::STSet::full(s).contains(0, 2));
  CHECK_FALSE(ept::STSet::diagonal(s).contains(0, 2));
}
