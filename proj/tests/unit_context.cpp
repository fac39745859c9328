#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
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

}  // namespace

TEST_CASE("universes must cover the whole space") {
  const auto s = space_n(3);
  CHECK_THROWS_AS(ept::Universe(part(s, "e1,e2")), ept::DomainError);
  CHECK_NOTHROW(ept::Universe(part(s, "e1,e2 | e3")));
  CHECK(ept::Universe::classical(s).block_count() == 3);
  CHECK(ept::Universe::irreducible(s).block_count() == 1);
  CHECK(ept::Universe::classical(s).partition() == part(s, "e1 | e2 | e3"));
  CHECK(ept::Universe::irreducible(s).partition() == part(s, "e1,e2,e3"));
}

TEST_CASE("membership keeps exactly the block subsets") {
  const auto s = space_n(3);
  const auto classical = ept::Context::classical(s);
  CHECK(classical.contains(part(s, "e1 | e3")));
  CHECK(classical.contains(ept::Partition::zero(s)));
  CHECK_FALSE(classical.contains(part(s, "e1,e3")));

  const auto irreducible = ept::Context::irreducible(s);
  CHECK(irreducible.contains(ept::Partition::zero(s)));
  CHECK(irreducible.contains(part(s, "e1,e2,e3")));
  CHECK_FALSE(irreducible.contains(part(s, "e1")));
  CHECK_FALSE(irreducible.contains(part(s, "e1,e2")));

  const auto slit = ept::two_slit_space(2);
  const auto dyadic = ept::Context(slit.dyadic);
  CHECK(dyadic.contains(part(slit.space, "e11,e21")));
  CHECK_FALSE(dyadic.contains(part(slit.space, "e11")));
}

TEST_CASE("relative complement collects the unused universe blocks") {
  const auto s = space_n(3);
  const auto classical = ept::Context::classical(s);
  CHECK(classical.complement_in(ept::Partition::zero(s)) ==
        classical.universe().partition());
  CHECK(classical.complement_in(classical.universe().partition()).is_zero());

  const auto slit = ept::two_slit_space(2);
  const auto dyadic = ept::Context(slit.dyadic);
  CHECK(dyadic.complement_in(part(slit.space, "e11,e21")) == part(slit.space, "e12,e22"));

  CHECK_THROWS_AS(classical.complement_in(part(s, "e1,e2")), ept::DomainError);

  // The relative complement is negation cut to the universe, on every
  // member event of every universe over four points.
  const auto s4 = space_n(4);
  for (const auto& u : ept::enumerate_universes(s4)) {
    const ept::Context k(u);
    for (const auto& e : k.events()) {
      CHECK(k.complement_in(e) == ept::meet(ept::negate(e), u.partition()));
    }
  }
}

TEST_CASE("elementary events are the single-block members in order") {
  const auto s = space_n(3);
  const auto atoms = ept::Context::classical(s).elementary_events();
  REQUIRE(atoms.size() == 3);
  CHECK(atoms[0] == part(s, "e1"));
  CHECK(atoms[2] == part(s, "e3"));

  const auto slit = ept::two_slit_space(3);
  const auto dyarms = ept::Context(slit.dyadic).elementary_events();
  REQUIRE(dyarms.size() == 3);
  CHECK(dyarms[0] == part(slit.space, "e11,e21"));
  CHECK(dyarms[1] == part(slit.space, "e12,e22"));
  CHECK(dyarms[2] == part(slit.space, "e13,e23"));

  const auto mixed = ept::Context(ept::Universe(part(s, "e1,e2 | e3"))).elementary_events();
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == part(s, "e1,e2"));
  CHECK(mixed[1] == part(s, "e3"));
}

TEST_CASE("event materialization covers every block subset once") {
  const auto s = space_n(3);
  const ept::Context k(ept::Universe(part(s, "e1,e2 | e3")));
  CHECK(k.event_count() == 4);
  const auto events = k.events();
  REQUIRE(events.size() == 4);
  const std::set<ept::Partition> uniq(events.begin(), events.end());
  CHECK(uniq.size() == 4);
  for (const auto& e : events) CHECK(k.contains(e));

  CHECK_THROWS_AS(ept::Context::classical(s).events(4), ept::CapExceededError);
}

TEST_CASE("universe enumeration is complete, canonical, and capped") {
  const std::vector<std::uint64_t> bell{1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) {
    const auto s = space_n(n);
    CHECK(ept::count_universes(s) == bell[static_cast<std::size_t>(n - 1)]);
    CHECK(ept::count_universes(s) == ept::oracle::bell_number(n));
  }

  const auto s3 = space_n(3);
  const auto universes = ept::enumerate_universes(s3);
  REQUIRE(universes.size() == 5);
  // Canonical order: lexicographic on the block sequences (a block that is
  // a prefix of a longer block sorts first).
  CHECK(universes[0].partition() == part(s3, "e1 | e2 | e3"));
  CHECK(universes[1].partition() == part(s3, "e1 | e2,e3"));
  CHECK(universes[2].partition() == part(s3, "e1,e2 | e3"));
  CHECK(universes[3].partition() == part(s3, "e1,e2,e3"));
  CHECK(universes[4].partition() == part(s3, "e1,e3 | e2"));
  CHECK(std::is_sorted(universes.begin(), universes.end(),
                       [](const ept::Universe& a, const ept::Universe& b) {
                         return a.partition() < b.partition();
                       }));

  // Same set as the independent restricted-growth enumeration.
  for (int n = 1; n <= 5; ++n) {
    const auto s = space_n(n);
    auto stream = ept::enumerate_universes(s);
    auto oracle_side = ept::oracle::enumerate_complete_partitions(s);
    std::vector<ept::Partition> lhs, rhs;
    for (const auto& u : stream) lhs.push_back(u.partition());
    rhs = std::move(oracle_side);
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);
  }

  CHECK_THROWS_AS(ept::enumerate_universes(space_n(4), 3), ept::CapExceededError);
  CHECK_THROWS_AS(ept::count_universes(space_n(4), 3), ept::CapExceededError);
  // The refusal message cites the expected count.
  try {
    ept::enumerate_universes(space_n(4), 3);
    FAIL("expected a cap error");
  } catch (const ept::CapExceededError& e) {
    CHECK(std::string(e.what()).find("15") != std::string::npos);
  }
}

TEST_CASE("streaming enumeration stops when the visitor declines") {
  const auto s = space_n(4);
  int seen = 0;
  ept::for_each_universe(s, [&seen](const ept::Universe&) {
    ++seen;
    return seen < 3;
  });
  CHECK(seen == 3);
}

TEST_CASE("every context obeys the Boolean-algebra laws") {
  const auto s = space_n(3);
  const auto classical = ept::boolean_algebra_check(ept::Context::classical(s));
  CHECK(classical.ok());
  CHECK(classical.events_checked == 8);

  const auto irreducible = ept::boolean_algebra_check(ept::Context::irreducible(s));
  CHECK(irreducible.ok());
  CHECK(irreducible.events_checked == 2);

  const auto slit = ept::two_slit_space(2);
  const auto dyadic = ept::boolean_algebra_check(ept::Context(slit.dyadic));
  CHECK(dyadic.ok());
  CHECK(dyadic.events_checked == 4);

  // A large context falls back to a seeded sample of the requested size.
  const auto sampled = ept::boolean_algebra_check(ept::Context::classical(space_n(8)), 32);
  CHECK(sampled.ok());
  CHECK(sampled.events_checked == 32);
}

TEST_CASE("members of one context are pairwise compatible") {
  for (int n = 1; n <= 4; ++n) {
    const auto s = space_n(n);
    for (const auto& u : ept::enumerate_universes(s)) {
      const ept::Context k(u);
      const auto events = k.events();
      for (const auto& e : events) {
        for (const auto& f : events) {
          CHECK(ept::compatible(e, f));
          CHECK(ept::pitchfork(ept::quad_rep(e), ept::quad_rep(f)));
        }
      }
    }
  }
}

TEST_CASE("contexts are maximal compatible families") {
  // Every non-member clashes with some member.
  for (int n = 1; n <= 4; ++n) {
    const auto s = space_n(n);
    const auto all = ept::oracle::enumerate_all_partitions(s);
    for (const auto& u : ept::enumerate_universes(s)) {
      const ept::Context k(u);
      const auto members = k.events();
      for (const auto& e : all) {
        if (k.contains(e)) continue;
        const bool clash = std::any_of(members.begin(), members.end(), [&](const ept::Partition& f) {
          return !ept::compatible(e, f);
        });
        CHECK(clash);
      }
    }
  }
}

TEST_CASE("distinct universes are incompatible") {
  for (int n = 1; n <= 5; ++n) {
    const auto s = space_n(n);
    const auto universes = ept::enumerate_universes(s);
    for (std::size_t i = 0; i < universes.size(); ++i) {
      for (std::size_t j = 0; j < universes.size(); ++j) {
        const bool same = i == j;
        CHECK(ept::compatible(universes[i].partition(), universes[j].partition()) == same);
      }
    }
  }
}

TEST_CASE("the two-slit arrangement wires both universes") {
  CHECK_THROWS_AS(ept::two_slit_space(0), ept::DomainError);

  const auto one = ept::two_slit_space(1);
  CHECK(one.space.size() == 2);
  CHECK(one.dyadic.partition() == part(one.space, "e11,e21"));
  CHECK(one.which_way.partition() == part(one.space, "e11 | e21"));

  const auto two = ept::two_slit_space(2);
  CHECK(two.space.size() == 4);
  CHECK(two.space.labels() ==
        std::vector<std::string>{"e11", "e21", "e12", "e22"});
  CHECK(two.dyadic.partition() == part(two.space, "e11,e21 | e12,e22"));

  // The dyadic universe relates exactly the outcomes sharing a position.
  const auto rel = ept::quad_rep(two.dyadic.partition());
  std::vector<std::uint8_t> same_dyad(16, 0);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if ((x < 2) == (y < 2)) {
        same_dyad[static_cast<std::size_t>(x) * 4 + static_cast<std::size_t>(y)] = 1;
      }
    }
  }
  CHECK(rel == ept::STSet(two.space, same_dyad));
  CHECK(rel.pair_count() == 8);
  CHECK(rel.is_universe());

  // sq_union squares the merged support instead: it gives the full square.
  CHECK(ept::sq_union({ept::STSet::square(two.space, {0, 1}),
                       ept::STSet::square(two.space, {2, 3})}) ==
        ept::STSet::full(two.space));
}
