#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "ept/errors.hpp"
#include "ept/oracle.hpp"
#include "ept/partition.hpp"
#include "ept/sample_space.hpp"

namespace {

ept::SampleSpace space_n(int n) { return ept::SampleSpace::with_size(n); }

ept::Partition part(const ept::SampleSpace& s, const std::string& literal) {
  return ept::parse_partition(s, literal);
}

std::vector<std::string> label_list(const ept::Partition& p) {
  std::vector<std::string> out;
  for (int x : p.support()) out.push_back(p.space().label(x));
  return out;
}

}  // namespace

TEST_CASE("sample space validates labels") {
  CHECK(ept::SampleSpace(std::vector<std::string>{}).size() == 0);            // degenerate but legal
  CHECK_THROWS_AS(ept::SampleSpace({"a", "a"}), ept::DomainError);            // duplicate
  CHECK_THROWS_AS(ept::SampleSpace({"a b"}), ept::DomainError);               // whitespace
  CHECK_THROWS_AS(ept::SampleSpace({"a,b"}), ept::DomainError);               // separator
  CHECK_THROWS_AS(ept::SampleSpace({""}), ept::DomainError);                  // blank
  const ept::SampleSpace s({"x", "y"});
  CHECK(s.size() == 2);
  CHECK(s.label(1) == "y");
  CHECK(s.index_of("y") == 1);
  CHECK_FALSE(s.index_of("z").has_value());
  CHECK(s == ept::SampleSpace({"x", "y"}));
  CHECK_FALSE(s.same_as(ept::SampleSpace({"y", "x"})));
}

TEST_CASE("partition construction canonicalizes and validates") {
  const auto s = space_n(4);
  // Shuffled input normalizes to ascending elements, blocks ordered by min.
  const ept::Partition p(s, {{2, 0}, {1}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 2}, {1}});
  CHECK(p == part(s, "e1,e3 | e2"));
  CHECK(ept::format_partition(p) == "e1,e3 | e2");

  CHECK_THROWS_AS(ept::Partition(s, {{0}, {}}), ept::DomainError);      // empty block
  CHECK_THROWS_AS(ept::Partition(s, {{0}, {0, 1}}), ept::DomainError);  // overlap
  CHECK_THROWS_AS(ept::Partition(s, {{4}}), ept::DomainError);          // out of range
  CHECK_THROWS_AS(ept::Partition(s, {{-1}}), ept::DomainError);
}

TEST_CASE("support collects the block union in ascending order") {
  const auto s20 = space_n(20);
  CHECK(ept::Partition::zero(s20).support().empty());

  const auto p = part(s20, "e16,e20 | e3,e5");
  CHECK(label_list(p) == std::vector<std::string>{"e3", "e5", "e16", "e20"});

  const auto s4 = space_n(4);
  const auto q = part(s4, "e1,e2 | e3");
  CHECK(q.support() == std::vector<int>{0, 1, 2});
  CHECK_FALSE(q.is_complete());
  CHECK(part(s4, "e1,e2 | e3,e4").is_complete());
}

TEST_CASE("negate returns the single off-support block") {
  const auto s = space_n(3);
  CHECK(ept::negate(ept::Partition::zero(s)) == part(s, "e1,e2,e3"));
  CHECK(ept::negate(part(s, "e1,e2")) == part(s, "e3"));
  CHECK(ept::negate(ept::negate(part(s, "e1 | e2"))) == part(s, "e1,e2"));
  // Complete support leaves nothing to collect.
  CHECK(ept::negate(part(s, "e1 | e2 | e3")).is_zero());
}

TEST_CASE("irreducible closure merges the support into one block") {
  const auto s = space_n(3);
  CHECK(ept::irreducible_closure(part(s, "e1 | e2")) == part(s, "e1,e2"));
  const auto once = ept::irreducible_closure(part(s, "e1 | e3"));
  CHECK(ept::irreducible_closure(once) == once);
  CHECK(ept::irreducible_closure(ept::Partition::zero(s)).is_zero());

  // Closure coincides with double negation on every partition of 4 points.
  const auto s4 = space_n(4);
  for (const auto& p : ept::oracle::enumerate_all_partitions(s4)) {
    CHECK(ept::irreducible_closure(p) == ept::negate(ept::negate(p)));
  }
}

TEST_CASE("meet intersects blocks pairwise") {
  const auto s = space_n(3);
  CHECK(ept::meet(part(s, "e1,e2 | e3"), part(s, "e1 | e2,e3")) == part(s, "e1 | e2 | e3"));
  const auto p = part(s, "e1,e2");
  CHECK(ept::meet(p, p) == p);
  CHECK(ept::meet(part(s, "e1"), part(s, "e2,e3")).is_zero());
  CHECK_THROWS_AS(ept::meet(p, part(space_n(4), "e1")), ept::SpaceMismatchError);
}

TEST_CASE("join splits overlap into intersection pieces") {
  const auto s = space_n(3);
  CHECK(ept::join(part(s, "e1,e2"), part(s, "e3")) == part(s, "e1,e2 | e3"));
  CHECK(ept::join(part(s, "e1,e2"), part(s, "e2,e3")) == part(s, "e1 | e2 | e3"));
  const auto p = part(s, "e1 | e2,e3");
  CHECK(ept::join(p, ept::Partition::zero(s)) == p);
}

TEST_CASE("compatibility requires blockwise equality or disjointness") {
  const auto s = space_n(3);
  CHECK_FALSE(ept::compatible(part(s, "e1,e2"), part(s, "e1 | e2")));
  const auto p = part(s, "e1,e2 | e3");
  CHECK(ept::compatible(p, p));
  CHECK_FALSE(ept::compatible(part(s, "e1,e2"), part(s, "e2,e3")));
  CHECK(ept::compatible(p, ept::Partition::zero(s)));
}

TEST_CASE("refinement order asks every block to recur verbatim") {
  const auto s = space_n(3);
  CHECK(ept::leq(part(s, "e1"), part(s, "e1 | e2,e3")));
  CHECK(ept::leq(ept::Partition::zero(s), part(s, "e2")));
  CHECK(ept::leq(ept::Partition::zero(s), ept::Partition::zero(s)));
  // Splitting a block is NOT a sub-event relation in this order.
  CHECK_FALSE(ept::leq(part(s, "e1,e2"), part(s, "e1 | e2")));
  // Neither is truncating a block.
  CHECK_FALSE(ept::leq(part(s, "e1"), part(s, "e1,e2")));
}

TEST_CASE("classification separates classical, irreducible, both, neither") {
  const auto s20 = space_n(20);
  CHECK(part(s20, "e16 | e1 | e7 | e4 | e20").classify() == ept::PartitionClass::classical);
  CHECK(part(s20, "e3,e5 | e7 | e13,e14,e15 | e17").classify() == ept::PartitionClass::neither);
  CHECK(part(s20, "e1").classify() == ept::PartitionClass::both);
  CHECK(part(s20, "e1,e2").classify() == ept::PartitionClass::irreducible);
  // The impossible event has all-singleton blocks vacuously and no block.
  CHECK(ept::Partition::zero(s20).classify() == ept::PartitionClass::classical);
}

TEST_CASE("partition literals parse and format as inverses") {
  const auto s = space_n(4);
  CHECK(part(s, "").is_zero());
  CHECK(part(s, "   ").is_zero());
  CHECK(part(s, "{}").is_zero());
  CHECK(ept::format_partition(ept::Partition::zero(s)).empty());

  CHECK(part(s, "{e1,e2}") == part(s, "e1,e2"));
  CHECK(part(s, "{{e2 , e1} | {e4}}") == part(s, "e1,e2 | e4"));
  CHECK(part(s, "{e2,e1} | e4") == part(s, "e1,e2 | e4"));

  CHECK_THROWS_AS(part(s, "e9"), ept::ParseError);        // unknown label
  CHECK_THROWS_AS(part(s, "e1,"), ept::ParseError);       // empty label
  CHECK_THROWS_AS(part(s, "e1 | | e2"), ept::ParseError); // empty block
  CHECK_THROWS_AS(part(s, "e1 | e1"), ept::ParseError);   // duplicate outcome
  CHECK_THROWS_AS(part(s, "{e1"), ept::ParseError);       // stray brace
  CHECK_THROWS_AS(part(s, "{e1}, {e2}"), ept::ParseError);// blocks split on '|', not ','

  for (const auto& p : ept::oracle::enumerate_all_partitions(s)) {
    CHECK(ept::parse_partition(s, ept::format_partition(p)) == p);
  }
}

TEST_CASE("lattice laws hold exhaustively on a three-point space") {
  const auto s = space_n(3);
  const auto all = ept::oracle::enumerate_all_partitions(s);
  REQUIRE(all.size() == 15);

  for (const auto& a : all) {
    for (const auto& b : all) {
      CHECK(ept::meet(a, b) == ept::meet(b, a));
      CHECK(ept::join(a, b) == ept::join(b, a));
      CHECK(ept::compatible(a, b) == ept::compatible(b, a));
      // Compatibility is exactly "the meet is below both sides".
      const auto m = ept::meet(a, b);
      CHECK(ept::compatible(a, b) == (ept::leq(m, a) && ept::leq(m, b)));
      // Sub-events are compatible.
      if (ept::leq(a, b)) CHECK(ept::compatible(a, b));
      // The order is antisymmetric.
      if (ept::leq(a, b) && ept::leq(b, a)) CHECK(a == b);
    }
  }

  int join_over_meet_failures = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const auto& c : all) {
        CHECK(ept::meet(ept::meet(a, b), c) == ept::meet(a, ept::meet(b, c)));
        CHECK(ept::join(ept::join(a, b), c) == ept::join(a, ept::join(b, c)));
        CHECK(ept::meet(a, ept::join(b, c)) == ept::join(ept::meet(a, b), ept::meet(a, c)));
        if (ept::join(a, ept::meet(b, c)) != ept::meet(ept::join(a, b), ept::join(a, c))) {
          ++join_over_meet_failures;
        }
        if (ept::leq(a, b) && ept::leq(b, c)) CHECK(ept::leq(a, c));
      }
    }
  }
  // Join does NOT distribute over meet; the asymmetry is real.
  CHECK(join_over_meet_failures > 0);
}

TEST_CASE("a concrete join-over-meet counterexample") {
  // a = {e1,e2}, b = impossible, c = {e1}:
  //   b ^ c = impossible, so a v (b ^ c) = a = {e1,e2};
  //   a v b = {e1,e2} and a v c = {e1 | e2}, whose meet is {e1 | e2} != a.
  const auto s = space_n(3);
  const auto a = part(s, "e1,e2");
  const auto b = ept::Partition::zero(s);
  const auto c = part(s, "e1");
  const auto lhs = ept::join(a, ept::meet(b, c));
  const auto rhs = ept::meet(ept::join(a, b), ept::join(a, c));
  CHECK(lhs == a);
  CHECK(rhs == part(s, "e1 | e2"));
  CHECK_FALSE(lhs == rhs);
}

TEST_CASE("triple negation collapses to single negation") {
  for (int n = 1; n <= 4; ++n) {
    const auto s = space_n(n);
    for (const auto& p : ept::oracle::enumerate_all_partitions(s)) {
      CHECK(ept::negate(ept::negate(ept::negate(p))) == ept::negate(p));
    }
  }
}
