#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ept/partition.hpp"
#include "ept/sample_space.hpp"
#include "ept/tolerances.hpp"

namespace ept {

/// A complete partition: support equals the whole sample space.
class Universe {
 public:
  /// Throws DomainError unless the partition is complete.
  explicit Universe(Partition complete);

  const Partition& partition() const { return partition_; }
  const SampleSpace& space() const { return partition_.space(); }
  int block_count() const { return partition_.block_count(); }

  /// All singleton blocks.
  static Universe classical(const SampleSpace& space);
  /// One block holding the whole space (space must be non-empty).
  static Universe irreducible(const SampleSpace& space);

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.partition_ == b.partition_;
  }

 private:
  Partition partition_;
};

/// A maximal family of mutually compatible events, represented intensionally
/// by its universe: the members are exactly the events whose blocks are all
/// blocks of the universe, so membership is computed, never stored.
class Context {
 public:
  explicit Context(Universe universe) : universe_(std::move(universe)) {}

  static Context classical(const SampleSpace& space) {
    return Context(Universe::classical(space));
  }
  static Context irreducible(const SampleSpace& space) {
    return Context(Universe::irreducible(space));
  }

  const Universe& universe() const { return universe_; }
  const SampleSpace& space() const { return universe_.space(); }

  /// True iff every block of e is a block of the universe.
  bool contains(const Partition& e) const;

  /// Relative complement: the universe blocks not used by e.  Equals
  /// meet(negate(e), universe).  Requires contains(e).
  Partition complement_in(const Partition& e) const;

  /// One single-block partition per universe block, canonical order.
  std::vector<Partition> elementary_events() const;

  /// 2^(number of blocks).
  std::uint64_t event_count() const;

  /// All member events (every subset of universe blocks), canonical
  /// subset order.  Throws CapExceededError when event_count() > cap.
  std::vector<Partition> events(std::uint64_t cap = 1u << 20) const;

  friend bool operator==(const Context& a, const Context& b) {
    return a.universe_ == b.universe_;
  }

 private:
  Universe universe_;
};

/// Streams every complete partition of the space exactly once, in canonical
/// order (lexicographic on the canonical block sequence).  The visitor
/// returns false to stop early.  This is the primary enumeration path,
/// built by recursive block assembly; the brute-force oracle enumerates by
/// restricted growth strings instead.
void for_each_universe(const SampleSpace& space, const std::function<bool(const Universe&)>& visit);

/// Number of universes (the Bell number of the space size), counted by
/// streaming.  Throws CapExceededError when the space exceeds the cap.
std::uint64_t count_universes(const SampleSpace& space, int cap = 12);

/// Materializes the canonical-order stream.  Throws CapExceededError when
/// the space exceeds the cap; the message cites the expected count.
std::vector<Universe> enumerate_universes(const SampleSpace& space, int cap = 12);

/// Outcome of checking the Boolean-algebra laws inside one context:
/// complements, double complement, De Morgan, both distributive laws,
/// closure under meet/join, and the bound laws against the universe and
/// the impossible event.
struct BooleanAlgebraReport {
  std::uint64_t events_checked = 0;
  std::uint64_t law_checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive over the context's events when event_count() <= sample_cap,
/// otherwise over a seeded random sample of that size.
BooleanAlgebraReport boolean_algebra_check(const Context& k, std::uint64_t sample_cap = 64,
                                           std::uint64_t seed = kDefaultSeed);

/// The two-slit arrangement: outcomes e{slit}{position} for slits 1,2 and
/// positions 1..n, ordered e11, e21, e12, e22, ...; the which-way universe
/// separates every outcome, the dyadic universe pairs the two slits at each
/// position.
struct TwoSlit {
  SampleSpace space;
  Universe which_way;  // all singletons
  Universe dyadic;     // {e1x, e2x} per position x
};
TwoSlit two_slit_space(int positions);

}  // namespace ept
