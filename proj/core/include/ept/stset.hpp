#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ept/partition.hpp"
#include "ept/sample_space.hpp"

namespace ept {

/// A symmetric, transitive relation on the sample space: the quadratic
/// image of a (possibly incomplete or empty) partition.  Membership is a
/// dense boolean matrix; the constructor validates symmetry and
/// transitivity eagerly, and reflexivity on the support follows from those
/// two, so every live STSet is the quadratic image of exactly one partition.
class STSet {
 public:
  /// membership is row-major n*n with is-related truth values.
  /// Throws DomainError if the relation is not symmetric-transitive.
  STSet(SampleSpace space, std::vector<std::uint8_t> membership);

  static STSet empty(SampleSpace space);
  static STSet full(SampleSpace space);
  static STSet diagonal(SampleSpace space);
  /// A x A for a subset of outcome indices.
  static STSet square(SampleSpace space, const std::vector<int>& subset);

  const SampleSpace& space() const { return space_; }
  bool contains(int x, int y) const {
    return membership_[static_cast<std::size_t>(x) * static_cast<std::size_t>(space_.size()) +
                       static_cast<std::size_t>(y)] != 0;
  }
  /// Outcomes x with (x,x) in the relation, ascending.
  std::vector<int> support() const;
  /// All member pairs (x,y), row-major order.
  std::vector<std::pair<int, int>> pairs() const;
  std::size_t pair_count() const;

  bool is_classical() const;  // subset of the diagonal
  /// Equal to A x A for some non-empty A (necessarily A = support).  The
  /// empty relation is excluded so that quadratic sets correspond exactly
  /// to one-block partitions.
  bool is_quadratic() const;
  bool is_universe() const;  // support is the whole space

  friend bool operator==(const STSet& a, const STSet& b) {
    return a.space_.same_as(b.space_) && a.membership_ == b.membership_;
  }

 private:
  SampleSpace space_;
  std::vector<std::uint8_t> membership_;
};

/// Quadratic representation: x related to y iff they share a block.
STSet quad_rep(const Partition& p);

/// The unique partition whose quadratic representation is r, built from the
/// classes [x] = {y | (x,y) in r}.
Partition partition_of(const STSet& r);

/// (complement of support) squared.
STSet negate(const STSet& r);
/// Set intersection.
STSet meet(const STSet& r, const STSet& s);
/// (r minus spt s) with (s minus spt r) with (r intersect s).
STSet join(const STSet& r, const STSet& s);
/// r with the support of s removed: r intersect negate(s).
STSet setminus(const STSet& r, const STSet& s);
/// (support of r) squared.
STSet closure(const STSet& r);
/// (union of supports) squared; requires pairwise disjoint supports.
STSet sq_union(const std::vector<STSet>& rs);

/// Containment as sub-events: every pair of s touching the support of r
/// lies in r.  Matches partition refinement through the representation;
/// when true it implies both r subset-of s and r = s restricted to spt r.
bool leq(const STSet& r, const STSet& s);

/// Compatibility: the intersection is a sub-event of both sides.
bool pitchfork(const STSet& r, const STSet& s);

}  // namespace ept
