#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ept/sample_space.hpp"

namespace ept {

enum class PartitionClass { classical, irreducible, both, neither };

/// An event: a finite family of disjoint, non-empty blocks of outcomes.
/// The family may cover only part of the space, and may be empty (the
/// impossible event).  Blocks are kept in canonical form: elements ascend
/// within each block and blocks are ordered by their least element, so
/// structural equality is representation equality.
class Partition {
 public:
  /// Canonicalizes and validates: indices in range, blocks non-empty and
  /// pairwise disjoint.  Throws DomainError otherwise.
  Partition(SampleSpace space, std::vector<std::vector<int>> blocks);

  /// The impossible event (no blocks).
  static Partition zero(SampleSpace space);

  const SampleSpace& space() const { return space_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  bool is_zero() const { return blocks_.empty(); }

  /// Union of all blocks, ascending.
  const std::vector<int>& support() const { return support_; }
  /// True when the support is the whole space.
  bool is_complete() const;

  bool is_classical() const;    // every block a singleton (vacuous for zero)
  bool is_irreducible() const;  // exactly one block
  PartitionClass classify() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.space_.same_as(b.space_) && a.blocks_ == b.blocks_;
  }

  /// Canonical total order on partitions over one space: lexicographic on
  /// the block sequence, blocks compared as index sequences.  Used for the
  /// documented enumeration order.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.blocks_ < b.blocks_;
  }

 private:
  SampleSpace space_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> support_;
};

/// Complement: the single block of outcomes outside the support, or the
/// impossible event when the support is the whole space.
Partition negate(const Partition& a);

/// Double complement: one block equal to the support (impossible event for
/// the impossible event).
Partition irreducible_closure(const Partition& a);

/// Conjunction: all non-empty pairwise intersections of blocks.
Partition meet(const Partition& a, const Partition& b);

/// Disjunction.  With disjoint supports this is the union of the two block
/// families; in general it is the concatenation of a AND NOT b, NOT a AND b,
/// and a AND b, whose supports are pairwise disjoint.
Partition join(const Partition& a, const Partition& b);

/// True when every block of a and every block of b are equal or disjoint.
bool compatible(const Partition& a, const Partition& b);

/// Refinement order: every block of a is a block of b.
bool leq(const Partition& a, const Partition& b);

/// Parses a partition literal.  Grammar: '|' separates blocks, ',' separates
/// outcome labels, whitespace is ignored, one optional brace pair may wrap
/// the whole literal and one may wrap each block.  The empty (or blank)
/// literal denotes the impossible event.  Example: "e11,e21 | e12".
/// Throws ParseError naming the offending token.
Partition parse_partition(const SampleSpace& space, std::string_view literal);

/// Canonical literal for a partition; inverse of parse_partition.  The
/// impossible event formats as the empty string.
std::string format_partition(const Partition& a);

}  // namespace ept
