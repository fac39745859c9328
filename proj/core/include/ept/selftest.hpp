#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ept/tolerances.hpp"

namespace ept::selftest {

struct Options {
  std::uint64_t seed = kDefaultSeed;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;   // one line: counts, worst residuals, witnesses
  double seconds = 0.0;
};

/// The certification suites, in run order:
///   isomorphism-roundtrip   partition <-> relation transport, all seven
///                           isomorphism clauses, exhaustive n <= 4
///   plus-identity           disjoint-union indicator and tensor-square
///                           identities, exact integers, exhaustive + random
///   context-census          universe counts vs the independent recurrence,
///                           order, cross-enumeration, pairwise
///                           incompatibility
///   measure-coherence       random strongly-positive states: identity
///                           residuals, signed-measure agreement, round
///                           trip, bound checks
///   positivity-agreement    eigensolver verdict vs the minor/quadratic-form
///                           oracle on mixed matrices
///   context-cpt-reduction   relative frequencies form a classical
///                           probability measure in every regular context
///   two-slit-contrast       built-in states: interference shows per-position
///                           contrast, the classical state never does
///   markov-no-go            invertible simplex maps are exactly the
///                           permutations; deterministic == non-dissipative
///   distributive-laws       meet distributes over join exhaustively at
///                           n = 4; a join-over-meet counterexample exists
///                           at n = 3; commutativity and associativity
const std::vector<std::string>& suite_names();

/// Runs one suite by name (DomainError for unknown names).
SuiteResult run_suite(const std::string& name, const Options& options = {});

/// Runs every suite in order.
std::vector<SuiteResult> run_all(const Options& options = {});

}  // namespace ept::selftest
