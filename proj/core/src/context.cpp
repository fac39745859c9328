#include "ept/context.hpp"

#include <algorithm>
#include <random>

#include "ept/errors.hpp"

namespace ept {

Universe::Universe(Partition complete) : partition_(std::move(complete)) {
  if (!partition_.is_complete()) {
    throw DomainError("a universe must cover the whole sample space; support has " +
                      std::to_string(partition_.support().size()) + " of " +
                      std::to_string(partition_.space().size()) + " outcomes");
  }
}

Universe Universe::classical(const SampleSpace& space) {
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < space.size(); ++x) blocks.push_back({x});
  return Universe(Partition(space, std::move(blocks)));
}

Universe Universe::irreducible(const SampleSpace& space) {
  if (space.size() == 0) throw DomainError("the irreducible universe needs a non-empty space");
  std::vector<int> all(static_cast<std::size_t>(space.size()));
  for (int x = 0; x < space.size(); ++x) all[static_cast<std::size_t>(x)] = x;
  return Universe(Partition(space, {std::move(all)}));
}

bool Context::contains(const Partition& e) const { return leq(e, universe_.partition()); }

Partition Context::complement_in(const Partition& e) const {
  if (!contains(e)) {
    throw DomainError("event '" + format_partition(e) + "' is not a member of the context of '" +
                      format_partition(universe_.partition()) + "'");
  }
  return meet(negate(e), universe_.partition());
}

std::vector<Partition> Context::elementary_events() const {
  std::vector<Partition> out;
  for (const auto& block : universe_.partition().blocks()) {
    out.emplace_back(space(), std::vector<std::vector<int>>{block});
  }
  return out;
}

std::uint64_t Context::event_count() const {
  return std::uint64_t{1} << universe_.block_count();
}

std::vector<Partition> Context::events(std::uint64_t cap) const {
  if (universe_.block_count() >= 63 || event_count() > cap) {
    throw CapExceededError("context has 2^" + std::to_string(universe_.block_count()) +
                           " events, beyond the materialization cap of " + std::to_string(cap));
  }
  const auto& blocks = universe_.partition().blocks();
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(event_count()));
  for (std::uint64_t mask = 0; mask < event_count(); ++mask) {
    std::vector<std::vector<int>> chosen;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (mask & (std::uint64_t{1} << b)) chosen.push_back(blocks[b]);
    }
    out.emplace_back(space(), std::move(chosen));
  }
  return out;
}

namespace {

/// Depth-first assembly emitting complete partitions in lexicographic order
/// of their canonical block sequences.  The next block always starts at the
/// least unassigned outcome, and its remaining members are chosen in
/// ascending order, so prefixes are emitted before their extensions and
/// smaller continuations before larger ones.
bool assemble(const SampleSpace& space, std::vector<int>& remaining,
              std::vector<std::vector<int>>& prefix,
              const std::function<bool(const Universe&)>& visit) {
  if (remaining.empty()) {
    return visit(Universe(Partition(space, prefix)));
  }
  const int head = remaining.front();
  std::vector<int> tail(remaining.begin() + 1, remaining.end());

  std::vector<int> block{head};
  std::vector<int> chosen_idx;
  // Iterative DFS over the subsets of `tail` that extend `block`, in
  // lexicographic sequence order: emit the current block, then try
  // extending it with each later candidate.
  const std::function<bool(std::size_t)> extend = [&](std::size_t start) -> bool {
    {
      std::vector<int> rest;
      std::vector<char> used(tail.size(), 0);
      for (std::size_t i : chosen_idx) used[i] = 1;
      for (std::size_t i = 0; i < tail.size(); ++i) {
        if (!used[i]) rest.push_back(tail[i]);
      }
      prefix.push_back(block);
      const bool keep_going = assemble(space, rest, prefix, visit);
      prefix.pop_back();
      if (!keep_going) return false;
    }
    for (std::size_t i = start; i < tail.size(); ++i) {
      chosen_idx.push_back(i);
      block.push_back(tail[i]);
      const bool keep_going = extend(i + 1);
      block.pop_back();
      chosen_idx.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return extend(0);
}

std::uint64_t bell_by_triangle(int n) {
  // Bell triangle: row r starts with the last entry of row r-1; each entry
  // adds its left neighbour and the entry above that neighbour.
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::size_t i = 0; i < row.size(); ++i) next.push_back(next.back() + row[i]);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace

void for_each_universe(const SampleSpace& space,
                       const std::function<bool(const Universe&)>& visit) {
  std::vector<int> all(static_cast<std::size_t>(space.size()));
  for (int x = 0; x < space.size(); ++x) all[static_cast<std::size_t>(x)] = x;
  std::vector<std::vector<int>> prefix;
  assemble(space, all, prefix, visit);
}

std::uint64_t count_universes(const SampleSpace& space, int cap) {
  if (space.size() > cap) {
    throw CapExceededError("universe enumeration over " + std::to_string(space.size()) +
                           " outcomes exceeds the cap of " + std::to_string(cap) + "; expected " +
                           std::to_string(bell_by_triangle(space.size())) + " universes");
  }
  std::uint64_t count = 0;
  for_each_universe(space, [&count](const Universe&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Universe> enumerate_universes(const SampleSpace& space, int cap) {
  if (space.size() > cap) {
    throw CapExceededError("universe enumeration over " + std::to_string(space.size()) +
                           " outcomes exceeds the cap of " + std::to_string(cap) + "; expected " +
                           std::to_string(bell_by_triangle(space.size())) + " universes");
  }
  std::vector<Universe> out;
  for_each_universe(space, [&out](const Universe& u) {
    out.push_back(u);
    return true;
  });
  return out;
}

namespace {

void check_law(BooleanAlgebraReport& report, bool holds, const std::string& law,
               const Partition& e, const Partition& f) {
  ++report.law_checks;
  if (!holds) {
    report.violations.push_back(law + " failed on e='" + format_partition(e) + "', f='" +
                                format_partition(f) + "'");
  }
}

}  // namespace

BooleanAlgebraReport boolean_algebra_check(const Context& k, std::uint64_t sample_cap,
                                           std::uint64_t seed) {
  BooleanAlgebraReport report;
  std::vector<Partition> events;
  if (k.event_count() <= sample_cap) {
    events = k.events(sample_cap);
  } else {
    std::mt19937_64 rng(seed);
    const auto& blocks = k.universe().partition().blocks();
    for (std::uint64_t i = 0; i < sample_cap; ++i) {
      std::vector<std::vector<int>> chosen;
      for (const auto& block : blocks) {
        if (rng() & 1u) chosen.push_back(block);
      }
      events.emplace_back(k.space(), std::move(chosen));
    }
  }
  report.events_checked = events.size();

  const Partition& u = k.universe().partition();
  const Partition none = Partition::zero(k.space());
  for (const auto& e : events) {
    const Partition not_e = k.complement_in(e);
    check_law(report, join(e, not_e) == u, "e v ~e = universe", e, e);
    check_law(report, meet(e, not_e) == none, "e ^ ~e = 0", e, e);
    check_law(report, k.complement_in(not_e) == e, "~~e = e", e, e);
    check_law(report, join(e, u) == u && meet(e, u) == e, "bounds against the universe", e, u);
    check_law(report, join(e, none) == e && meet(e, none) == none,
              "bounds against the impossible event", e, none);
    for (const auto& f : events) {
      const Partition not_f = k.complement_in(f);
      check_law(report, k.contains(join(e, f)) && k.contains(meet(e, f)),
                "closure under v and ^", e, f);
      check_law(report, k.complement_in(join(e, f)) == meet(not_e, not_f), "~(e v f) = ~e ^ ~f",
                e, f);
      check_law(report, k.complement_in(meet(e, f)) == join(not_e, not_f), "~(e ^ f) = ~e v ~f",
                e, f);
    }
  }
  // Distributivity needs triples; cube growth caps the exhaustive range, so
  // large contexts get a deterministic slice.
  const std::size_t triple_limit = events.size() <= 16 ? events.size() : 16;
  for (std::size_t a = 0; a < triple_limit; ++a) {
    for (std::size_t b = 0; b < triple_limit; ++b) {
      for (std::size_t c = 0; c < triple_limit; ++c) {
        const Partition& e = events[a];
        const Partition& f = events[b];
        const Partition& g = events[c];
        check_law(report, meet(e, join(f, g)) == join(meet(e, f), meet(e, g)),
                  "e ^ (f v g) = (e^f) v (e^g)", e, f);
        check_law(report, join(e, meet(f, g)) == meet(join(e, f), join(e, g)),
                  "e v (f ^ g) = (e v f) ^ (e v g)", e, f);
      }
    }
  }
  return report;
}

TwoSlit two_slit_space(int positions) {
  if (positions < 1) throw DomainError("the two-slit arrangement needs at least one position");
  std::vector<std::string> labels;
  for (int x = 1; x <= positions; ++x) {
    labels.push_back("e1" + std::to_string(x));
    labels.push_back("e2" + std::to_string(x));
  }
  SampleSpace space(std::move(labels));
  std::vector<std::vector<int>> dyads;
  for (int x = 0; x < positions; ++x) dyads.push_back({2 * x, 2 * x + 1});
  return TwoSlit{space, Universe::classical(space),
                 Universe(Partition(space, std::move(dyads)))};
}

}  // namespace ept
