#include "ept/stset.hpp"

#include <algorithm>

#include "ept/errors.hpp"

namespace ept {

namespace {

std::size_t idx(int n, int x, int y) {
  return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y);
}

}  // namespace

STSet::STSet(SampleSpace space, std::vector<std::uint8_t> membership)
    : space_(std::move(space)), membership_(std::move(membership)) {
  const int n = space_.size();
  if (membership_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw DomainError("relation matrix size does not match the sample space");
  }
  for (auto& v : membership_) v = v ? 1 : 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (membership_[idx(n, x, y)] != membership_[idx(n, y, x)]) {
        throw DomainError("relation is not symmetric at (" + space_.label(x) + "," +
                          space_.label(y) + ")");
      }
    }
  }
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (!membership_[idx(n, x, y)]) continue;
      for (int z = 0; z < n; ++z) {
        if (membership_[idx(n, y, z)] && !membership_[idx(n, x, z)]) {
          throw DomainError("relation is not transitive at (" + space_.label(x) + "," +
                            space_.label(y) + "," + space_.label(z) + ")");
        }
      }
    }
  }
}

STSet STSet::empty(SampleSpace space) {
  const std::size_t n = static_cast<std::size_t>(space.size());
  return STSet(std::move(space), std::vector<std::uint8_t>(n * n, 0));
}

STSet STSet::full(SampleSpace space) {
  const std::size_t n = static_cast<std::size_t>(space.size());
  return STSet(std::move(space), std::vector<std::uint8_t>(n * n, 1));
}

STSet STSet::diagonal(SampleSpace space) {
  const int n = space.size();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) m[idx(n, x, x)] = 1;
  return STSet(std::move(space), std::move(m));
}

STSet STSet::square(SampleSpace space, const std::vector<int>& subset) {
  const int n = space.size();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int x : subset) {
    if (x < 0 || x >= n) throw DomainError("outcome index " + std::to_string(x) + " outside sample space");
    for (int y : subset) m[idx(n, x, y)] = 1;
  }
  return STSet(std::move(space), std::move(m));
}

std::vector<int> STSet::support() const {
  std::vector<int> out;
  for (int x = 0; x < space_.size(); ++x) {
    if (contains(x, x)) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<int, int>> STSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < space_.size(); ++x) {
    for (int y = 0; y < space_.size(); ++y) {
      if (contains(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::size_t STSet::pair_count() const {
  return static_cast<std::size_t>(std::count(membership_.begin(), membership_.end(), 1));
}

bool STSet::is_classical() const {
  for (int x = 0; x < space_.size(); ++x) {
    for (int y = 0; y < space_.size(); ++y) {
      if (x != y && contains(x, y)) return false;
    }
  }
  return true;
}

bool STSet::is_quadratic() const {
  const auto spt = support();
  if (spt.empty()) return false;
  return *this == STSet::square(space_, spt);
}

bool STSet::is_universe() const {
  return static_cast<int>(support().size()) == space_.size();
}

STSet quad_rep(const Partition& p) {
  const int n = p.space().size();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& block : p.blocks()) {
    for (int x : block) {
      for (int y : block) m[idx(n, x, y)] = 1;
    }
  }
  return STSet(p.space(), std::move(m));
}

Partition partition_of(const STSet& r) {
  std::vector<std::vector<int>> blocks;
  std::vector<char> placed(static_cast<std::size_t>(r.space().size()), 0);
  for (int x : r.support()) {
    if (placed[static_cast<std::size_t>(x)]) continue;
    std::vector<int> cls;
    for (int y = 0; y < r.space().size(); ++y) {
      if (r.contains(x, y)) {
        cls.push_back(y);
        placed[static_cast<std::size_t>(y)] = 1;
      }
    }
    blocks.push_back(std::move(cls));
  }
  return Partition(r.space(), std::move(blocks));
}

STSet negate(const STSet& r) {
  const auto spt = r.support();
  std::vector<char> in(static_cast<std::size_t>(r.space().size()), 0);
  for (int x : spt) in[static_cast<std::size_t>(x)] = 1;
  std::vector<int> rest;
  for (int x = 0; x < r.space().size(); ++x) {
    if (!in[static_cast<std::size_t>(x)]) rest.push_back(x);
  }
  return STSet::square(r.space(), rest);
}

STSet meet(const STSet& r, const STSet& s) {
  require_same_space(r.space(), s.space());
  const int n = r.space().size();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      m[idx(n, x, y)] = (r.contains(x, y) && s.contains(x, y)) ? 1 : 0;
    }
  }
  return STSet(r.space(), std::move(m));
}

STSet join(const STSet& r, const STSet& s) {
  require_same_space(r.space(), s.space());
  const STSet not_r = negate(r);
  const STSet not_s = negate(s);
  const int n = r.space().size();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const bool member = (r.contains(x, y) && not_s.contains(x, y)) ||
                          (r.contains(x, y) && s.contains(x, y)) ||
                          (not_r.contains(x, y) && s.contains(x, y));
      m[idx(n, x, y)] = member ? 1 : 0;
    }
  }
  return STSet(r.space(), std::move(m));
}

STSet setminus(const STSet& r, const STSet& s) {
  require_same_space(r.space(), s.space());
  return meet(r, negate(s));
}

STSet closure(const STSet& r) { return STSet::square(r.space(), r.support()); }

STSet sq_union(const std::vector<STSet>& rs) {
  if (rs.empty()) throw DomainError("square union needs at least one relation");
  std::vector<char> in(static_cast<std::size_t>(rs.front().space().size()), 0);
  std::vector<int> all;
  for (const auto& r : rs) {
    require_same_space(rs.front().space(), r.space());
    for (int x : r.support()) {
      if (in[static_cast<std::size_t>(x)]) {
        throw DomainError("square union requires pairwise disjoint supports; outcome '" +
                          r.space().label(x) + "' repeats");
      }
      in[static_cast<std::size_t>(x)] = 1;
      all.push_back(x);
    }
  }
  return STSet::square(rs.front().space(), all);
}

bool leq(const STSet& r, const STSet& s) {
  require_same_space(r.space(), s.space());
  // r equals s restricted to the rows of spt r; rows of r outside its
  // support are empty by validity, so only supported rows need comparing.
  for (int x : r.support()) {
    for (int y = 0; y < r.space().size(); ++y) {
      if (r.contains(x, y) != s.contains(x, y)) return false;
    }
  }
  return true;
}

bool pitchfork(const STSet& r, const STSet& s) {
  const STSet common = meet(r, s);
  return leq(common, r) && leq(common, s);
}

}  // namespace ept
