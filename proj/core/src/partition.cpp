#include "ept/partition.hpp"

#include <algorithm>
#include <cctype>

#include "ept/errors.hpp"

namespace ept {

namespace {

std::vector<int> sorted_union(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<char> membership(const SampleSpace& space, const std::vector<int>& subset) {
  std::vector<char> in(static_cast<std::size_t>(space.size()), 0);
  for (int x : subset) in[static_cast<std::size_t>(x)] = 1;
  return in;
}

}  // namespace

Partition::Partition(SampleSpace space, std::vector<std::vector<int>> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  std::vector<char> seen(static_cast<std::size_t>(space_.size()), 0);
  for (auto& block : blocks_) {
    if (block.empty()) throw DomainError("partition blocks must be non-empty");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 0 || x >= space_.size()) {
        throw DomainError("outcome index " + std::to_string(x) + " outside sample space");
      }
      if (seen[static_cast<std::size_t>(x)]) {
        throw DomainError("outcome '" + space_.label(x) + "' appears in two blocks");
      }
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  std::sort(blocks_.begin(), blocks_.end());
  support_ = sorted_union(blocks_);
}

Partition Partition::zero(SampleSpace space) { return Partition(std::move(space), {}); }

bool Partition::is_complete() const {
  return static_cast<int>(support_.size()) == space_.size();
}

bool Partition::is_classical() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const std::vector<int>& b) { return b.size() == 1; });
}

bool Partition::is_irreducible() const { return blocks_.size() == 1; }

PartitionClass Partition::classify() const {
  const bool c = is_classical();
  const bool i = is_irreducible();
  if (c && i) return PartitionClass::both;
  if (c) return PartitionClass::classical;
  if (i) return PartitionClass::irreducible;
  return PartitionClass::neither;
}

Partition negate(const Partition& a) {
  const auto in = membership(a.space(), a.support());
  std::vector<int> rest;
  for (int x = 0; x < a.space().size(); ++x) {
    if (!in[static_cast<std::size_t>(x)]) rest.push_back(x);
  }
  if (rest.empty()) return Partition::zero(a.space());
  return Partition(a.space(), {std::move(rest)});
}

Partition irreducible_closure(const Partition& a) {
  if (a.is_zero()) return a;
  return Partition(a.space(), {a.support()});
}

Partition meet(const Partition& a, const Partition& b) {
  require_same_space(a.space(), b.space());
  std::vector<std::vector<int>> blocks;
  for (const auto& ba : a.blocks()) {
    const auto in = membership(a.space(), ba);
    for (const auto& bb : b.blocks()) {
      std::vector<int> cut;
      for (int x : bb) {
        if (in[static_cast<std::size_t>(x)]) cut.push_back(x);
      }
      if (!cut.empty()) blocks.push_back(std::move(cut));
    }
  }
  return Partition(a.space(), std::move(blocks));
}

Partition join(const Partition& a, const Partition& b) {
  require_same_space(a.space(), b.space());
  // The three parts below have pairwise disjoint supports, and when the two
  // supports are already disjoint they reduce to the blocks of a and of b.
  const Partition only_a = meet(a, negate(b));
  const Partition only_b = meet(negate(a), b);
  const Partition both = meet(a, b);
  std::vector<std::vector<int>> blocks;
  for (const auto* part : {&only_a, &only_b, &both}) {
    blocks.insert(blocks.end(), part->blocks().begin(), part->blocks().end());
  }
  return Partition(a.space(), std::move(blocks));
}

bool compatible(const Partition& a, const Partition& b) {
  require_same_space(a.space(), b.space());
  for (const auto& ba : a.blocks()) {
    const auto in = membership(a.space(), ba);
    for (const auto& bb : b.blocks()) {
      std::size_t hits = 0;
      for (int x : bb) hits += in[static_cast<std::size_t>(x)] ? 1u : 0u;
      const bool disjoint = hits == 0;
      const bool equal = hits == ba.size() && hits == bb.size();
      if (!disjoint && !equal) return false;
    }
  }
  return true;
}

bool leq(const Partition& a, const Partition& b) {
  require_same_space(a.space(), b.space());
  const auto& bs = b.blocks();
  return std::all_of(a.blocks().begin(), a.blocks().end(), [&](const std::vector<int>& ba) {
    return std::binary_search(bs.begin(), bs.end(), ba);
  });
}

namespace {

std::string trim(std::string_view s) {
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return std::string(s.substr(lo, hi - lo));
}

/// Strips one outer brace pair if it encloses the whole string.
std::string strip_outer_braces(std::string s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') return s;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    if (s[i] == '}') --depth;
    if (depth == 0) return s;  // the first '{' closes early: not an outer pair
    if (depth < 0) throw ParseError("unbalanced '}' in partition literal '" + s + "'");
  }
  return trim(std::string_view(s).substr(1, s.size() - 2));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Partition parse_partition(const SampleSpace& space, std::string_view literal) {
  std::string body = strip_outer_braces(trim(literal));
  if (body.empty()) return Partition::zero(space);
  std::vector<std::vector<int>> blocks;
  for (const std::string& raw_block : split(body, '|')) {
    std::string block_text = trim(raw_block);
    if (block_text.size() >= 2 && block_text.front() == '{' && block_text.back() == '}') {
      block_text = trim(std::string_view(block_text).substr(1, block_text.size() - 2));
    }
    if (block_text.find('{') != std::string::npos || block_text.find('}') != std::string::npos) {
      throw ParseError("unexpected brace inside block '" + trim(raw_block) + "'");
    }
    if (block_text.empty()) throw ParseError("empty block in partition literal");
    std::vector<int> block;
    for (const std::string& raw_label : split(block_text, ',')) {
      const std::string label = trim(raw_label);
      if (label.empty()) throw ParseError("empty outcome label in block '" + block_text + "'");
      const auto idx = space.index_of(label);
      if (!idx) throw ParseError("unknown outcome label '" + label + "'");
      block.push_back(*idx);
    }
    blocks.push_back(std::move(block));
  }
  try {
    return Partition(space, std::move(blocks));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid partition literal: ") + e.what());
  }
}

std::string format_partition(const Partition& a) {
  std::string out;
  for (std::size_t i = 0; i < a.blocks().size(); ++i) {
    if (i) out += " | ";
    const auto& block = a.blocks()[i];
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j) out += ",";
      out += a.space().label(block[j]);
    }
  }
  return out;
}

}  // namespace ept
