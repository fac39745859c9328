#include "ept/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "ept/errors.hpp"

namespace ept::oracle {

namespace {

void partitions_of_subset(const SampleSpace& space, const std::vector<int>& elements,
                          std::uint64_t max_items, std::vector<Partition>& out) {
  const int k = static_cast<int>(elements.size());
  std::vector<int> growth(static_cast<std::size_t>(k), 0);
  const std::function<void(int, int)> recurse = [&](int pos, int next_free) {
    if (pos == k) {
      const int block_count = next_free;
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(block_count));
      for (int i = 0; i < k; ++i) {
        blocks[static_cast<std::size_t>(growth[static_cast<std::size_t>(i)])].push_back(
            elements[static_cast<std::size_t>(i)]);
      }
      if (out.size() >= max_items) {
        throw CapExceededError("partition enumeration exceeded " + std::to_string(max_items) +
                               " items");
      }
      out.emplace_back(space, std::move(blocks));
      return;
    }
    for (int label = 0; label <= next_free && label < k; ++label) {
      growth[static_cast<std::size_t>(pos)] = label;
      recurse(pos + 1, std::max(next_free, label + 1));
    }
  };
  recurse(0, 0);
}

}  // namespace

std::vector<Partition> enumerate_all_partitions(const SampleSpace& space,
                                                const EnumerationBudget& budget) {
  const int n = space.size();
  if (n > budget.max_n) {
    throw CapExceededError("all-partition enumeration capped at " + std::to_string(budget.max_n) +
                           " elements, got " + std::to_string(n));
  }
  std::vector<Partition> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> elements;
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) elements.push_back(x);
    }
    partitions_of_subset(space, elements, budget.max_items, out);
  }
  return out;
}

std::vector<Partition> enumerate_complete_partitions(const SampleSpace& space,
                                                     const EnumerationBudget& budget) {
  const int n = space.size();
  if (n > budget.max_n) {
    throw CapExceededError("complete-partition enumeration capped at " +
                           std::to_string(budget.max_n) + " elements, got " + std::to_string(n));
  }
  std::vector<int> everything(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) everything[static_cast<std::size_t>(x)] = x;
  std::vector<Partition> out;
  partitions_of_subset(space, everything, budget.max_items, out);
  return out;
}

std::uint64_t bell_number(int n) {
  if (n < 0 || n > 25) throw DomainError("Bell numbers supported for 0 <= n <= 25");
  // Bell triangle: row r starts with the last entry of row r-1; each next
  // entry adds the neighbour above.  B(n) is the first entry of row n.
  std::vector<std::uint64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::uint64_t> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (std::size_t i = 0; i < row.size(); ++i) next.push_back(next.back() + row[i]);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t partial_partition_count(int n) {
  if (n < 0 || n > 24) throw DomainError("partial-partition counts supported for 0 <= n <= 24");
  std::vector<std::vector<std::uint64_t>> choose(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    choose[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(r) + 1, 1);
    for (int c = 1; c < r; ++c) {
      choose[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          choose[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] +
          choose[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
    }
  }
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    total += choose[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * bell_number(k);
  }
  return total;
}

bool pointwise_identity_oracle(const SymIntFunction& lhs, const SymIntFunction& rhs) {
  if (!lhs.space().same_as(rhs.space())) return false;
  const int n = lhs.space().size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (lhs.value(x, y) != rhs.value(x, y)) return false;
    }
  }
  return true;
}

namespace {

std::vector<char> membership(int n, const std::vector<int>& subset) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int x : subset) {
    if (x < 0 || x >= n) throw DomainError("subset element " + std::to_string(x) + " out of range");
    in[static_cast<std::size_t>(x)] = 1;
  }
  return in;
}

}  // namespace

std::vector<long long> union_square_cells(int n, const std::vector<std::vector<int>>& subsets) {
  std::vector<char> in_union(static_cast<std::size_t>(n), 0);
  for (const auto& subset : subsets) {
    const std::vector<char> in = membership(n, subset);
    for (int x = 0; x < n; ++x) in_union[static_cast<std::size_t>(x)] |= in[static_cast<std::size_t>(x)];
  }
  std::vector<long long> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
          (in_union[static_cast<std::size_t>(x)] && in_union[static_cast<std::size_t>(y)]) ? 1 : 0;
    }
  }
  return cells;
}

std::vector<long long> pairwise_rhs_cells(int n, const std::vector<std::vector<int>>& subsets) {
  const std::size_t s = subsets.size();
  std::vector<std::vector<char>> in;
  in.reserve(s);
  for (const auto& subset : subsets) in.push_back(membership(n, subset));
  std::vector<long long> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      long long value = 0;
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
          const bool x_in = in[i][static_cast<std::size_t>(x)] || in[j][static_cast<std::size_t>(x)];
          const bool y_in = in[i][static_cast<std::size_t>(y)] || in[j][static_cast<std::size_t>(y)];
          if (x_in && y_in) ++value;
        }
      }
      for (std::size_t i = 0; i < s; ++i) {
        if (in[i][static_cast<std::size_t>(x)] && in[i][static_cast<std::size_t>(y)]) {
          value -= static_cast<long long>(s) - 2;
        }
      }
      cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
          value;
    }
  }
  return cells;
}

namespace {

double form_value(const std::vector<double>& m, int n, const std::vector<double>& f) {
  double value = 0.0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      value += f[static_cast<std::size_t>(x)] *
               m[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(y)] *
               f[static_cast<std::size_t>(y)];
    }
  }
  return value;
}

double norm_squared(const std::vector<double>& f) {
  double value = 0.0;
  for (double v : f) value += v * v;
  return value;
}

// Deterministic across standard libraries: doubles built directly from the
// generator's bits, uniform on [-1, 1).
double signed_unit(std::mt19937_64& rng) {
  return 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0;
}

}  // namespace

bool psd_oracle(const std::vector<double>& sym, int n, double tolerance, std::uint64_t seed) {
  if (n < 1 || sym.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw DomainError("matrix must be square and non-empty");
  }
  double maxabs = 0.0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const double v = sym[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(y)];
      if (v != sym[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(x)]) {
        throw DomainError("matrix is not symmetric at (" + std::to_string(x + 1) + "," +
                          std::to_string(y + 1) + ")");
      }
      maxabs = std::max(maxabs, std::abs(v));
    }
  }
  const auto at = [&](int x, int y) {
    return sym[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(y)];
  };

  if (n <= 3) {
    // Exact semidefinite characterization: every principal minor >= 0.
    const double scale = std::max(1.0, maxabs);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> idx;
      for (int x = 0; x < n; ++x) {
        if (mask & (1u << x)) idx.push_back(x);
      }
      double minor = 0.0;
      double slack = 0.0;
      if (idx.size() == 1) {
        minor = at(idx[0], idx[0]);
        slack = tolerance * scale;
      } else if (idx.size() == 2) {
        minor = at(idx[0], idx[0]) * at(idx[1], idx[1]) - at(idx[0], idx[1]) * at(idx[1], idx[0]);
        slack = tolerance * scale * scale * 2.0;
      } else {
        const int a = idx[0], b = idx[1], c = idx[2];
        minor = at(a, a) * (at(b, b) * at(c, c) - at(b, c) * at(c, b)) -
                at(a, b) * (at(b, a) * at(c, c) - at(b, c) * at(c, a)) +
                at(a, c) * (at(b, a) * at(c, b) - at(b, b) * at(c, a));
        slack = tolerance * scale * scale * scale * 6.0;
      }
      if (minor < -slack) return false;
    }
    return true;
  }

  const double slack_scale = tolerance * std::max(1.0, maxabs * static_cast<double>(n));
  const auto probe = [&](const std::vector<double>& f) {
    return form_value(sym, n, f) >= -slack_scale * norm_squared(f);
  };

  std::vector<double> f(static_cast<std::size_t>(n), 0.0);
  for (int x = 0; x < n; ++x) {
    std::fill(f.begin(), f.end(), 0.0);
    f[static_cast<std::size_t>(x)] = 1.0;
    if (!probe(f)) return false;
    for (int y = x + 1; y < n; ++y) {
      f[static_cast<std::size_t>(y)] = 1.0;
      if (!probe(f)) return false;
      f[static_cast<std::size_t>(y)] = -1.0;
      if (!probe(f)) return false;
      f[static_cast<std::size_t>(y)] = 0.0;
    }
  }

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 10'000; ++trial) {
    for (int x = 0; x < n; ++x) f[static_cast<std::size_t>(x)] = signed_unit(rng);
    if (!probe(f)) return false;
  }
  return true;
}

}  // namespace ept::oracle
