#include "ept/sym_int.hpp"

#include <algorithm>

#include "ept/errors.hpp"

namespace ept {

namespace {

std::size_t idx(int n, int x, int y) {
  return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y);
}

void require_subset(const SampleSpace& space, const std::vector<int>& subset) {
  for (int x : subset) {
    if (x < 0 || x >= space.size()) {
      throw DomainError("outcome index " + std::to_string(x) + " outside sample space");
    }
  }
}

}  // namespace

SymIntFunction::SymIntFunction(SampleSpace space)
    : space_(std::move(space)),
      values_(static_cast<std::size_t>(space_.size()) * static_cast<std::size_t>(space_.size()),
              0) {}

SymIntFunction::SymIntFunction(SampleSpace space, std::vector<long long> values)
    : space_(std::move(space)), values_(std::move(values)) {
  const int n = space_.size();
  if (values_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw DomainError("value matrix size does not match the sample space");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (values_[idx(n, x, y)] != values_[idx(n, y, x)]) {
        throw DomainError("function is not symmetric at (" + space_.label(x) + "," +
                          space_.label(y) + ")");
      }
    }
  }
}

SymIntFunction SymIntFunction::indicator(const STSet& r) {
  const int n = r.space().size();
  SymIntFunction f(r.space());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.contains(x, y)) f.values_[idx(n, x, y)] = 1;
    }
  }
  return f;
}

SymIntFunction SymIntFunction::square_indicator(const SampleSpace& space,
                                                const std::vector<int>& subset) {
  require_subset(space, subset);
  const int n = space.size();
  SymIntFunction f(space);
  for (int x : subset) {
    for (int y : subset) f.values_[idx(n, x, y)] = 1;
  }
  return f;
}

SymIntFunction SymIntFunction::pair_basis(const SampleSpace& space, int x, int y) {
  if (x == y) throw DomainError("pair basis element needs two distinct outcomes");
  return square_indicator(space, {x, y});
}

SymIntFunction SymIntFunction::point_basis(const SampleSpace& space, int x) {
  return square_indicator(space, {x});
}

SymIntFunction SymIntFunction::tensor_square(const SampleSpace& space,
                                             const std::vector<long long>& f) {
  const int n = space.size();
  if (f.size() != static_cast<std::size_t>(n)) {
    throw DomainError("function length does not match the sample space");
  }
  SymIntFunction out(space);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out.values_[idx(n, x, y)] = f[static_cast<std::size_t>(x)] * f[static_cast<std::size_t>(y)];
    }
  }
  return out;
}

bool SymIntFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](long long v) { return v == 0; });
}

SymIntFunction& SymIntFunction::operator+=(const SymIntFunction& o) {
  require_same_space(space_, o.space_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

SymIntFunction& SymIntFunction::operator-=(const SymIntFunction& o) {
  require_same_space(space_, o.space_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

SymIntFunction& SymIntFunction::operator*=(long long k) {
  for (auto& v : values_) v *= k;
  return *this;
}

std::size_t BasisCoefficients::pair_index(int n, int x, int y) {
  // Flat position of (x,y), x<y, in the row-by-row listing of the strict
  // upper triangle: all pairs with first index < x, then the offset in row x.
  const auto row_start = static_cast<std::size_t>(x) * static_cast<std::size_t>(n) -
                         static_cast<std::size_t>(x) * static_cast<std::size_t>(x + 1) / 2;
  return row_start + static_cast<std::size_t>(y - x - 1);
}

BasisCoefficients basis_decompose(const SymIntFunction& f) {
  const int n = f.space().size();
  BasisCoefficients c;
  c.point.resize(static_cast<std::size_t>(n));
  c.pair.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int x = 0; x < n; ++x) {
    long long off_diag = 0;
    for (int z = 0; z < n; ++z) {
      if (z != x) off_diag += f.value(x, z);
    }
    c.point[static_cast<std::size_t>(x)] = f.value(x, x) - off_diag;
    for (int y = x + 1; y < n; ++y) {
      c.pair[BasisCoefficients::pair_index(n, x, y)] = f.value(x, y);
    }
  }
  return c;
}

SymIntFunction basis_recompose(const SampleSpace& space, const BasisCoefficients& c) {
  const int n = space.size();
  if (c.point.size() != static_cast<std::size_t>(n) ||
      c.pair.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) {
    throw DomainError("coefficient vector sizes do not match the sample space");
  }
  SymIntFunction out(space);
  for (int x = 0; x < n; ++x) {
    const long long gx = c.point[static_cast<std::size_t>(x)];
    if (gx != 0) out += gx * SymIntFunction::point_basis(space, x);
    for (int y = x + 1; y < n; ++y) {
      const long long hxy = c.pair[BasisCoefficients::pair_index(n, x, y)];
      if (hxy != 0) out += hxy * SymIntFunction::pair_basis(space, x, y);
    }
  }
  return out;
}

SymIntFunction plus_identity_residual(const SampleSpace& space,
                                      const std::vector<std::vector<int>>& disjoint_subsets) {
  std::vector<char> seen(static_cast<std::size_t>(space.size()), 0);
  std::vector<int> all;
  for (const auto& subset : disjoint_subsets) {
    require_subset(space, subset);
    for (int x : subset) {
      if (seen[static_cast<std::size_t>(x)]) {
        throw DomainError("subsets must be pairwise disjoint; outcome '" + space.label(x) +
                          "' repeats");
      }
      seen[static_cast<std::size_t>(x)] = 1;
      all.push_back(x);
    }
  }
  const auto s = static_cast<long long>(disjoint_subsets.size());
  SymIntFunction residual = SymIntFunction::square_indicator(space, all);
  for (std::size_t i = 0; i < disjoint_subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < disjoint_subsets.size(); ++j) {
      std::vector<int> both = disjoint_subsets[i];
      both.insert(both.end(), disjoint_subsets[j].begin(), disjoint_subsets[j].end());
      residual -= SymIntFunction::square_indicator(space, both);
    }
    residual += (s - 2) * SymIntFunction::square_indicator(space, disjoint_subsets[i]);
  }
  return residual;
}

SymIntFunction tensor_identity_residual(const SampleSpace& space,
                                        const std::vector<std::vector<long long>>& fs) {
  const auto n = static_cast<std::size_t>(space.size());
  for (const auto& f : fs) {
    if (f.size() != n) throw DomainError("function length does not match the sample space");
  }
  const auto s = static_cast<long long>(fs.size());
  std::vector<long long> total(n, 0);
  for (const auto& f : fs) {
    for (std::size_t x = 0; x < n; ++x) total[x] += f[x];
  }
  SymIntFunction residual = SymIntFunction::tensor_square(space, total);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      std::vector<long long> both(n, 0);
      for (std::size_t x = 0; x < n; ++x) both[x] = fs[i][x] + fs[j][x];
      residual -= SymIntFunction::tensor_square(space, both);
    }
    residual += (s - 2) * SymIntFunction::tensor_square(space, fs[i]);
  }
  return residual;
}

SymIntFunction form_linearity_residual(const SampleSpace& space, const std::vector<long long>& f,
                                       const std::vector<long long>& g,
                                       const std::vector<long long>& h) {
  const auto n = static_cast<std::size_t>(space.size());
  if (f.size() != n || g.size() != n || h.size() != n) {
    throw DomainError("function length does not match the sample space");
  }
  const auto polar = [&space, n](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> sum(n, 0);
    for (std::size_t x = 0; x < n; ++x) sum[x] = a[x] + b[x];
    return SymIntFunction::tensor_square(space, sum) - SymIntFunction::tensor_square(space, a) -
           SymIntFunction::tensor_square(space, b);
  };
  std::vector<long long> gh(n, 0);
  for (std::size_t x = 0; x < n; ++x) gh[x] = g[x] + h[x];
  return polar(f, gh) - polar(f, g) - polar(f, h);
}

}  // namespace ept
