#include "ept/randvar.hpp"

#include <cmath>
#include <string>

#include "ept/errors.hpp"

namespace ept {

ContextRandomVariable::ContextRandomVariable(Context context, std::vector<double> block_values)
    : context_(std::move(context)), values_(std::move(block_values)) {
  const auto blocks = static_cast<std::size_t>(context_.universe().block_count());
  if (values_.size() != blocks) {
    throw DomainError("expected " + std::to_string(blocks) +
                      " block values (one per universe block), got " +
                      std::to_string(values_.size()));
  }
}

std::vector<double> ContextRandomVariable::as_omega2_function() const {
  const int n = context_.space().size();
  std::vector<double> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  const auto& blocks = context_.universe().partition().blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      for (int y : blocks[b]) {
        out[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(y)] = values_[b];
      }
    }
  }
  return out;
}

ContextRandomVariable ContextRandomVariable::operator+(const ContextRandomVariable& o) const {
  if (!(context_ == o.context_)) {
    throw DomainError("random variables combine only within one context");
  }
  std::vector<double> sum = values_;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += o.values_[i];
  return ContextRandomVariable(context_, std::move(sum));
}

ContextRandomVariable ContextRandomVariable::operator*(double k) const {
  std::vector<double> scaled = values_;
  for (auto& v : scaled) v *= k;
  return ContextRandomVariable(context_, std::move(scaled));
}

double expectation_via_cells(const QuadraticState& s, const ContextRandomVariable& x) {
  require_same_space(s.space(), x.context().space());
  const double pu = measure_of(s, x.context().universe().partition());
  if (!is_regular(s, x.context())) {
    throw ValidationError("context of '" +
                          format_partition(x.context().universe().partition()) +
                          "' is irregular for this state (P(universe) = " + std::to_string(pu) +
                          ")");
  }
  const std::vector<double> cells = x.as_omega2_function();
  const int n = s.space().size();
  double integral = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      integral +=
          cells[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(b)] *
          s.weighted(a, b);
    }
  }
  return integral / pu;
}

double expectation_via_frequencies(const QuadraticState& s, const ContextRandomVariable& x) {
  require_same_space(s.space(), x.context().space());
  const auto atoms = x.context().elementary_events();
  double total = 0.0;
  for (std::size_t b = 0; b < atoms.size(); ++b) {
    total += x.block_value(static_cast<int>(b)) * frequency(s, x.context(), atoms[b]);
  }
  return total;
}

double expectation(const QuadraticState& s, const ContextRandomVariable& x) {
  const double via_cells = expectation_via_cells(s, x);
  const double via_freq = expectation_via_frequencies(s, x);
  const double scale = std::max({1.0, std::abs(via_cells), std::abs(via_freq)});
  if (std::abs(via_cells - via_freq) > kIdentityTolerance * scale * 100.0) {
    throw ValidationError("expectation paths diverge: cells " + std::to_string(via_cells) +
                          " vs frequencies " + std::to_string(via_freq));
  }
  return via_freq;
}

}  // namespace ept
