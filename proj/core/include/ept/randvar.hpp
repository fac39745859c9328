#pragma once

#include <vector>

#include "ept/context.hpp"
#include "ept/measure.hpp"

namespace ept {

/// A random variable bound to a context: one real value per universe block
/// (constancy per block holds by construction), extended by zero outside
/// the universe's quadratic image when viewed as a function on Omega^2.
class ContextRandomVariable {
 public:
  /// One value per universe block, in the universe's canonical block order.
  ContextRandomVariable(Context context, std::vector<double> block_values);

  const Context& context() const { return context_; }
  const std::vector<double>& block_values() const { return values_; }
  double block_value(int block_index) const {
    return values_.at(static_cast<std::size_t>(block_index));
  }

  /// The symmetric extension to Omega^2: the block value when both
  /// arguments share a universe block, zero otherwise.  Row-major n*n.
  std::vector<double> as_omega2_function() const;

  ContextRandomVariable operator+(const ContextRandomVariable& o) const;
  ContextRandomVariable operator*(double k) const;

 private:
  Context context_;
  std::vector<double> values_;
};

/// Expectation through the Omega^2 view: the cellwise sum of
/// X(x,y) * nu_x p(x,y) nu_y divided by the measure of the universe.
/// Throws ValidationError when the context is irregular for the state.
double expectation_via_cells(const QuadraticState& s, const ContextRandomVariable& x);

/// Expectation through the classical view: sum of block value times
/// relative frequency over the elementary events of the context.
double expectation_via_frequencies(const QuadraticState& s, const ContextRandomVariable& x);

/// Both paths, checked against each other (ValidationError on divergence
/// beyond tolerance, which would indicate an internal inconsistency).
double expectation(const QuadraticState& s, const ContextRandomVariable& x);

}  // namespace ept
