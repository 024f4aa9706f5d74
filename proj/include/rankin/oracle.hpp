#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "rankin/decomposition.hpp"
#include "rankin/weights.hpp"

namespace rankin::oracle {

/// Integer-valued function on Z^n with finite support. Keys are arbitrary
/// integer tuples (not necessarily dominant). Zero values are not stored.
class WeightFunction {
 public:
  using Support = std::map<GLWeight, Multiplicity, std::greater<>>;

  WeightFunction() = default;
  explicit WeightFunction(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  const Support& support() const { return support_; }
  void add(const GLWeight& weight, Multiplicity value);
  Multiplicity at(const GLWeight& weight) const;
  /// Sum of all values.
  Multiplicity mass() const;
  /// True when the value at every weight equals the value at its sorted form.
  bool is_weyl_symmetric() const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::size_t n_ = 0;
  Support support_;
};

/// Weight multiplicities of E_lambda by Gelfand-Tsetlin pattern enumeration.
WeightFunction weight_mults(const GLWeight& lambda);

/// Multiplicities of the dominant weights of E_lambda only (pruned enumeration).
std::vector<std::pair<GLWeight, Multiplicity>> dominant_weight_mults(const GLWeight& lambda);

/// Number of GT patterns with top row lambda and the given weight, i.e. the
/// dimension of that weight space of E_lambda.
Multiplicity weight_multiplicity(const GLWeight& lambda, const GLWeight& weight);

/// Calls visit(weight) once for every GT pattern with top row lambda.
void for_each_gt_weight(const GLWeight& lambda, const std::function<void(const GLWeight&)>& visit);

/// Character of a tensor product: sum over support pairs.
WeightFunction convolve(const WeightFunction& a, const WeightFunction& b);

/// Writes wf as a nonnegative combination of irreducible characters by
/// repeatedly removing the lexicographically largest remaining weight.
/// Throws MalformedCharacter when wf is not a genuine character.
Decomposition peel(const WeightFunction& wf);

/// Tensor product decomposition by character convolution and peeling;
/// shares no code with the Littlewood-Richardson path.
Decomposition tensor_oracle(const GLWeight& lambda, const GLWeight& mu);

}  // namespace rankin::oracle
