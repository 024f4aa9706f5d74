#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>

#include "rankin/weights.hpp"

namespace rankin {

using Multiplicity = std::int64_t;

/// Finite formal sum of irreducible GL_n representations, keyed by dominant
/// highest weight. Zero multiplicities are never stored. Iteration runs from
/// the lexicographically largest weight down.
class Decomposition {
 public:
  using Terms = std::map<GLWeight, Multiplicity, std::greater<>>;

  Decomposition() = default;
  explicit Decomposition(std::size_t n) : n_(n) {}

  static Decomposition single(const GLWeight& lambda, Multiplicity mult = 1);

  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds mult copies of E_lambda; lambda must be dominant of rank n.
  void add(const GLWeight& lambda, Multiplicity mult = 1);
  void add(const Decomposition& other, Multiplicity scale = 1);
  Multiplicity multiplicity(const GLWeight& lambda) const;

  /// Contragredient, term by term.
  Decomposition dualized() const;
  /// Twists every term by det^c.
  Decomposition shifted(Entry c) const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

/// Constituents of a K x K x K representation, keyed by ordered triples.
class TripleDecomposition {
 public:
  using Key = std::array<GLWeight, 3>;
  using Terms = std::map<Key, Multiplicity, std::greater<>>;

  const Terms& terms() const { return terms_; }
  void add(const Key& key, Multiplicity mult);
  Multiplicity multiplicity(const Key& key) const;
  std::size_t size() const { return terms_.size(); }

 private:
  Terms terms_;
};

}  // namespace rankin
